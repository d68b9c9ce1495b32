import pytest

from permroot.permutation import parse


@pytest.fixture
def P():
    """Shorthand parser: P("(1 2) (3)") -> Permutation."""
    return parse
