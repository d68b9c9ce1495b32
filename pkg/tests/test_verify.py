import json

import pytest

from permroot.errors import DomainError
from permroot.report import (
    VerificationReport,
    golden_compare,
    golden_diff,
    normalize_report_bytes,
    reports_to_json,
    write_reports,
)
from permroot.verify import SUITE_PROPERTIES, SUITES, run_suite, run_suites, suite_ids

# Every stated module invariant must be covered by a registered property.
REQUIRED_PROPERTY_IDS = {
    # perm-core invariants
    "perm-core/format-parse-roundtrip",
    "perm-core/split-parts-recombine",
    "perm-core/family-partitions",
    "perm-core/power-additivity",
    # bijections invariants
    "bijections/extract-insert-roundtrip",
    "bijections/grow-shrink-roundtrip",
    "bijections/nearly-regular-roundtrip",
    "bijections/enriched-decomposition-bijection",
    "bijections/regular-extension-bijectivity",
    "bijections/odd-even-refinement",
    "bijections/merge-distinctness",
    # roots invariants
    "roots/criterion-vs-bruteforce",
    "roots/prime-power-consistency",
    "roots/witness-soundness",
    "roots/regular-inclusion",
    # counting invariants
    "counting/triple-agreement",
    "counting/enriched-count-match",
    "counting/q-family-counts",
    "counting/odd-even-family-counts",
    "counting/merged-type-counts",
    "counting/singular-type-counts",
    "counting/regular-proportion-product",
    "counting/cyc-at-most-reg",
    "counting/nested-cycle-bound",
    "counting/four-cycle-factor-two",
    "counting/merge-lower-bound",
    "counting/regular-over-uniform-types",
    "counting/roots-over-uniform-types",
    "counting/padding-ratio",
    "counting/prime-power-monotonicity",
    "counting/plateau-structure",
    "counting/non-prime-power-counterexample",
    # table and sequence cross-checks
    "tables/prime-probabilities",
    "tables/prime-power-probabilities",
    "oeis/square-permutation-sequence",
    "oeis/odd-cycle-square-sequence",
    "oeis/cache-roundtrip",
}


class TestRegistry:
    def test_covers_required_properties(self):
        registered = {pid for pids in SUITE_PROPERTIES.values() for pid in pids}
        assert REQUIRED_PROPERTY_IDS <= registered

    def test_declared_suites_exist(self):
        assert set(SUITE_PROPERTIES) == set(SUITES) == set(suite_ids())

    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suite("no-such-suite")
        with pytest.raises(DomainError):
            run_suites(["tables", "no-such-suite"])

    def test_emitted_property_ids_match_declaration(self):
        for suite in ("tables", "oeis", "monotonicity"):
            emitted = {r.property_id for r in run_suite(suite)}
            assert emitted == set(SUITE_PROPERTIES[suite])


class TestReports:
    def test_fail_requires_counterexample(self):
        with pytest.raises(DomainError):
            VerificationReport("x", {}, "fail", None, 1)

    def test_pass_requires_positive_count(self):
        with pytest.raises(DomainError):
            VerificationReport("x", {}, "pass", None, 0)

    def test_deterministic_bytes_modulo_wall_time(self):
        a = reports_to_json(run_suite("tables"), include_wall_time=False)
        b = reports_to_json(run_suite("tables"), include_wall_time=False)
        assert a == b

    def test_phi_suite_bounds_override(self):
        reports = run_suite("phi-bijection", {"r": 3, "n": 2})
        assert len(reports) == 1
        assert reports[0].passed
        assert reports[0].counts_checked == 400

    def test_parallel_merge_is_deterministic(self):
        serial = run_suites(["tables", "oeis"], jobs=1)
        parallel = run_suites(["tables", "oeis"], jobs=2)
        assert [r.property_id for r in serial] == [r.property_id for r in parallel]
        assert reports_to_json(serial, include_wall_time=False) == reports_to_json(
            parallel, include_wall_time=False
        )


class TestGolden:
    def test_equal_files(self, tmp_path):
        reports = run_suite("tables")
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        write_reports(reports, a)
        write_reports(run_suite("tables"), b)
        assert golden_compare(a, b)

    def test_differing_value_reports_location(self, tmp_path):
        reports = run_suite("tables")
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        write_reports(reports, a)
        doctored = json.loads(a.read_text())
        doctored[0]["counts_checked"] = 999
        b.write_text(json.dumps(doctored))
        assert not golden_compare(a, b)
        diff = golden_diff(a, b)
        assert "counts_checked" in diff

    def test_missing_file(self, tmp_path):
        reports = run_suite("tables")
        a = tmp_path / "a.json"
        write_reports(reports, a)
        with pytest.raises(FileNotFoundError):
            golden_compare(a, tmp_path / "missing.json")

    def test_schema_mismatch(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("not json at all")
        good = tmp_path / "good.json"
        write_reports(run_suite("tables"), good)
        with pytest.raises(DomainError):
            golden_compare(good, bad)

    def test_normalization_strips_wall_time(self):
        text = '[{"property_id": "x", "wall_time": 1.23, "status": "pass"}]'
        assert b"wall_time" not in normalize_report_bytes(text)

    def test_checked_in_golden_matches(self, tmp_path):
        from pathlib import Path

        golden = Path(__file__).parent / "fixtures" / "golden" / "v1" / "tables.json"
        fresh = tmp_path / "tables.json"
        write_reports(run_suite("tables"), fresh)
        assert golden_compare(fresh, golden)
