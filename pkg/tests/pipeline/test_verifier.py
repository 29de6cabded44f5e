"""Test the property suites run by verify"""

import time

import pytest

from src.pipeline import SuiteResult, Verifier, verification_report
from src.utils.errors import TheoremViolationError

SUITES = [
    "core_groups",
    "sections",
    "minimal_descent",
    "nondescending_construction",
    "twisting_lemma",
    "galois_criterion",
    "specialization_crux",
    "specialization_counts",
    "model_independence",
    "cohomology",
]


class TestSuiteResult:
    """Recording checks"""

    def test_check_passes(self):
        suite = SuiteResult("demo")
        suite.check("ok", lambda: True)
        assert suite.passed
        assert suite.checked == 1

    def test_theorem_violation_is_a_failure(self):
        def broken():
            raise TheoremViolationError("mismatch")

        suite = SuiteResult("demo")
        suite.completes("broken", broken)
        suite.check("false", lambda: False)
        assert not suite.passed
        assert suite.failures == ["broken: mismatch", "false"]

    def test_to_dict(self):
        suite = SuiteResult("demo", elapsed_ms=1.23456)
        suite.record(True, "fine")
        assert suite.to_dict() == {"name": "demo", "status": "pass", "checked": 1, "failures": []}
        assert suite.to_dict(include_timings=True)["elapsed_ms"] == 1.235

    def test_report_status(self):
        good, bad = SuiteResult("good"), SuiteResult("bad")
        bad.record(False, "nope")
        assert verification_report([good])["status"] == "pass"
        assert verification_report([good, bad])["status"] == "fail"


@pytest.mark.slow
class TestVerifier:
    """Every suite passes over a small sweep"""

    def test_small_sweep_passes(self, small_sweep_config):
        results = Verifier(small_sweep_config).run()
        assert [r.name for r in results] == SUITES
        failures = [f for r in results for f in r.failures]
        assert failures == []
        assert all(r.checked > 0 for r in results)

    def test_abelian_only(self, small_sweep_config):
        small_sweep_config["sweep"]["abelian_only"] = True
        results = {r.name: r for r in Verifier(small_sweep_config).run()}
        assert results["nondescending_construction"].checked == 0
        assert verification_report(list(results.values()))["status"] == "pass"

    def test_default_sweep_passes_within_a_minute(self, default_config):
        start = time.perf_counter()
        results = Verifier(default_config).run()
        elapsed = time.perf_counter() - start
        assert [r.name for r in results] == SUITES
        assert [f for r in results for f in r.failures] == []
        assert verification_report(results)["status"] == "pass"
        assert elapsed < 60
