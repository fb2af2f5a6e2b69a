import pytest

from src.errors import CheckFailed, IndexOutOfRange, InvalidFamily
from src.verify import SUITES, SuiteReport, run_suite


class TestSuites:
    """Named property suites"""

    def test_suite_names(self):
        assert set(SUITES) == {
            "relations",
            "duality",
            "skein",
            "traces",
            "vip",
            "reps",
            "all",
        }

    def test_unknown_suite(self):
        with pytest.raises(IndexOutOfRange):
            run_suite("everything")

    def test_relations_for_one_family(self):
        report = run_suite("relations", families=[1])
        assert isinstance(report, SuiteReport)
        assert report.passed
        assert len(report.checks) == 6

    def test_family_two_adds_rescaled_form(self):
        report = run_suite("relations", families=[2])
        assert len(report.checks) == 2 * 6

    def test_unknown_family(self):
        with pytest.raises(InvalidFamily):
            run_suite("relations", families=[7])

    def test_duality(self):
        report = run_suite("duality", seed=3)
        assert report.passed
        assert report.seed == 3

    def test_vip(self):
        report = run_suite("vip", vip_max=3)
        assert report.passed
        assert len(report.checks) == 2 * 3

    def test_random_suites_are_reproducible(self):
        first = run_suite("traces", seed=5, max_n=3, count=2, max_length=3)
        second = run_suite("traces", seed=5, max_n=3, count=2, max_length=3)
        assert first.passed
        assert first.model_dump(exclude={"seconds"}) == second.model_dump(
            exclude={"seconds"}
        )

    def test_small_reps_suite(self):
        report = run_suite("reps", max_n=2, count=2, max_length=3)
        assert report.passed

    def test_errors_are_recorded_as_failures(self, monkeypatch):
        def broken(strict=True):
            raise CheckFailed("forced")

        monkeypatch.setattr("src.verify.duality_check", broken)
        report = run_suite("duality")
        assert not report.passed
        assert report.checks[0].name == "duality"
        assert report.checks[0].detail == "CheckFailed: forced"


@pytest.mark.slow
class TestFullRun:
    """Every suite at the default scale"""

    def test_all_suites_pass(self):
        report = run_suite("all")
        failed = [c.name for c in report.checks if not c.passed]
        assert failed == []
        assert report.suite == "all"
        names = " ".join(c.name for c in report.checks)
        for fragment in ("B_2", "B_4", "Jones skein relation", "rational points"):
            assert fragment in names

    def test_skein_suite_includes_jones(self):
        report = run_suite("skein", max_n=2, count=3, max_length=3)
        assert report.passed
        assert any(c.name.startswith("Jones skein relation") for c in report.checks)
