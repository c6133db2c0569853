"""Tests for the self-verification runner."""
import logging

from errors import PreconditionError
from selftest import SelfTester

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)


def test_all_suites_pass_up_to_four():
    summary = SelfTester(4).run()
    assert list(summary.columns) == ["suite", "checks", "failures", "seconds", "passed", "first_failure"]
    assert len(summary) == 9
    assert summary["passed"].all(), summary[~summary["passed"]].to_string()
    assert (summary["checks"] > 0).all()


def test_main_theorem_suite_at_six():
    summary = SelfTester(6).run(["main_theorem"])
    assert summary["passed"].all(), summary["first_failure"].tolist()
    assert summary["checks"].iloc[0] > 0


def test_selected_suites_only():
    summary = SelfTester(3).run(["parking", "l_matrix"])
    assert summary["suite"].tolist() == ["parking", "l_matrix"]
    assert summary["failures"].sum() == 0


def test_rejects_bad_arguments():
    for max_n in (0, 7):
        try:
            SelfTester(max_n)
        except PreconditionError:
            continue
        raise AssertionError(f"max_n={max_n} accepted")
    try:
        SelfTester(2).run(["no_such_suite"])
    except PreconditionError as e:
        assert "no_such_suite" in str(e)
    else:
        raise AssertionError("unknown suite accepted")


def main():
    tests = [value for name, value in sorted(globals().items()) if name.startswith("test_")]
    for test in tests:
        test()
        logger.info(f"✅ {test.__name__}")


if __name__ == "__main__":
    main()
