"""Tests for the JSON codecs and report tables."""
from fractions import Fraction
import json
import logging

from errors import InputFormatError, PreconditionError
from export_reporter import ExportReporter, format_coefficient
from partitions import Partition
from setaction import klein_quotient, orbit_report, validate
from symfunc import SymFunc

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger(__name__)

reporter = ExportReporter()


def test_format_coefficient():
    assert format_coefficient(3) == "3"
    assert format_coefficient(Fraction(-6, 4)) == "-3/2"
    assert format_coefficient(Fraction(4, 2)) == "2"


def test_symfunc_json_is_canonical():
    f = SymFunc("m", {(1, 1, 1, 1): Fraction(3), (2, 2): 2})
    text = reporter.symfunc_to_json(f)
    assert text == (
        '{"basis":"m","degree":4,"terms":[{"partition":[2,2],"coeff":"2"},'
        '{"partition":[1,1,1,1],"coeff":"3"}]}'
    )


def test_symfunc_json_reads_fractions():
    text = '{"basis":"m","degree":4,"terms":[{"partition":[2,2],"coeff":"2"},{"partition":[1,1,1,1],"coeff":"3/1"}]}'
    f = reporter.symfunc_from_json(text)
    assert f.terms == {Partition([2, 2]): 2, Partition([1, 1, 1, 1]): 3}
    g = reporter.symfunc_from_json('{"basis":"p","degree":2,"terms":[{"partition":[2],"coeff":"-1/2"}]}')
    assert g.coefficient([2]) == Fraction(-1, 2)


def test_symfunc_json_zero_function():
    f = reporter.symfunc_from_json('{"basis":"s","degree":3,"terms":[]}')
    assert f.is_zero() and f.degree == 3
    assert reporter.symfunc_to_json(f) == '{"basis":"s","degree":3,"terms":[]}'


def test_symfunc_json_rejects_inhomogeneous():
    text = '{"basis":"m","degree":3,"terms":[{"partition":[3],"coeff":"1"},{"partition":[2],"coeff":"1"}]}'
    try:
        reporter.symfunc_from_json(text)
    except PreconditionError as e:
        assert "3" in str(e) and "2" in str(e)
    else:
        raise AssertionError("inhomogeneous input accepted")


def test_parse_errors_carry_position():
    try:
        reporter.symfunc_from_json('{"basis": "m",, }')
    except InputFormatError as e:
        assert "line 1" in str(e) and "column" in str(e)
    else:
        raise AssertionError("malformed JSON accepted")
    for bad in ['{"basis":"q","degree":1,"terms":[]}', '{"basis":"m","degree":1,"terms":[{"partition":[1],"coeff":0.5}]}']:
        try:
            reporter.symfunc_from_json(bad)
        except InputFormatError:
            continue
        raise AssertionError(f"{bad} accepted")


def test_action_json_round_trip():
    text = '{"n":4,"m":3,"gens":[[2,1,3],[1,3,2],[2,1,3]]}'
    action = reporter.action_from_json(text)
    assert validate(action).ok
    assert reporter.action_to_json(action) == text
    assert action.gens == klein_quotient().gens


def test_action_json_rejects_bad_shapes():
    for bad in ['{"n":0,"m":1,"gens":[]}', '{"n":2,"m":2}', '[1,2]']:
        try:
            reporter.action_from_json(bad)
        except InputFormatError:
            continue
        raise AssertionError(f"{bad} accepted")


def test_orbit_report_records():
    records = reporter.orbit_report_records(orbit_report(klein_quotient()))
    assert records[2] == {"mu": [2, 2], "orbits": "2"}
    assert json.loads(json.dumps(records))[0] == {"mu": [4], "orbits": "1"}


def test_table_records_stringify_numbers():
    table = reporter.table([{"mu": [2], "formula": 2, "verdict": True}])
    assert reporter.table_records(table) == [{"mu": [2], "formula": "2", "verdict": True}]
    assert "formula" in reporter.summary_text(table, "title")


def main():
    tests = [value for name, value in sorted(globals().items()) if name.startswith("test_")]
    for test in tests:
        test()
        logger.info(f"✅ {test.__name__}")


if __name__ == "__main__":
    main()
