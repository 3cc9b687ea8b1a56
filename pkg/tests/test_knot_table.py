import pytest

from knotband.knot_table import _parse_table, get, load_table, self_check
from knotband.profile import ConsistencyError


def test_bundled_names():
    assert list(load_table()) == ["unknot", "3_1", "4_1", "5_1", "5_2", "6_1"]


def test_6_1_golden_profile():
    p = get("6_1").profile
    assert (p.determinant, p.signature, p.arf, p.fox_milnor) == (9, 0, 0, True)
    assert p.alexander.render() == "-2*t^-1 + 5 - 2*t^1"


def test_only_6_1_and_unknot_pass_fox_milnor():
    assert [n for n, e in load_table().items() if e.profile.fox_milnor] == ["unknot", "6_1"]


def test_unknown_name():
    with pytest.raises(KeyError, match="unknown bundled knot"):
        get("7_1")


def test_self_check_catches_wrong_golden_value():
    text = ("[3_1]\npd: X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3\ndeterminant: 3\nsignature: -2\n"
            "arf: 1\nalexander: t^-1 - 1 + t^1\njones: -t^-4 + t^-3 + t^-1\n"
            "fox_milnor: false\ncrossings: 3\n")
    with pytest.raises(ConsistencyError, match="3_1"):
        self_check(_parse_table(text))
