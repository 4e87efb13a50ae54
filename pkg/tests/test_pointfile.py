from fractions import Fraction

import pytest
from hypothesis import given

from lcrkn import GeneralPositionError, PointSetParseError, parse_pointset, read_pointset, serialize_pointset
from lcrkn.pointfile import format_rational, write_pointset

from conftest import point_sets


def test_basic():
    P = parse_pointset("0 0\n1 0\n0 1")
    assert P.coords == [(0, 0), (1, 0), (0, 1)]


def test_rationals_are_exact():
    P = parse_pointset("1/2 3\n2 5/7\n0 0\n")
    assert P[0].x == Fraction(1, 2) and P[1].y == Fraction(5, 7)


def test_comments_blank_lines_and_header():
    P = parse_pointset("# a comment\n\nn 3\n0 0  # origin\n1 0\n\n-4/6 1\n")
    assert len(P) == 3 and P[2].x == Fraction(-2, 3)


def test_collinear_names_ids_and_lines():
    with pytest.raises(GeneralPositionError) as info:
        parse_pointset("0 0\n1 1\n2 2")
    assert set(info.value.ids) == {0, 1, 2}
    assert "line 3" in str(info.value)


def test_duplicate_point():
    with pytest.raises(GeneralPositionError, match="duplicate"):
        parse_pointset("0 0\n5 1\n0 0\n")


@pytest.mark.parametrize("text, line", [
    ("0 0\n1 x\n", 2),
    ("0 0\n1\n", 2),
    ("0 0\n1/0 1\n", 2),
    ("0 0\n0.5 1\n", 2),
    ("0 0\nn 2\n", 2),
])
def test_malformed_lines(text, line):
    with pytest.raises(PointSetParseError) as info:
        parse_pointset(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_header_count_mismatch():
    with pytest.raises(PointSetParseError, match="declares 4"):
        parse_pointset("n 4\n0 0\n1 0\n0 1\n")


def test_format_rational():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(-3, 6)) == "-1/2"


@given(point_sets(min_n=0, max_n=12))
def test_round_trip(P):
    text = serialize_pointset(P, "comment\nsecond line")
    assert parse_pointset(text) == P
    assert serialize_pointset(parse_pointset(text), "comment\nsecond line") == text


def test_file_helpers(tmp_path):
    P = parse_pointset("1/3 0\n1 0\n0 1\n")
    path = tmp_path / "p.txt"
    write_pointset(path, P, "three points")
    assert read_pointset(path) == P
    assert path.read_text().startswith("# three points\nn 3\n")
