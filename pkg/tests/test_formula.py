import pytest

from lcrkn import lcr_formula, lower_bound_class
from lcrkn.formula import EXCEPTIONAL, ceiling_form, class_form, five_part_value, three_arc_value


@pytest.mark.parametrize("n, value", [
    (3, 0), (4, 0), (5, 1), (6, 1), (7, 2), (8, 4), (9, 4), (10, 6), (11, 8), (12, 9),
    (14, 15), (17, 23), (20, 33),
])
def test_spot_values(n, value):
    assert lcr_formula(n).value == value


def test_exceptions_are_flagged():
    assert EXCEPTIONAL == {8: 4, 14: 15}
    assert lcr_formula(8).exceptional and lcr_formula(14).exceptional
    assert not lcr_formula(9).exceptional
    # the exceptional values sit one above the general expression
    assert ceiling_form(8) == 3 and ceiling_form(14) == 14


@pytest.mark.parametrize("n, value", [(12, 9), (8, 3), (17, 23), (3, 0), (4, 0)])
def test_class_lower_bound(n, value):
    assert lower_bound_class(n) == value


def test_forms_agree_and_bound_is_tight():
    for n in range(3, 10_001):
        assert ceiling_form(n) == class_form(n)
        v = lcr_formula(n)
        assert v.residue == n % 3
        assert v.value >= lower_bound_class(n)
        if n <= 1000 and n not in EXCEPTIONAL:
            assert v.value == lower_bound_class(n)


def test_class_form_against_squares():
    for n in range(3, 500):
        nine = {0: (n - 3) ** 2, 1: (n - 1) * (n - 4), 2: (n - 2) ** 2 - 9 * ((n - 2) // 6)}[n % 3]
        assert 9 * class_form(n) == nine


def test_monotone():
    values = [lcr_formula(n).value for n in range(0, 2000)]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_tiny_and_invalid():
    assert lcr_formula(0).value == lcr_formula(2).value == 0
    with pytest.raises(ValueError):
        lcr_formula(-1)
    with pytest.raises(ValueError):
        lower_bound_class(2)


def test_construction_values():
    assert [three_arc_value(n) for n in (9, 10, 11)] == [4, 6, 9]
    assert [five_part_value(k) for k in (4, 5, 7)] == [33, 46, 77]
    for k in range(4, 60):
        assert five_part_value(k) == lcr_formula(3 * k + 8).value
