"""Closed-form values of the rectilinear local crossing number of K_n."""
from __future__ import annotations

from dataclasses import dataclass

EXCEPTIONAL = {8: 4, 14: 15}


@dataclass(frozen=True)
class LcrValue:
    n: int
    value: int
    residue: int  # n mod 3
    exceptional: bool


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def ceiling_form(n: int) -> int:
    """ceil((n - 3 - m) * m / 2) with m = ceil((n - 3) / 3); defined for n >= 3."""
    m = _ceil_div(n - 3, 3)
    return _ceil_div((n - 3 - m) * m, 2)


def class_form(n: int) -> int:
    """The congruence-class form; defined for n >= 3.

    n = 0 mod 3: (n-3)^2/9;  n = 1: (n-1)(n-4)/9;  n = 2: (n-2)^2/9 - floor((n-2)/6).
    Each numerator is an exact multiple of 9 in its class.
    """
    r = n % 3
    if r == 0:
        num = (n - 3) ** 2
    elif r == 1:
        num = (n - 1) * (n - 4)
    else:
        num = (n - 2) ** 2
    q, rem = divmod(num, 9)
    assert rem == 0
    return q - (n - 2) // 6 if r == 2 else q


def lcr_formula(n: int) -> LcrValue:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n <= 2:
        return LcrValue(n, 0, n % 3, False)
    ceil_value = ceiling_form(n)
    assert ceil_value == class_form(n), f"formula forms disagree at n={n}"
    if n in EXCEPTIONAL:
        return LcrValue(n, EXCEPTIONAL[n], n % 3, True)
    return LcrValue(n, ceil_value, n % 3, False)


def lower_bound_class(n: int) -> int:
    """The class-wise lower bound valid for every drawing with n >= 3 points."""
    if n < 3:
        raise ValueError(f"the lower bound is stated for n >= 3, got {n}")
    return class_form(n)


def three_arc_value(n: int) -> int:
    """Local crossing number of the three-arc construction: (n2 - 1)(n1 - 1)."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    n1, n2 = (n + 1) // 3, (n + 2) // 3
    return (n2 - 1) * (n1 - 1)


def five_part_value(k: int) -> int:
    """Local crossing number of the five-part construction on 3k + 8 points."""
    if k < 4:
        raise ValueError(f"k must be at least 4, got {k}")
    return k * k + 4 * k + 3 - k // 2
