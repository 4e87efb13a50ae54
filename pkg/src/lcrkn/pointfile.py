"""Plain-text point-set files.

One point per line as ``x y``; each coordinate is a base-10 integer or an
exact ``num/den`` rational. ``#`` starts a comment and blank lines are
ignored. An optional first data line ``n <count>`` is checked against the
number of points that follow.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import GeneralPositionError, PointSetParseError
from .geometry import PointSet

_NUMBER = re.compile(r"[+-]?\d+(?:/\d+)?")


def _coord(token: str, lineno: int) -> Fraction:
    if not _NUMBER.fullmatch(token):
        raise PointSetParseError(f"bad coordinate {token!r}; expected an integer or num/den", lineno)
    num, _, den = token.partition("/")
    if den and int(den) == 0:
        raise PointSetParseError(f"zero denominator in {token!r}", lineno)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_pointset(text: str) -> PointSet:
    declared = None
    coords: list[tuple[Fraction, Fraction]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "n":
            if coords or declared is not None:
                raise PointSetParseError("the 'n <count>' line must come before any point", lineno)
            if len(fields) != 2 or not fields[1].isdigit():
                raise PointSetParseError(f"malformed count line {line!r}", lineno)
            declared = int(fields[1])
            continue
        if len(fields) != 2:
            raise PointSetParseError(f"expected two coordinates, got {len(fields)} fields", lineno)
        coords.append((_coord(fields[0], lineno), _coord(fields[1], lineno)))
        lines.append(lineno)
    if declared is not None and declared != len(coords):
        raise PointSetParseError(f"header declares {declared} points but {len(coords)} were given")
    P = PointSet.from_coords(coords, validate=False)
    bad = P.find_degeneracy()
    if bad is not None:
        where = ", ".join(f"{i} (line {lines[i]})" for i in bad)
        what = "duplicate point" if len(bad) == 2 else "collinear triple"
        raise GeneralPositionError(f"{what}: ids {where}", bad)
    return P


def serialize_pointset(P: PointSet, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"n {len(P)}")
    out.extend(f"{format_rational(p.x)} {format_rational(p.y)}" for p in P)
    return "\n".join(out) + "\n"


def read_pointset(path) -> PointSet:
    return parse_pointset(Path(path).read_text(encoding="utf-8"))


def write_pointset(path, P: PointSet, comment: str | None = None) -> None:
    Path(path).write_text(serialize_pointset(P, comment), encoding="utf-8")
