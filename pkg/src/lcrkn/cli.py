"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (bad file, degenerate points,
failed check), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .constructions import (FIVE_PART, THREE_ARCS, case_maxima_report, construct_five_part,
                            construct_three_arcs, five_part_case_formulas, verify_cluster_separation,
                            verify_secant_separation)
from .crossings import crossing_profile
from .errors import LcrError
from .formula import ceiling_form, class_form, lcr_formula
from .geometry import PointSet, convex_hull
from .pointfile import parse_pointset, read_pointset, serialize_pointset
from .search import (DEFAULT_GRID_BOUND, DEFAULT_MOVES, DEFAULT_RESTARTS, DEFAULT_SEED, SearchConfig,
                     search_witness)
from .separation import find_separation_witness, lemma_fuzz, lemma_lower_bound
from .svg import emit_svg


class UsageError(Exception):
    """Bad argument combination that argparse alone cannot catch."""


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def build_report(P: PointSet, profile: bool = False, lemma: bool = False) -> dict:
    """Analysis report for a drawing; ``lcr`` is re-derived from the serialized points."""
    prof = crossing_profile(P)
    n = len(P)
    formula = lcr_formula(n).value
    report = {
        "n": n,
        "lcr": prof.lcr,
        "total_crossings": prof.total,
        "formula_value": formula,
        "meets_formula": prof.lcr == formula,
    }
    if n >= 3:
        report["hull"] = convex_hull(P)
    if profile:
        report["profile"] = prof.to_dict()["edges"]
    if lemma and n >= 3:
        report["witness"] = find_separation_witness(P).to_dict()
        report["certificate"] = lemma_lower_bound(P, lcr=prof.lcr).to_dict()
    again = crossing_profile(parse_pointset(serialize_pointset(P))).lcr
    if again != report["lcr"]:
        raise LcrError(f"report lcr {report['lcr']} does not match the serialized points ({again})")
    return report


def _cmd_formula(args) -> int:
    if args.table:
        a, b = args.table
        if a < 0 or b < a:
            raise UsageError("table range must satisfy 0 <= a <= b")
        print("n\tlcr\tclass\tceiling_form\tclass_form\texceptional")
        for n in range(a, b + 1):
            v = lcr_formula(n)
            forms = (ceiling_form(n), class_form(n)) if n >= 3 else (0, 0)
            print(f"{n}\t{v.value}\t{v.residue}\t{forms[0]}\t{forms[1]}\t{str(v.exceptional).lower()}")
        return 0
    if args.n is None:
        raise UsageError("formula needs n or --table a b")
    v = lcr_formula(args.n)
    print(f"{v.value} (exceptional)" if v.exceptional else str(v.value))
    print(f"class: n = {v.residue} (mod 3)")
    if args.n >= 3:
        print(f"ceiling form: {ceiling_form(args.n)}")
        print(f"class form: {class_form(args.n)}")
    return 0


def _cmd_analyze(args) -> int:
    P = read_pointset(args.file)
    print(_dumps(build_report(P, profile=args.profile, lemma=args.lemma)))
    return 0


def _construction_report(S) -> dict:
    prof = crossing_profile(S.points)
    rep = {
        "construction": S.kind,
        "parameter": S.param,
        "n": len(S.points),
        "eps_exponent": S.eps_exponent,
        "parts": {name: ids for name, ids in S.parts.items()},
        "lcr": prof.lcr,
        "expected_lcr": S.expected_lcr,
        "formula_value": lcr_formula(len(S.points)).value,
    }
    if S.kind == THREE_ARCS:
        rep["secant_separation"] = verify_secant_separation(S)
    else:
        rep["cluster_separation"] = verify_cluster_separation(S)
        predicted = five_part_case_formulas(S.param)
        rep["case_maxima"] = [
            {"parts": list(key), "max_crossings": v, "predicted": predicted.get(key)}
            for key, v in case_maxima_report(S).items()
        ]
    return rep


def _cmd_construct(args) -> int:
    if args.kind == THREE_ARCS:
        S = construct_three_arcs(args.param, eps_exponent=args.eps_exponent)
        label = f"three-arc construction, n={args.param}"
    else:
        S = construct_five_part(args.param, eps_exponent=args.eps_exponent)
        label = f"five-part construction, k={args.param}, n={len(S.points)}"
    comment = f"{label}, eps=1/2^{S.eps_exponent}\nparts: " + " ".join(S.labels)
    text = serialize_pointset(S.points, comment)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    elif not args.report:
        sys.stdout.write(text)
    if args.svg:
        Path(args.svg).write_text(emit_svg(S.points, parts=S.label_map(), title=label), encoding="utf-8")
    if args.report:
        print(_dumps(_construction_report(S)))
    return 0


def _cmd_lemma(args) -> int:
    if args.fuzz is not None:
        report = lemma_fuzz(args.fuzz, args.seed, tuple(args.n_range))
        print(_dumps({"seed": args.seed, "n_range": list(args.n_range), **report.to_dict()}))
        return 0 if report.ok else 1
    if args.file is None:
        raise UsageError("lemma needs a point-set file or --fuzz N")
    P = read_pointset(args.file)
    out = {"n": len(P), "hull": convex_hull(P)}
    w = find_separation_witness(P)
    cert = lemma_lower_bound(P)
    out["witness"] = w.to_dict()
    out["certificate"] = cert.to_dict()
    out["lcr"] = crossing_profile(P).lcr
    print(_dumps(out))
    return 0


def _cmd_search(args) -> int:
    target = lcr_formula(args.n).value if args.target is None else args.target
    cfg = SearchConfig(n=args.n, target=target, seed=args.seed, restarts=args.restarts,
                       moves_per_restart=args.moves, grid_bound=args.grid_bound)
    result = search_witness(cfg)
    runlog = result.run_log(cfg)
    comment = (f"search witness n={cfg.n} lcr={result.best_lcr} seed={cfg.seed} "
               f"restarts={cfg.restarts} moves={cfg.moves_per_restart}")
    text = serialize_pointset(result.best, comment)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        runlog["points"] = text
    if args.log:
        Path(args.log).write_text(_dumps(runlog) + "\n", encoding="utf-8")
    else:
        print(_dumps(runlog))
    return 0 if result.achieved_target else 1


def _cmd_svg(args) -> int:
    P = read_pointset(args.file)
    text = emit_svg(P, title=Path(args.file).name)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcrkn", description="Rectilinear local crossing numbers of complete graphs.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form lcr(K_n)")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--table", type=int, nargs=2, metavar=("A", "B"), help="TSV table for n in [A, B]")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("analyze", help="crossing report for a point-set file")
    p.add_argument("file")
    p.add_argument("--profile", action="store_true", help="include every edge's crossing count")
    p.add_argument("--lemma", action="store_true", help="include separation witness and certificate")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("construct", help="generate an optimal construction")
    p.add_argument("kind", choices=[THREE_ARCS, FIVE_PART])
    p.add_argument("param", type=int, help="n for three-arcs, k for five-part (n = 3k + 8)")
    p.add_argument("--eps-exponent", type=int, default=None, help="use eps = 1/2^T and skip calibration")
    p.add_argument("--out", help="write the point set here")
    p.add_argument("--report", action="store_true", help="print a JSON report")
    p.add_argument("--svg", help="write an SVG figure here")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("lemma", help="separation witness and lower-bound certificate")
    p.add_argument("file", nargs="?")
    p.add_argument("--fuzz", type=int, metavar="N", help="run the randomized suite on N sets instead")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--n-range", type=int, nargs=2, default=[3, 15], metavar=("A", "B"))
    p.set_defaults(func=_cmd_lemma)

    p = sub.add_parser("search", help="randomized search for a low-lcr drawing")
    p.add_argument("n", type=int)
    p.add_argument("--target", type=int, default=None, help="default: the closed-form value")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    p.add_argument("--moves", type=int, default=DEFAULT_MOVES)
    p.add_argument("--grid-bound", type=int, default=DEFAULT_GRID_BOUND)
    p.add_argument("--out", help="write the best point set here")
    p.add_argument("--log", help="write the JSON run log here instead of stdout")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("svg", help="render a point-set file as SVG")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_svg)
    return parser


def run(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (LcrError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc.strerror or exc}: {exc.filename}" if exc.filename else f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
