"""Command-line front end.

Exit codes: 0 success, 1 a checked property is false, 2 usage or parse
error, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import collapse_afa, collapse_iter, parse_flat_system, solve_flat_system
from .core import Apg, decorate_wf, parse_apg, serialize_apg, to_dot
from .errors import (
    ApgError,
    ApgSyntaxError,
    CyclicGraph,
    DuplicateChild,
    DuplicateDeclaration,
    NotAccessible,
    UndeclaredNode,
)
from .extensionality import classify
from .omega import GALLERY_NAMES, gallery, j_witnesses, truncate, verify_dhom_symbolic
from .relations import bisimilar, dhom_exists, finsler_eq, isomorphic, scott_eq

OK, FALSE, USAGE, PRECONDITION = 0, 1, 2, 3

# Text labels for each ExtReport field, in output order.
CHECK_LABELS = {
    "extensional": "extensional",
    "iso_ext": "iso-extensional",
    "finsler_ext": "finsler-extensional",
    "scott_ext": "scott-extensional",
    "strongly_ext": "strongly-extensional",
    "mutual_dhom_ext": "mutual-dhom-extensional",
}
COMPARE_LABELS = {
    "iso": "iso",
    "finsler": "finsler",
    "scott": "scott",
    "bisim": "bisim",
    "dhom_forward": "dhom->",
    "dhom_backward": "dhom<-",
    "mutual_dhom": "mutual-dhom",
}
AXIOMS = {"afa": None, "safa": "scott", "fafa": "finsler"}
PARSE_ERRORS = (ApgSyntaxError, UndeclaredNode, DuplicateChild, DuplicateDeclaration, NotAccessible)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", USAGE) from exc


def _load(path: str) -> Apg:
    try:
        return parse_apg(_read(path))
    except PARSE_ERRORS as exc:
        raise CliError(f"{path}: {type(exc).__name__}: {exc}", USAGE) from exc


def compare_table(g: Apg, h: Apg) -> dict[str, bool]:
    fwd = dhom_exists(g, h) is not None
    bwd = dhom_exists(h, g) is not None
    return {
        "iso": isomorphic(g, h) is not None,
        "finsler": finsler_eq(g, h),
        "scott": scott_eq(g, h),
        "bisim": bisimilar(g, h),
        "dhom_forward": fwd,
        "dhom_backward": bwd,
        "mutual_dhom": fwd and bwd,
    }


def cmd_check(args) -> tuple[str, int]:
    report = classify(_load(args.file))
    if args.json:
        return _dump(report.as_dict()), OK
    lines = []
    for key, label in CHECK_LABELS.items():
        w = report.witnesses[key]
        lines.append(f"{label}: yes" if w is None else f"{label}: no [{w[0]},{w[1]}]")
    return "\n".join(lines), OK


def cmd_compare(args) -> tuple[str, int]:
    table = compare_table(_load(args.file1), _load(args.file2))
    if args.json:
        return _dump(table), OK
    return "\n".join(f"{COMPARE_LABELS[k]}: {_yes(v)}" for k, v in table.items()), OK


def cmd_collapse(args) -> tuple[str, int]:
    g = _load(args.file)
    rel = AXIOMS[args.axiom]
    out = collapse_afa(g) if rel is None else collapse_iter(g, rel)
    text = serialize_apg(out)
    if args.json:
        return _dump({"axiom": args.axiom, "apg": text}), OK
    return text, OK


def cmd_decorate(args) -> tuple[str, int]:
    g = _load(args.file)
    try:
        deco = decorate_wf(g)
    except CyclicGraph as exc:
        raise CliError(f"CyclicGraph: {exc}", PRECONDITION) from exc
    values = {a: str(deco[a]) for a in sorted(g.nodes)}
    if args.json:
        return _dump(values), OK
    return "\n".join(f"{a}: {v}" for a, v in values.items()), OK


def cmd_solve(args) -> tuple[str, int]:
    try:
        system = parse_flat_system(_read(args.file))
    except ApgSyntaxError as exc:
        raise CliError(f"{args.file}: ApgSyntaxError: {exc}", USAGE) from exc
    try:
        out = solve_flat_system(system)
    except ApgError as exc:
        raise CliError(f"{type(exc).__name__}: {exc}", PRECONDITION) from exc
    text = serialize_apg(out)
    return (_dump({"apg": text}) if args.json else text), OK


def cmd_gallery(args) -> tuple[str, int]:
    if args.name not in GALLERY_NAMES:
        raise CliError(f"unknown gallery item {args.name!r}; known: {', '.join(GALLERY_NAMES)}", USAGE)
    item = gallery(args.name)
    if isinstance(item, Apg):
        if args.truncate is not None or args.verify_witnesses:
            raise CliError(f"{args.name} is finite; --truncate/--verify-witnesses apply to omega-J", USAGE)
        text = serialize_apg(item)
        return (_dump({"name": args.name, "apg": text}) if args.json else text), OK
    if args.verify_witnesses:
        fwd, bwd = j_witnesses()
        results = {
            "a->ap": verify_dhom_symbolic(item, fwd, "a", "ap"),
            "ap->a": verify_dhom_symbolic(item, bwd, "ap", "a"),
        }
        code = OK if all(results.values()) else FALSE
        if args.json:
            return _dump(results), code
        return "\n".join(f"{k}: {'verified' if v else 'failed'}" for k, v in results.items()), code
    if args.truncate is not None:
        if args.truncate < 0:
            raise CliError("--truncate needs a non-negative integer", USAGE)
        try:
            text = serialize_apg(truncate(item, args.truncate))
        except NotAccessible as exc:
            raise CliError(f"NotAccessible: {exc}", PRECONDITION) from exc
        return (_dump({"name": args.name, "apg": text}) if args.json else text), OK
    text = item.describe()
    return (_dump({"name": args.name, "presentation": text}) if args.json else text), OK


def cmd_export_dot(args) -> tuple[str, int]:
    return to_dot(_load(args.file)), OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    parser = argparse.ArgumentParser(
        prog="apgsets", description="Accessible pointed graphs as pictures of sets."
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="report the six extensionality notions")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare", parents=[common], help="relation table for two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("collapse", parents=[common], help="canonical form under an axiom")
    p.add_argument("file")
    p.add_argument("--axiom", choices=sorted(AXIOMS), required=True)
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("decorate", parents=[common], help="decoration of a well-founded graph")
    p.add_argument("file")
    p.set_defaults(func=cmd_decorate)

    p = sub.add_parser("solve", parents=[common], help="solve a flat system of set equations")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gallery", parents=[common], help="print a built-in example graph")
    p.add_argument("name")
    p.add_argument("--truncate", type=int, metavar="N")
    p.add_argument("--verify-witnesses", action="store_true")
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser("export-dot", parents=[common], help="Graphviz DOT export")
    p.add_argument("file")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        text, code = args.func(args)
    except CliError as exc:
        print(f"apgsets: {exc}", file=sys.stderr)
        return exc.code
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
