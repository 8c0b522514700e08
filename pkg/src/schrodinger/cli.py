"""Command-line front end: ``python -m schrodinger <command> ...``.

Exit status is 0 on success, 1 when the computation rejects its input and
2 when the command line does not parse.  Tables are printed as JSON and
quivers as DOT.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Sequence

from . import annihilators, blocks, central, weyl
from .modules import Weight, module_hom
from .pbw import ParseError, format_element, parse_element
from .verma import format_vector, simple_character, singular_vectors, verma

_NUMBER = re.compile(r"^-\d+(/\d+)?$")
_VALUE_FLAGS = {"--hw", "--charge", "--a"}


class CLIError(Exception):
    def __init__(self, message: str, code: int, kind: str):
        super().__init__(message)
        self.code = code
        self.kind = kind


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise CLIError(message, 2, "parse")


def rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--hw -1/2`` into ``--hw=-1/2`` so negative values are not read as flags."""
    out: list[str] = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in _VALUE_FLAGS and k + 1 < len(argv) and _NUMBER.match(argv[k + 1]):
            out.append(f"{tok}={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def _weight(args) -> Weight:
    return Weight(args.hw, args.charge)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schrodinger", description="Exact computations in the enveloping algebra of the Schrödinger algebra.")
    parser.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("nf", help="PBW normal form of an expression")
    p.add_argument("expr")

    p = sub.add_parser("casimir", help="print the Casimir element")
    p.add_argument("--verify", action="store_true", help="check that it is central")

    p = sub.add_parser("center", help="basis of the center inside U_<=d")
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("hc", help="Harish-Chandra projection of a weight-0 expression")
    p.add_argument("expr")

    def weight_args(q):
        q.add_argument("--hw", type=rational, required=True, help="value of the weight on h")
        q.add_argument("--charge", type=rational, required=True, help="value of the weight on z")

    p = sub.add_parser("verma", help="Verma module data")
    weight_args(p)
    p.add_argument("--depth", type=int, default=10)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--character", action="store_true")
    mode.add_argument("--singular", type=int, metavar="I")
    mode.add_argument("--simple", action="store_true")

    p = sub.add_parser("block", help="block classification")
    weight_args(p)
    p.add_argument("--dot", action="store_true", help="print the quiver as DOT")
    p.add_argument("--n", type=int, default=3, help="number of quiver vertices to show")

    p = sub.add_parser("ext", help="Ext^1 table between simple modules")
    weight_args(p)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--range", type=int, default=3, dest="range_")

    p = sub.add_parser("bgg", help="check BGG reciprocity for a truncated projective")
    weight_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--depth", type=int, default=10)

    p = sub.add_parser("findim", help="graded pieces of a finite-dimensional projective")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--depth", type=int, default=4)

    p = sub.add_parser("weyl", help="tensor product of the Weyl module with an sl2 Verma module")
    p.add_argument("--charge", type=rational, required=True)
    p.add_argument("--a", type=rational, required=True)
    p.add_argument("--depth", type=int, default=10)

    p = sub.add_parser("ann", help="annihilator of a Verma module in low degree")
    weight_args(p)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--compare", action="store_true")
    return parser


def _run(args) -> str:
    cmd = args.command
    if cmd == "nf":
        return format_element(parse_element(args.expr))
    if cmd == "casimir":
        c = central.casimir()
        if args.verify:
            return f"central: {str(central.verify_central(c)).lower()}"
        return format_element(c)
    if cmd == "center":
        return _dump([format_element(u) for u in central.center_basis(args.degree)])
    if cmd == "hc":
        return str(central.hc_homomorphism(parse_element(args.expr)))
    if cmd == "verma":
        lam = _weight(args)
        if args.depth < 0:
            raise ValueError("depth must be non-negative")
        if args.singular is not None:
            M = verma(lam, max(args.depth, args.singular))
            return _dump([format_vector(M, args.singular, v) for v in singular_vectors(M, args.singular)])
        if args.simple:
            return _dump(simple_character(lam, args.depth))
        return _dump(verma(lam, args.depth).character())
    if cmd == "block":
        desc = blocks.classify(_weight(args), args.n)
        if args.dot:
            return desc.quiver.to_dot().rstrip("\n")
        return json.dumps(desc.to_dict(), indent=2)
    if cmd == "ext":
        table = blocks.ext_table(_weight(args), range(args.range_ + 1), args.depth)
        return _dump(table)
    if cmd == "bgg":
        lam = _weight(args)
        P = blocks.truncated_projective(lam, args.k, args.depth)
        return _dump({
            "holds": blocks.bgg_check(lam, args.k, args.depth),
            "verma_flag": blocks.verma_flag(P, args.depth // 2),
            "character": P.character(),
        })
    if cmd == "findim":
        table = blocks.findim_projective(args.i, args.depth)
        return _dump({
            str(j): {"dim": row["dim"], "decomposition": {str(w): m for w, m in row["decomposition"].items()}}
            for j, row in table.items()
        })
    if cmd == "weyl":
        T = weyl.tensor_with_M(args.a, args.depth, args.charge)
        V = verma(T.top, args.depth)
        return _dump({
            "highest_weight": [str(T.top.h_val), str(T.top.z_val)],
            "character": T.character(),
            "verma_character": V.character(),
            "hom_from_verma": module_hom(V, T).dim,
        })
    if cmd == "ann":
        lam = _weight(args)
        if args.compare:
            return annihilators.compare_slices(lam, args.degree)
        return _dump(annihilators.annihilator_slice(lam, args.degree).to_dict())
    raise CLIError(f"unknown command {cmd!r}", 2, "parse")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    json_errors = "--json-errors" in argv
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        out = _run(args)
    except CLIError as exc:
        return _report(str(exc), exc.code, exc.kind, json_errors)
    except ParseError as exc:
        return _report(str(exc), 2, "parse", json_errors)
    except (ValueError, IndexError, ZeroDivisionError, RuntimeError) as exc:
        return _report(str(exc), 1, "domain", json_errors)
    print(out)
    return 0


def _report(message: str, code: int, kind: str, json_errors: bool) -> int:
    if json_errors:
        print(json.dumps({"error": kind, "message": message, "exit_code": code}), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
