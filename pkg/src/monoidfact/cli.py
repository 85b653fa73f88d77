"""Command-line front end.

    monoidfact classify -m '{"numerical": [2, 3]}'
    monoidfact factorize -f monoid.json 43
    monoidfact betti-graph -m '{"numerical": [11,12,13,16,17,18,21]}' 43 --dot

Exit codes: 0 success, 1 domain error, 2 usage or parse error. Errors go
to stderr as a single-line JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import report
from .betti import BettiOptions, betti_elements, betti_graph, to_dot
from .classify import (
    DEFAULT_QUASI_CAP,
    DEFAULT_SCAN_LENGTH,
    classify,
    equal_length_witness,
    master_factorization,
    quasi_n_violations,
)
from .errors import MonoidError
from .factorization import factorizations
from .monoid import KINDS, MonoidPresentation, ReducedMonoid, build_monoid, contains


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D401 - argparse hook
        raise UsageError(message)


def parse_document(doc) -> tuple[MonoidPresentation, dict]:
    """Validate a MonoidDocument and return (presentation, options)."""
    if not isinstance(doc, dict):
        raise UsageError("monoid document must be a JSON object")
    unknown = set(doc) - set(KINDS) - {"options"}
    if unknown:
        raise UsageError(f"unknown keys in monoid document: {sorted(unknown)}")
    kinds = [k for k in KINDS if k in doc]
    if len(kinds) != 1:
        raise UsageError(f"monoid document needs exactly one of {list(KINDS)}, got {kinds}")
    kind = kinds[0]
    data = doc[kind]
    if not isinstance(data, list) or not data:
        raise UsageError(f'"{kind}" must be a nonempty array')
    options = doc.get("options", {})
    if not isinstance(options, dict) or set(options) - {"max_length"}:
        raise UsageError('"options" may only contain "max_length"')
    ml = options.get("max_length")
    if ml is not None and (not isinstance(ml, int) or isinstance(ml, bool) or ml < 1):
        raise UsageError('"max_length" must be a positive integer')
    nested = kind in ("affine", "kernel")
    if not all(isinstance(r, list) == nested for r in data):
        shape = "an array of integer arrays" if nested else "an array of integers"
        raise UsageError(f'"{kind}" must be {shape}')
    try:
        p = getattr(MonoidPresentation, kind)(data)
    except MonoidError as exc:
        raise UsageError(str(exc)) from exc
    return p, options


def parse_element(text: str) -> int | tuple[int, ...]:
    try:
        parts = [int(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse element {text!r}; use an integer or a comma-separated tuple") from None
    return parts[0] if len(parts) == 1 else tuple(parts)


def _load(args) -> tuple[ReducedMonoid, BettiOptions]:
    if (args.m is None) == (args.f is None):
        raise UsageError("give exactly one of -m <json> or -f <path>")
    try:
        if args.m is not None:
            doc = json.loads(args.m)
        else:
            with open(args.f, encoding="utf-8") as fh:
                doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc
    except OSError as exc:
        raise UsageError(f"cannot read {args.f}: {exc.strerror}") from exc
    p, options = parse_document(doc)
    max_length = args.max_length if args.max_length is not None else options.get("max_length")
    return build_monoid(p), BettiOptions(max_length)


def _cmd_atoms(M, opts, args):
    return report.monoid_doc(M)


def _cmd_member(M, opts, args):
    x = M.element(parse_element(args.element))
    return {"element": report.element(x), "member": contains(M, x)}


def _cmd_factorize(M, opts, args):
    return report.factorizations_doc(M, factorizations(M, parse_element(args.element)))


def _cmd_lengths(M, opts, args):
    return report.lengths_doc(factorizations(M, parse_element(args.element)))


def _cmd_betti(M, opts, args):
    return report.betti_doc(M, betti_elements(M, opts))


def _cmd_betti_graph(M, opts, args):
    g = betti_graph(M, parse_element(args.element))
    return to_dot(g) if args.dot else report.graph_doc(g)


def _cmd_classify(M, opts, args):
    return report.classification_doc(M, classify(M, opts, witness_length=opts.max_length or DEFAULT_SCAN_LENGTH))


def _cmd_quasi(M, opts, args):
    return report.quasi_doc(quasi_n_violations(M, args.n, cap=args.cap))


def _cmd_master(M, opts, args):
    b = betti_elements(M, opts)
    return {"master": report.master_doc(master_factorization(M, opts)), **report.completeness(b)}


def _cmd_witness(M, opts, args):
    L = opts.max_length or DEFAULT_SCAN_LENGTH
    return {"witness": report.witness_doc(equal_length_witness(M, L)), "max_length": L}


COMMANDS = {
    "atoms": (_cmd_atoms, "list the atoms of the monoid"),
    "member": (_cmd_member, "decide membership of an element"),
    "factorize": (_cmd_factorize, "list all factorizations of an element"),
    "lengths": (_cmd_lengths, "set of factorization lengths of an element"),
    "betti": (_cmd_betti, "Betti elements of the monoid"),
    "betti-graph": (_cmd_betti_graph, "Betti graph of an element (JSON or DOT)"),
    "classify": (_cmd_classify, "factorial / half-factorial / length-factorial flags"),
    "quasi": (_cmd_quasi, "equal-length factorization collisions at length n"),
    "master": (_cmd_master, "master factorization of a length-factorial monoid"),
    "witness": (_cmd_witness, "smallest pair of distinct equal-length factorizations"),
}


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-m", metavar="JSON", help="inline monoid document")
    common.add_argument("-f", metavar="PATH", help="path to a monoid document")
    common.add_argument("--max-length", type=int, default=None,
                        help="bound on factorization length for bounded searches")

    parser = _Parser(prog="monoidfact", description="Factorization invariants of finitely generated monoids.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if name in ("member", "factorize", "lengths", "betti-graph"):
            sp.add_argument("element", help="integer, or comma-separated tuple such as 1,1,1,1")
        if name == "betti-graph":
            sp.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of JSON")
        if name == "quasi":
            sp.add_argument("n", type=int)
            sp.add_argument("--cap", type=int, default=DEFAULT_QUASI_CAP,
                            help="maximum number of exponent vectors examined")
    return parser


def _fail(kind: str, message: str, code: int) -> int:
    err = {"error": {"type": kind, "message": message, "exit_code": code}}
    sys.stderr.write(json.dumps(err, separators=(",", ":")) + "\n")
    return code


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
        M, opts = _load(args)
        out = COMMANDS[args.command][0](M, opts, args)
    except UsageError as exc:
        return _fail("UsageError", str(exc), 2)
    except MonoidError as exc:
        return _fail(type(exc).__name__, str(exc), 1)
    text = out if isinstance(out, str) else report.dumps(out)
    sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
