"""Command-line front end.

Diagram arguments are a file path (text or JSON format), ``-`` for stdin,
or the name of a bundled fixture such as ``fig1_left``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify
from .corpus import CorpusSpec, generate_random
from .diagram import (
    DiagramError,
    PDiagram,
    c_components,
    emit_diagram,
    free_factors,
    load_diagram,
    odd_components,
)
from .finite_type import FiniteType, classify_irreducible, enumerate_bases, is_finite_subset
from .fixtures import NAMES as FIXTURES
from .fixtures import load_fixture
from .invariants import (
    binary_invariant,
    even_invariant,
    family_quotient,
    rank2_greedy,
    rank2_sequence,
)
from .iso import isomorphic
from .matching import base_reduction_status, exchange_C, exchange_D
from .oracle import default_max_cosets
from .quotient import PowerRelator, QuotientOutcome, quotient_by_power_relators


class UsageError(Exception):
    pass


def read_diagram(source: str) -> PDiagram:
    if source == "-":
        return load_diagram(sys.stdin.read())
    path = Path(source)
    if path.exists():
        return load_diagram(path.read_text())
    if source in FIXTURES:
        return load_fixture(source)
    raise UsageError(f"no such file or fixture: {source}")


def _format(args) -> str:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "dot", False):
        return "dot"
    return "text"


def _names(text: str) -> list[str]:
    return [x for x in text.replace(",", " ").split() if x]


def _block(block) -> str:
    return "{" + " ".join(block) + "}"


def _print_outcome(out: QuotientOutcome, args):
    if getattr(args, "trace", False):
        for step in out.trace:
            print(f"# {step}")
    if getattr(args, "classes", False):
        for name, members in out.classes().items():
            print(f"# {name} <- {' '.join(members)}")
    print(emit_diagram(out.diagram, _format(args)))


# -- subcommands ---------------------------------------------------------------


def cmd_info(args):
    d = read_diagram(args.diagram)
    print(f"rank {d.rank}")
    print(f"edges {len(d.edges)}")
    print("free factors " + " ".join(_block(b) for b in free_factors(d)))
    print("components " + " ".join(_block(b) for b in c_components(d)))
    print("odd components " + " ".join(_block(b) for b in odd_components(d)))
    print(f"finite {'yes' if is_finite_subset(d) else 'no'}")
    print(f"bases {len(enumerate_bases(d))}")
    return 0


def cmd_classify(args):
    d = read_diagram(args.diagram)
    members = _names(args.subset) if args.subset else None
    for block in c_components(d, members):
        kind = classify_irreducible(d, block)
        print(f"{_block(block)} {kind if kind is not None else 'not finite'}")
    return 0


def cmd_bases(args):
    d = read_diagram(args.diagram)
    for base in enumerate_bases(d):
        status = base_reduction_status(d, base, check=False)
        print(f"{_block(base.members)} {base.kind} {status}")
    return 0


def cmd_quotient(args):
    d = read_diagram(args.diagram)
    if len(args.relators) % 3:
        raise UsageError("relators are given as 's t d' triples")
    rels = []
    for i in range(0, len(args.relators), 3):
        s, t, k = args.relators[i:i + 3]
        try:
            rels.append(PowerRelator(s, t, int(k)))
        except ValueError:
            raise UsageError(f"relator exponent must be an integer, got {k!r}") from None
    _print_outcome(quotient_by_power_relators(d, rels), args)
    return 0


def cmd_binary(args):
    _print_outcome(binary_invariant(read_diagram(args.diagram)), args)
    return 0


def cmd_even(args):
    _print_outcome(even_invariant(read_diagram(args.diagram)), args)
    return 0


def cmd_family(args):
    d = read_diagram(args.diagram)
    try:
        types = [FiniteType.parse(t) for t in _names(args.types)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not types:
        raise UsageError("--types needs at least one type")
    _print_outcome(family_quotient(d, types), args)
    return 0


def cmd_rank2(args):
    d = read_diagram(args.diagram)
    if args.greedy:
        _print_outcome(rank2_greedy(d), args)
        return 0
    report = rank2_sequence(d)
    fmt = _format(args)
    if args.stages:
        for i, stage in enumerate(report.stages, 1):
            print(f"# stage {i}")
            if args.trace and i > 1:
                for step in report.steps[i - 2].trace:
                    print(f"# {step}")
            print(emit_diagram(stage, fmt))
    else:
        if args.trace:
            for out in report.steps:
                for step in out.trace:
                    print(f"# {step}")
        print(emit_diagram(report.final, fmt))
    print(f"class ℓ = {report.ell}")
    return 0


def cmd_exchange(args):
    d = read_diagram(args.diagram)
    members = tuple(sorted(_names(args.base)))
    base = next((b for b in enumerate_bases(d) if b.members == members), None)
    if base is None:
        raise UsageError(f"{_block(members)} is not a base")
    status = base_reduction_status(d, base, check=False)
    if status.kind == "unreduced_C":
        out = exchange_C(d, base)
    elif status.kind == "unreduced_D":
        out = exchange_D(d, base)
    else:
        raise UsageError(f"base {_block(members)} of type {base.kind} is reduced")
    print(emit_diagram(out, _format(args)))
    return 0


_KINDS = {
    "raw": lambda d: d,
    "binary": lambda d: binary_invariant(d).diagram,
    "even": lambda d: even_invariant(d).diagram,
    "rank2": lambda d: rank2_sequence(d).final,
}


def cmd_compare(args):
    f = _KINDS[args.kind]
    a, b = f(read_diagram(args.first)), f(read_diagram(args.second))
    if isomorphic(a, b) is not None:
        print("isomorphic")
        return 0
    print("non-isomorphic")
    return 1


def cmd_random(args):
    spec = CorpusSpec(
        count=args.count,
        min_rank=args.min_rank,
        max_rank=args.max_rank,
        edge_prob=args.edge_prob,
        max_label=args.max_label,
        seed=args.seed,
    )
    fmt = _format(args)
    sep = "\n" if fmt == "json" else "\n\n"
    print(sep.join(emit_diagram(d, fmt) for d in generate_random(spec)))
    return 0


def cmd_verify(args):
    return 0 if verify.run(args.max_cosets) else 1


def cmd_dot(args):
    print(emit_diagram(read_diagram(args.diagram), "dot"))
    return 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxinv", description="Quotient isomorphism invariants of Coxeter groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_cmd(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("diagram", help="diagram file, '-' for stdin, or fixture name")
        p.set_defaults(func=func)
        return p

    def output_flags(p, trace=True):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="emit JSON")
        g.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
        if trace:
            p.add_argument("--trace", action="store_true", help="print engine steps as comments")
            p.add_argument("--classes", action="store_true", help="print generator classes as comments")

    diagram_cmd("info", cmd_info, "summary of a diagram")
    p = diagram_cmd("classify", cmd_classify, "finite type of each component")
    p.add_argument("--subset", help="comma-separated generators (default: all)")
    diagram_cmd("bases", cmd_bases, "list bases with type and reduction status")
    p = diagram_cmd("quotient", cmd_quotient, "quotient by power relators (st)^d")
    p.add_argument("relators", nargs="*", help="triples s t d")
    output_flags(p)
    output_flags(diagram_cmd("binary", cmd_binary, "binary invariant diagram"))
    output_flags(diagram_cmd("even", cmd_even, "even invariant diagram"))
    p = diagram_cmd("family", cmd_family, "family quotient diagram")
    p.add_argument("--types", required=True, help="comma-separated types, e.g. A3,C3,D2(6)")
    output_flags(p)
    p = diagram_cmd("rank2", cmd_rank2, "spherical rank 2 invariant")
    p.add_argument("--stages", action="store_true", help="print every stage")
    p.add_argument("--greedy", action="store_true", help="use the local A3/C3/G3 rewriting")
    output_flags(p)
    p = diagram_cmd("exchange", cmd_exchange, "generator exchange on an unreduced base")
    p.add_argument("--base", required=True, help="comma-separated base members")
    output_flags(p, trace=False)

    p = sub.add_parser("compare", help="exit 0 if the selected diagrams are isomorphic, 1 if not")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--kind", choices=sorted(_KINDS), default="raw")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("random", help="print a reproducible random corpus")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--min-rank", type=int, default=1)
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--max-label", type=int, default=12)
    output_flags(p, trace=False)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="run the coset-enumeration cross-checks")
    p.add_argument("--max-cosets", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    diagram_cmd("dot", cmd_dot, "emit Graphviz DOT")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_cosets", None) is None and "max_cosets" in args:
        args.max_cosets = default_max_cosets()
    try:
        return args.func(args)
    except (UsageError, DiagramError, ValueError) as exc:
        print(f"coxinv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
