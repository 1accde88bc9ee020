"""Characteristic-quotient invariants of Coxeter systems.

* binary: kill ``(st)^b`` where ``b`` is the 2-part of ``m(s, t)``;
* even: kill ``st`` for odd ``m(s, t)`` and ``(ab)^2`` for special pairs;
* family: kill commutator subgroups of the bases whose (matched) type is in
  a given family;
* spherical rank 2: repeatedly kill the per-type subgroups of every base of
  rank > 2 until none remain.

Each ``*_invariant`` goes through the quotient engine; the ``*_direct``
variants evaluate the closed-form label formulas on odd components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .diagram import INF, PDiagram, odd_components
from .finite_type import B, D2, Base, FiniteType, enumerate_bases
from .matching import _c_chain, base_reduction_status, is_special_pair
from .quotient import (
    PowerRelator,
    QuotientOutcome,
    compose_class_maps,
    eliminate_edge,
    identity_outcome,
    quotient_by_power_relators,
    reduce_edge_label,
)


def two_part(m) -> int | float:
    if m == INF:
        return INF
    return m & -m


# -- binary ------------------------------------------------------------------


def binary_relators(d: PDiagram) -> list[PowerRelator]:
    return [PowerRelator(s, t, two_part(m)) for s, t, m in d.edge_list()]


def binary_invariant(d: PDiagram) -> QuotientOutcome:
    return quotient_by_power_relators(d, binary_relators(d))


def _class_diagram(d: PDiagram, pair_value) -> PDiagram:
    """Diagram on odd components, named by least member, with labels folded by ``pair_value``."""
    blocks = odd_components(d)
    names = [min(b) for b in blocks]
    order = sorted(range(len(blocks)), key=lambda i: d.index(names[i]))
    edges = []
    for x, y in combinations(order, 2):
        v = pair_value(blocks[x], blocks[y])
        if v != INF:
            edges.append((names[x], names[y], v))
    return PDiagram([names[i] for i in order], edges)


def binary_direct(d: PDiagram) -> PDiagram:
    def fold(bx, by):
        return min((two_part(d.label(u, v)) for u in bx for v in by), default=INF)

    return _class_diagram(d, fold)


# -- even --------------------------------------------------------------------


def special_pairs(d: PDiagram) -> list[tuple[str, str]]:
    return [(s, t) for s, t, m in d.edge_list() if m % 4 == 2 and is_special_pair(d, s, t)]


def even_relators(d: PDiagram) -> list[PowerRelator]:
    rels = [PowerRelator(s, t, 2) for s, t in special_pairs(d)]
    rels += [PowerRelator(s, t, 1) for s, t, m in d.edge_list() if m % 2 == 1]
    return rels


def even_invariant(d: PDiagram) -> QuotientOutcome:
    return quotient_by_power_relators(d, even_relators(d))


def even_direct(d: PDiagram) -> PDiagram:
    special = {frozenset(p) for p in special_pairs(d)}

    def m_bar(u, v):
        return 2 if frozenset((u, v)) in special else d.label(u, v)

    def fold(bx, by):
        g = INF
        for u in bx:
            for v in by:
                m = m_bar(u, v)
                if m != INF:
                    g = m if g == INF else math.gcd(g, m)
        return g

    return _class_diagram(d, fold)


# -- family quotients ----------------------------------------------------------


def commutator_relators(d: PDiagram, members: Iterable[str]) -> list[PowerRelator]:
    """Relators killing the commutator subgroup of ``<members>`` (a finite subset)."""
    rels = []
    for s, t in combinations(d.ordered(members), 2):
        m = d.label(s, t)
        rels.append(PowerRelator(s, t, 1 if m % 2 else 2))
    return rels


def _family_types(family: Iterable[FiniteType | str]) -> frozenset[FiniteType]:
    types = frozenset(t if isinstance(t, FiniteType) else FiniteType.parse(t) for t in family)
    if not types:
        raise ValueError("family must contain at least one type")
    return types


def family_quotient(d: PDiagram, family: Iterable[FiniteType | str]) -> QuotientOutcome:
    types = _family_types(family)
    rels = []
    for base in enumerate_bases(d):
        status = base_reduction_status(d, base, check=False)
        if status.kind == "reduced":
            hit = base.kind in types
        elif status.kind == "unreduced_C":
            hit = B(2 * status.q + 1) in types
        else:
            hit = D2(2 * status.q + 1) in types
        if hit:
            rels += commutator_relators(d, base.members)
    return quotient_by_power_relators(d, rels)


# -- spherical rank 2 ----------------------------------------------------------


def _c_degree_one(d: PDiagram, members) -> list[str]:
    return sorted(g for g in members if sum(1 for t in members if t != g and d.label(g, t) > 2) == 1)


def _four_edge(d: PDiagram, members) -> tuple[str, str]:
    return next((s, t) for s, t in combinations(sorted(members), 2) if d.label(s, t) == 4)


def rank2_relators(d: PDiagram, base: Base) -> list[PowerRelator]:
    """Generators of the per-type characteristic subgroup of a base of rank > 2."""
    kind, members = base.kind, base.members
    if kind == FiniteType("A", 3):
        a1, a3 = _c_degree_one(d, members)
        return [PowerRelator(a1, a3, 1)]
    if kind == FiniteType("B", 4):
        b1, b2, b3 = _c_degree_one(d, members)
        return [PowerRelator(b1, b2, 1), PowerRelator(b2, b3, 1)]
    if kind == FiniteType("C", 3) or kind == FiniteType("F", 4):
        return [PowerRelator(*_four_edge(d, members), 2)]
    if kind == FiniteType("C", 4):
        c4, c3, c2, c1 = _c_chain(d, members)
        return [PowerRelator(c1, c3, 1)]
    return commutator_relators(d, members)


def large_bases(d: PDiagram) -> list[Base]:
    return [b for b in enumerate_bases(d) if b.rank > 2]


def rank2_step(d: PDiagram) -> QuotientOutcome:
    rels = []
    for base in large_bases(d):
        rels += rank2_relators(d, base)
    return quotient_by_power_relators(d, rels)


@dataclass(frozen=True)
class Rank2Report:
    stages: tuple[PDiagram, ...]
    ell: int
    final: PDiagram
    class_map: dict[str, str]
    steps: tuple[QuotientOutcome, ...] = ()


def rank2_sequence(d: PDiagram) -> Rank2Report:
    stages = [d]
    steps = []
    class_map = {g: g for g in d.generators}
    while large_bases(stages[-1]):
        out = rank2_step(stages[-1])
        steps.append(out)
        stages.append(out.diagram)
        class_map = compose_class_maps(class_map, out.class_map)
    return Rank2Report(tuple(stages), len(stages), stages[-1], class_map, tuple(steps))


_GREEDY_PATTERNS = {(2, 3, 3): "A3", (2, 3, 4): "C3", (2, 3, 5): "G3"}


def _greedy_move(d: PDiagram) -> QuotientOutcome | None:
    for triple in combinations(sorted(d.generators), 3):
        pairs = list(combinations(triple, 2))
        labels = [d.label(s, t) for s, t in pairs]
        if INF in labels:
            continue
        kind = _GREEDY_PATTERNS.get(tuple(sorted(labels)))
        if kind is None:
            continue
        if kind == "C3":
            s, t = pairs[labels.index(4)]
            return reduce_edge_label(d, s, t, 2)
        s, t = pairs[labels.index(2)]
        return eliminate_edge(d, s, t)
    return None


def rank2_greedy(d: PDiagram) -> QuotientOutcome:
    """Local rewriting: eliminate the 2-edge of an A3/G3 triple, or reduce the 4 of a C3 triple."""
    result = identity_outcome(d)
    trace = []
    while True:
        move = _greedy_move(result.diagram)
        if move is None:
            return QuotientOutcome(result.diagram, result.class_map, tuple(trace))
        trace += move.trace
        result = QuotientOutcome(move.diagram, compose_class_maps(result.class_map, move.class_map))
