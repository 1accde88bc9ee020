"""Quotients of Coxeter systems by power relators ``(st)^d``.

Adding ``(st)^d`` with ``d`` dividing ``m(s, t)`` yields another Coxeter
system.  For ``d > 1`` the label drops to ``d``.  For ``d = 1`` the two
generators are identified; every third generator ``r`` then sees the merged
class with label ``gcd(m(r, s), m(r, t))`` (INF acts as the identity of gcd),
and a gcd of 1 forces a further identification.  The engine runs this
cascade to a fixpoint with a union-find over generators.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Iterable

from .diagram import INF, DiagramError, PDiagram


def gcd_inf(x, y):
    if x == INF:
        return y
    if y == INF:
        return x
    return math.gcd(x, y)


@dataclass(frozen=True)
class PowerRelator:
    s: str
    t: str
    d: int

    def __post_init__(self):
        if self.s == self.t:
            raise DiagramError(f"relator needs two distinct generators, got ({self.s}, {self.t})")
        if isinstance(self.d, bool) or not isinstance(self.d, int) or self.d < 1:
            raise DiagramError(f"relator exponent must be a positive integer, got {self.d!r}")


@dataclass(frozen=True)
class TraceStep:
    """One rewrite step.

    ``kind`` is ``reduce`` (label lowered to ``value``), ``identify`` (an
    explicit exponent-1 relator), ``merge`` (a forced identification after a
    gcd reached 1) or ``coalesce`` (two labels folded into ``value``).
    """

    kind: str
    generators: tuple[str, ...]
    value: int | float | None = None

    def __str__(self):
        gens = " ".join(self.generators)
        if self.kind == "reduce":
            return f"reduce {gens} -> {self.value}"
        if self.kind == "coalesce":
            v = "inf" if self.value == INF else self.value
            return f"coalesce {gens} gcd {v}"
        return f"{self.kind} {gens}"


@dataclass(frozen=True)
class QuotientOutcome:
    diagram: PDiagram
    class_map: dict[str, str]
    trace: tuple[TraceStep, ...] = field(default=(), compare=False)

    def classes(self) -> dict[str, tuple[str, ...]]:
        """Surviving generator -> the old generators mapped onto it."""
        out: dict[str, list[str]] = {g: [] for g in self.diagram.generators}
        for old, new in self.class_map.items():
            out[new].append(old)
        return {k: tuple(v) for k, v in out.items()}


def identity_outcome(d: PDiagram) -> QuotientOutcome:
    return QuotientOutcome(d, {g: g for g in d.generators})


def _as_relator(r) -> PowerRelator:
    return r if isinstance(r, PowerRelator) else PowerRelator(*r)


def quotient_by_power_relators(
    d: PDiagram,
    relators: Iterable[PowerRelator | tuple[str, str, int]],
    rng: random.Random | None = None,
) -> QuotientOutcome:
    """Coxeter presentation of ``W / <<(st)^d : (s, t, d) in relators>>``.

    Exponent-1 relators may sit on any pair; larger exponents must divide a
    finite label.  The merged class is named by its least member (string
    order).  ``rng`` shuffles the processing order; the result does not
    depend on it.
    """
    rels = [_as_relator(r) for r in relators]
    for r in rels:
        m = d.label(r.s, r.t)
        if r.d > 1:
            if m == INF:
                raise DiagramError(f"cannot reduce infinite label on ({r.s}, {r.t}) to {r.d}")
            if m % r.d:
                raise DiagramError(f"{r.d} does not divide m({r.s}, {r.t}) = {m}")
    if rng is not None:
        rels = rels[:]
        rng.shuffle(rels)

    parent = {g: g for g in d.generators}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    live = set(d.generators)
    # value per unordered class pair; absent means INF
    val: dict[frozenset, int] = dict(d.edges)
    trace: list[TraceStep] = []
    pending: list[tuple[str, str, str]] = []

    for r in rels:
        if r.d == 1:
            pending.append((r.s, r.t, "identify"))
        else:
            key = frozenset((r.s, r.t))
            new = math.gcd(val[key], r.d)
            if new != val[key]:
                trace.append(TraceStep("reduce", (r.s, r.t), new))
            val[key] = new
            if new == 1:
                pending.append((r.s, r.t, "merge"))

    while pending:
        i = rng.randrange(len(pending)) if rng is not None else 0
        x, y, kind = pending.pop(i)
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        keep, gone = (rx, ry) if rx < ry else (ry, rx)
        trace.append(TraceStep(kind, (keep, gone)))
        parent[gone] = keep
        live.discard(gone)
        val.pop(frozenset((keep, gone)), None)
        for z in sorted(live - {keep}):
            a = val.pop(frozenset((keep, z)), INF)
            b = val.pop(frozenset((gone, z)), INF)
            v = gcd_inf(a, b)
            if a != INF and b != INF:
                trace.append(TraceStep("coalesce", (keep, z), v))
            if v == INF:
                continue
            val[frozenset((keep, z))] = v
            if v == 1:
                pending.append((keep, z, "merge"))

    class_map = {g: find(g) for g in d.generators}
    survivors = [g for g in d.generators if g in live]
    edges = []
    for pair, v in val.items():
        if v >= 2:
            s, t = pair
            edges.append((s, t, v))
    return QuotientOutcome(PDiagram(survivors, edges), class_map, tuple(trace))


def reduce_edge_label(d: PDiagram, s: str, t: str, k: int) -> QuotientOutcome:
    """Lower ``m(s, t)`` to a proper divisor ``k > 1``."""
    m = d.label(s, t)
    if s == t:
        raise DiagramError("label reduction needs two distinct generators")
    if m == INF:
        raise DiagramError(f"m({s}, {t}) is infinite")
    if not 1 < k < m or m % k:
        raise DiagramError(f"{k} is not a proper divisor > 1 of m({s}, {t}) = {m}")
    return quotient_by_power_relators(d, [PowerRelator(s, t, k)])


def eliminate_edge(d: PDiagram, s: str, t: str) -> QuotientOutcome:
    """Identify ``s`` and ``t`` (relator ``st``) and cascade."""
    if s == t:
        raise DiagramError("edge elimination needs two distinct generators")
    if d.label(s, t) == INF:
        raise DiagramError(f"m({s}, {t}) is infinite")
    return quotient_by_power_relators(d, [PowerRelator(s, t, 1)])


def compose_class_maps(first: dict[str, str], second: dict[str, str]) -> dict[str, str]:
    return {g: second[c] for g, c in first.items()}
