"""Reduction status of bases and the generator exchanges it permits.

An unreduced base of type ``C(2q+1)`` or ``D2(4q+2)`` can be traded, by a
change of Coxeter generators, for a base of the smaller matching type
``B(2q+1)`` or ``D2(2q+1)`` plus one extra central generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import INF, DiagramError, PDiagram
from .finite_type import Base, enumerate_bases


@dataclass(frozen=True)
class ReductionStatus:
    """``kind`` is ``"reduced"``, ``"unreduced_C"`` or ``"unreduced_D"``; ``q >= 1`` for the latter two."""

    kind: str
    q: int = 0

    def __str__(self):
        return self.kind if self.kind == "reduced" else f"{self.kind}({self.q})"


REDUCED = ReductionStatus("reduced")


def _witnesses(d: PDiagram, a: str, b: str) -> list[str]:
    out = []
    for v in (a, b):
        if all(
            d.label(s, a) == 2 and d.label(s, b) == 2
            for s in d.generators
            if s not in (a, b) and d.label(s, v) != INF
        ):
            out.append(v)
    return out


def is_special_pair(d: PDiagram, a: str, b: str) -> bool:
    if a == b:
        raise DiagramError("a special pair needs two distinct generators")
    m = d.label(a, b)
    if m == INF or m % 4 != 2 or m < 6:
        return False
    return bool(_witnesses(d, a, b))


def _check_base(d: PDiagram, base: Base):
    if base not in enumerate_bases(d):
        raise DiagramError(f"{base.members} is not a base of the diagram")


def _c_chain(d: PDiagram, members) -> tuple[str, ...]:
    """Members of a C(n) base in chain order, starting at the outer end of the 4-edge."""
    members = set(members)
    adj = {g: [t for t in members if t != g and d.label(g, t) > 2] for g in members}
    start = next(g for g in members if len(adj[g]) == 1 and d.label(g, adj[g][0]) == 4)
    chain = [start]
    while len(chain) < len(members):
        chain.append(next(t for t in adj[chain[-1]] if t not in chain))
    return tuple(chain)


def base_reduction_status(d: PDiagram, base: Base, check: bool = True) -> ReductionStatus:
    if check:
        _check_base(d, base)
    kind = base.kind
    others = [s for s in d.generators if s not in base.members]
    if kind.family == "C" and kind.param % 2 == 1 and kind.param >= 3:
        a = _c_chain(d, base.members)[0]
        if all(
            d.label(s, t) == 2 for s in others if d.label(s, a) != INF for t in base.members
        ):
            return ReductionStatus("unreduced_C", (kind.param - 1) // 2)
        return REDUCED
    if base.rank == 2:
        a, b = base.members
        m = d.label(a, b)
        if m % 4 == 2 and m >= 6 and is_special_pair(d, a, b):
            return ReductionStatus("unreduced_D", (m - 2) // 4)
    return REDUCED


def _fresh(d: PDiagram, stem: str, taken: set[str]) -> str:
    name = stem
    while name in d or name in taken:
        name += "'"
    return name


def exchange_C(
    d: PDiagram, base: Base, new_name: str | None = None, longest_name: str | None = None
) -> PDiagram:
    """Replace the outer 4-edge generator ``a`` by ``d = aba`` and the longest element ``z``.

    With the chain ``a -4- b -3- c -3- ...``: ``d`` commutes with ``b``,
    has label 3 with ``c`` and 2 with the rest of the base, so the new base
    is of Y-shaped type B(2q+1); ``z`` is central in the old base.
    """
    status = base_reduction_status(d, base)
    if status.kind != "unreduced_C":
        raise DiagramError(f"base {base.members} is {status}, not unreduced of type C(2q+1)")
    chain = _c_chain(d, base.members)
    a, b, c = chain[:3]
    dn = new_name or _fresh(d, a + "'", set())
    zn = longest_name or _fresh(d, "z", {dn})
    for name in (dn, zn):
        if name in d and name != a:
            raise DiagramError(f"generator name {name!r} already in use")
    members = set(base.members)
    gens = [g for g in d.generators if g != a]
    i = d.generators.index(a)
    gens[i:i] = [dn, zn]
    edges = [(s, t, m) for s, t, m in d.edge_list() if a not in (s, t)]
    for x in chain[1:]:
        edges.append((dn, x, 3 if x == c else 2))
        edges.append((zn, x, 2))
    edges.append((dn, zn, 2))
    for s in d.generators:
        if s not in members and d.label(s, a) != INF:
            edges += [(s, dn, 2), (s, zn, 2)]
    return PDiagram(gens, edges)


def exchange_D(
    d: PDiagram, base: Base, new_name: str | None = None, longest_name: str | None = None
) -> PDiagram:
    """Replace ``a`` in a special base ``{a, b}`` by ``c = aba`` and the longest element ``z``."""
    status = base_reduction_status(d, base)
    if status.kind != "unreduced_D":
        raise DiagramError(f"base {base.members} is {status}, not unreduced of type D2(4q+2)")
    x, y = base.members
    a = _witnesses(d, x, y)[0]
    b = y if a == x else x
    cn = new_name or _fresh(d, a + "'", set())
    zn = longest_name or _fresh(d, "z", {cn})
    for name in (cn, zn):
        if name in d and name != a:
            raise DiagramError(f"generator name {name!r} already in use")
    gens = [g for g in d.generators if g != a]
    i = d.generators.index(a)
    gens[i:i] = [cn, zn]
    edges = [(s, t, m) for s, t, m in d.edge_list() if a not in (s, t)]
    edges += [(b, cn, 2 * status.q + 1), (zn, b, 2), (zn, cn, 2)]
    for s in d.generators:
        if s not in (a, b) and d.label(s, a) != INF:
            edges += [(s, cn, 2), (s, zn, 2)]
    return PDiagram(gens, edges)


def unreduced_bases(d: PDiagram) -> list[tuple[Base, ReductionStatus]]:
    out = []
    for base in enumerate_bases(d):
        status = base_reduction_status(d, base, check=False)
        if status != REDUCED:
            out.append((base, status))
    return out
