"""Recognition of finite irreducible Coxeter types and enumeration of bases.

Type names follow Coxeter's notation.  ``B(n)`` is the Y-shaped diagram
with two single-edge short arms, while ``C(n)`` is the chain ending in a 4.
``D2(k)`` is dihedral of order ``2k``.  Coinciding names such as
``B(3) = A(3)`` or ``D2(4) = C(2)`` are normalized on construction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .diagram import INF, DiagramError, PDiagram, c_components


@dataclass(frozen=True, order=True)
class FiniteType:
    """A finite irreducible Coxeter type.

    ``param`` is the rank for every family except ``D2`` where it is the
    dihedral label ``k``.
    """

    family: str
    param: int

    def __post_init__(self):
        fam, p = self.family, self.param
        if fam == "B" and p == 3:
            fam = "A"
        elif fam == "D2" and p == 3:
            fam, p = "A", 2
        elif fam == "D2" and p == 4:
            fam, p = "C", 2
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "param", p)
        ok = {
            "A": p >= 1,
            "B": p >= 4,
            "C": p >= 2,
            "D2": p >= 5,
            "E": p in (6, 7, 8),
            "F": p == 4,
            "G": p in (3, 4),
        }.get(fam, False)
        if not ok:
            raise ValueError(f"no finite Coxeter type {self.family}{self.param}")

    @property
    def rank(self) -> int:
        return 2 if self.family == "D2" else self.param

    def __str__(self):
        if self.family == "D2":
            return f"D2({self.param})"
        return f"{self.family}{self.param}"

    @classmethod
    def parse(cls, text: str) -> FiniteType:
        """Parse names such as ``A3``, ``C(5)``, ``D2(6)``, ``D2_6``."""
        text = text.strip().upper()
        m = re.fullmatch(r"D2[(_]?(\d+)\)?", text)
        if m:
            return cls("D2", int(m.group(1)))
        m = re.fullmatch(r"([ABCEFG])[(_]?(\d+)\)?", text)
        if not m:
            raise ValueError(f"cannot parse Coxeter type {text!r}")
        return cls(m.group(1), int(m.group(2)))


def A(n): return FiniteType("A", n)  # noqa: E704
def B(n): return FiniteType("B", n)  # noqa: E704
def C(n): return FiniteType("C", n)  # noqa: E704
def D2(k): return FiniteType("D2", k)  # noqa: E704


E6, E7, E8 = FiniteType("E", 6), FiniteType("E", 7), FiniteType("E", 8)
F4 = FiniteType("F", 4)
G3, G4 = FiniteType("G", 3), FiniteType("G", 4)


@dataclass(frozen=True)
class Base:
    """Generators of a basic subgroup together with its type."""

    members: tuple[str, ...]
    kind: FiniteType

    @property
    def rank(self) -> int:
        return len(self.members)


def _c_tree(d: PDiagram, members: tuple[str, ...]):
    """Adjacency of the C-diagram on ``members``; None if some pair is infinite."""
    adj: dict[str, dict[str, int]] = {g: {} for g in members}
    for i, s in enumerate(members):
        for t in members[i + 1:]:
            m = d.label(s, t)
            if m == INF:
                return None
            if m > 2:
                adj[s][t] = m
                adj[t][s] = m
    return adj


def _path_order(adj, n):
    ends = [g for g in adj if len(adj[g]) == 1]
    start = min(ends)
    path = [start]
    prev = None
    while len(path) < n:
        nxt = [t for t in adj[path[-1]] if t != prev]
        prev = path[-1]
        path.append(nxt[0])
    return path


def classify_irreducible(d: PDiagram, members: Iterable[str]) -> FiniteType | None:
    """Type of the irreducible subset ``members``, or None when ``<members>`` is infinite."""
    members = d.ordered(set(members))
    if not members:
        raise DiagramError("empty subset is not irreducible")
    if len(c_components(d, members)) != 1:
        raise DiagramError(f"subset {members} is not irreducible")
    n = len(members)
    if n == 1:
        return A(1)
    adj = _c_tree(d, members)
    if adj is None:
        return None
    if n == 2:
        return D2(d.label(*members))
    n_edges = sum(len(v) for v in adj.values()) // 2
    if n_edges != n - 1:
        return None  # a cycle in the C-diagram
    labels = [m for s in adj for t, m in adj[s].items() if s < t]
    if any(m not in (3, 4, 5) for m in labels):
        return None
    degrees = {g: len(adj[g]) for g in members}
    branch = [g for g in members if degrees[g] >= 3]
    if not branch:
        path = _path_order(adj, n)
        seq = [adj[path[i]][path[i + 1]] for i in range(n - 1)]
        if seq[0] != 3:
            seq.reverse()
        big = [m for m in seq if m != 3]
        if not big:
            return A(n)
        if len(big) > 1:
            return None
        if seq[-1] == 4:
            return C(n)
        if seq == [3, 4, 3]:
            return F4
        if seq[-1] == 5 and n in (3, 4):
            return G3 if n == 3 else G4
        return None
    if len(branch) > 1 or degrees[branch[0]] != 3 or any(m != 3 for m in labels):
        return None
    center = branch[0]
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [t for t in adj[cur] if t != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return B(n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return FiniteType("E", n)
    return None


def is_finite_subset(d: PDiagram, members: Iterable[str] | None = None) -> bool:
    """Whether the visual subgroup on ``members`` (default: all) is finite."""
    return all(classify_irreducible(d, block) is not None for block in c_components(d, members))


def enumerate_bases(d: PDiagram) -> list[Base]:
    """All bases (noncyclic maximal finite irreducible subsets), sorted by member names."""
    gens = d.generators
    c_adj = {g: [t for t in gens if t != g and 2 < d.label(g, t) < INF] for g in gens}
    finite: dict[frozenset, FiniteType] = {}
    frontier = []
    for s in gens:
        for t in c_adj[s]:
            key = frozenset((s, t))
            if key not in finite:
                finite[key] = classify_irreducible(d, key)
                frontier.append(key)
    while frontier:
        grown = []
        for cand in frontier:
            for g in cand:
                for t in c_adj[g]:
                    if t in cand:
                        continue
                    key = cand | {t}
                    if key in finite:
                        continue
                    kind = classify_irreducible(d, key)
                    finite[key] = kind
                    if kind is not None:
                        grown.append(key)
        frontier = grown
    finite = {k: v for k, v in finite.items() if v is not None}
    bases = []
    for key, kind in finite.items():
        if any(key < other for other in finite if len(other) > len(key)):
            continue
        bases.append(Base(tuple(sorted(key)), kind))
    bases.sort(key=lambda b: b.members)
    return bases


def coxeter_order(t: FiniteType) -> int:
    n = t.param
    fam = t.family
    if fam == "A":
        return math.factorial(n + 1)
    if fam == "B":
        return 2 ** (n - 1) * math.factorial(n)
    if fam == "C":
        return 2**n * math.factorial(n)
    if fam == "D2":
        return 2 * n
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("G", 3): 120,
        ("G", 4): 14400,
    }[fam, n]


def standard_diagram(t: FiniteType, prefix: str = "x") -> PDiagram:
    """The P-diagram of type ``t`` on generators ``x1..xn`` (all unlisted pairs commute)."""
    n = t.rank
    g = [f"{prefix}{i}" for i in range(1, n + 1)]
    fam = t.family
    if fam == "D2":
        c_edges = [(g[0], g[1], t.param)]
    elif fam == "B":
        c_edges = [(g[0], g[2], 3), (g[1], g[2], 3)] + [(g[i], g[i + 1], 3) for i in range(2, n - 1)]
    elif fam == "E":
        c_edges = [(g[i], g[i + 1], 3) for i in range(n - 2)] + [(g[2], g[n - 1], 3)]
    else:
        seq = {
            "A": [3] * (n - 1),
            "C": [3] * (n - 2) + [4],
            "F": [3, 4, 3],
            "G": [3] * (n - 2) + [5],
        }[fam]
        c_edges = [(g[i], g[i + 1], m) for i, m in enumerate(seq)]
    joined = {frozenset((s, u)) for s, u, _ in c_edges}
    edges = c_edges + [
        (g[i], g[j], 2)
        for i in range(n)
        for j in range(i + 1, n)
        if frozenset((g[i], g[j])) not in joined
    ]
    return PDiagram(g, edges)
