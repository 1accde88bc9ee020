"""Brute-force ground truth: Todd-Coxeter coset enumeration.

HLT strategy (scan every live coset under every relator, defining cosets to
fill gaps) with a lookahead pass and table compaction when the coset bound
is approached.  Results are ``None`` when the bound is exceeded.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import DiagramError, PDiagram
from .quotient import _as_relator

DEFAULT_MAX_COSETS = 10**6

Word = tuple[str, ...]


def default_max_cosets() -> int:
    env = os.environ.get("COX_MAX_COSETS")
    return int(env) if env else DEFAULT_MAX_COSETS


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __str__(self):
        rels = ", ".join("".join(w) if all(len(g) == 1 for g in w) else "*".join(w) for w in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def presentation_of(d: PDiagram, extra: Iterable = ()) -> Presentation:
    """Coxeter presentation of ``d`` plus ``(st)^k`` for each extra relator."""
    rels: list[Word] = [(s, s) for s in d.generators]
    rels += [(s, t) * m for s, t, m in d.edge_list()]
    for r in extra:
        r = _as_relator(r)
        d.index(r.s)
        d.index(r.t)
        rels.append((r.s, r.t) * r.d)
    return Presentation(d.generators, tuple(rels))


class _Overflow(Exception):
    pass


class CosetTable:
    """Coset table for a presentation whose generators may be involutions.

    A generator ``g`` with ``(g, g)`` among the relators gets a single
    self-inverse column; other generators get a column and an inverse column.
    """

    def __init__(self, pres: Presentation, max_cosets: int):
        self.max_cosets = max_cosets
        involutions = {w[0] for w in pres.relators if len(w) == 2 and w[0] == w[1]}
        self.col: dict[str, int] = {}
        inv: list[int] = []
        for g in pres.generators:
            c = len(inv)
            self.col[g] = c
            if g in involutions:
                inv.append(c)
            else:
                inv += [c + 1, c]
        self.inv = inv
        self.ncols = len(inv)
        # g^2 is built into a self-inverse column
        self.relators = [
            self.encode(w) for w in pres.relators if not (len(w) == 2 and w[0] == w[1])
        ]
        self.table: list[list[int]] = [[-1] for _ in range(self.ncols)]
        self.p = [0]

    def encode(self, word: Sequence[str]) -> list[int]:
        try:
            return [self.col[g] for g in word]
        except KeyError as exc:
            raise DiagramError(f"unknown generator {exc.args[0]!r} in word") from None

    # -- primitive operations ------------------------------------------

    def define(self, c: int, x: int) -> int:
        new = len(self.p)
        if new >= self.max_cosets:
            raise _Overflow
        self.p.append(new)
        for column in self.table:
            column.append(-1)
        self.table[x][c] = new
        self.table[self.inv[x]][new] = c
        return new

    def rep(self, k: int) -> int:
        p = self.p
        root = k
        while p[root] != root:
            root = p[root]
        while p[k] != root:
            p[k], k = root, p[k]
        return root

    def _merge(self, a: int, b: int, queue: list[int]):
        a, b = self.rep(a), self.rep(b)
        if a != b:
            lo, hi = (a, b) if a < b else (b, a)
            self.p[hi] = lo
            queue.append(hi)

    def coincidence(self, a: int, b: int):
        table, inv = self.table, self.inv
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            for x in range(self.ncols):
                d = table[x][g]
                if d < 0:
                    continue
                xi = inv[x]
                table[xi][d] = -1
                mu, nu = self.rep(g), self.rep(d)
                if table[x][mu] >= 0:
                    self._merge(nu, table[x][mu], queue)
                elif table[xi][nu] >= 0:
                    self._merge(mu, table[xi][nu], queue)
                else:
                    table[x][mu] = nu
                    table[xi][nu] = mu

    def scan(self, c: int, word: list[int], fill: bool) -> None:
        table, inv = self.table, self.inv
        f, i = c, 0
        b, j = c, len(word) - 1
        while True:
            while i <= j:
                nxt = table[word[i]][f]
                if nxt < 0:
                    break
                f = nxt
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                nxt = table[inv[word[j]]][b]
                if nxt < 0:
                    break
                b = nxt
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[word[i]][f] = b
                table[inv[word[i]]][b] = f
                return
            if not fill:
                return
            self.define(f, word[i])

    # -- maintenance -----------------------------------------------------

    def lookahead(self):
        for c in range(len(self.p)):
            for r in self.relators:
                if self.p[c] != c:
                    break
                self.scan(c, r, fill=False)

    def compact(self) -> list[int]:
        """Renumber live cosets contiguously; returns the old -> new map (-1 if dead)."""
        new_index = [-1] * len(self.p)
        live = [c for c in range(len(self.p)) if self.p[c] == c]
        for k, c in enumerate(live):
            new_index[c] = k
        for x in range(self.ncols):
            old = self.table[x]
            self.table[x] = [new_index[self.rep(old[c])] if old[c] >= 0 else -1 for c in live]
        self.p = list(range(len(live)))
        return new_index

    # -- enumeration -----------------------------------------------------

    def enumerate(self, subgroup: Iterable[Sequence[str]] = ()) -> int | None:
        try:
            for w in subgroup:
                if w:
                    self.scan(0, self.encode(w), fill=True)
        except _Overflow:
            return None
        c = 0
        while c < len(self.p):
            if self.p[c] != c:
                c += 1
                continue
            try:
                for r in self.relators:
                    self.scan(c, r, fill=True)
                    if self.p[c] != c:
                        break
                if self.p[c] == c:
                    for x in range(self.ncols):
                        if self.table[x][c] < 0:
                            self.define(c, x)
            except _Overflow:
                before = len(self.p)
                self.lookahead()
                mapping = self.compact()
                if len(self.p) == before:
                    return None
                # resume at the first live coset at or after c
                while c < before and mapping[c] < 0:
                    c += 1
                c = mapping[c] if c < before else len(self.p)
                continue
            c += 1
        return len(self.p) - sum(1 for c in range(len(self.p)) if self.p[c] != c)


def coset_enumeration(
    pres: Presentation, subgroup: Iterable[Sequence[str]] = (), max_cosets: int | None = None
) -> int | None:
    """Index of the subgroup generated by ``subgroup`` words, or None on overflow."""
    if max_cosets is None:
        max_cosets = default_max_cosets()
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    return CosetTable(pres, max_cosets).enumerate(subgroup)


def group_order(d: PDiagram, extra: Iterable = (), max_cosets: int | None = None) -> int | None:
    return coset_enumeration(presentation_of(d, extra), (), max_cosets)


def element_order(
    d: PDiagram, extra: Iterable, word: Sequence[str], max_cosets: int | None = None
) -> int | None:
    """Order of ``word`` in the quotient, as group order over the index of its cyclic subgroup."""
    word = tuple(word)
    if not word:
        raise ValueError("word must be nonempty")
    for g in word:
        d.index(g)
    pres = presentation_of(d, extra)
    n = coset_enumeration(pres, (), max_cosets)
    if n is None:
        return None
    k = coset_enumeration(pres, [word], max_cosets)
    if k is None:
        return None
    return n // k

