"""Canonical forms and isomorphism of labelled P-diagrams.

Individualization-refinement: colour refinement by (colour, multiset of
(neighbour colour, edge label)) to a stable partition, then branch on the
first smallest non-singleton cell.  Each leaf is a vertex ordering and the
lexicographically least edge encoding wins.  Automorphisms found at equal
leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

from .diagram import PDiagram

KEY_VERSION = b"\x01"


def _refine(color: list[int], nbrs: list[list[tuple[int, int]]]) -> list[int]:
    ncolors = len(set(color))
    while True:
        sigs = [
            (color[v], tuple(sorted((color[u], m) for u, m in nbrs[v])))
            for v in range(len(color))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return new
        color, ncolors = new, len(rank)


def _individualize(color: list[int], v: int) -> list[int]:
    c = color[v]
    out = []
    for u, cu in enumerate(color):
        if cu < c or u == v:
            out.append(cu)
        else:
            out.append(cu + 1)
    return out


def _orbit(v: int, autos: list[list[int]], fixed: tuple[int, ...]) -> set[int]:
    """Orbit of v under the stored automorphisms that fix ``fixed`` pointwise."""
    gens = [g for g in autos if all(g[x] == x for x in fixed)]
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def canonical_labeling(d: PDiagram) -> tuple[bytes, tuple[str, ...]]:
    """Return ``(key, order)``; ``order[k]`` is the generator placed at position ``k``."""
    gens = d.generators
    n = len(gens)
    if n == 0:
        return KEY_VERSION + b"0;", ()
    idx = {g: i for i, g in enumerate(gens)}
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    edges = []
    for s, t, m in d.edge_list():
        i, j = idx[s], idx[t]
        nbrs[i].append((j, m))
        nbrs[j].append((i, m))
        edges.append((i, j, m))

    best: list = [None, None]  # encoding, perm (vertex -> position)
    autos: list[list[int]] = []

    def encode(perm):
        return tuple(sorted((min(perm[i], perm[j]), max(perm[i], perm[j]), m) for i, j, m in edges))

    def search(color: list[int], fixed: tuple[int, ...]):
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(color):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            enc = encode(color)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, color
            elif enc == best[0]:
                inv_best = [0] * n
                for v, pos in enumerate(best[1]):
                    inv_best[pos] = v
                autos.append([inv_best[color[v]] for v in range(n)])
            return
        size = min(len(c) for c in cells.values() if len(c) > 1)
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) == size)
        tried: set[int] = set()
        for v in target:
            if tried and not tried.isdisjoint(_orbit(v, autos, fixed)):
                continue
            tried.add(v)
            search(_refine(_individualize(color, v), nbrs), fixed + (v,))

    search(_refine([0] * n, nbrs), ())
    enc, perm = best
    order = [None] * n
    for v, pos in enumerate(perm):
        order[pos] = gens[v]
    body = ";".join(f"{i},{j},{m}" for i, j, m in enc)
    return KEY_VERSION + f"{n};{body}".encode(), tuple(order)


def canonical_form(d: PDiagram) -> bytes:
    return canonical_labeling(d)[0]


def isomorphic(d1: PDiagram, d2: PDiagram) -> dict[str, str] | None:
    """A label-preserving bijection from ``d1``'s generators to ``d2``'s, or None."""
    if d1.rank != d2.rank or sorted(d1.edges.values()) != sorted(d2.edges.values()):
        return None
    k1, o1 = canonical_labeling(d1)
    k2, o2 = canonical_labeling(d2)
    if k1 != k2:
        return None
    return dict(zip(o1, o2))
