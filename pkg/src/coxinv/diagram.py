"""Presentation diagrams (P-diagrams) of finite rank Coxeter systems.

A diagram stores only the finite off-diagonal entries of a Coxeter matrix;
a missing pair means ``m(s, t) = INF``.  Coxeter-diagram views (edges with
label > 2, including infinity) are computed on demand.
"""

from __future__ import annotations

import json
import math
import re
from typing import Iterable, Mapping, Sequence

INF = math.inf

_NAME_RE = re.compile(r"[^\s#\"\[\]{},;=]+")


class DiagramError(ValueError):
    """Invalid diagram data."""


class ParseError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _pair(s: str, t: str) -> frozenset:
    return frozenset((s, t))


class PDiagram:
    """Immutable labelled graph on an ordered generator set.

    ``edges`` maps unordered pairs to finite labels >= 2.  Generator order
    is the declaration order and is used for serialization and tie-breaking.
    """

    __slots__ = ("_generators", "_index", "_labels", "_hash")

    def __init__(
        self,
        generators: Iterable[str] = (),
        edges: Iterable[tuple[str, str, int]] | Mapping[frozenset, int] = (),
    ):
        gens = tuple(generators)
        index: dict[str, int] = {}
        for g in gens:
            if not isinstance(g, str) or not _NAME_RE.fullmatch(g):
                raise DiagramError(f"invalid generator name {g!r}")
            if g in index:
                raise DiagramError(f"duplicate generator {g!r}")
            index[g] = len(index)
        if isinstance(edges, Mapping):
            triples = [(*sorted(pair), m) for pair, m in edges.items()]
        else:
            triples = list(edges)
        labels: dict[frozenset, int] = {}
        for s, t, m in triples:
            for g in (s, t):
                if g not in index:
                    raise DiagramError(f"unknown generator {g!r} in edge")
            if s == t:
                raise DiagramError(f"self-pair ({s}, {s}) is not an edge")
            if isinstance(m, bool) or not isinstance(m, int):
                raise DiagramError(f"edge label for ({s}, {t}) must be an integer, got {m!r}")
            if m < 2:
                raise DiagramError(f"edge label for ({s}, {t}) must be >= 2, got {m}")
            key = _pair(s, t)
            if key in labels:
                raise DiagramError(f"duplicate edge ({s}, {t})")
            labels[key] = m
        self._generators = gens
        self._index = index
        self._labels = labels
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def generators(self) -> tuple[str, ...]:
        return self._generators

    @property
    def rank(self) -> int:
        return len(self._generators)

    @property
    def edges(self) -> dict[frozenset, int]:
        return dict(self._labels)

    def __contains__(self, s: str) -> bool:
        return s in self._index

    def index(self, s: str) -> int:
        try:
            return self._index[s]
        except KeyError:
            raise DiagramError(f"unknown generator {s!r}") from None

    def label(self, s: str, t: str):
        """Return ``m(s, t)``: 1 on the diagonal, INF for a missing edge."""
        self.index(s)
        self.index(t)
        if s == t:
            return 1
        return self._labels.get(_pair(s, t), INF)

    def edge_list(self) -> list[tuple[str, str, int]]:
        """Edges as ``(s, t, m)`` with ``s`` declared before ``t``, sorted by declaration order."""
        out = []
        for pair, m in self._labels.items():
            s, t = sorted(pair, key=self._index.__getitem__)
            out.append((s, t, m))
        out.sort(key=lambda e: (self._index[e[0]], self._index[e[1]]))
        return out

    def neighbors(self, s: str) -> list[str]:
        """Generators joined to ``s`` by a finite label, in declaration order."""
        self.index(s)
        return [t for t in self._generators if t != s and _pair(s, t) in self._labels]

    def sort_key(self, s: str) -> int:
        return self._index[s]

    def ordered(self, members: Iterable[str]) -> tuple[str, ...]:
        return tuple(sorted(members, key=self.index))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, PDiagram):
            return NotImplemented
        return self._generators == other._generators and self._labels == other._labels

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._generators, frozenset(self._labels.items())))
        return self._hash

    def __repr__(self):
        edges = ", ".join(f"{s}-{t}:{m}" for s, t, m in self.edge_list())
        return f"PDiagram([{', '.join(self._generators)}], {{{edges}}})"

    def relabel(self, mapping: Mapping[str, str]) -> PDiagram:
        """Rename generators; generator order follows the old order."""
        gens = [mapping.get(g, g) for g in self._generators]
        edges = [(mapping.get(s, s), mapping.get(t, t), m) for s, t, m in self.edge_list()]
        return PDiagram(gens, edges)


# -- parsing ---------------------------------------------------------------


def parse_diagram(text: str) -> PDiagram:
    """Parse the line-oriented text format (``gen ...`` then ``edge s t m`` lines)."""
    generators: list[str] | None = None
    edges: list[tuple[str, str, int]] = []
    seen_gens: set[str] = set()
    seen_pairs: set[frozenset] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        keyword, col = tokens[0]
        args = tokens[1:]
        if keyword == "gen":
            if generators is not None:
                raise ParseError("only one 'gen' line is allowed", lineno, col)
            if edges:
                raise ParseError("'gen' must come before any 'edge'", lineno, col)
            generators = []
            for name, c in args:
                if not _NAME_RE.fullmatch(name):
                    raise ParseError(f"invalid generator name {name!r}", lineno, c)
                if name in seen_gens:
                    raise ParseError(f"duplicate generator {name!r}", lineno, c)
                seen_gens.add(name)
                generators.append(name)
        elif keyword == "edge":
            if generators is None:
                raise ParseError("'edge' before 'gen' line", lineno, col)
            if len(args) != 3:
                raise ParseError("expected 'edge <name> <name> <int>'", lineno, col)
            (s, cs), (t, ct), (m, cm) = args
            for name, c in ((s, cs), (t, ct)):
                if name not in seen_gens:
                    raise ParseError(f"unknown generator {name!r}", lineno, c)
            if s == t:
                raise ParseError(f"self-pair ({s}, {t})", lineno, ct)
            if not re.fullmatch(r"[0-9]+", m):
                raise ParseError(f"edge label must be an integer, got {m!r}", lineno, cm)
            value = int(m)
            if value < 2:
                raise ParseError(f"edge label must be >= 2, got {value}", lineno, cm)
            pair = _pair(s, t)
            if pair in seen_pairs:
                raise ParseError(f"duplicate edge ({s}, {t})", lineno, col)
            seen_pairs.add(pair)
            edges.append((s, t, value))
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col)
    if generators is None:
        raise ParseError("missing 'gen' line", 1, 1)
    return PDiagram(generators, edges)


def parse_json(text: str | Mapping) -> PDiagram:
    data = json.loads(text) if isinstance(text, str) else text
    if not isinstance(data, Mapping) or "generators" not in data:
        raise DiagramError("JSON diagram needs a 'generators' list")
    gens = data["generators"]
    edges = data.get("edges", [])
    if not isinstance(gens, list) or not isinstance(edges, list):
        raise DiagramError("'generators' and 'edges' must be lists")
    triples = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 3:
            raise DiagramError(f"edge entry must be [a, b, m], got {e!r}")
        triples.append(tuple(e))
    return PDiagram(gens, triples)


def load_diagram(text: str) -> PDiagram:
    """Parse either format, choosing JSON when the text starts with ``{``."""
    if text.lstrip().startswith("{"):
        try:
            return parse_json(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return parse_diagram(text)


def emit_diagram(d: PDiagram, format: str = "text") -> str:
    if format == "text":
        lines = [" ".join(["gen", *d.generators])]
        lines += [f"edge {s} {t} {m}" for s, t, m in d.edge_list()]
        return "\n".join(lines)
    if format == "json":
        return json.dumps(
            {"generators": list(d.generators), "edges": [list(e) for e in d.edge_list()]}
        )
    if format == "dot":
        lines = ["graph P {"]
        lines += [f'  "{g}";' for g in d.generators]
        lines += [f'  "{s}" -- "{t}" [label="{m}"];' for s, t, m in d.edge_list()]
        lines.append("}")
        return "\n".join(lines)
    raise ValueError(f"unknown format {format!r}")


# -- subdiagrams and decompositions ---------------------------------------


def _check_subset(d: PDiagram, members: Iterable[str]) -> tuple[str, ...]:
    members = set(members)
    for g in members:
        d.index(g)
    return d.ordered(members)


def induced_subdiagram(d: PDiagram, members: Iterable[str]) -> PDiagram:
    keep = _check_subset(d, members)
    inside = set(keep)
    return PDiagram(keep, [e for e in d.edge_list() if e[0] in inside and e[1] in inside])


def _components(d: PDiagram, members: Sequence[str], joined) -> tuple[tuple[str, ...], ...]:
    parent = {g: g for g in members}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, s in enumerate(members):
        for t in members[i + 1:]:
            if joined(s, t):
                rs, rt = find(s), find(t)
                if rs != rt:
                    parent[rt] = rs
    blocks: dict[str, list[str]] = {}
    for g in members:
        blocks.setdefault(find(g), []).append(g)
    return tuple(tuple(b) for b in blocks.values())


def free_factors(d: PDiagram) -> tuple[tuple[str, ...], ...]:
    """Connected components of the P-diagram (free product factors)."""
    return _components(d, d.generators, lambda s, t: d.label(s, t) != INF)


def c_components(d: PDiagram, members: Iterable[str] | None = None) -> tuple[tuple[str, ...], ...]:
    """Connected components of the C-diagram on ``members`` (label > 2, including INF)."""
    members = d.generators if members is None else _check_subset(d, members)
    return _components(d, members, lambda s, t: d.label(s, t) > 2)


def is_irreducible(d: PDiagram, members: Iterable[str]) -> bool:
    return len(c_components(d, members)) == 1


def odd_components(d: PDiagram) -> tuple[tuple[str, ...], ...]:
    """Components under odd-labelled edges; these are the conjugacy classes of generators."""

    def odd(s, t):
        m = d.label(s, t)
        return m != INF and m % 2 == 1

    return _components(d, d.generators, odd)
