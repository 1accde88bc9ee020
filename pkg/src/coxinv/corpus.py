"""Reproducible random diagrams for property checks."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import PDiagram
from .finite_type import Base, C, D2, enumerate_bases
from .matching import base_reduction_status

_DEFAULT_WEIGHTS = {2: 4.0, 3: 4.0, 4: 2.0, 5: 1.0, 6: 2.0}


@dataclass(frozen=True)
class CorpusSpec:
    """``edge_prob`` is the chance that a pair gets a finite label; otherwise it is INF.

    Finite labels are drawn from ``labels`` (default ``2..max_label``) with
    ``weights`` (default favouring 2, 3, 4 and 6).
    """

    count: int = 100
    min_rank: int = 1
    max_rank: int = 8
    edge_prob: float = 0.5
    max_label: int = 12
    labels: tuple[int, ...] | None = None
    weights: tuple[float, ...] | None = None
    seed: int = 0

    def label_pool(self) -> tuple[tuple[int, ...], tuple[float, ...]]:
        labels = self.labels or tuple(range(2, self.max_label + 1))
        weights = self.weights or tuple(_DEFAULT_WEIGHTS.get(m, 1.0) for m in labels)
        if len(weights) != len(labels):
            raise ValueError("labels and weights differ in length")
        if any(m < 2 for m in labels):
            raise ValueError("labels must be >= 2")
        return labels, weights


def random_diagram(rng: random.Random, spec: CorpusSpec, prefix: str = "s") -> PDiagram:
    labels, weights = spec.label_pool()
    n = rng.randint(spec.min_rank, spec.max_rank)
    gens = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < spec.edge_prob:
                edges.append((gens[i], gens[j], rng.choices(labels, weights)[0]))
    return PDiagram(gens, edges)


def generate_random(spec: CorpusSpec) -> list[PDiagram]:
    rng = random.Random(spec.seed)
    return [random_diagram(rng, spec) for _ in range(spec.count)]


def plant_unreduced_base(rng: random.Random, spec: CorpusSpec, kind: str = "C") -> tuple[PDiagram, Base]:
    """A random diagram with an added unreduced base.

    ``kind`` ``"C"`` plants C3 or C5 chains, ``"D"`` plants D2(6) or D2(10)
    pairs.  Candidates whose planted subset is not an unreduced base are
    redrawn.
    """
    while True:
        host = random_diagram(rng, spec)
        if kind == "C":
            size = rng.choice((3, 5))
            new = [f"c{i}" for i in range(1, size + 1)]
            inner = [(new[0], new[1], 4)] + [(new[i], new[i + 1], 3) for i in range(1, size - 1)]
            inner += [(new[i], new[j], 2) for i in range(size) for j in range(i + 2, size)]
            target = C(size)
        else:
            m = rng.choice((6, 10))
            new = ["c1", "c2"]
            inner = [("c1", "c2", m)]
            target = D2(m)
        edges = host.edge_list() + inner
        labels, weights = spec.label_pool()
        for s in host.generators:
            if rng.random() < 0.5:
                # sees the distinguished generator: commutes with the whole base
                edges += [(s, t, 2) for t in new]
                continue
            for t in new[1:]:
                if rng.random() < spec.edge_prob:
                    edges.append((s, t, rng.choices(labels, weights)[0]))
        d = PDiagram(host.generators + tuple(new), edges)
        base = Base(tuple(sorted(new)), target)
        if base in enumerate_bases(d) and base_reduction_status(d, base, check=False).kind != "reduced":
            return d, base

