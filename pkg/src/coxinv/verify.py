"""Oracle cross-checks: coset enumeration against the diagram-level computations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .diagram import PDiagram
from .finite_type import A, B, C, D2, F4, G3, G4, coxeter_order, enumerate_bases, standard_diagram
from .fixtures import load_fixture
from .invariants import binary_invariant, rank2_relators, rank2_sequence
from .iso import isomorphic
from .matching import exchange_C, exchange_D
from .oracle import element_order, group_order
from .quotient import quotient_by_power_relators


@dataclass(frozen=True)
class Check:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


ORDER_TYPES = (
    A(1), A(2), A(3), A(4), A(5), B(4), B(5), C(2), C(3), C(4), C(5),
    D2(5), D2(6), D2(8), D2(12), F4, G3, G4,
)

# quotient of the standard diagram by the per-type subgroup, with the order of the quotient
RANK2_FACTS = ((A(3), 6), (B(4), 6), (C(3), 12), (C(4), 12), (F4, 36))


def _only_base(d: PDiagram):
    (base,) = enumerate_bases(d)
    return base


def _engine_check(name: str, d: PDiagram, rels, max_cosets) -> Check:
    out = quotient_by_power_relators(d, rels)
    return Check(name, group_order(d, rels, max_cosets), group_order(out.diagram, (), max_cosets))


def checks(max_cosets: int | None = None) -> Iterator[Check]:
    for t in ORDER_TYPES:
        yield Check(f"order {t}", coxeter_order(t), group_order(standard_diagram(t), (), max_cosets))

    for t, order in RANK2_FACTS:
        d = standard_diagram(t)
        rels = rank2_relators(d, _only_base(d))
        yield Check(f"rank-2 quotient of {t}", order, group_order(d, rels, max_cosets))

    a4 = standard_diagram(A(4))
    yield _engine_check("engine: A4 eliminate x1-x3", a4, [("x1", "x3", 1)], max_cosets)
    rect = load_rectangle()
    yield _engine_check("engine: rectangle identify r1 r2", rect, [("r1", "r2", 1)], max_cosets)
    c5 = standard_diagram(C(5))
    abel = [("x1", "x2", 1), ("x2", "x3", 1), ("x3", "x4", 1), ("x4", "x5", 2)]
    yield _engine_check("engine: C5 abelianization", c5, abel, max_cosets)

    for t, swap in ((C(3), exchange_C), (C(5), exchange_C), (D2(6), exchange_D), (D2(10), exchange_D)):
        d = standard_diagram(t)
        out = swap(d, _only_base(d))
        yield Check(f"exchange preserves order of {t}", coxeter_order(t), group_order(out, (), max_cosets))

    d12 = PDiagram(["s", "t"], [("s", "t", 12)])
    yield Check(
        "binary: order of st in D2(12) quotient",
        4,
        element_order(d12, [("s", "t", 4)], ("s", "t"), max_cosets),
    )

    for side in ("left", "right"):
        got = binary_invariant(load_fixture(f"fig1_{side}")).diagram
        yield Check(
            f"fig1_{side}: binary diagram matches",
            True,
            isomorphic(got, load_fixture(f"fig1_binary_{side}")) is not None,
        )
    report = rank2_sequence(load_fixture("fig2_w1"))
    yield Check("fig2_w1: rank-2 class", 4, report.ell)
    yield Check(
        "fig2_w1: stages match",
        True,
        all(isomorphic(s, load_fixture(f"fig2_w{i}")) is not None for i, s in enumerate(report.stages, 1)),
    )


def load_rectangle() -> PDiagram:
    return PDiagram(
        ["r1", "r2", "r3", "r4"],
        [("r1", "r2", 2), ("r2", "r3", 2), ("r3", "r4", 2), ("r4", "r1", 2)],
    )


def run(max_cosets: int | None = None, emit: Callable[[str], None] = print) -> bool:
    results = list(checks(max_cosets))
    width = max(len(c.name) for c in results)
    for c in results:
        emit(f"{'PASS' if c.ok else 'FAIL'}  {c.name:<{width}}  expected={c.expected}  got={c.got}")
    failed = sum(not c.ok for c in results)
    emit(f"{len(results) - failed}/{len(results)} checks passed")
    return failed == 0
