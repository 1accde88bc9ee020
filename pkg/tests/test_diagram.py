import json

import pytest
from hypothesis import given

from coxinv.diagram import (
    INF,
    DiagramError,
    ParseError,
    PDiagram,
    c_components,
    emit_diagram,
    free_factors,
    induced_subdiagram,
    is_irreducible,
    load_diagram,
    odd_components,
    parse_diagram,
)
from coxinv.fixtures import load_fixture

from _builders import diagrams, pair, square


def test_parse_single_edge():
    d = parse_diagram("gen a b\nedge a b 6")
    assert d.generators == ("a", "b")
    assert d.label("a", "b") == 6
    assert d.label("b", "a") == 6
    assert d.label("a", "a") == 1


def test_parse_rectangle():
    d = square()
    assert d.rank == 4
    assert sorted(d.edges.values()) == [2, 2, 2, 2]
    assert d.label("r1", "r3") == INF


def test_parse_rejects_self_pair():
    with pytest.raises(ParseError, match="self-pair") as err:
        parse_diagram("gen a\nedge a a 3")
    assert err.value.line == 2


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("gen a b\nedge a b 1", 2, 10),
        ("gen a b\nedge a c 3", 2, 8),
        ("gen a b\nedge a b x", 2, 10),
        ("gen a b\nedge a b 3\nedge b a 4", 3, 1),
        ("edge a b 3", 1, 1),
        ("gen a a", 1, 7),
        ("gen a\ngen b", 2, 1),
        ("gen a b\nnode a", 2, 1),
        ("gen a b\nedge a b", 2, 1),
        ("", 1, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_diagram(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_parse_comments_and_blank_lines():
    d = parse_diagram("# header\n\ngen a b  # two\nedge a b 3 # odd\n")
    assert d == pair(3)


def test_constructor_validation():
    with pytest.raises(DiagramError):
        PDiagram(["a", "b"], [("a", "b", 2.5)])
    with pytest.raises(DiagramError):
        PDiagram(["a", "b"], [("a", "z", 3)])
    with pytest.raises(DiagramError):
        PDiagram(["a", "a"], [])
    with pytest.raises(DiagramError):
        PDiagram(["a b"], [])


def test_emit_text_round_trip():
    assert emit_diagram(pair(6), "text") == "gen a b\nedge a b 6"


def test_emit_json():
    data = json.loads(emit_diagram(square(), "json"))
    assert len(data["generators"]) == 4
    assert len(data["edges"]) == 4
    assert load_diagram(emit_diagram(square(), "json")) == square()


def test_emit_dot():
    dot = emit_diagram(square(), "dot")
    assert dot.startswith("graph P {")
    assert dot.count(' -- ') == 4
    assert dot.count('[label="2"]') == 4
    assert sum(1 for line in dot.splitlines() if line.strip().endswith('";')) == 4


def test_emit_unknown_format():
    with pytest.raises(ValueError):
        emit_diagram(square(), "yaml")


def test_load_json_parse_error_position():
    with pytest.raises(ParseError) as err:
        load_diagram('{"generators": [')
    assert err.value.line == 1


def test_induced_subdiagram():
    d = square()
    assert induced_subdiagram(d, {"r1", "r2"}).edge_list() == [("r1", "r2", 2)]
    opposite = induced_subdiagram(d, {"r1", "r3"})
    assert opposite.rank == 2 and not opposite.edges
    assert induced_subdiagram(d, set()).rank == 0
    with pytest.raises(DiagramError):
        induced_subdiagram(d, {"q"})


def test_free_factors():
    assert free_factors(square()) == (("r1", "r2", "r3", "r4"),)
    two = parse_diagram("gen a b c d\nedge a b 3\nedge c d 3")
    assert free_factors(two) == (("a", "b"), ("c", "d"))
    assert free_factors(PDiagram([], [])) == ()


def test_c_components():
    assert c_components(square()) == (("r1", "r3"), ("r2", "r4"))
    assert c_components(pair(3)) == (("a", "b"),)
    assert c_components(pair(2)) == (("a",), ("b",))
    assert is_irreducible(pair(3), ["a", "b"])
    assert not is_irreducible(pair(2), ["a", "b"])


def test_odd_components():
    assert odd_components(load_fixture("fig1_left")) == (("A",), ("B", "C", "E"), ("D", "F"), ("G", "H"))
    assert odd_components(pair(6)) == (("a",), ("b",))
    assert odd_components(pair(3)) == (("a", "b"),)


def test_relabel_and_equality():
    d = square().relabel({"r1": "x"})
    assert d.generators[0] == "x"
    assert d.label("x", "r2") == 2
    assert d != square()
    assert hash(square()) == hash(square())


@given(diagrams())
def test_text_round_trip(d):
    assert parse_diagram(emit_diagram(d)) == d


@given(diagrams())
def test_json_round_trip(d):
    assert load_diagram(emit_diagram(d, "json")) == d


@given(diagrams())
def test_partitions_cover_generators(d):
    for part in (free_factors(d), c_components(d), odd_components(d)):
        flat = [g for block in part for g in block]
        assert sorted(flat) == sorted(d.generators)
