import itertools

import pytest

from compnum.errors import GraphError, ParseError
from compnum.graph import (
    Digraph,
    Edge,
    Graph,
    connected_components,
    fresh_vertex,
    induced_subgraph,
    parse_digraph,
    parse_graph,
    remove_edge,
    serialize_digraph,
    serialize_graph,
)
from compnum.holes import is_chordal
from compnum.scan import labeled_graphs

from conftest import cycle_graph, make


def test_parse_path():
    g = parse_graph("e a b\ne b c")
    assert g.vertices == {"a", "b", "c"}
    assert g.edges() == [Edge("a", "b"), Edge("b", "c")]


def test_parse_isolated_only():
    g = parse_graph("v a\nv b")
    assert len(g) == 2 and g.num_edges() == 0


def test_duplicate_edges_collapse():
    assert parse_graph("e a b\ne a b").edges() == [Edge("a", "b")]
    assert parse_graph("e a b\ne b a").num_edges() == 1


def test_comments_and_blank_lines():
    g = parse_graph("# header\n\ne a b  \n   # indented comment\nv c\n")
    assert g.vertices == {"a", "b", "c"} and g.num_edges() == 1


@pytest.mark.parametrize("text,line", [
    ("e a a", 1),
    ("e a b\nx c d", 2),
    ("e a", 1),
    ("e a b c", 1),
    ("v", 1),
    ("e a b\n\ne a b-c", 3),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_digraph():
    d = parse_digraph("a u > w\na v > w")
    assert d.vertices == {"u", "v", "w"}
    assert d.arcs == {("u", "w"), ("v", "w")}
    assert len(parse_digraph("")) == 0


@pytest.mark.parametrize("text", ["a u > u", "a u w", "a u < w", "e u w"])
def test_parse_digraph_errors(text):
    with pytest.raises(ParseError):
        parse_digraph(text)


def test_edge_ignores_orientation():
    assert Edge.of("b", "a") == Edge.of("a", "b") == Edge("a", "b")
    with pytest.raises(GraphError):
        Edge.of("a", "a")


def test_serialize_round_trip_and_order():
    g = Graph(["z", "q"], [("d", "c"), ("b", "a"), ("a", "c")])
    text = serialize_graph(g)
    assert text == "v q\nv z\ne a b\ne a c\ne c d\n"
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_serialize_digraph_round_trip():
    d = Digraph(["lone"], [("b", "a"), ("c", "a")])
    text = serialize_digraph(d)
    assert text == "v lone\na b > a\na c > a\n"
    assert parse_digraph(text) == d


def test_induced_subgraph_examples(housex):
    c4 = cycle_graph("abcd")
    assert induced_subgraph(c4, {"a", "b", "c"}) == make(["ab", "bc"])
    assert len(induced_subgraph(c4, set())) == 0
    sq = induced_subgraph(housex, {"v0", "v1", "v2", "v3"})
    assert sq == cycle_graph(["v0", "v1", "v2", "v3"])
    with pytest.raises(GraphError):
        induced_subgraph(c4, {"a", "zz"})


def test_remove_edge_examples(housex):
    assert remove_edge(cycle_graph("abcd"), ("a", "b")) == make(["bc", "cd", "da"])
    assert remove_edge(make(["ab", "bc", "ac"]), ("a", "c")) == make(["ab", "bc"])
    h = remove_edge(housex, ("v0", "v1"))
    assert len(h) == 5 and h.num_edges() == 6 and is_chordal(h)
    with pytest.raises(GraphError):
        remove_edge(housex, ("v0", "v2"))


def test_components(domino):
    assert connected_components(make(["ab", "bc", "cd"])) == [["a", "b", "c", "d"]]
    assert connected_components(make(["cd", "ab"])) == [["a", "b"], ["c", "d"]]
    assert connected_components(domino.remove_vertices({"b", "e"})) == [["a", "d"], ["c", "f"]]


def test_fresh_vertex_is_numeric_order():
    assert fresh_vertex() == "_z0"
    taken = {f"_z{i}" for i in range(10)}
    assert fresh_vertex(taken) == "_z10"
    assert fresh_vertex({"_z0"}, {"_z1", "_z3"}) == "_z2"


def test_induced_subgraph_exhaustive():
    # every labelled graph on 5 vertices, every vertex subset
    for g in labeled_graphs(5):
        vs = g.sorted_vertices()
        for r in range(len(vs) + 1):
            for sub in itertools.combinations(vs, r):
                h = g.induced_subgraph(sub)
                want = {e for e in g.edges() if e.u in sub and e.v in sub}
                assert h.vertices == set(sub) and h.edge_set() == want


def test_remove_then_add_is_identity():
    for g in labeled_graphs(4):
        for e in g.edges():
            assert g.remove_edge(*e).add_edge(*e) == g


def test_graph_equality_is_labelled():
    assert make(["ab"]) != make(["ac"])
    assert make(["ab"], ["c"]) != make(["ab"])
    assert hash(make(["ab", "bc"])) == hash(make(["cb", "ba"]))
