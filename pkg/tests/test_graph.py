import pytest
from hypothesis import given

from cfconn import fixtures as F
from cfconn.errors import GraphParseError, PreconditionError
from cfconn.graph import (
    Edge,
    Graph,
    induced_subgraph,
    is_complete,
    is_connected,
    parse_graph,
    render_dot,
    render_edge_list,
)
from strategies import graphs


def test_parse_path():
    g = parse_graph("a b\nb c")
    assert g.vertices == ("a", "b", "c")
    assert g.edges == (Edge("a", "b"), Edge("b", "c"))


def test_duplicate_edges_collapse():
    g = parse_graph("a b\nb a")
    assert g.m == 1 and g.edges == (Edge("a", "b"),)


def test_loop_rejected_with_line_number():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("a a")
    assert exc.value.line == 1


@pytest.mark.parametrize("text,line", [("a b\nc\n", 2), ("# x\n\na b c\n", 3), ("a b\n\nx y\nq q\n", 4)])
def test_bad_lines_report_position(text, line):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_comments_blank_lines_and_crlf():
    g = parse_graph("# header\r\n\r\n1 2\r\n2 3\r\n")
    assert g.vertices == ("1", "2", "3") and g.m == 2


def test_labels_are_not_coerced():
    g = parse_graph("01 1\n")
    assert set(g.vertices) == {"01", "1"}


def test_edge_is_unordered():
    assert Edge("x", "y") == Edge("y", "x")
    assert hash(Edge("x", "y")) == hash(Edge("y", "x"))
    assert Edge("b", "a").key == "a|b"
    with pytest.raises(PreconditionError):
        Edge("v", "v")


def test_nested_edge_keys():
    assert Edge("a|b", "b|c").key == "(a|b)|(b|c)"


def test_dot_reader():
    g = parse_graph('graph G {\n  a -- b;\n  b -- c -- d\n  "e f";\n}\n')
    assert g.vertices == ("a", "b", "c", "d", "e f")
    assert g.m == 3 and not is_connected(g)


def test_dot_rejects_directed_and_attributes():
    with pytest.raises(GraphParseError):
        parse_graph("graph { a -> b; }")
    with pytest.raises(GraphParseError):
        parse_graph("graph { a -- b [color=red]; }")
    with pytest.raises(GraphParseError):
        parse_graph("graph { a -- a; }")


def test_is_connected():
    assert is_connected(F.path(4))
    assert not is_connected(Graph.from_pairs([(0, 1), (2, 3)]))
    assert is_connected(Graph(vertices=["v"]))
    assert is_connected(Graph())


def test_is_complete():
    assert is_complete(F.complete(5))
    assert not is_complete(F.cycle(4))
    assert is_complete(F.complete(2))
    assert is_complete(Graph(vertices=["v"]))


def test_induced_subgraph():
    k4 = F.complete(4)
    assert induced_subgraph(k4, ["0", "1", "2"]) == F.complete(3)
    assert induced_subgraph(F.cycle(5), []).n == 0
    sub = induced_subgraph(F.cycle(5), ["1", "2"])
    assert sub.n == 2 and sub.m == 1
    with pytest.raises(PreconditionError, match="'9'"):
        induced_subgraph(k4, ["0", "9"])


@given(graphs())
def test_graph_invariants(g):
    for x in g.vertices:
        for y in g.neighbors(x):
            assert x in g.neighbors(y)
    assert g.m == sum(g.degree(x) for x in g.vertices) // 2
    assert all(e.u != e.v for e in g.edges)


@given(graphs())
def test_dot_round_trip(g):
    assert parse_graph(render_dot(g)) == g


@given(graphs(min_n=2))
def test_edge_list_round_trip(g):
    if any(g.degree(x) == 0 for x in g.vertices):
        with pytest.raises(PreconditionError):
            render_edge_list(g)
    else:
        assert parse_graph(render_edge_list(g)) == g


@given(graphs())
def test_induced_edges_are_a_subset(g):
    s = g.vertices[::2]
    assert set(induced_subgraph(g, s).edges) <= set(g.edges)


@given(graphs())
def test_complete_implies_connected(g):
    if g.n >= 1 and is_complete(g):
        assert is_connected(g)
