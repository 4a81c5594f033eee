import pytest
from hypothesis import given, settings

from cfconn import fixtures as F
from cfconn.errors import HUndecidableError, MethodRefused, NotConnectedError, PreconditionError, ScaleError
from cfconn.graph import Graph
from cfconn.linegraph import iterated_line_graph
from cfconn.oracle import Limits, Method, cfc_oracle
from cfconn.solver import (
    cfc_exact,
    cfc_iterated,
    claw_free_value,
    h_value,
    k0,
    shrink_lengths,
)
from cfconn.verify import verify_cfc
from strategies import connected_graphs


@pytest.mark.parametrize("g,value,method", [
    (F.complete(2), 1, Method.COMPLETE),
    (F.cycle(4), 2, Method.TWO_EDGE_CONNECTED),
    (F.triangle_chain(2, 3), 2, Method.CUT_PATH_UNIQUE),
    (F.triangle_chain(3, 3), 3, Method.CUT_PATH_MULTI),
    (F.paw(), 2, Method.ORDER2_COMPONENTS),
    (F.path(8), 3, Method.PATH_FORMULA),
    (F.star(6), 6, Method.STAR_FORMULA),
])
def test_cfc_exact_examples(g, value, method):
    r = cfc_exact(g)
    assert r.is_exact and r.value == value and r.method is method
    assert r.certificate.num_colors == value
    assert verify_cfc(g, r.certificate)


def test_spider_goes_to_oracle():
    g = F.spider(3, 2)
    r = cfc_exact(g)
    assert r.method is Method.ORACLE
    assert r.value == cfc_oracle(g, naive=True).value == 3


def test_trivial_graph_is_zero():
    assert cfc_exact(Graph(vertices=["v"])).value == 0
    assert cfc_exact(Graph()).value == 0


def test_formula_mode_refuses_oracle_cases():
    with pytest.raises(MethodRefused):
        cfc_exact(F.spider(3, 2), allow_oracle=False)
    g = Graph.from_pairs(list(F.spider(3, 2).edges) + [("s0_2", "x"), ("x", "y"), ("y", "s0_2")])
    with pytest.raises(MethodRefused):
        cfc_exact(g, allow_oracle=False)


def test_bound_beyond_oracle_scale():
    # bridge component 0-1-2 with a triangle on the middle vertex is not a cut-path;
    # a K5 makes the graph too big for a 12-edge oracle
    pairs = [(0, 1), (1, 2), (1, 3), (3, 4), (4, 1)] + [(f"k{i}", f"k{j}") for i in range(5) for j in range(i + 1, 5)]
    g = Graph.from_pairs(pairs + [(2, "k0")])
    r = cfc_exact(g)
    assert r.kind == "BOUND" and r.value == (2, 3) and r.method is Method.H_BOUND
    assert r.certificate.num_colors <= 3
    assert verify_cfc(g, r.certificate)


def test_bound_brackets_oracle():
    pairs = [(0, 1), (1, 2), (1, 3), (3, 4), (4, 1), (2, 5), (5, 6), (6, 2)]
    g = Graph.from_pairs(pairs)
    exact = cfc_oracle(g, Limits(max_edges=20)).value
    r = cfc_exact(g, Limits(max_edges=5))
    assert r.kind == "BOUND" and r.lo <= exact <= r.hi


def test_undecidable_h():
    g = Graph.from_pairs(list(F.spider(4, 4).edges) + [("s0_4", "x"), ("x", "y"), ("y", "s0_4")])
    with pytest.raises(HUndecidableError):
        cfc_exact(g, Limits(max_edges=8))


def test_h_value():
    assert h_value(F.cycle(6)) == 0
    assert h_value(F.paw()) == 1
    assert h_value(F.triangle_chain(2, 3)) == 2
    with pytest.raises(NotConnectedError):
        h_value(Graph.from_pairs([(0, 1), (2, 3)]))


@pytest.mark.parametrize("g,k,expected", [
    (F.path(9), 2, 3),
    (F.star(5), 1, 1),
    (F.star(5), 2, 2),
    (F.complete(4), 5, 2),
    (F.complete(3), 7, 1),
    (F.star(3), 4, 1),
    (F.petersen(), 3, 2),
    (F.path(4), 3, 0),
    (F.path(4), 9, 0),
])
def test_cfc_iterated_examples(g, k, expected):
    assert cfc_iterated(g, k).value == expected


def test_shrink_and_claw_free_value():
    assert shrink_lengths([3, 3, 1], 1) == [3, 3, 1]
    assert shrink_lengths([3, 3, 1], 3) == [1, 1]
    assert claw_free_value([]) == (2, Method.TWO_EDGE_CONNECTED)
    assert claw_free_value([1, 1]) == (2, Method.ORDER2_COMPONENTS)
    assert claw_free_value([3, 1]) == (2, Method.CUT_PATH_UNIQUE)
    assert claw_free_value([3, 2]) == (3, Method.CUT_PATH_MULTI)
    assert claw_free_value([4, 3]) == (3, Method.CUT_PATH_UNIQUE)


FAMILY = [
    F.clique_with_tails(4, (4,)),
    F.clique_with_tails(4, (4, 4)),
    F.clique_with_tails(4, (5, 3)),
    F.clique_with_tails(3, (6,)),
    F.clique_with_tails(3, (5, 4)),
    F.clique_with_tails(4, (6, 3)),
    F.spider(3, 2),
    F.paw(),
    F.triangle_chain(3, 3),
]


@pytest.mark.parametrize("g", FAMILY, ids=lambda g: f"n{g.n}m{g.m}")
def test_iterated_formula_matches_materialization(g):
    for k in range(0, 6):
        try:
            lk = iterated_line_graph(g, k, edge_cap=8000).graph
        except ScaleError:
            break
        assert cfc_iterated(g, k).value == cfc_exact(lk).value, k


def test_k0_examples():
    assert k0(F.complete(3)).to_dict() == {"k0": None, "first_k_le_2": 0}
    assert k0(F.path(7)).k0 == 3
    assert k0(F.star(7)).k0 == 2
    assert k0(F.petersen()).k0 == 0
    with pytest.raises(PreconditionError):
        k0(Graph(vertices=["v"]))


@pytest.mark.parametrize("g", FAMILY + [F.path(n) for n in range(3, 9)] + [F.complete(5), F.star(6), F.bowtie()],
                         ids=lambda g: f"n{g.n}m{g.m}")
def test_k0_is_first_iterate_at_two(g):
    res = k0(g)
    values = [cfc_iterated(g, j).value for j in range(res.k0 + 1)]
    assert values[-1] == 2 and 2 not in values[:-1]
    firsts = [cfc_iterated(g, j).value for j in range(res.first_k_le_2 + 1)]
    assert firsts[-1] <= 2 and all(v > 2 for v in firsts[:-1])


@settings(max_examples=30)
@given(connected_graphs(min_n=2, max_n=7))
def test_k0_consistency_random(g):
    res = k0(g, limits=Limits(max_edges=14))
    if res.k0 is not None:
        values = [cfc_iterated(g, j, limits=Limits(max_edges=14)).value for j in range(res.k0 + 1)]
        assert values[-1] == 2 and 2 not in values[:-1]


@settings(max_examples=30)
@given(connected_graphs(min_n=2, max_n=6))
def test_iterated_matches_materialized_random(g):
    for k in range(1, 4):
        try:
            lk = iterated_line_graph(g, k, edge_cap=3000).graph
        except ScaleError:
            break
        assert cfc_iterated(g, k).value == cfc_exact(lk, Limits(max_edges=14)).value
