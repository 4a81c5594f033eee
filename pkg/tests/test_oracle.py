import pytest
from hypothesis import given, settings

from cfconn import fixtures as F
from cfconn.errors import NotConnectedError, ScaleError
from cfconn.graph import Graph, is_complete
from cfconn.oracle import Limits, Method, cfc_oracle
from cfconn.solver import h_value
from cfconn.structure import find_bridges
from cfconn.verify import verify_cfc
from smallgraphs import universe
from strategies import connected_graphs


@pytest.mark.parametrize("g,expected", [
    (F.path(8), 3),
    (F.complete(4), 1),
    (F.star(3), 3),
])
def test_examples(g, expected):
    r = cfc_oracle(g)
    assert r.is_exact and r.value == expected and r.method is Method.ORACLE
    assert r.certificate.num_colors == expected
    assert verify_cfc(g, r.certificate)


def test_restricted_growth_certificate():
    r = cfc_oracle(F.path(4))
    colors = [r.certificate[e] for e in F.path(4).edges]
    assert colors[0] == 1
    for i in range(1, len(colors)):
        assert colors[i] <= 1 + max(colors[:i])


def test_trivial_graphs():
    assert cfc_oracle(Graph(vertices=["x"])).value == 0


def test_limits():
    with pytest.raises(ScaleError) as exc:
        cfc_oracle(F.path(20))
    assert exc.value.limits["max_edges"] == 12
    with pytest.raises(ScaleError):
        cfc_oracle(F.star(5), Limits(max_colors=3))
    with pytest.raises(NotConnectedError):
        cfc_oracle(Graph.from_pairs([(0, 1), (2, 3)]))


@pytest.mark.parametrize("g", [g for g in universe(5) if g.m <= 7], ids=lambda g: f"n{g.n}m{g.m}")
def test_pruned_search_matches_naive_enumeration(g):
    assert cfc_oracle(g).value == cfc_oracle(g, naive=True).value


@pytest.mark.parametrize("g", universe(6)[1:], ids=lambda g: f"n{g.n}m{g.m}")
def test_basic_bounds(g):
    r = cfc_oracle(g, Limits(max_edges=15))
    assert (r.value == 1) == is_complete(g)
    assert r.value <= g.n - 1
    if not is_complete(g):
        assert r.value >= 2
    if find_bridges(g):
        h = h_value(g, Limits(max_edges=15))
        assert h <= r.value <= h + 1


@settings(max_examples=25)
@given(connected_graphs(min_n=2, max_n=8))
def test_oracle_certificate_verifies(g):
    r = cfc_oracle(g, Limits(max_edges=14))
    assert r.certificate.num_colors == r.value
    assert verify_cfc(g, r.certificate, max_edges=None)
