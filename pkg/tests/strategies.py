from hypothesis import strategies as st

from cfconn.graph import Graph, is_connected


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_pairs(chosen, vertices=range(n))


@st.composite
def connected_graphs(draw, min_n=1, max_n=7):
    """Random spanning tree plus extra edges, so every draw is connected."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 6))))
    order = draw(st.permutations(sorted(edges)))
    g = Graph.from_pairs(order, vertices=range(n))
    assert is_connected(g)
    return g
