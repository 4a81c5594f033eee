"""The line-graph operator and its iterates."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import NotConnectedError, ScaleError
from .graph import Edge, Graph, is_complete, is_connected

DEFAULT_EDGE_CAP = 50_000


@dataclass(frozen=True)
class LabeledLineGraph:
    """L^k(source) together with where each of its vertices came from.

    ``provenance`` maps every vertex of ``graph`` to the edge of the previous
    iterate it stands for (the identity map on vertices when k = 0).
    ``steps`` holds the provenance of every iteration, oldest first.
    """

    graph: Graph
    provenance: dict
    source: Graph
    k: int = 1
    steps: tuple = field(default=(), repr=False)

    def original_edges(self, x: str) -> frozenset[Edge]:
        """Edges of ``source`` that vertex ``x`` of L^k descends from (k >= 1)."""
        if self.k == 0:
            raise ValueError("L^0 vertices are source vertices, not edges")
        frontier = {x}
        for step in reversed(self.steps[1:]):
            frontier = {y for v in frontier for y in step[v]}
        return frozenset(self.steps[0][v] for v in frontier)


def line_edge_count(g: Graph) -> int:
    return sum(comb(g.degree(x), 2) for x in g.vertices)


def line_graph(g: Graph) -> LabeledLineGraph:
    provenance = {e.key: e for e in g.edges}
    incident: dict[str, list[str]] = {x: [] for x in g.vertices}
    for e in g.edges:
        incident[e.u].append(e.key)
        incident[e.v].append(e.key)
    pairs = []
    for x in g.vertices:
        inc = incident[x]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                pairs.append((inc[i], inc[j]))
    lg = Graph.from_pairs(pairs, vertices=list(provenance))
    return LabeledLineGraph(lg, provenance, g, 1, (provenance,))


def iterated_line_graph(g: Graph, k: int, edge_cap: int = DEFAULT_EDGE_CAP) -> LabeledLineGraph:
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return LabeledLineGraph(g, {x: x for x in g.vertices}, g, 0, ())
    cur = g
    steps = []
    for i in range(1, k + 1):
        size = line_edge_count(cur)
        if size > edge_cap:
            raise ScaleError(
                f"L^{i} would have {size} edges, above edge_cap={edge_cap} (reached L^{i - 1})",
                {"edge_cap": edge_cap, "iteration": i},
            )
        lg = line_graph(cur)
        steps.append(lg.provenance)
        cur = lg.graph
    return LabeledLineGraph(cur, steps[-1], g, k, tuple(steps))


def is_star_or_triangle(g: Graph) -> bool:
    """g is K_{1,r} (r >= 1) or K_3; for connected g, exactly when L(g) is complete."""
    if not is_connected(g):
        raise NotConnectedError("is_star_or_triangle requires a connected graph")
    n = g.n
    if n == 3 and g.m == 3:
        return True
    return n >= 2 and g.m == n - 1 and any(g.degree(x) == n - 1 for x in g.vertices)


def line_graph_is_complete(g: Graph) -> bool:
    return is_complete(line_graph(g).graph)
