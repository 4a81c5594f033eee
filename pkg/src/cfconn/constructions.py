"""Explicit CFC-colorings: ruler paths, block matchings and cut-path layouts."""

from __future__ import annotations

import logging
from typing import Sequence

from .errors import InternalError, NotConnectedError, PreconditionError, ScaleError
from .graph import Edge, Graph, is_complete, is_connected
from .oracle import Limits, cfc_oracle
from .structure import (
    Kind,
    classify_cut_components,
    is_path_graph,
    is_star,
    is_two_edge_connected,
    nontrivial_block_matching,
    path_order,
)
from .verify import VERIFY_MAX_EDGES, EdgeColoring, verify_cfc

log = logging.getLogger(__name__)


def ruler_colors(m: int) -> list[int]:
    """Color of edge i (1-based) is the 2-adic valuation of i, plus one."""
    return [((i & -i).bit_length()) for i in range(1, m + 1)]


def ruler_path_coloring(path: Sequence, g: Graph | None = None) -> EdgeColoring:
    """Ruler coloring along a vertex sequence.

    When ``g`` is given the sequence must be a simple path of ``g``.
    """
    path = [str(x) for x in path]
    if len(path) < 2:
        raise PreconditionError("a path needs at least one edge")
    if len(set(path)) != len(path):
        raise PreconditionError("vertex sequence repeats a vertex")
    edges = [Edge(a, b) for a, b in zip(path, path[1:])]
    if g is not None:
        bad = [e.key for e in edges if e not in g]
        if bad:
            raise PreconditionError(f"not a path of the graph: missing {', '.join(bad)}")
    return EdgeColoring(dict(zip(edges, ruler_colors(len(edges)))))


def _enforce(g: Graph, c: EdgeColoring, what: str) -> EdgeColoring:
    if g.m > VERIFY_MAX_EDGES:
        log.debug("%s: %d edges, skipping verification", what, g.m)
        return c
    w = verify_cfc(g, c)
    if not w.ok:
        raise InternalError(f"{what} coloring fails at pair {w.failing_pair}")
    return c


def two_edge_connected_coloring(g: Graph) -> EdgeColoring:
    """Block-matching edges get color 2, everything else color 1."""
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    if is_complete(g):
        raise PreconditionError("graph is complete")
    if not is_two_edge_connected(g):
        raise PreconditionError("graph is not 2-edge-connected")
    matching = set(nontrivial_block_matching(g))
    c = EdgeColoring({e: 2 if e in matching else 1 for e in g.edges})
    return _enforce(g, c, "two-edge-connected")


def cut_path_coloring(g: Graph, limits: Limits | None = None) -> EdgeColoring:
    """Coloring for graphs whose bridge components are all paths.

    With a unique component attaining h >= 2 the result uses h colors: that
    component's ruler coloring carries the only bridge of color h, and one
    edge per nontrivial block (a matching) gets h too. Otherwise every
    component is ruler-colored within 1..h and the matching gets h + 1.
    """
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    cs = classify_cut_components(g, limits)
    if not cs.bridges:
        raise PreconditionError("graph has no bridge")
    others = [c for c in cs.components if c.kind is Kind.OTHER_TREE]
    if others:
        raise PreconditionError(
            f"bridge component on {', '.join(others[0].vertices)} is not a cut-path"
        )
    top = cs.attaining_h()
    unique = cs.h >= 2 and len(top) == 1
    special = cs.h if unique else cs.h + 1

    assignment: dict[Edge, int] = {}
    for comp in cs.components:
        assignment.update(ruler_path_coloring(comp.path).assignment)
    has_block = len(cs.bridges) < g.m
    if has_block:
        matching = set(nontrivial_block_matching(g))
        for e in g.edges:
            if e not in assignment:
                assignment[e] = special if e in matching else 1
    c = EdgeColoring(assignment)
    if c.num_colors != (special if has_block else cs.h):
        raise InternalError(f"cut-path coloring used {c.num_colors} colors, expected {special}")
    try:
        return _enforce(g, c, "cut-path")
    except InternalError:
        if g.m > (limits or Limits()).max_edges:
            raise
        log.warning("cut-path construction failed verification; using the oracle")
        return cfc_oracle(g, limits).certificate


def star_coloring(g: Graph) -> EdgeColoring:
    """Rainbow coloring of K_{1,r}; r colors are needed and suffice."""
    if not is_star(g):
        raise PreconditionError("graph is not a star")
    return EdgeColoring({e: i for i, e in enumerate(g.edges, start=1)})


def construct_cfc_coloring(g: Graph, limits: Limits | None = None) -> EdgeColoring:
    """An optimal CFC-coloring, by construction where one is known."""
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")
    if g.n < 2:
        raise PreconditionError("need at least 2 vertices")
    if is_complete(g):
        return EdgeColoring.uniform(g, 1)
    if is_path_graph(g):
        return ruler_path_coloring(path_order(g), g)
    if is_star(g):
        return star_coloring(g)
    if is_two_edge_connected(g):
        return two_edge_connected_coloring(g)
    cs = classify_cut_components(g, limits)
    if cs.all_cut_paths:
        return cut_path_coloring(g, limits)
    try:
        return cfc_oracle(g, limits).certificate
    except ScaleError as exc:
        raise ScaleError(f"no construction applies and {exc}", exc.limits) from exc
