"""Exact cfc values: single graphs, iterated line graphs, and k0."""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import (
    cut_path_coloring,
    ruler_path_coloring,
    star_coloring,
    two_edge_connected_coloring,
)
from .errors import (
    HUndecidableError,
    InternalError,
    MethodRefused,
    NotConnectedError,
    PreconditionError,
    ScaleError,
)
from .graph import Edge, Graph, is_complete, is_connected
from .linegraph import DEFAULT_EDGE_CAP, line_edge_count, line_graph
from .oracle import CfcResult, Limits, Method, cfc_oracle
from .structure import (
    CutStructure,
    Kind,
    ceil_log2,
    classify_cut_components,
    find_bridges,
    is_path_graph,
    is_star,
    is_tree,
    nontrivial_block_matching,
    path_cfc,
    path_order,
)
from .verify import EdgeColoring


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnectedError("graph is not connected")


def h_value(g: Graph, limits: Limits | None = None) -> int:
    """Largest cfc over the components of the bridge subgraph; 0 without bridges."""
    _require_connected(g)
    if g.n < 2:
        return 0
    return classify_cut_components(g, limits).h


def _component_coloring(comp, limits: Limits | None) -> EdgeColoring:
    t = comp.graph()
    if comp.path is not None:
        return ruler_path_coloring(comp.path)
    if is_star(t):
        return star_coloring(t)
    return cfc_oracle(t, limits).certificate


def _h_bound_coloring(g: Graph, cs: CutStructure, limits: Limits | None) -> EdgeColoring:
    """(h+1)-coloring: optimal colorings per bridge component, matching gets h+1."""
    assignment: dict[Edge, int] = {}
    for comp in cs.components:
        assignment.update(_component_coloring(comp, limits).assignment)
    matching = set(nontrivial_block_matching(g))
    for e in g.edges:
        if e not in assignment:
            assignment[e] = cs.h + 1 if e in matching else 1
    return EdgeColoring(assignment)


def cfc_exact(g: Graph, limits: Limits | None = None, allow_oracle: bool = True) -> CfcResult:
    """cfc(g) from the closed-form results, falling back to the oracle.

    With ``allow_oracle=False`` a MethodRefused is raised wherever only the
    oracle could decide the value.
    """
    _require_connected(g)
    limits = limits or Limits()
    n = g.n
    if n < 2:
        return CfcResult.exact(0, Method.COMPLETE, EdgeColoring({}))
    if is_complete(g):
        return CfcResult.exact(1, Method.COMPLETE, EdgeColoring.uniform(g))
    if is_path_graph(g):
        return CfcResult.exact(ceil_log2(n), Method.PATH_FORMULA, ruler_path_coloring(path_order(g), g))
    if is_star(g):
        return CfcResult.exact(g.m, Method.STAR_FORMULA, star_coloring(g))
    if not find_bridges(g):
        return CfcResult.exact(2, Method.TWO_EDGE_CONNECTED, two_edge_connected_coloring(g))
    if is_tree(g):
        # The only bridge component is g itself, so h(g) = cfc(g).
        if not allow_oracle:
            raise MethodRefused("tree that is neither a path nor a star: only the oracle applies")
        try:
            return cfc_oracle(g, limits)
        except ScaleError as exc:
            raise HUndecidableError(
                f"h undecidable at this scale: tree with {g.m} edges", component=g, limits=exc.limits
            ) from exc

    cs = classify_cut_components(g, limits, allow_oracle)
    if cs.all_cut_paths:
        if cs.h == 1:
            return CfcResult.exact(2, Method.ORDER2_COMPONENTS, cut_path_coloring(g, limits))
        if len(cs.attaining_h()) == 1:
            return CfcResult.exact(cs.h, Method.CUT_PATH_UNIQUE, cut_path_coloring(g, limits))
        return CfcResult.exact(cs.h + 1, Method.CUT_PATH_MULTI, cut_path_coloring(g, limits))
    if allow_oracle and g.m <= limits.max_edges:
        return cfc_oracle(g, limits)
    return CfcResult.bound(cs.h, Method.H_BOUND, _h_bound_coloring(g, cs, limits))


# ------------------------------------------------------- iterated line graphs

def line_cut_path_lengths(g: Graph, edge_cap: int = DEFAULT_EDGE_CAP) -> list[int]:
    """Lengths of the cut-paths of L(g), longest first."""
    size = line_edge_count(g)
    if size > edge_cap:
        raise ScaleError(f"L(G) would have {size} edges, above edge_cap={edge_cap}", {"edge_cap": edge_cap})
    lg = line_graph(g).graph
    if lg.n < 2 or not is_connected(lg):
        return []
    cs = classify_cut_components(lg, allow_oracle=False)
    if not cs.all_cut_paths:
        raise InternalError("a bridge component of a line graph is not a cut-path")
    return sorted((c.length for c in cs.components), reverse=True)


def shrink_lengths(lengths: list[int], k: int) -> list[int]:
    """Cut-path lengths of L^k(g) from those of L(g); each iteration removes one edge."""
    return [ell - (k - 1) for ell in lengths if ell - (k - 1) >= 1]


def claw_free_value(lengths: list[int]) -> tuple[int, Method]:
    """cfc of a noncomplete connected claw-free graph from its cut-path lengths."""
    if not lengths:
        return 2, Method.TWO_EDGE_CONNECTED
    p = max(lengths)
    if p == 1:
        return 2, Method.ORDER2_COMPONENTS
    h = path_cfc(p)
    attaining = sum(1 for ell in lengths if path_cfc(ell) == h)
    if attaining == 1:
        return h, Method.CUT_PATH_UNIQUE
    return h + 1, Method.CUT_PATH_MULTI


def _is_noncomplete_two_edge_connected(g: Graph) -> bool:
    return g.n >= 2 and not is_complete(g) and not find_bridges(g)


def cfc_iterated(g: Graph, k: int, edge_cap: int = DEFAULT_EDGE_CAP,
                 limits: Limits | None = None) -> CfcResult:
    """cfc(L^k(g)) from the iterated-line-graph formulas, without building L^k."""
    _require_connected(g)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return cfc_exact(g, limits)
    n = g.n
    if n <= 1:
        return CfcResult.exact(0, Method.COMPLETE)
    if is_path_graph(g):
        return CfcResult.exact(ceil_log2(n - k) if k < n - 1 else 0, Method.PATH_FORMULA)
    if is_complete(g):
        if n == 3:
            return CfcResult.exact(1, Method.COMPLETE)
        return CfcResult.exact(2, Method.TWO_EDGE_CONNECTED)
    if is_star(g):
        if k == 1 or n == 4:
            return CfcResult.exact(1, Method.COMPLETE)
        return CfcResult.exact(2, Method.TWO_EDGE_CONNECTED)
    if _is_noncomplete_two_edge_connected(g):
        return CfcResult.exact(2, Method.TWO_EDGE_CONNECTED)
    value, method = claw_free_value(shrink_lengths(line_cut_path_lengths(g, edge_cap), k))
    return CfcResult.exact(value, method)


@dataclass(frozen=True)
class K0Result:
    k0: int | None
    first_k_le_2: int

    def to_dict(self) -> dict:
        return {"k0": self.k0, "first_k_le_2": self.first_k_le_2}


def _compare(r: CfcResult, pred) -> bool:
    """Evaluate ``pred`` on a result, insisting it agrees across a BOUND interval."""
    lo, hi = pred(r.lo), pred(r.hi)
    if lo != hi:
        raise ScaleError(
            f"cfc only bounded to [{r.lo}, {r.hi}]; the oracle is needed to decide", {}
        )
    return lo


def k0(g: Graph, edge_cap: int = DEFAULT_EDGE_CAP, limits: Limits | None = None) -> K0Result:
    """Smallest k with cfc(L^k(g)) = 2 (None if there is none), and the smallest with <= 2."""
    _require_connected(g)
    n = g.n
    if n < 2:
        raise PreconditionError("k0 needs at least 2 vertices")
    value: int | None
    if is_path_graph(g):
        value = None if n == 2 else (0 if n == 3 else n - 4)
    elif is_complete(g):
        value = None if n == 3 else 1
    elif is_star(g):
        value = None if n == 4 else 2
    elif _is_noncomplete_two_edge_connected(g):
        value = 0
    else:
        value = _k0_family(g, edge_cap, limits)
    return K0Result(value, _first_k_le_2(g, edge_cap, limits))


def _k0_family(g: Graph, edge_cap: int, limits: Limits | None) -> int:
    """k0 for connected g of order >= 4 with a bridge, neither path nor star."""
    if _compare(cfc_exact(g, limits), lambda v: v == 2):
        return 0
    lengths = line_cut_path_lengths(g, edge_cap)
    if not lengths or max(lengths) == 1:
        return 1
    p0 = max(lengths)
    if path_cfc(p0) == 2 and sum(1 for ell in lengths if path_cfc(ell) == 2) == 1:
        return 1
    if lengths.count(p0) >= 2:
        return p0
    if p0 - 1 in lengths:
        return p0 - 1
    return p0 - 2


def _first_k_le_2(g: Graph, edge_cap: int, limits: Limits | None) -> int:
    k = 0
    while True:
        if _compare(cfc_iterated(g, k, edge_cap, limits), lambda v: v <= 2):
            return k
        k += 1
        if k > g.m + 2:
            raise InternalError("no iterate with cfc <= 2, contradicting the stabilization result")
