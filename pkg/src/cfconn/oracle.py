"""Exact cfc by exhaustive search over edge colorings.

This is the trust anchor for every closed-form value in the package, so it
depends on nothing but the graph model and the verifier.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import InternalError, NotConnectedError, ScaleError
from .graph import Edge, Graph, is_connected
from .verify import EdgeColoring, verify_cfc

ORACLE_MAX_EDGES = 12
# Guards the per-pair simple-path tables the pruned search precomputes.
ORACLE_MAX_PATHS = 200_000


@dataclass(frozen=True)
class Limits:
    max_edges: int = ORACLE_MAX_EDGES
    max_colors: int | None = None

    def to_dict(self) -> dict:
        return {"max_edges": self.max_edges, "max_colors": self.max_colors}


class Method(str, Enum):
    COMPLETE = "COMPLETE"
    TWO_EDGE_CONNECTED = "TWO_EDGE_CONNECTED"
    CUT_PATH_UNIQUE = "CUT_PATH_UNIQUE"
    CUT_PATH_MULTI = "CUT_PATH_MULTI"
    ORDER2_COMPONENTS = "ORDER2_COMPONENTS"
    PATH_FORMULA = "PATH_FORMULA"
    STAR_FORMULA = "STAR_FORMULA"
    ORACLE = "ORACLE"
    H_BOUND = "H_BOUND"


@dataclass(frozen=True)
class CfcResult:
    """Exact cfc value, or the interval [lo, lo + 1] when only h(G) is known."""

    kind: str  # "EXACT" or "BOUND"
    value: int | tuple[int, int]
    method: Method
    certificate: EdgeColoring | None = None

    @classmethod
    def exact(cls, value: int, method: Method, certificate=None) -> "CfcResult":
        return cls("EXACT", value, method, certificate)

    @classmethod
    def bound(cls, lo: int, method: Method = Method.H_BOUND, certificate=None) -> "CfcResult":
        return cls("BOUND", (lo, lo + 1), method, certificate)

    @property
    def is_exact(self) -> bool:
        return self.kind == "EXACT"

    @property
    def lo(self) -> int:
        return self.value if self.is_exact else self.value[0]

    @property
    def hi(self) -> int:
        return self.value if self.is_exact else self.value[1]

    def to_dict(self, g: Graph | None = None, with_certificate: bool = True) -> dict:
        out: dict = {"kind": self.kind}
        if self.is_exact:
            out["value"] = self.value
        else:
            out["lo"], out["hi"] = self.value
        out["method"] = self.method.value
        if with_certificate and self.certificate is not None:
            out["certificate"] = self.certificate.to_json_dict(g)
        return out


def _pair_paths(g: Graph, index: dict[Edge, int]) -> list[list[tuple[int, ...]]]:
    """All simple paths, as edge-index tuples, for every vertex pair i < j."""
    vpos = {x: i for i, x in enumerate(g.vertices)}
    table: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    total = 0
    for src in g.vertices:
        s = vpos[src]
        path = [src]
        edges: list[int] = []
        on_path = {src}
        stack = [iter(g.adjacency[src])]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w in on_path:
                    continue
                edges.append(index[Edge(path[-1], w)])
                path.append(w)
                on_path.add(w)
                t = vpos[w]
                if s < t:
                    table.setdefault((s, t), []).append(tuple(edges))
                    total += 1
                    if total > ORACLE_MAX_PATHS:
                        raise ScaleError(
                            f"more than {ORACLE_MAX_PATHS} simple paths; too many for the oracle",
                            {"max_paths": ORACLE_MAX_PATHS},
                        )
                stack.append(iter(g.adjacency[w]))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path) > 1:
                    on_path.discard(path.pop())
                    edges.pop()
    n = g.n
    return [table[(i, j)] for i in range(n) for j in range(i + 1, n)]


def _conflict_free(colors: list[int], path: tuple[int, ...]) -> bool:
    if len(path) == 1:
        return True
    counts = Counter(colors[e] for e in path)
    return 1 in counts.values()


def _search(m: int, t: int, pairs: list[list[tuple[int, ...]]]) -> list[int] | None:
    """First coloring in restricted-growth order with at most t colors.

    A pair is settled once every edge on every one of its paths is colored;
    branches that settle a pair without a conflict-free path are cut.
    """
    settle_at: list[list[list[tuple[int, ...]]]] = [[] for _ in range(m)]
    for paths in pairs:
        settle_at[max(max(p) for p in paths)].append(paths)
    colors = [0] * m

    def go(i: int, used: int) -> bool:
        if i == m:
            return True
        top = min(used + 1, t)
        for col in range(1, top + 1):
            colors[i] = col
            if all(any(_conflict_free(colors, p) for p in paths) for paths in settle_at[i]):
                if go(i + 1, max(used, col)):
                    return True
        colors[i] = 0
        return False

    return list(colors) if go(0, 0) else None


def _check_scale(g: Graph, limits: Limits) -> None:
    if g.m > limits.max_edges:
        raise ScaleError(
            f"oracle limited to {limits.max_edges} edges, graph has {g.m}", limits.to_dict()
        )


def cfc_oracle(g: Graph, limits: Limits | None = None, naive: bool = False) -> CfcResult:
    """Smallest t admitting a CFC-coloring, with the first optimal coloring found.

    The default search walks restricted-growth strings (edge 0 gets color 1,
    each later edge at most one more than the largest color so far) and
    prunes settled pairs. ``naive=True`` instead runs every t-coloring
    through the verifier; it exists for auditing the fast path on tiny inputs.
    """
    limits = limits or Limits()
    if not is_connected(g):
        raise NotConnectedError("cfc_oracle requires a connected graph")
    if g.n < 2:
        return CfcResult.exact(0, Method.ORACLE, EdgeColoring({}))
    _check_scale(g, limits)
    m = g.m
    cap = g.n - 1
    if limits.max_colors is not None:
        cap = min(cap, limits.max_colors)
    index = {e: i for i, e in enumerate(g.edges)}
    pairs = None if naive else _pair_paths(g, index)
    for t in range(1, cap + 1):
        if naive:
            for combo in itertools.product(range(1, t + 1), repeat=m):
                if max(combo) != t:
                    continue
                c = EdgeColoring(dict(zip(g.edges, combo)), t)
                if verify_cfc(g, c, max_edges=None):
                    return CfcResult.exact(t, Method.ORACLE, c)
            continue
        found = _search(m, t, pairs)
        if found is not None:
            c = EdgeColoring(dict(zip(g.edges, found)))
            if c.num_colors != t:
                raise InternalError(f"oracle found a {c.num_colors}-coloring after {t - 1} colors failed")
            return CfcResult.exact(t, Method.ORACLE, c)
    if limits.max_colors is not None and limits.max_colors < g.n - 1:
        raise ScaleError(f"no CFC-coloring with at most {limits.max_colors} colors", limits.to_dict())
    raise InternalError(f"no CFC-coloring with n-1 = {g.n - 1} colors; the n-1 upper bound says otherwise")
