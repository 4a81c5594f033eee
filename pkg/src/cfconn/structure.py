"""Bridges, blocks, cut-path classification and related structural predicates."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .errors import (
    HUndecidableError,
    InternalError,
    MethodRefused,
    NotConnectedError,
    PreconditionError,
    ScaleError,
)
from .graph import Edge, Graph, is_connected


def ceil_log2(x: int) -> int:
    """Smallest c with 2**c >= x, for x >= 1."""
    return (x - 1).bit_length()


def path_cfc(num_edges: int) -> int:
    """cfc of a path with ``num_edges`` edges."""
    return ceil_log2(num_edges + 1)


def _require_connected(g: Graph, what: str) -> None:
    if not is_connected(g):
        raise NotConnectedError(f"{what} requires a connected graph")


@dataclass(frozen=True)
class _DfsResult:
    bridges: frozenset
    cut_vertices: frozenset
    blocks: list


def _lowpoint_dfs(g: Graph) -> _DfsResult:
    """One iterative Hopcroft-Tarjan pass: bridges, cut vertices and blocks."""
    bridges: set[Edge] = set()
    cuts: set[str] = set()
    blocks: list[list[Edge]] = []
    if g.n == 0:
        return _DfsResult(frozenset(), frozenset(), blocks)
    root = g.vertices[0]
    disc = {root: 0}
    low = {root: 0}
    timer = 0
    root_children = 0
    edge_stack: list[Edge] = []
    stack = [(root, None, iter(g.adjacency[root]))]
    while stack:
        v, parent, it = stack[-1]
        descended = False
        for w in it:
            if w == parent:
                continue
            if w not in disc:
                timer += 1
                disc[w] = low[w] = timer
                edge_stack.append(Edge(v, w))
                stack.append((w, v, iter(g.adjacency[w])))
                descended = True
                break
            if disc[w] < disc[v]:
                low[v] = min(low[v], disc[w])
                edge_stack.append(Edge(v, w))
        if descended:
            continue
        stack.pop()
        if parent is None:
            continue
        low[parent] = min(low[parent], low[v])
        if low[v] > disc[parent]:
            bridges.add(Edge(parent, v))
        if low[v] >= disc[parent]:
            tree_edge = Edge(parent, v)
            block = []
            while True:
                e = edge_stack.pop()
                block.append(e)
                if e == tree_edge:
                    break
            blocks.append(block)
            if parent == root:
                root_children += 1
            else:
                cuts.add(parent)
    if root_children >= 2:
        cuts.add(root)
    return _DfsResult(frozenset(bridges), frozenset(cuts), blocks)


def find_bridges(g: Graph) -> tuple[Edge, ...]:
    """Cut-edges of ``g`` in edge insertion order."""
    _require_connected(g, "find_bridges")
    bridges = _lowpoint_dfs(g).bridges
    return tuple(e for e in g.edges if e in bridges)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[Edge, ...], ...]
    block_vertices: tuple[tuple[str, ...], ...]
    cut_vertices: tuple[str, ...]
    # Bipartite block-cut tree as (block index, cut vertex) incidences.
    block_cut_tree: tuple[tuple[int, str], ...]

    def is_trivial(self, i: int) -> bool:
        return len(self.blocks[i]) == 1

    def nontrivial(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if not self.is_trivial(i)]

    def to_dict(self) -> dict:
        return {
            "blocks": [[e.key for e in b] for b in self.blocks],
            "cut_vertices": list(self.cut_vertices),
        }


def block_decomposition(g: Graph) -> BlockDecomposition:
    _require_connected(g, "block_decomposition")
    if g.n < 2:
        raise PreconditionError("block_decomposition needs at least 2 vertices")
    res = _lowpoint_dfs(g)
    index = {e: i for i, e in enumerate(g.edges)}
    blocks = [sorted(b, key=index.__getitem__) for b in res.blocks]
    blocks.sort(key=lambda b: index[b[0]])
    vorder = {x: i for i, x in enumerate(g.vertices)}
    bverts = []
    for b in blocks:
        vs = {x for e in b for x in e}
        bverts.append(tuple(sorted(vs, key=vorder.__getitem__)))
    cuts = tuple(x for x in g.vertices if x in res.cut_vertices)
    tree = tuple((i, x) for i, vs in enumerate(bverts) for x in vs if x in res.cut_vertices)
    return BlockDecomposition(tuple(tuple(b) for b in blocks), tuple(bverts), cuts, tree)


def is_two_edge_connected(g: Graph) -> bool:
    _require_connected(g, "is_two_edge_connected")
    return g.n >= 2 and not _lowpoint_dfs(g).bridges


def is_two_connected(g: Graph) -> bool:
    _require_connected(g, "is_two_connected")
    return g.n >= 3 and not _lowpoint_dfs(g).cut_vertices


def is_claw_free(g: Graph) -> bool:
    for v in g.vertices:
        ns = g.adjacency[v]
        if len(ns) < 3:
            continue
        for a, b in combinations(ns, 2):
            if g.has_edge(a, b):
                continue
            for c in ns:
                if c != a and c != b and not g.has_edge(a, c) and not g.has_edge(b, c):
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(x) <= 2 for x in g.vertices)


def is_star(g: Graph) -> bool:
    """K_{1,r} for some r >= 1."""
    return g.n >= 2 and is_tree(g) and any(g.degree(x) == g.n - 1 for x in g.vertices)


def path_order(g: Graph) -> tuple[str, ...]:
    """Vertices of a path graph from one end to the other."""
    if not is_path_graph(g):
        raise PreconditionError("graph is not a path")
    if g.n == 1:
        return g.vertices
    start = next(x for x in g.vertices if g.degree(x) == 1)
    order = [start]
    prev = None
    while len(order) < g.n:
        cur = order[-1]
        nxt = next(y for y in g.adjacency[cur] if y != prev)
        prev = cur
        order.append(nxt)
    return tuple(order)


# ---------------------------------------------------------- cut structure

class Kind(str, Enum):
    ORDER2 = "ORDER2"
    CUT_PATH = "CUT_PATH"
    OTHER_TREE = "OTHER_TREE"


@dataclass(frozen=True)
class CutComponent:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    kind: Kind
    length: int
    cfc: int
    # End-to-end vertex order when the component is path-shaped.
    path: tuple[str, ...] | None = None

    def graph(self) -> Graph:
        return Graph(self.edges)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [e.key for e in self.edges],
            "kind": self.kind.value,
            "length": self.length,
            "cfc": self.cfc,
        }


@dataclass(frozen=True)
class CutStructure:
    bridges: tuple[Edge, ...]
    components: tuple[CutComponent, ...]
    p: int
    h: int

    @property
    def all_cut_paths(self) -> bool:
        return all(c.kind is not Kind.OTHER_TREE for c in self.components)

    def attaining_h(self) -> list[CutComponent]:
        return [c for c in self.components if c.cfc == self.h]

    def to_dict(self) -> dict:
        return {
            "bridges": [e.key for e in self.bridges],
            "components": [c.to_dict() for c in self.components],
            "p": self.p,
            "h": self.h,
        }


def _bridge_forest_components(g: Graph, bridges: tuple[Edge, ...]) -> list[list[Edge]]:
    incident: dict[str, list[Edge]] = {}
    for e in bridges:
        incident.setdefault(e.u, []).append(e)
        incident.setdefault(e.v, []).append(e)
    seen: set[Edge] = set()
    comps = []
    for e in bridges:
        if e in seen:
            continue
        comp = []
        queue = deque([e])
        seen.add(e)
        while queue:
            f = queue.popleft()
            comp.append(f)
            for x in f:
                for nxt in incident[x]:
                    if nxt not in seen:
                        seen.add(nxt)
                        queue.append(nxt)
        comps.append(comp)
    return comps


def tree_component_cfc(t: Graph, limits=None, allow_oracle: bool = True) -> int:
    """cfc of a tree: closed form for paths and stars, exact oracle otherwise."""
    if is_path_graph(t):
        return path_cfc(t.m)
    if is_star(t):
        return t.m
    if not allow_oracle:
        raise MethodRefused(
            f"tree component on {t.n} vertices is neither a path nor a star; only the oracle can value it"
        )
    from .oracle import Limits, cfc_oracle

    limits = limits or Limits()
    try:
        return cfc_oracle(t, limits).value
    except ScaleError as exc:
        raise HUndecidableError(
            f"h undecidable at this scale: tree component with {t.m} edges exceeds oracle limits",
            component=t,
            limits=exc.limits,
        ) from exc


def classify_cut_components(g: Graph, limits=None, allow_oracle: bool = True) -> CutStructure:
    _require_connected(g, "classify_cut_components")
    bridges = find_bridges(g) if g.n >= 2 else ()
    index = {e: i for i, e in enumerate(g.edges)}
    vorder = {x: i for i, x in enumerate(g.vertices)}
    components = []
    for comp_edges in _bridge_forest_components(g, bridges):
        comp_edges.sort(key=index.__getitem__)
        t = Graph(comp_edges)
        verts = tuple(sorted(t.vertices, key=vorder.__getitem__))
        length = len(comp_edges)
        order = None
        if is_path_graph(t):
            order = path_order(t)
        if length == 1:
            kind = Kind.ORDER2
        elif order is not None and all(g.degree(x) == 2 for x in order[1:-1]):
            kind = Kind.CUT_PATH
        else:
            kind = Kind.OTHER_TREE
        cfc = tree_component_cfc(t, limits, allow_oracle)
        components.append(CutComponent(verts, tuple(comp_edges), kind, length, cfc, order))
    p = max((c.length for c in components if c.kind is not Kind.OTHER_TREE), default=0)
    h = max((c.cfc for c in components), default=0)
    return CutStructure(bridges, tuple(components), p, h)


# -------------------------------------------------------------- matching

def nontrivial_block_matching(g: Graph, decomposition: BlockDecomposition | None = None) -> tuple[Edge, ...]:
    """One edge from every nontrivial block, pairwise non-adjacent.

    Blocks are visited breadth-first over the block-cut tree; each block
    avoids the cut vertex joining it to its parent, which always leaves a
    candidate because a 2-connected block minus one vertex still has an edge.
    """
    _require_connected(g, "nontrivial_block_matching")
    bd = decomposition or block_decomposition(g)
    nontrivial = bd.nontrivial()
    if not nontrivial:
        raise PreconditionError("graph has no nontrivial block")
    cutset = set(bd.cut_vertices)
    blocks_at: dict[str, list[int]] = {}
    for i, x in bd.block_cut_tree:
        blocks_at.setdefault(x, []).append(i)

    chosen: dict[int, Edge] = {}
    used: set[str] = set()
    visited = {0}
    queue = deque([(0, None)])
    ok = True
    while queue:
        b, parent_cut = queue.popleft()
        if not bd.is_trivial(b):
            cands = [e for e in bd.blocks[b] if parent_cut not in e and not (used & set(e))]
            cands.sort(key=lambda e: len(cutset & set(e)))
            if cands:
                chosen[b] = cands[0]
                used.update(cands[0])
            else:
                ok = False
        for x in bd.block_vertices[b]:
            if x not in cutset:
                continue
            for nb in blocks_at[x]:
                if nb not in visited:
                    visited.add(nb)
                    queue.append((nb, x))
    if not ok:
        chosen = _matching_backtrack(bd, nontrivial)
    return tuple(chosen[i] for i in nontrivial)


def _matching_backtrack(bd: BlockDecomposition, nontrivial: list[int]) -> dict[int, Edge]:
    chosen: dict[int, Edge] = {}
    used: set[str] = set()

    def go(k: int) -> bool:
        if k == len(nontrivial):
            return True
        b = nontrivial[k]
        for e in bd.blocks[b]:
            if e.u in used or e.v in used:
                continue
            chosen[b] = e
            used.update(e)
            if go(k + 1):
                return True
            used.difference_update(e)
            del chosen[b]
        return False

    if not go(0):
        raise InternalError("no block matching exists, although every block can avoid its parent cut vertex")
    return chosen


def path_through_edge(g: Graph, u, v, e: Edge) -> tuple[str, ...]:
    """A simple u-v path using edge ``e``; exists in every 2-connected graph."""
    u, v = str(u), str(v)
    if u == v:
        raise PreconditionError("u and v must differ")
    if e not in g:
        raise PreconditionError(f"edge {e.key} is not in the graph")
    if not is_two_connected(g):
        raise PreconditionError("path_through_edge requires a 2-connected graph")
    path = [u]
    on_path = {u}
    # Tracks whether e already lies on the current prefix.
    stack = [(iter(g.adjacency[u]), False)]
    while stack:
        it, has_e = stack[-1]
        advanced = False
        for w in it:
            if w in on_path:
                continue
            step_has_e = has_e or Edge(path[-1], w) == e
            if w == v:
                if step_has_e:
                    return tuple(path + [w])
                continue
            path.append(w)
            on_path.add(w)
            stack.append((iter(g.adjacency[w]), step_has_e))
            advanced = True
            break
        if not advanced:
            stack.pop()
            on_path.discard(path.pop())
    raise InternalError(f"no {u}-{v} path through {e.key} in a 2-connected graph")


__all__ = [
    "BlockDecomposition",
    "CutComponent",
    "CutStructure",
    "Kind",
    "block_decomposition",
    "ceil_log2",
    "classify_cut_components",
    "find_bridges",
    "is_claw_free",
    "is_path_graph",
    "is_star",
    "is_tree",
    "is_two_connected",
    "is_two_edge_connected",
    "nontrivial_block_matching",
    "path_cfc",
    "path_order",
    "path_through_edge",
]
