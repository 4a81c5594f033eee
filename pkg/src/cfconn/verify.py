"""Edge colorings, conflict-free path search and CFC-coloring verification."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import ColoringError, NotConnectedError, PreconditionError, ScaleError
from .graph import Edge, Graph, is_connected

VERIFY_MAX_EDGES = 24
# DFS steps allowed per source vertex before the search gives up loudly.
VERIFY_STEP_BUDGET = 2_000_000


@dataclass(frozen=True)
class EdgeColoring:
    """Total map from edges to colors 1..num_colors."""

    assignment: Mapping[Edge, int]
    num_colors: int = field(default=-1)

    def __post_init__(self):
        assignment = dict(self.assignment)
        object.__setattr__(self, "assignment", assignment)
        used = max(assignment.values(), default=0)
        if self.num_colors == -1:
            object.__setattr__(self, "num_colors", used)
        if any(not isinstance(c, int) or c < 1 or c > self.num_colors for c in assignment.values()):
            raise ColoringError(f"colors must lie in 1..{self.num_colors}")
        if assignment and used != self.num_colors:
            raise ColoringError(f"color {self.num_colors} is never used")

    @classmethod
    def uniform(cls, g: Graph, color: int = 1) -> "EdgeColoring":
        return cls({e: color for e in g.edges})

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[e]

    def colors_used(self) -> set[int]:
        return set(self.assignment.values())

    def to_json_dict(self, g: Graph | None = None) -> dict:
        edges = g.edges if g is not None else sorted(self.assignment)
        return {"num_colors": self.num_colors, "assignment": {e.key: self.assignment[e] for e in edges}}

    def dumps(self, g: Graph | None = None) -> str:
        return json.dumps(self.to_json_dict(g), indent=2) + "\n"


def coloring_from_json(g: Graph, data) -> EdgeColoring:
    """Read ``{"num_colors": t, "assignment": {"u|v": c}}`` against ``g``.

    Raises ColoringError listing missing and alien edge keys.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ColoringError(f"coloring is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("assignment"), dict):
        raise ColoringError("coloring JSON needs an 'assignment' object")
    by_key = {e.key: e for e in g.edges}
    raw = data["assignment"]
    alien = [k for k in raw if k not in by_key]
    missing = [k for k in by_key if k not in raw]
    if alien or missing:
        parts = []
        if missing:
            parts.append("uncolored edges: " + ", ".join(missing))
        if alien:
            parts.append("edges not in graph: " + ", ".join(alien))
        raise ColoringError("; ".join(parts), missing=missing, alien=alien)
    assignment = {}
    for k, c in raw.items():
        if isinstance(c, bool) or not isinstance(c, int):
            raise ColoringError(f"color of {k} is not an integer")
        assignment[by_key[k]] = c
    num = data.get("num_colors", max(assignment.values(), default=0))
    return EdgeColoring(assignment, num)


def _check_total(g: Graph, c: EdgeColoring) -> None:
    missing = [e.key for e in g.edges if e not in c.assignment]
    if missing:
        raise ColoringError("uncolored edges: " + ", ".join(missing), missing=missing)


def is_conflict_free_path(path: Sequence, c: EdgeColoring) -> bool:
    colors = []
    for a, b in zip(path, path[1:]):
        e = Edge(a, b)
        if e not in c.assignment:
            raise PreconditionError(f"{a} and {b} are not adjacent under this coloring")
        colors.append(c.assignment[e])
    return 1 in Counter(colors).values()


def _unique_color(colors: Sequence[int]) -> int | None:
    counts = Counter(colors)
    for col in colors:
        if counts[col] == 1:
            return col
    return None


def exists_conflict_free_path(g: Graph, c: EdgeColoring, u, v,
                              step_budget: int = VERIFY_STEP_BUDGET) -> tuple[str, ...] | None:
    """First conflict-free simple u-v path in depth-first order, or None."""
    u, v = str(u), str(v)
    if u == v:
        raise PreconditionError("u and v must differ")
    for x in (u, v):
        if not g.has_vertex(x):
            raise PreconditionError(f"vertex {x!r} is not in the graph")
    _check_total(g, c)
    found = _search_from(g, c, u, {v}, step_budget, stop_at_first=True)
    return found[v][0] if v in found else None


def _search_from(g: Graph, c: EdgeColoring, src: str, targets: set[str],
                 step_budget: int, stop_at_first: bool = False) -> dict[str, tuple[tuple[str, ...], int]]:
    """Depth-first walk over simple paths from ``src``.

    Records, for each target, the first conflict-free path reaching it. The
    walk keeps per-color counts and the number of colors seen exactly once.
    """
    found: dict[str, tuple[tuple[str, ...], int]] = {}
    remaining = set(targets)
    counts: Counter = Counter()
    singles = 0
    path = [src]
    on_path = {src}
    stack = [iter(g.adjacency[src])]
    steps = 0
    while stack:
        advanced = False
        for w in stack[-1]:
            if w in on_path:
                continue
            steps += 1
            if steps > step_budget:
                raise ScaleError(
                    f"conflict-free path search from {src} exceeded {step_budget} steps",
                    {"step_budget": step_budget},
                )
            col = c.assignment[Edge(path[-1], w)]
            counts[col] += 1
            if counts[col] == 1:
                singles += 1
            elif counts[col] == 2:
                singles -= 1
            path.append(w)
            on_path.add(w)
            if singles and w in remaining:
                colors = [c.assignment[Edge(a, b)] for a, b in zip(path, path[1:])]
                found[w] = (tuple(path), _unique_color(colors))
                remaining.discard(w)
                if not remaining:
                    return found
            stack.append(iter(g.adjacency[w]))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if len(path) > 1:
                w = path.pop()
                on_path.discard(w)
                col = c.assignment[Edge(path[-1], w)]
                counts[col] -= 1
                if counts[col] == 1:
                    singles += 1
                elif counts[col] == 0:
                    singles -= 1
    return found


@dataclass(frozen=True)
class CfcWitness:
    """Outcome of verify_cfc.

    ``paths`` maps each vertex pair (in insertion order) to a conflict-free
    path and the color it uses exactly once. ``failing_pair`` is set instead
    when some pair has no such path; it is the first one in vertex order.
    """

    paths: dict
    failing_pair: tuple[str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.failing_pair is None

    def __bool__(self) -> bool:
        return self.ok


def verify_cfc(g: Graph, c: EdgeColoring, max_edges: int | None = VERIFY_MAX_EDGES,
               step_budget: int = VERIFY_STEP_BUDGET) -> CfcWitness:
    _check_total(g, c)
    if not is_connected(g):
        raise NotConnectedError("verify_cfc requires a connected graph")
    if max_edges is not None and g.m > max_edges:
        raise ScaleError(
            f"verifier limited to {max_edges} edges, graph has {g.m}", {"verify_max_edges": max_edges}
        )
    paths = {}
    verts = g.vertices
    for i, u in enumerate(verts):
        later = verts[i + 1:]
        if not later:
            break
        found = _search_from(g, c, u, set(later), step_budget)
        for v in later:
            if v not in found:
                return CfcWitness(paths, (u, v))
            paths[(u, v)] = found[v]
    return CfcWitness(paths)
