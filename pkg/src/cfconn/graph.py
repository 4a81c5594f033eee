"""Simple undirected graphs with string labels, plus edge-list and DOT I/O.

Graphs are immutable. Vertices and edges keep insertion order, which makes
every traversal, coloring and witness in the package reproducible.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import GraphParseError, PreconditionError


def _label_part(label: str) -> str:
    # Nested line-graph labels stay unambiguous once wrapped.
    return f"({label})" if "|" in label else label


@dataclass(frozen=True, order=True)
class Edge:
    """Unordered vertex pair; endpoints are stored sorted so {u,v} == {v,u}."""

    u: str
    v: str

    def __init__(self, u, v):
        u, v = str(u), str(v)
        if u == v:
            raise PreconditionError(f"loop edge at vertex {u!r}")
        if v < u:
            u, v = v, u
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    @property
    def key(self) -> str:
        """Canonical rendering ``u|v``; also the line-graph vertex label."""
        return f"{_label_part(self.u)}|{_label_part(self.v)}"

    @property
    def endpoints(self) -> tuple[str, str]:
        return (self.u, self.v)

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise PreconditionError(f"{x!r} is not an endpoint of {self.key}")

    def __contains__(self, x) -> bool:
        return x == self.u or x == self.v

    def __iter__(self):
        return iter((self.u, self.v))

    def __repr__(self) -> str:
        return f"Edge({self.u!r}, {self.v!r})"


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    adjacency: dict[str, tuple[str, ...]] = field(repr=False)

    def __init__(self, edges: Iterable = (), vertices: Iterable = ()):
        verts: dict[str, None] = {}
        for x in vertices:
            verts[str(x)] = None
        seen: dict[Edge, None] = {}
        for e in edges:
            if not isinstance(e, Edge):
                e = Edge(*e)
            verts.setdefault(e.u, None)
            verts.setdefault(e.v, None)
            seen.setdefault(e, None)
        # Endpoints of an edge given as (b, a) still register b before a.
        adj: dict[str, list[str]] = {x: [] for x in verts}
        for e in seen:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        object.__setattr__(self, "vertices", tuple(verts))
        object.__setattr__(self, "edges", tuple(seen))
        object.__setattr__(self, "adjacency", {x: tuple(ns) for x, ns in adj.items()})
        object.__setattr__(self, "_edge_set", frozenset(seen))

    @classmethod
    def from_pairs(cls, pairs: Iterable, vertices: Iterable = ()) -> "Graph":
        """Build from ``(u, v)`` pairs, registering vertices in mention order."""
        verts: dict[str, None] = {str(x): None for x in vertices}
        pairs = list(pairs)
        for u, v in pairs:
            verts.setdefault(str(u), None)
            verts.setdefault(str(v), None)
        return cls((Edge(u, v) for u, v in pairs), vertices=verts)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, x: str) -> tuple[str, ...]:
        return self.adjacency[x]

    def degree(self, x: str) -> int:
        return len(self.adjacency[x])

    def has_edge(self, u, v) -> bool:
        u, v = str(u), str(v)
        return u != v and Edge(u, v) in self._edge_set

    def has_vertex(self, x) -> bool:
        return str(x) in self.adjacency

    def edge_set(self) -> frozenset[Edge]:
        return self._edge_set

    def __contains__(self, item) -> bool:
        if isinstance(item, Edge):
            return item in self._edge_set
        return self.has_vertex(item)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self._edge_set))

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.m}>"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    start = g.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == g.n


def is_complete(g: Graph) -> bool:
    n = g.n
    return g.m == n * (n - 1) // 2


def induced_subgraph(g: Graph, s: Iterable) -> Graph:
    keep = {str(x) for x in s}
    for x in keep:
        if not g.has_vertex(x):
            raise PreconditionError(f"vertex {x!r} is not in the graph")
    verts = [x for x in g.vertices if x in keep]
    return Graph((e for e in g.edges if e.u in keep and e.v in keep), vertices=verts)


def edge_subgraph(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Subgraph formed by ``edges`` and their endpoints, in ``g``'s order."""
    chosen = set(edges)
    return Graph(e for e in g.edges if e in chosen)


# ---------------------------------------------------------------- parsing

def parse_graph(text: str) -> Graph:
    """Parse an edge list, or a DOT ``graph { ... }`` block."""
    stripped = _strip_comments(text).lstrip()
    if re.match(r"(strict\s+)?graph\b", stripped):
        return parse_dot(text)
    return parse_edge_list(text)


def parse_edge_list(text: str) -> Graph:
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphParseError(f"expected two vertex labels, got {len(tokens)} tokens", lineno)
        u, v = tokens
        if u == v:
            raise GraphParseError(f"loop edge {u} {v}", lineno)
        pairs.append((u, v))
    return Graph.from_pairs(pairs)


def _strip_comments(text: str) -> str:
    return "\n".join(line for line in text.splitlines() if not line.strip().startswith("#"))


_DOT_TOKEN = re.compile(r'\s*(?:(--)|(->)|([{};\[\]=,])|"((?:[^"\\]|\\.)*)"|([A-Za-z0-9_.|()]+))')


def _dot_tokens(body: str):
    pos = 0
    while pos < len(body):
        if body[pos:].strip() == "":
            return
        m = _DOT_TOKEN.match(body, pos)
        if not m:
            raise GraphParseError(f"unexpected character {body[pos:].lstrip()[:1]!r} in DOT input")
        pos = m.end()
        dash, arrow, punct, quoted, ident = m.groups()
        if arrow:
            raise GraphParseError("directed edges ('->') are not supported")
        if dash:
            yield ("--", None)
        elif punct:
            yield (punct, None)
        elif quoted is not None:
            yield ("id", quoted.replace('\\"', '"'))
        else:
            yield ("id", ident)


def parse_dot(text: str) -> Graph:
    """Read the attribute-free DOT subset ``graph [name] { a -- b; c; }``."""
    body = _strip_comments(text)
    body = re.sub(r"//[^\n]*", "", body)
    m = re.match(r"\s*(?:strict\s+)?graph\b\s*(?:\"[^\"]*\"|[A-Za-z0-9_]+)?\s*\{(.*)\}\s*$", body, re.S)
    if not m:
        raise GraphParseError("malformed DOT input; expected 'graph { ... }'")
    tokens = list(_dot_tokens(m.group(1)))
    pairs: list[tuple[str, str]] = []
    verts: list[str] = []
    stmt: list = []

    def flush():
        if not stmt:
            return
        ids = stmt[0::2]
        seps = stmt[1::2]
        if any(t[0] != "id" for t in ids) or any(t[0] != "--" for t in seps) or len(stmt) % 2 == 0:
            raise GraphParseError("only 'a -- b -- ...' and bare node statements are supported")
        names = [t[1] for t in ids]
        verts.extend(names)
        for a, b in zip(names, names[1:]):
            if a == b:
                raise GraphParseError(f"loop edge {a} -- {b}")
            pairs.append((a, b))
        stmt.clear()

    for tok in tokens:
        if tok[0] == ";":
            flush()
        elif tok[0] in ("id", "--"):
            # DOT allows statements separated by whitespace alone.
            if tok[0] == "id" and stmt and stmt[-1][0] == "id":
                flush()
            stmt.append(tok)
        else:
            raise GraphParseError(f"DOT attributes and subgraphs are not supported ({tok[0]!r})")
    flush()
    return Graph.from_pairs(pairs, vertices=verts)


def render_edge_list(g: Graph) -> str:
    isolated = [x for x in g.vertices if g.degree(x) == 0]
    if isolated:
        raise PreconditionError(
            f"edge lists cannot carry isolated vertices ({', '.join(isolated)}); use render_dot"
        )
    return "".join(f"{e.u} {e.v}\n" for e in g.edges)


def _dot_id(x: str) -> str:
    return x if re.fullmatch(r"[A-Za-z0-9_.]+", x) else '"' + x.replace('"', '\\"') + '"'


def render_dot(g: Graph) -> str:
    lines = ["graph {"]
    lines += [f"  {_dot_id(x)};" for x in g.vertices if g.degree(x) == 0]
    lines += [f"  {_dot_id(e.u)} -- {_dot_id(e.v)};" for e in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_graph(g: Graph) -> str:
    """Edge list when possible, DOT when the graph has isolated vertices."""
    if any(g.degree(x) == 0 for x in g.vertices):
        return render_dot(g)
    return render_edge_list(g)
