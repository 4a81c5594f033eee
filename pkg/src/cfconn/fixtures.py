"""Named graphs used by the tests, the acceptance suite and ``--demo``."""

from __future__ import annotations

import re

from .graph import Graph


def path(n: int) -> Graph:
    """P_n: the path on ``n`` vertices labelled 0..n-1."""
    if n == 1:
        return Graph(vertices=["0"])
    return Graph.from_pairs((i, i + 1) for i in range(n - 1))


def cycle(n: int) -> Graph:
    return Graph.from_pairs((i, (i + 1) % n) for i in range(n))


def complete(n: int) -> Graph:
    if n == 1:
        return Graph(vertices=["0"])
    return Graph.from_pairs((i, j) for i in range(n) for j in range(i + 1, n))


def star(r: int) -> Graph:
    """K_{1,r} with centre ``c`` and leaves ``l1..lr``."""
    return Graph.from_pairs(("c", f"l{i}") for i in range(1, r + 1))


def paw() -> Graph:
    return Graph.from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")])


def bowtie() -> Graph:
    return Graph.from_pairs([("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e"), ("e", "c")])


def triangle_chain(triangles: int = 2, link: int = 3) -> Graph:
    """Triangles joined in a row by bridge paths of ``link`` edges."""
    pairs = []
    prev = None
    for t in range(triangles):
        a, b, c = f"t{t}a", f"t{t}b", f"t{t}c"
        pairs += [(a, b), (b, c), (c, a)]
        if prev is not None:
            chain = [prev] + [f"p{t}_{i}" for i in range(1, link)] + [a]
            pairs += list(zip(chain, chain[1:]))
        prev = c
    return Graph.from_pairs(pairs)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_pairs(outer + spokes + inner)


def spider(legs: int = 3, length: int = 2) -> Graph:
    pairs = []
    for leg in range(legs):
        chain = ["c"] + [f"s{leg}_{i}" for i in range(1, length + 1)]
        pairs += list(zip(chain, chain[1:]))
    return Graph.from_pairs(pairs)


def clique_with_tails(k: int = 4, tails: tuple[int, ...] = (4,)) -> Graph:
    """K_k with a pendant path of the given length hanging off distinct vertices."""
    pairs = [(f"k{i}", f"k{j}") for i in range(k) for j in range(i + 1, k)]
    for t, length in enumerate(tails):
        chain = [f"k{t}"] + [f"x{t}_{i}" for i in range(1, length + 1)]
        pairs += list(zip(chain, chain[1:]))
    return Graph.from_pairs(pairs)


DEMO_NAMES = (
    "P<n>", "C<n>", "K<n>", "K1,<r>", "paw", "bowtie", "triangle-chain",
    "triangle-chain3", "petersen", "spider",
)


def demo(name: str) -> Graph:
    """Resolve a ``--demo`` name such as ``P8``, ``K1,3``, ``bowtie``."""
    key = name.strip().lower()
    named = {
        "paw": paw,
        "bowtie": bowtie,
        "triangle-chain": lambda: triangle_chain(2, 3),
        "triangle-chain3": lambda: triangle_chain(3, 3),
        "petersen": petersen,
        "spider": lambda: spider(3, 2),
    }
    if key in named:
        return named[key]()
    m = re.fullmatch(r"k1,(\d+)", key) or re.fullmatch(r"star(\d+)", key)
    if m:
        return star(int(m.group(1)))
    m = re.fullmatch(r"([pck])(\d+)", key)
    if m:
        size = int(m.group(2))
        if size >= 1:
            kind = m.group(1)
            if kind == "c" and size >= 3:
                return cycle(size)
            if kind == "p":
                return path(size)
            if kind == "k":
                return complete(size)
    raise KeyError(f"unknown demo graph {name!r}; known: {', '.join(DEMO_NAMES)}")
