"""Graph container, G(n,p) sampling, edge-list serialization, triangle statistics.

Vertices are 0-indexed. Edges are unordered pairs stored as (u, v) with
u < v, kept in lexicographic order; that order fixes edge indexing for
colourings and the order in which G(n,p) consumes its pair uniforms.
Adjacency is a tuple of integer bit rows (bit v of adjacency[u] set iff
uv is an edge), which makes triangle queries word-parallel.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import CapacityError, EdgeListParseError
from .rng import GRAPH_STREAM, bit_generator

_MAX_PAIRS = 2**63 - 1  # pair indices must fit a 64-bit signed index

_NUM = r"(?:0|[1-9][0-9]*)"
_HEADER_RE = re.compile(rf"({_NUM}) ({_NUM})")
_EDGE_RE = re.compile(rf"({_NUM}) ({_NUM})")


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. Build via from_edges / generate_gnp / load_edge_list."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...]

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Validate and canonicalize an edge collection.

        Rejects loops, duplicates, reversed pairs and out-of-range vertices;
        callers that need forgiving input should normalize first.
        """
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        seen = set()
        rows = [0] * n
        for edge in edges:
            u, v = edge
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            if not (0 <= u < v < n):
                raise ValueError(f"edge ({u}, {v}) violates 0 <= u < v < n with n={n}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(sorted(seen)), tuple(rows))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Edge -> position in the canonical order."""
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self.adjacency[u] >> v & 1)


def generate_gnp(n: int, p: float, seed: int) -> Graph:
    """Sample G(n,p) by drawing one uniform per vertex pair in canonical order.

    Edge uv is present iff its uniform is < p. Because the pair order and
    draw count never depend on p, two samples with the same seed and
    p1 <= p2 are coupled: the sparser edge set is a subset of the denser one.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n * (n - 1) // 2 > _MAX_PAIRS:
        raise CapacityError(f"pair count for n={n} exceeds 64-bit indexing")
    gen = np.random.Generator(bit_generator(seed, GRAPH_STREAM))
    edges: list[tuple[int, int]] = []
    rows = [0] * n
    for u in range(n):
        draws = gen.random(n - 1 - u)
        for off in np.nonzero(draws < p)[0]:
            v = u + 1 + int(off)
            edges.append((u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    edges.sort()
    return Graph(n, tuple(edges), tuple(rows))


@dataclass(frozen=True)
class TriangleStats:
    triangle_count: int
    triangle_edge_count: int
    triangle_edges: frozenset[tuple[int, int]]


def triangle_stats(graph: Graph) -> TriangleStats:
    """Count triangles and the edges lying in at least one triangle.

    Row intersections do the work: edge uv lies in a triangle iff
    adjacency[u] & adjacency[v] is non-empty, and the triangles through uv
    with third vertex above v (counted once per triangle) are the set bits
    of that intersection beyond position v.
    """
    adj = graph.adjacency
    count = 0
    tri_edges = []
    for u, v in graph.edges:
        common = adj[u] & adj[v]
        if common:
            tri_edges.append((u, v))
            count += (common >> (v + 1)).bit_count()
    return TriangleStats(count, len(tri_edges), frozenset(tri_edges))


def triangle_list(graph: Graph) -> tuple[tuple[int, int, int], ...]:
    """All triangles as vertex triples (a, b, c), a < b < c, each listed once."""
    adj = graph.adjacency
    out = []
    for u, v in graph.edges:
        common = (adj[u] & adj[v]) >> (v + 1)
        w = v + 1
        while common:
            shift = (common & -common).bit_length() - 1
            out.append((u, v, w + shift))
            common &= common - 1
    out.sort()
    return tuple(out)


def expected_triangle_count(n: int, p: float) -> float:
    """E[T] = C(n,3) p^3 for G(n,p)."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return math.comb(n, 3) * p**3


def format_edge_list(graph: Graph) -> str:
    """Canonical text form: header "n m" then one "u v" line per edge."""
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, source: str = "<string>") -> Graph:
    """Strict parser for the edge-list format. Rejects rather than repairs.

    Every line must be newline-terminated, numbers are plain decimals
    without leading zeros, and each edge line is "u v" with u < v. Edge
    lines may arrive in any order; duplicates, loops and out-of-range
    vertices are errors that name the offending line.
    """
    pieces = text.split("\n")
    if pieces[-1] != "":
        raise EdgeListParseError(source, len(pieces), "missing final newline")
    lines = pieces[:-1]
    if not lines:
        raise EdgeListParseError(source, 1, "empty input, expected header line 'n m'")
    header = _HEADER_RE.fullmatch(lines[0])
    if header is None:
        raise EdgeListParseError(source, 1, f"bad header {lines[0]!r}, expected 'n m'")
    n, m = int(header.group(1)), int(header.group(2))
    if len(lines) - 1 != m:
        raise EdgeListParseError(
            source, len(lines), f"expected {m} edge lines, found {len(lines) - 1}"
        )
    edges = []
    seen = set()
    for lineno, line in enumerate(lines[1:], start=2):
        match = _EDGE_RE.fullmatch(line)
        if match is None:
            raise EdgeListParseError(source, lineno, f"bad edge line {line!r}, expected 'u v'")
        u, v = int(match.group(1)), int(match.group(2))
        if u == v:
            raise EdgeListParseError(source, lineno, f"loop edge ({u}, {v})")
        if u > v:
            raise EdgeListParseError(source, lineno, f"edge ({u}, {v}) not in u < v form")
        if v >= n:
            raise EdgeListParseError(source, lineno, f"vertex {v} out of range for n={n}")
        if (u, v) in seen:
            raise EdgeListParseError(source, lineno, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def save_edge_list(graph: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write(format_edge_list(graph))


def load_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii", newline="") as fh:
        return parse_edge_list(fh.read(), source=str(path))
