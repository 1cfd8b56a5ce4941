"""Exact counting of Gallai 3-colourings.

A Gallai colouring assigns each edge a colour in {1, 2, 3} so that no
triangle receives three distinct colours. Colourings are tuples indexed by
the graph's canonical edge order.

count_exact factors the count before searching. Rainbow constraints only
couple the three edges of a triangle, so partition the triangle edges into
components of the relation "shares a triangle": two triangle edges are
related when some triangle contains both. Any triangle has its three edges
pairwise related, hence lies inside one component, and no constraint
crosses components. Edges in no triangle are unconstrained. Therefore

    count(G) = 3^(free edges) * product over components of count(component)

and each component is counted by backtracking over its edges in canonical
order. A triangle is checked exactly when its lexicographically largest
edge is assigned (the other two are already coloured then), so depth-k
leaves of the search are exactly the Gallai colourings of a k-edge
component: the factoring loses nothing and the search double-counts
nothing.

count_bruteforce is the independent oracle: it enumerates all 3^e
colourings (vectorized in chunks) and tests every triangle, with no
factoring shortcuts shared with count_exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .graph import Graph, triangle_list, triangle_stats

BRUTEFORCE_EDGE_CAP = 18
DEFAULT_NODE_CAP = 10**9

# Colouring = tuple[int, ...]: one colour in {1,2,3} per edge, in Graph.edges order.
Colouring = tuple[int, ...]


@dataclass(frozen=True)
class CountReport:
    count: int | None
    free_edge_count: int
    component_count: int
    nodes_explored: int
    capped: bool


def _edge_triangles(graph: Graph) -> tuple[tuple[int, int, int], ...]:
    """Triangles as edge-index triples (i, j, k), i < j < k.

    For vertices a < b < c the edges (a,b), (a,c), (b,c) are already in
    lexicographic order, so the triple comes out sorted for free.
    """
    idx = graph.edge_index
    return tuple(
        (idx[(a, b)], idx[(a, c)], idx[(b, c)]) for a, b, c in triangle_list(graph)
    )


def is_gallai(graph: Graph, colouring) -> bool:
    """True iff no triangle of the graph sees three distinct colours."""
    values = tuple(colouring)
    if len(values) != graph.edge_count:
        raise ValueError(
            f"colouring length {len(values)} does not match edge count {graph.edge_count}"
        )
    for c in values:
        if c not in (1, 2, 3):
            raise ValueError(f"colour {c!r} not in {{1, 2, 3}}")
    for i, j, k in _edge_triangles(graph):
        if values[i] != values[j] and values[j] != values[k] and values[i] != values[k]:
            return False
    return True


def count_bruteforce(graph: Graph, cap: int = BRUTEFORCE_EDGE_CAP) -> int:
    """Count by enumerating all 3^e colourings. Oracle path, hard-capped."""
    e = graph.edge_count
    if e > cap:
        raise CapacityError(f"edge count {e} exceeds brute-force cap {cap}")
    triples = _edge_triangles(graph)
    total = 3**e
    if not triples:
        return total
    good = 0
    chunk = 1 << 20
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = np.empty((e, stop - start), dtype=np.int8)
        for m in range(e):
            digits[m] = idx % 3
            idx //= 3
        rainbow = np.zeros(stop - start, dtype=bool)
        for i, j, k in triples:
            # digits in {0,1,2}: xor of a rainbow triple is 3, of any other 0..2
            rainbow |= (digits[i] ^ digits[j] ^ digits[k]) == 3
        good += int(np.count_nonzero(~rainbow))
    return good


def triangle_components(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Edge-index groups connected through shared triangles, by smallest member."""
    triples = _edge_triangles(graph)
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for i, j, k in triples:
        for x in (i, j, k):
            parent.setdefault(x, x)
        ri, rj, rk = find(i), find(j), find(k)
        parent[rj] = ri
        parent[rk] = ri
    groups: dict[int, list[int]] = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def _component_closers(
    members: tuple[int, ...], triples: tuple[tuple[int, int, int], ...]
) -> list[list[tuple[int, int]]]:
    """Per local position: (earlier, earlier) pairs of triangles closing there."""
    local = {g: i for i, g in enumerate(members)}
    closers: list[list[tuple[int, int]]] = [[] for _ in members]
    for i, j, k in triples:
        if i in local:
            closers[local[k]].append((local[i], local[j]))
    return closers


def _count_component(
    closers: list[list[tuple[int, int]]], budget: int
) -> tuple[int, int, bool]:
    """Backtracking count of one component. Returns (count, nodes, capped).

    One node = one colour assignment tried. The allowed mask at a position
    removes, for every triangle closing there whose two earlier edges
    differ, the third colour; several closing triangles can shrink the
    mask to one or zero colours, and empty masks simply backtrack.
    """
    k = len(closers)
    colour = [0] * k
    avail = [0] * k
    count = 0
    nodes = 0

    def allowed(pos: int) -> int:
        mask = 0b111
        for a, b in closers[pos]:
            ca, cb = colour[a], colour[b]
            if ca != cb:
                mask &= ~(1 << (5 - ca - cb))
        return mask

    pos = 0
    avail[0] = allowed(0)
    while pos >= 0:
        if not avail[pos]:
            pos -= 1
            continue
        if nodes >= budget:
            return count, nodes, True
        bit = avail[pos] & -avail[pos]
        avail[pos] ^= bit
        colour[pos] = bit.bit_length()
        nodes += 1
        if pos == k - 1:
            count += 1
        else:
            pos += 1
            avail[pos] = allowed(pos)
    return count, nodes, False


def count_exact(graph: Graph, node_cap: int = DEFAULT_NODE_CAP) -> CountReport:
    """Exact Gallai colouring count via component factoring plus backtracking.

    Capping is in-band: if the total nodes tried would exceed node_cap the
    report carries capped=True and no count. capped=False means the count
    is exact.
    """
    if node_cap < 0:
        raise ValueError(f"node_cap must be non-negative, got {node_cap}")
    triples = _edge_triangles(graph)
    components = triangle_components(graph)
    tri_edge_total = sum(len(c) for c in components)
    free = graph.edge_count - tri_edge_total
    by_component: dict[int, list[tuple[int, int, int]]] = {}
    member_of: dict[int, int] = {}
    for ci, members in enumerate(components):
        for g in members:
            member_of[g] = ci
    for tri in triples:
        by_component.setdefault(member_of[tri[0]], []).append(tri)
    total = 3**free
    nodes = 0
    for ci, members in enumerate(components):
        closers = _component_closers(members, tuple(by_component[ci]))
        part, part_nodes, capped = _count_component(closers, node_cap - nodes)
        nodes += part_nodes
        if capped:
            return CountReport(None, free, len(components), nodes, True)
        total *= part
    return CountReport(total, free, len(components), nodes, False)


def construction_count(graph: Graph) -> int:
    """Size of the two-colours-on-triangle-edges construction family.

    Colour every triangle edge from a fixed pair and every other edge
    freely: no triangle can be rainbow, giving 3^(e-t) * 2^t distinct
    Gallai colourings, a certified lower bound for the exact count.
    """
    stats = triangle_stats(graph)
    t = stats.triangle_edge_count
    return 3 ** (graph.edge_count - t) * 2**t


def construction_enumerate(graph: Graph, colour_pair):
    """Stream the construction family for one colour pair.

    Yields 3^(e-t) * 2^t distinct colourings, every one Gallai. The pair
    must be two distinct colours from {1, 2, 3}.
    """
    pair = tuple(sorted(set(colour_pair)))
    if len(pair) != 2 or any(c not in (1, 2, 3) for c in pair):
        raise ValueError(f"colour_pair must be two distinct colours in {{1,2,3}}, got {colour_pair!r}")
    tri_edges = triangle_stats(graph).triangle_edges
    domains = [pair if edge in tri_edges else (1, 2, 3) for edge in graph.edges]
    return itertools.product(*domains)


def gallai_weight(graph: Graph) -> int:
    """Product over edges of 2 (edge in some triangle) or 3 (otherwise).

    Same value as construction_count by definition of t, computed through
    adjacency intersections instead of triangle statistics so the two
    routes stay independent.
    """
    weight = 1
    adj = graph.adjacency
    for u, v in graph.edges:
        weight *= 2 if adj[u] & adj[v] else 3
    return weight
