"""Finite simple graphs on dense integer vertex ids, plus the structural
predicates and transformations used throughout the package.

Adjacency is stored as one integer bitmask per vertex.  Edges are
normalised ``(u, v)`` tuples with ``u < v`` and are indexed in
lexicographic order; many routines work on edge *bitmasks* over that
index, which is what keeps the exhaustive searches affordable.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]
EdgeSet = frozenset  # frozenset[Edge]

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graphs or edges that do not belong to a graph."""


def edge(u: int, v: int) -> Edge:
    """Normalise an unordered pair so the smaller id comes first."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph.  Build one with :func:`from_edge_list`."""

    order: int
    adj: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.order < 0 or len(self.adj) != self.order:
            raise GraphError("adjacency length must equal the order")
        for v, mask in enumerate(self.adj):
            if mask >> self.order:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.order})")
            if mask >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in bits(mask):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.order, self.adj))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={list(self.edges)})"

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(
            (u, v) for u in range(self.order) for v in bits(self.adj[u]) if u < v
        )

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incident_masks(self) -> tuple[int, ...]:
        """For each vertex, the bitmask of edge indices incident to it."""
        masks = [0] * self.order
        for i, (u, v) in enumerate(self.edges):
            masks[u] |= 1 << i
            masks[v] |= 1 << i
        return tuple(masks)

    @cached_property
    def edge_nbr_masks(self) -> tuple[int, ...]:
        """For each edge index, the bitmask of its closed edge neighbourhood."""
        inc = self.incident_masks
        return tuple(inc[u] | inc[v] for u, v in self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.adj[u] >> v & 1)

    # edge-set <-> bitmask conversion

    def edge_mask(self, edge_set: Iterable[Sequence[int]]) -> int:
        """Bitmask of ``edge_set``; rejects edges that are not in the graph."""
        index = self.edge_index
        mask = 0
        for pair in edge_set:
            u, v = pair
            e = edge(u, v)
            try:
                mask |= 1 << index[e]
            except KeyError:
                raise GraphError(f"edge {e} is not an edge of the graph") from None
        return mask

    def edges_of(self, mask: int) -> EdgeSet:
        edges = self.edges
        return frozenset(edges[i] for i in bits(mask))


def from_edge_list(order: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph of the given order from vertex pairs.

    Self-loops, ids outside ``[0, order)`` and repeated edges are rejected;
    the error message names the offending (0-based) position in ``edges``.
    """
    if order < 0:
        raise GraphError(f"order must be nonnegative, got {order}")
    adj = [0] * order
    for pos, pair in enumerate(edges):
        u, v = pair
        if u == v:
            raise GraphError(f"edge {pos}: self-loop at vertex {u}")
        if not (0 <= u < order and 0 <= v < order):
            raise GraphError(f"edge {pos}: vertex id out of range in ({u}, {v})")
        if adj[u] >> v & 1:
            raise GraphError(f"edge {pos}: duplicate edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(order, tuple(adj))


def from_adjacency_masks(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return from_edge_list(G.order, ((perm[u], perm[v]) for u, v in G.edges))


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by ``vertices``; new id ``i`` is ``vertices[i]``."""
    pos = {v: i for i, v in enumerate(vertices)}
    return from_edge_list(
        len(vertices),
        ((pos[u], pos[v]) for u, v in G.edges if u in pos and v in pos),
    )


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for H in graphs:
        edges.extend((u + offset, v + offset) for u, v in H.edges)
        offset += H.order
    return from_edge_list(offset, edges)


# structure


def components(G: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as ``(subgraph, vertex_map)`` pairs.

    ``vertex_map[i]`` is the original id of the component's vertex ``i``.
    Components are listed by their smallest original vertex.
    """
    seen = 0
    out = []
    for root in range(G.order):
        if seen >> root & 1:
            continue
        comp = 1 << root
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        verts = tuple(bits(comp))
        out.append((induced_subgraph(G, verts), verts))
    return out


def is_connected(G: Graph) -> bool:
    if G.order == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << G.order) - 1


def is_bipartite(G: Graph) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A 2-colouring ``(V1, V2)`` if one exists, else ``None``.

    The smallest vertex of every component is placed in ``V1``.
    """
    colour = [-1] * G.order
    for root in range(G.order):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(G.adj[v]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    side0 = frozenset(v for v in range(G.order) if colour[v] == 0)
    side1 = frozenset(v for v in range(G.order) if colour[v] == 1)
    return side0, side1


def girth(G: Graph) -> float:
    """Length of a shortest cycle, or :data:`INFINITE` for forests."""
    best = INFINITE
    for root in range(G.order):
        dist = [-1] * G.order
        parent = [-1] * G.order
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(G.adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best if best == INFINITE else int(best)


def is_split(G: Graph) -> bool:
    return split_partition(G) is not None


@dataclass(frozen=True)
class SplitPartition:
    clique_part: frozenset[int]
    independent_part: frozenset[int]


def split_partition(G: Graph) -> Optional[SplitPartition]:
    """A clique/independent-set partition if ``G`` is a split graph.

    Uses the Hammer-Simeone degree-sequence test: with degrees sorted
    decreasingly and ``m`` the largest index with ``d_m >= m - 1``, the graph
    is split exactly when the top ``m`` degrees sum to
    ``m(m-1) + sum of the remaining degrees``; the top ``m`` vertices then
    form the clique part.
    """
    n = G.order
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    ranked = sorted(range(n), key=lambda v: (-G.degree(v), v))
    deg = [G.degree(v) for v in ranked]
    m = max(i + 1 for i in range(n) if deg[i] >= i)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    return SplitPartition(frozenset(ranked[:m]), frozenset(ranked[m:]))


def support_vertices(G: Graph) -> frozenset[int]:
    """Vertices adjacent to at least one leaf (degree-1 vertex)."""
    out = 0
    for v in range(G.order):
        if G.adj[v].bit_count() == 1:
            out |= G.adj[v]
    return frozenset(bits(out))


# edge neighbourhoods


def covered_vertices(G: Graph, X: Iterable[Sequence[int]]) -> frozenset[int]:
    """Vertices incident to some edge of ``X``."""
    mask = G.edge_mask(X)
    return frozenset(v for i in bits(mask) for v in G.edges[i])


def nbr_closure(G: Graph, mask: int) -> int:
    """Edge-bitmask form of the closed edge neighbourhood."""
    out = 0
    masks = G.edge_nbr_masks
    for i in bits(mask):
        out |= masks[i]
    return out


def closed_edge_neighborhood(G: Graph, F: Iterable[Sequence[int]]) -> EdgeSet:
    """``F`` together with every edge sharing an endpoint with a member of ``F``."""
    return G.edges_of(nbr_closure(G, G.edge_mask(F)))


def remove_edge_neighborhood(G: Graph, M: Iterable[Sequence[int]]) -> Graph:
    """``G`` minus the closed edge neighbourhood of ``M``; isolated vertices stay."""
    removed = nbr_closure(G, G.edge_mask(M))
    keep = (1 << G.size) - 1 & ~removed
    return from_edge_list(G.order, (G.edges[i] for i in bits(keep)))


# products and blow-ups


def cartesian_product(G: Graph, H: Graph) -> Graph:
    """Cartesian product with vertex ``(g, h)`` at id ``g * H.order + h``."""
    if G.order < 1 or H.order < 1:
        raise GraphError("Cartesian product factors need at least one vertex")
    k = H.order
    edges = []
    for g in range(G.order):
        edges.extend((g * k + a, g * k + b) for a, b in H.edges)
    for h in range(k):
        edges.extend((a * k + h, b * k + h) for a, b in G.edges)
    return from_edge_list(G.order * k, edges)


def blowup_blocks(multiplicities: Sequence[int]) -> list[range]:
    """Id ranges occupied by the copies of each original vertex."""
    blocks = []
    start = 0
    for m in multiplicities:
        blocks.append(range(start, start + m))
        start += m
    return blocks


def blowup(H: Graph, multiplicities: Sequence[int]) -> Graph:
    """Replace vertex ``i`` of ``H`` by ``multiplicities[i]`` independent twins.

    Copies of vertex ``i`` occupy a contiguous id block, blocks in increasing
    ``i``; a multiplicity of 0 deletes the vertex.
    """
    if len(multiplicities) != H.order:
        raise GraphError(
            f"expected {H.order} multiplicities, got {len(multiplicities)}"
        )
    if any(m < 0 for m in multiplicities):
        raise GraphError("multiplicities must be nonnegative")
    blocks = blowup_blocks(multiplicities)
    edges = [(a, b) for u, v in H.edges for a in blocks[u] for b in blocks[v]]
    return from_edge_list(sum(multiplicities), edges)
