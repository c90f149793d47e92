"""Independent reference implementations used only by the tests.

Nothing here imports the package's search code: graphs arrive as plain
edge lists (usually from networkx), and every invariant is computed by
exhaustive evaluation over all edge subsets with numpy.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx
import numpy as np


@dataclass(frozen=True)
class SubsetInvariants:
    gamma_prime: int
    Gamma_prime: int
    alpha_prime: int
    i_prime: int
    minimal_sizes: tuple[int, ...]

    @property
    def wed(self) -> bool:
        return self.gamma_prime == self.Gamma_prime


def subset_invariants(n: int, edges: list[tuple[int, int]]) -> SubsetInvariants:
    """gamma', Gamma', alpha', i' by checking every subset of edges."""
    m = len(edges)
    if m == 0:
        return SubsetInvariants(0, 0, 0, 0, (0,))
    if m > 24:
        raise ValueError("subset oracle limited to 24 edges")
    # closed edge neighbourhood of each edge, as a bitmask over edge indices
    nbr = []
    for a, (u, v) in enumerate(edges):
        mask = 0
        for b, (x, y) in enumerate(edges):
            if {u, v} & {x, y}:
                mask |= 1 << b
        nbr.append(mask)
    full = (1 << m) - 1
    subsets = np.arange(1 << m, dtype=np.int64)
    dom = np.zeros(1 << m, dtype=np.int64)
    for a in range(m):
        has = (subsets >> a) & 1
        dom |= has * nbr[a]
    dominating = dom == full
    minimal = dominating.copy()
    for a in range(m):
        has = ((subsets >> a) & 1).astype(bool)
        minimal[has] &= ~dominating[subsets[has] ^ (1 << a)]
    size = np.bitwise_count(subsets.astype(np.uint64)).astype(np.int64)
    matching = np.ones(1 << m, dtype=bool)
    for w in range(n):
        inc = 0
        for a, (u, v) in enumerate(edges):
            if w in (u, v):
                inc |= 1 << a
        hit = subsets & inc
        matching &= (hit & (hit - 1)) == 0
    maximal = matching & dominating
    return SubsetInvariants(
        gamma_prime=int(size[dominating].min()),
        Gamma_prime=int(size[minimal].max()),
        alpha_prime=int(size[matching].max()),
        i_prime=int(size[maximal].min()),
        minimal_sizes=tuple(sorted(int(k) for k in size[minimal])),
    )


def nx_edges(H: nx.Graph) -> tuple[int, list[tuple[int, int]]]:
    """Relabel to 0..n-1 in sorted node order and return (n, edges)."""
    nodes = sorted(H.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return len(nodes), sorted(tuple(sorted((pos[u], pos[v]))) for u, v in H.edges())


def atlas_connected(max_order: int) -> list[nx.Graph]:
    """One graph per isomorphism class of connected graphs, order 1..max_order <= 7."""
    if max_order > 7:
        raise ValueError("the networkx atlas stops at order 7")
    return [
        H
        for H in nx.graph_atlas_g()
        if 1 <= H.number_of_nodes() <= max_order and nx.is_connected(H)
    ]


def brute_canonical_bits(n: int, edges: list[tuple[int, int]]) -> tuple[int, ...]:
    """Least upper-triangle bit string (graph6 column order) over all permutations."""
    adj = [[0] * n for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = 1
    best = None
    for perm in itertools.permutations(range(n)):
        bits = tuple(adj[perm[i]][perm[j]] for j in range(1, n) for i in range(j))
        if best is None or bits < best:
            best = bits
    return best if best is not None else ()


def brute_is_split(n: int, edges: list[tuple[int, int]]) -> bool:
    """Try every vertex subset as the clique side."""
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for r in range(n + 1):
        for clique in itertools.combinations(range(n), r):
            cs = set(clique)
            if any(b not in adj[a] for a, b in itertools.combinations(clique, 2)):
                continue
            rest = [v for v in range(n) if v not in cs]
            if all(b not in adj[a] for a, b in itertools.combinations(rest, 2)):
                return True
    return False
