"""Exact matching invariants for small graphs.

Both searches recurse on the lowest remaining vertex with a per-call memo
keyed by vertex bitmasks, so they are exact and comfortably fast up to
order ~16.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import EdgeSet, Graph, GraphError, bits, edge


@dataclass(frozen=True)
class MatchingProfile:
    alpha_prime: int
    i_prime: int
    has_perfect: bool


def is_matching(G: Graph, M: Iterable[Sequence[int]]) -> bool:
    mask = G.edge_mask(M)
    covered = 0
    for i in bits(mask):
        u, v = G.edges[i]
        pair = 1 << u | 1 << v
        if covered & pair:
            return False
        covered |= pair
    return True


def is_maximal_matching(G: Graph, M: Iterable[Sequence[int]]) -> bool:
    """True iff ``M`` is a matching that no edge of ``G`` can extend."""
    M = list(M)
    if not is_matching(G, M):
        return False
    covered = 0
    for u, v in M:
        covered |= 1 << u | 1 << v
    return all(covered >> u & 1 or covered >> v & 1 for u, v in G.edges)


def maximum_matching(G: Graph) -> EdgeSet:
    """A matching of largest cardinality."""
    adj = G.adj
    memo: dict[int, tuple[int, tuple]] = {}

    def best(avail: int) -> tuple[int, tuple]:
        # drop vertices with no available neighbour; they can never be matched
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= low
        if not avail:
            return 0, ()
        hit = memo.get(avail)
        if hit is not None:
            return hit
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        result = best(rest)
        for w in bits(adj[v] & rest):
            size, pairs = best(rest & ~(1 << w))
            if size + 1 > result[0]:
                result = (size + 1, ((v, w), pairs))
        memo[avail] = result
        return result

    return _unlink(best((1 << G.order) - 1)[1])


def maximum_matching_size(G: Graph) -> int:
    return len(maximum_matching(G))


def minimum_maximal_matching(G: Graph) -> EdgeSet:
    """A smallest maximal matching.

    Vertices are decided in increasing order: the lowest undecided vertex is
    either matched to an undecided neighbour, or left unmatched, in which
    case all of its undecided neighbours become obliged to be matched.
    """
    adj = G.adj
    memo: dict[tuple[int, int], tuple[float, tuple]] = {}
    INF = float("inf")

    def best(avail: int, must: int) -> tuple[float, tuple]:
        if not avail:
            return 0, ()
        key = (avail, must)
        hit = memo.get(key)
        if hit is not None:
            return hit
        low = avail & -avail
        v = low.bit_length() - 1
        rest = avail ^ low
        result: tuple[float, tuple] = (INF, ())
        if not must & low:
            nbrs = adj[v] & rest
            forced = must | nbrs
            # every obliged vertex still needs a partner
            if all(adj[w] & rest for w in bits(nbrs & ~must)):
                result = best(rest, forced)
        for w in bits(adj[v] & rest):
            size, pairs = best(rest & ~(1 << w), must & ~(low | 1 << w))
            if size + 1 < result[0]:
                result = (size + 1, ((v, w), pairs))
        memo[key] = result
        return result

    size, pairs = best((1 << G.order) - 1, 0)
    if size == INF:  # pragma: no cover - every graph has a maximal matching
        raise GraphError("no maximal matching found")
    return _unlink(pairs)


def minimum_maximal_matching_size(G: Graph) -> int:
    return len(minimum_maximal_matching(G))


def has_perfect_matching(G: Graph) -> bool:
    return G.order % 2 == 0 and 2 * maximum_matching_size(G) == G.order


def matching_profile(G: Graph) -> MatchingProfile:
    alpha = maximum_matching_size(G)
    return MatchingProfile(
        alpha_prime=alpha,
        i_prime=minimum_maximal_matching_size(G),
        has_perfect=G.order % 2 == 0 and 2 * alpha == G.order,
    )


def is_equimatchable(G: Graph) -> bool:
    """Every maximal matching is maximum (lower matching number equals the
    matching number)."""
    return minimum_maximal_matching_size(G) == maximum_matching_size(G)


def is_randomly_matchable(G: Graph) -> bool:
    """Every maximal matching is perfect."""
    return G.order % 2 == 0 and 2 * minimum_maximal_matching_size(G) == G.order


def all_matchings(G: Graph):
    """Yield every matching of ``G`` (including the empty one) as an edge bitmask."""
    edges = G.edges

    def walk(start: int, covered: int, mask: int):
        yield mask
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not (covered >> u & 1 or covered >> v & 1):
                yield from walk(i + 1, covered | 1 << u | 1 << v, mask | 1 << i)

    yield from walk(0, 0, 0)


def _unlink(pairs: tuple) -> EdgeSet:
    out = []
    while pairs:
        (u, v), pairs = pairs
        out.append(edge(u, v))
    return frozenset(out)
