"""Edge dominating sets: membership, minimality and the extremal sizes of
minimal edge dominating sets.

All searches share one branching rule.  While some edge ``e`` is still
undominated, pick such an edge with the fewest admissible dominators and
branch on which edge of its closed neighbourhood joins the set; in the
``j``-th branch the first ``j - 1`` candidates are forbidden for the rest of
that subtree.  Every edge dominating set reachable from a node contains
exactly one "first" dominator of ``e``, so distinct leaves are distinct
sets.  A branch dies as soon as an already chosen edge has no private edge
neighbour left, because domination only grows along a branch; surviving
leaves are therefore exactly the minimal edge dominating sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .graph import Edge, EdgeSet, Graph, GraphError, bits, edge, nbr_closure
from .matching import maximum_matching


@dataclass(frozen=True)
class EdsCertificate:
    """Smallest and largest minimal edge dominating sets of a graph.

    When produced with ``early_exit`` on a graph that is not well-edge-
    dominated, ``Gamma_prime`` may only be a lower bound; ``exact`` says so.
    """

    gamma_prime: int
    Gamma_prime: int
    min_witness: EdgeSet
    max_witness: EdgeSet
    is_wed: bool
    exact: bool = True


@dataclass(frozen=True)
class EnumerationSummary:
    visited: int
    complete: bool
    min_size: Optional[int]
    max_size: Optional[int]


def is_edge_dominating(G: Graph, F: Iterable[Sequence[int]]) -> bool:
    full = (1 << G.size) - 1
    return nbr_closure(G, G.edge_mask(F)) == full


def private_edge_neighbors(
    G: Graph, F: Iterable[Sequence[int]], f: Sequence[int]
) -> EdgeSet:
    """Edges dominated by ``f`` and by no other member of ``F``."""
    fmask = G.edge_mask(F)
    fbit = G.edge_mask([f])
    if not fmask & fbit:
        raise GraphError(f"edge {edge(*f)} is not a member of the set")
    others = nbr_closure(G, fmask & ~fbit)
    return G.edges_of(G.edge_nbr_masks[fbit.bit_length() - 1] & ~others)


def is_minimal_eds(G: Graph, F: Iterable[Sequence[int]]) -> bool:
    return _is_minimal_mask(G, G.edge_mask(F))


def _is_minimal_mask(G: Graph, fmask: int) -> bool:
    nbr = G.edge_nbr_masks
    once = twice = 0
    for i in bits(fmask):
        m = nbr[i]
        twice |= once & m
        once = (once | m) & ~twice
    if once | twice != (1 << G.size) - 1:
        return False
    return all(nbr[i] & once for i in bits(fmask))


# search engine


class _Search:
    """Backtracking over minimal edge dominating sets of one graph."""

    def __init__(self, G: Graph):
        self.G = G
        self.nbr = G.edge_nbr_masks
        self.m = G.size
        self.full = (1 << self.m) - 1
        self.ends = [1 << u | 1 << v for u, v in G.edges]
        self.nonisolated = 0
        for v in range(G.order):
            if G.adj[v]:
                self.nonisolated |= 1 << v
        self.max_cover = max((m.bit_count() for m in self.nbr), default=1)

    def _pick(self, undominated: int, forbidden: int) -> int:
        """Candidate mask for the undominated edge with the fewest options
        (0 means some edge can no longer be dominated)."""
        nbr = self.nbr
        best = -1
        best_count = 1 << 30
        for e in bits(undominated):
            cand = nbr[e] & ~forbidden
            c = cand.bit_count()
            if c < best_count:
                best, best_count = cand, c
                if c <= 1:
                    break
        return best

    def _extend(self, chosen: list[int], once: int, twice: int, g: int):
        """Add edge ``g``; return the new (once, twice) or None if some chosen
        edge loses its last private neighbour."""
        m = self.nbr[g]
        twice = twice | (once & m)
        once = (once | m) & ~twice
        nbr = self.nbr
        for f in chosen:
            if not nbr[f] & once:
                return None
        return once, twice

    def walk(self) -> Iterator[int]:
        """Yield every minimal edge dominating set as an edge bitmask."""
        full = self.full
        chosen: list[int] = []

        def rec(once: int, twice: int, forbidden: int, fmask: int):
            undominated = full & ~(once | twice)
            if not undominated:
                yield fmask
                return
            cand = self._pick(undominated, forbidden)
            for g in bits(cand):
                nxt = self._extend(chosen, once, twice, g)
                if nxt is not None:
                    chosen.append(g)
                    yield from rec(nxt[0], nxt[1], forbidden, fmask | 1 << g)
                    chosen.pop()
                forbidden |= 1 << g

        yield from rec(0, 0, 0, 0)

    def minimum(self, seed: int) -> int:
        """Smallest edge dominating set; ``seed`` is any minimal one."""
        full = self.full
        cover = self.max_cover
        best = [seed.bit_count(), seed]
        chosen: list[int] = []

        def rec(once: int, twice: int, forbidden: int, fmask: int):
            undominated = full & ~(once | twice)
            if not undominated:
                if len(chosen) < best[0]:
                    best[0], best[1] = len(chosen), fmask
                return
            need = -(-undominated.bit_count() // cover)
            if len(chosen) + need >= best[0]:
                return
            cand = self._pick(undominated, forbidden)
            for g in bits(cand):
                nxt = self._extend(chosen, once, twice, g)
                if nxt is not None:
                    chosen.append(g)
                    rec(nxt[0], nxt[1], forbidden, fmask | 1 << g)
                    chosen.pop()
                forbidden |= 1 << g

        rec(0, 0, 0, 0)
        return best[1]

    def maximum(self, floor: int, stop_above: Optional[int] = None) -> Optional[int]:
        """Largest minimal edge dominating set of size > ``floor``.

        Returns None when there is none.  With ``stop_above`` the search ends
        at the first set larger than that size.

        Each edge added to a partial set ``F`` needs a private neighbour among
        the undominated edges, and (a minimal set being a star forest) the
        final set can only exceed ``F`` by as many edges as it covers new
        vertices; both counts bound the remaining growth.
        """
        full = self.full
        ends = self.ends
        live = self.nonisolated
        best: list = [floor, None]
        chosen: list[int] = []

        def rec(once: int, twice: int, forbidden: int, fmask: int, covered: int) -> bool:
            undominated = full & ~(once | twice)
            if not undominated:
                if len(chosen) > best[0]:
                    best[0], best[1] = len(chosen), fmask
                    return stop_above is not None and best[0] > stop_above
                return False
            room = min(
                undominated.bit_count(), (live & ~covered).bit_count()
            )
            if len(chosen) + room <= best[0]:
                return False
            cand = self._pick(undominated, forbidden)
            for g in bits(cand):
                nxt = self._extend(chosen, once, twice, g)
                if nxt is not None:
                    chosen.append(g)
                    done = rec(nxt[0], nxt[1], forbidden, fmask | 1 << g, covered | ends[g])
                    chosen.pop()
                    if done:
                        return True
                forbidden |= 1 << g
            return False

        rec(0, 0, 0, 0, 0)
        return best[1]


def _greedy_maximal_matching(G: Graph) -> int:
    covered = 0
    mask = 0
    for i, (u, v) in enumerate(G.edges):
        if not (covered >> u & 1 or covered >> v & 1):
            covered |= 1 << u | 1 << v
            mask |= 1 << i
    return mask


def minimum_eds(G: Graph) -> EdgeSet:
    """A smallest edge dominating set (necessarily minimal)."""
    return G.edges_of(_Search(G).minimum(_greedy_maximal_matching(G)))


def gamma_prime(G: Graph) -> int:
    return len(minimum_eds(G))


def upper_gamma_prime(G: Graph) -> int:
    return eds_certificate(G).Gamma_prime


def eds_certificate(G: Graph, early_exit: bool = False) -> EdsCertificate:
    """Exact edge domination number and upper edge domination number.

    With ``early_exit`` the search for a large minimal set stops at the first
    one exceeding the minimum, which already certifies that ``G`` is not
    well-edge-dominated; ``Gamma_prime`` is then a lower bound and
    ``exact`` is False.
    """
    search = _Search(G)
    low = search.minimum(_greedy_maximal_matching(G))
    gamma = low.bit_count()
    high = low
    exact = True
    if early_exit:
        # a maximum matching is maximal, hence a minimal edge dominating set
        mm = G.edge_mask(maximum_matching(G))
        if mm.bit_count() > gamma:
            high, exact = mm, False
        else:
            found = search.maximum(gamma, stop_above=gamma)
            if found is not None:
                high, exact = found, False
    else:
        floor = G.edge_mask(maximum_matching(G))
        found = search.maximum(floor.bit_count())
        high = found if found is not None else floor
    return EdsCertificate(
        gamma_prime=gamma,
        Gamma_prime=high.bit_count(),
        min_witness=G.edges_of(low),
        max_witness=G.edges_of(high),
        is_wed=high.bit_count() == gamma,
        exact=exact,
    )


def is_wed(G: Graph) -> bool:
    """True iff every minimal edge dominating set of ``G`` is minimum."""
    return eds_certificate(G, early_exit=True).is_wed


def enumerate_minimal_eds(
    G: Graph, visitor: Callable[[EdgeSet], object], limit: int
) -> EnumerationSummary:
    """Call ``visitor`` on distinct minimal edge dominating sets, at most
    ``limit`` of them."""
    if limit < 1:
        raise ValueError("limit must be at least 1")
    count = 0
    lo = hi = None
    complete = True
    for mask in _Search(G).walk():
        if count == limit:
            complete = False
            break
        k = mask.bit_count()
        lo = k if lo is None else min(lo, k)
        hi = k if hi is None else max(hi, k)
        count += 1
        visitor(G.edges_of(mask))
    return EnumerationSummary(visited=count, complete=complete, min_size=lo, max_size=hi)


def minimal_eds_sizes(G: Graph) -> list[int]:
    """Sizes of all minimal edge dominating sets, one entry per set."""
    return [mask.bit_count() for mask in _Search(G).walk()]


__all__ = [
    "Edge",
    "EdsCertificate",
    "EnumerationSummary",
    "eds_certificate",
    "enumerate_minimal_eds",
    "gamma_prime",
    "is_edge_dominating",
    "is_minimal_eds",
    "is_wed",
    "minimal_eds_sizes",
    "minimum_eds",
    "private_edge_neighbors",
    "upper_gamma_prime",
]
