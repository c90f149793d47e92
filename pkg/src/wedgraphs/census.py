"""Isomorphism-free census of small graphs and bounded verification of the
well-edge-dominated characterisations.

Connected graphs are generated by vertex augmentation: every connected
graph of order ``n >= 2`` has a vertex whose removal leaves a connected
graph, so attaching a new vertex to every nonempty vertex subset of every
connected graph of order ``n - 1`` reaches all classes; canonical codes
remove the duplicates.  Hereditary filters (girth bounds, bipartite, split)
are applied to every intermediate graph, which keeps the triangle-free and
girth sweeps small.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional

from . import families as fam
from .canon import (
    MAX_CANON_ORDER,
    canonical_code,
    certificate_adj,
    canonical_str,
    code_to_adj,
)
from .edge_domination import eds_certificate, gamma_prime, is_wed
from .graph import (
    Graph,
    bits,
    cartesian_product,
    disjoint_union,
    girth,
    is_bipartite,
    is_connected,
    remove_edge_neighborhood,
    split_partition,
    support_vertices,
)
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .matching import (
    all_matchings,
    has_perfect_matching,
    matching_profile,
    minimum_maximal_matching_size,
)

MAX_CENSUS_ORDER = 10


class CensusError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    """Computed invariants contradict a relation that must always hold."""


# filters


@dataclass(frozen=True)
class CensusFilter:
    max_order: int
    connected: bool = True
    triangle_free: bool = False
    nonbipartite: bool = False
    bipartite: bool = False
    min_girth: Optional[int] = None
    max_girth: Optional[int] = None
    split_only: bool = False
    min_order: int = 1

    def __post_init__(self) -> None:
        if self.max_order < 1:
            raise CensusError("max_order must be at least 1")

    @property
    def girth_floor(self) -> int:
        floor = self.min_girth or 3
        return max(floor, 4) if self.triangle_free else floor

    def accepts(self, G: Graph) -> bool:
        if not self.min_order <= G.order <= self.max_order:
            return False
        if self.connected and not is_connected(G):
            return False
        g = girth(G)
        if g < self.girth_floor:
            return False
        if self.max_girth is not None and g > self.max_girth:
            return False
        bip = is_bipartite(G) is not None
        if self.bipartite and not bip or self.nonbipartite and bip:
            return False
        if self.split_only and split_partition(G) is None:
            return False
        return True


# generation


def _distances(adj: list[int]) -> list[list[int]]:
    n = len(adj)
    out = []
    for root in range(n):
        dist = [n + 1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in bits(adj[v]):
                if dist[w] > n:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        out.append(dist)
    return out


def _two_colouring(adj: list[int]) -> list[int]:
    colour = [-1] * len(adj)
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in bits(adj[v]):
            if colour[w] < 0:
                colour[w] = 1 - colour[v]
                queue.append(w)
    return colour


def _attachments(adj: list[int], girth_floor: int, bipartite: bool) -> Iterator[int]:
    """Neighbourhoods for a new vertex that keep the hereditary filters."""
    n = len(adj)
    if girth_floor <= 3 and not bipartite:
        yield from range(1, 1 << n)
        return
    dist = _distances(adj)
    colour = _two_colouring(adj) if bipartite else None
    # a new vertex on a and b closes a cycle of length dist(a, b) + 2
    compat = []
    for a in range(n):
        mask = 0
        for b in range(a + 1, n):
            if dist[a][b] + 2 >= girth_floor and (colour is None or colour[a] == colour[b]):
                mask |= 1 << b
        compat.append(mask)

    def grow(chosen: int, allowed: int) -> Iterator[int]:
        for b in bits(allowed):
            nxt = chosen | 1 << b
            yield nxt
            yield from grow(nxt, allowed & compat[b] & ~((2 << b) - 1))

    yield from grow(0, (1 << n) - 1)


def _is_split_adj(adj: list[int]) -> bool:
    deg = sorted((m.bit_count() for m in adj), reverse=True)
    m = max(i + 1 for i in range(len(deg)) if deg[i] >= i)
    return sum(deg[:m]) == m * (m - 1) + sum(deg[m:])


@functools.lru_cache(maxsize=None)
def connected_codes(
    max_order: int, girth_floor: int = 3, bipartite: bool = False, split: bool = False
) -> tuple[tuple[int, ...], ...]:
    """Canonical codes of connected graphs, indexed by order.

    Entry ``n`` holds the sorted integer codes (graph6 bit order) of all
    connected graphs of order ``n`` with girth >= ``girth_floor`` that are
    bipartite / split when requested.
    """
    if max_order > MAX_CENSUS_ORDER:
        raise CensusError(f"census supports order <= {MAX_CENSUS_ORDER}, got {max_order}")
    levels: list[tuple[int, ...]] = [(), (0,)]
    for n in range(2, max_order + 1):
        seen: set[int] = set()
        new_bit = 1 << (n - 1)
        for code in levels[n - 1]:
            adj = code_to_adj(n - 1, code)
            for nbhd in _attachments(adj, girth_floor, bipartite):
                child = adj + [nbhd]
                for v in bits(nbhd):
                    child[v] |= new_bit
                if split and not _is_split_adj(child):
                    continue
                seen.add(certificate_adj(child))
        levels.append(tuple(sorted(seen)))
    return tuple(levels)


def _graph_from_code(order: int, code: int) -> Graph:
    return Graph(order, tuple(code_to_adj(order, code)))


def _connected_graphs(flt: CensusFilter) -> Iterator[Graph]:
    levels = connected_codes(
        flt.max_order, flt.girth_floor, flt.bipartite, flt.split_only
    )
    for n in range(max(flt.min_order, 1), flt.max_order + 1):
        for code in levels[n]:
            G = _graph_from_code(n, code)
            if flt.nonbipartite and is_bipartite(G) is not None:
                continue
            if flt.max_girth is not None and girth(G) > flt.max_girth:
                continue
            yield G


def _all_graphs(flt: CensusFilter) -> Iterator[Graph]:
    # a graph is a multiset of connected components; girth and bipartiteness
    # are decided component-wise, the rest is checked on the union
    levels = connected_codes(flt.max_order, flt.girth_floor, flt.bipartite, False)
    pool = [(n, code) for n in range(1, flt.max_order + 1) for code in levels[n]]

    def grow(start: int, left: int, chosen: list, out: list) -> None:
        if left == 0:
            G = disjoint_union(*(_graph_from_code(n, c) for n, c in chosen))
            if flt.accepts(G):
                out.append((canonical_str(G, MAX_CENSUS_ORDER), G))
            return
        for i in range(start, len(pool)):
            if pool[i][0] <= left:
                chosen.append(pool[i])
                grow(i, left - pool[i][0], chosen, out)
                chosen.pop()

    for total in range(max(flt.min_order, 1), flt.max_order + 1):
        batch: list = []
        grow(0, total, [], batch)
        batch.sort(key=lambda item: item[0])
        for _, G in batch:
            yield G


def enumerate_graphs(flt: CensusFilter, visitor: Callable[[Graph], object]) -> int:
    """Visit one representative per isomorphism class passing ``flt``.

    Graphs come in increasing order, and by canonical code within an order.
    Returns the number visited.
    """
    if flt.max_order > MAX_CENSUS_ORDER:
        raise CensusError(
            f"census supports order <= {MAX_CENSUS_ORDER}, got {flt.max_order}"
        )
    source = _connected_graphs(flt) if flt.connected else _all_graphs(flt)
    count = 0
    for G in source:
        visitor(G)
        count += 1
    return count


def enumerate_connected(flt: CensusFilter, visitor: Callable[[Graph], object]) -> int:
    if not flt.connected:
        raise CensusError("enumerate_connected needs a connected filter")
    return enumerate_graphs(flt, visitor)


def census_graphs(flt: CensusFilter) -> list[Graph]:
    out: list[Graph] = []
    enumerate_graphs(flt, out.append)
    return out


# codes and reports


def graph_code(G: Graph) -> str:
    """Canonical graph6 string when canonicalisation applies, else plain graph6."""
    if G.order <= MAX_CANON_ORDER:
        return canonical_str(G)
    return graph6_encode(G)


@dataclass(frozen=True)
class InvariantReport:
    order: int
    size: int
    girth: float
    connected: bool
    bipartite: bool
    split: bool
    alpha_prime: int
    i_prime: int
    gamma_prime: int
    Gamma_prime: int
    has_perfect: bool
    equimatchable: bool
    randomly_matchable: bool
    wed: bool
    code: Optional[str]

    def records(self) -> list[tuple[str, str]]:
        def fmt(value) -> str:
            if isinstance(value, bool):
                return "true" if value else "false"
            if value is None:
                return "none"
            if isinstance(value, float) and math.isinf(value):
                return "inf"
            return str(value)

        return [(name, fmt(getattr(self, name))) for name in self.__dataclass_fields__]


def invariant_report(G: Graph) -> InvariantReport:
    """All invariants of ``G``, exact, with their mutual relations checked."""
    prof = matching_profile(G)
    cert = eds_certificate(G)
    g = girth(G)
    report = InvariantReport(
        order=G.order,
        size=G.size,
        girth=g,
        connected=is_connected(G),
        bipartite=is_bipartite(G) is not None,
        split=split_partition(G) is not None,
        alpha_prime=prof.alpha_prime,
        i_prime=prof.i_prime,
        gamma_prime=cert.gamma_prime,
        Gamma_prime=cert.Gamma_prime,
        has_perfect=prof.has_perfect,
        equimatchable=prof.i_prime == prof.alpha_prime,
        randomly_matchable=G.order % 2 == 0 and 2 * prof.i_prime == G.order,
        wed=cert.is_wed,
        code=canonical_str(G) if G.order <= MAX_CANON_ORDER else None,
    )
    check_report(report)
    return report


def check_report(r: InvariantReport) -> None:
    if r.gamma_prime != r.i_prime:
        raise ConsistencyError(f"gamma' = {r.gamma_prime} but i' = {r.i_prime}")
    if not r.gamma_prime <= r.i_prime <= r.alpha_prime <= r.Gamma_prime:
        raise ConsistencyError(
            f"chain violated: {r.gamma_prime} <= {r.i_prime} <= "
            f"{r.alpha_prime} <= {r.Gamma_prime}"
        )
    if 2 * r.alpha_prime > r.order:
        raise ConsistencyError("matching number exceeds half the order")
    if r.wed and not r.equimatchable:
        raise ConsistencyError("well-edge-dominated but not equimatchable")
    if r.wed != (r.gamma_prime == r.Gamma_prime):
        raise ConsistencyError("wed flag disagrees with gamma' and Gamma'")


# theorem verification


THEOREMS = (
    "KN",
    "KRS",
    "RANDOMLY_MATCHABLE",
    "TRIANGLE_FREE",
    "SPLIT",
    "CARTESIAN",
    "GIRTH5",
    "MATCH_REMOVAL",
    "GAMMA_EQUALS_I",
    "FACTORS",
)


@dataclass
class TheoremVerdict:
    theorem_id: str
    max_order: int
    graphs_checked: int = 0
    witnesses: list[str] = field(default_factory=list)
    counterexamples: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "TheoremVerdict") -> "TheoremVerdict":
        """Order-independent combination of two partial verdicts."""
        return TheoremVerdict(
            self.theorem_id,
            max(self.max_order, other.max_order),
            self.graphs_checked + other.graphs_checked,
            sorted(set(self.witnesses) | set(other.witnesses)),
            sorted(set(self.counterexamples) | set(other.counterexamples)),
        )


def _pmap(fn: Callable, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))


def _hypothesis(flt: CensusFilter, source: Optional[Iterable[Graph]]) -> list[Graph]:
    if source is None:
        return census_graphs(flt)
    return [G for G in source if flt.accepts(G)]


# per-graph classifiers take and return plain data so they pickle cheaply


def _wed_of(g6: str) -> bool:
    return is_wed(graph6_decode(g6))


def _rm_row(g6: str) -> tuple[bool, bool, bool]:
    G = graph6_decode(g6)
    pm = has_perfect_matching(G)
    rm = pm and 2 * minimum_maximal_matching_size(G) == G.order
    return pm, rm, pm and is_wed(G)


def _gamma_i_row(g6: str) -> tuple[int, int]:
    G = graph6_decode(g6)
    return gamma_prime(G), minimum_maximal_matching_size(G)


def _match_removal_row(g6: str) -> tuple[bool, bool]:
    """(G is wed, every G - N_e[M] is wed)."""
    G = graph6_decode(g6)
    if not is_wed(G):
        return False, True
    memo: dict[tuple[int, int], bool] = {}
    for mask in all_matchings(G):
        H = remove_edge_neighborhood(G, G.edges_of(mask))
        key = (H.order, certificate_adj(H.adj))
        if key not in memo:
            memo[key] = is_wed(H)
        if not memo[key]:
            return True, False
    return True, True


def _product_row(pair: tuple[str, str]) -> tuple[str, bool]:
    P = cartesian_product(graph6_decode(pair[0]), graph6_decode(pair[1]))
    return graph_code(P), is_wed(P)


def _classify(
    verdict: TheoremVerdict,
    graphs: list[Graph],
    expected: Callable[[Graph, str], bool],
    jobs: int,
) -> TheoremVerdict:
    codes = [graph_code(G) for G in graphs]
    flags = _pmap(_wed_of, [graph6_encode(G) for G in graphs], jobs)
    for G, code, wed in zip(graphs, codes, flags):
        if wed:
            verdict.witnesses.append(code)
        if wed != expected(G, code):
            verdict.counterexamples.append(code)
    verdict.graphs_checked += len(graphs)
    return verdict


def _members(builders: Iterable[Callable[[], Graph]], max_order: int) -> set[str]:
    out = set()
    for build in builders:
        G = build()
        if G.order <= max_order:
            out.add(canonical_str(G))
    return out


def verify(
    theorem_id: str,
    max_order: int,
    *,
    jobs: int = 1,
    source: Optional[Iterable[Graph]] = None,
) -> TheoremVerdict:
    """Check one characterisation over its hypothesis class up to ``max_order``.

    For CARTESIAN and FACTORS ``max_order`` bounds the factor orders.  A
    ``source`` of graphs replaces the internal census for the census-based
    theorems; graphs failing the hypothesis filter are skipped and
    de-duplication is the supplier's job.
    """
    tid = theorem_id.upper().replace("-", "_")
    if tid not in THEOREMS:
        raise CensusError(f"unknown theorem id {theorem_id!r}")
    if max_order < 1:
        raise CensusError("max_order must be at least 1")
    verdict = TheoremVerdict(tid, max_order)
    run = _VERIFIERS[tid]
    run(verdict, max_order, jobs, source)
    verdict.witnesses.sort()
    verdict.counterexamples.sort()
    return verdict


def _verify_kn(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    graphs = [fam.complete(n) for n in range(1, bound + 1)]
    _classify(v, graphs, lambda G, c: G.order <= 4, jobs)


def _verify_krs(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    shapes = [(r, s) for r in range(1, bound) for s in range(r, bound - r + 1)]
    graphs = [fam.biclique(r, s) for r, s in shapes]
    wed_shape = {graph_code(G): r == 1 or r == s for G, (r, s) in zip(graphs, shapes)}
    _classify(v, graphs, lambda G, c: wed_shape[c], jobs)


def _verify_triangle_free(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    flt = CensusFilter(bound, triangle_free=True, nonbipartite=True)
    expected = _members([lambda: fam.cycle(5), lambda: fam.cycle(7), fam.hstar], bound)
    _classify(v, _hypothesis(flt, source), lambda G, c: c in expected, jobs)


def split_wed_members(max_order: int) -> set[str]:
    builders: list[Callable[[], Graph]] = [
        lambda: fam.complete(2), lambda: fam.complete(3), lambda: fam.complete(4), fam.h3,
    ]
    builders += [functools.partial(fam.h1, t) for t in range(1, max_order - 3)]
    builders += [functools.partial(fam.h2, t) for t in range(1, max_order - 3)]
    builders += [functools.partial(fam.star, n) for n in range(1, max_order)]
    return _members(builders, max_order)


def _verify_split(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    flt = CensusFilter(bound, split_only=True, min_order=2)
    expected = split_wed_members(bound)
    _classify(v, _hypothesis(flt, source), lambda G, c: c in expected, jobs)


def _verify_girth5(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    flt = CensusFilter(bound, min_girth=5, min_order=2)
    named = _members([lambda: fam.complete(2), lambda: fam.cycle(5), lambda: fam.cycle(7)], bound)

    def predicted(G: Graph, code: str) -> bool:
        if code in named:
            return True
        sides = is_bipartite(G)
        return sides is not None and support_vertices(G) in sides

    _classify(v, _hypothesis(flt, source), predicted, jobs)


def _verify_randomly_matchable(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    flt = CensusFilter(bound, min_order=2)
    graphs = _hypothesis(flt, source)
    wed_pm = _members(
        [lambda: fam.complete(4)]
        + [functools.partial(fam.biclique, n, n) for n in range(1, bound // 2 + 1)],
        bound,
    )
    rm = _members(
        [functools.partial(fam.complete, 2 * n) for n in range(1, bound // 2 + 1)]
        + [functools.partial(fam.biclique, n, n) for n in range(1, bound // 2 + 1)],
        bound,
    )
    rows = _pmap(_rm_row, [graph6_encode(G) for G in graphs], jobs)
    for G, (pm, is_rm, wed) in zip(graphs, rows):
        code = graph_code(G)
        if wed:
            v.witnesses.append(code)
        if pm and wed != (code in wed_pm):
            v.counterexamples.append(code)
        elif is_rm != (code in rm):
            v.counterexamples.append(code)
    v.graphs_checked += len(graphs)


def _verify_match_removal(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    graphs = _hypothesis(CensusFilter(bound, min_order=2), source)
    rows = _pmap(_match_removal_row, [graph6_encode(G) for G in graphs], jobs)
    for G, (wed, closed) in zip(graphs, rows):
        code = graph_code(G)
        if wed:
            v.witnesses.append(code)
        if not closed:
            v.counterexamples.append(code)
    v.graphs_checked += len(graphs)


def _verify_gamma_equals_i(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    graphs = _hypothesis(CensusFilter(bound), source)
    rows = _pmap(_gamma_i_row, [graph6_encode(G) for G in graphs], jobs)
    for G, (g, i) in zip(graphs, rows):
        if g != i:
            v.counterexamples.append(graph_code(G))
    v.graphs_checked += len(graphs)


def _factor_codes(bound: int) -> list[str]:
    if bound < 2:
        return []
    return [canonical_str(G) for G in census_graphs(CensusFilter(bound, min_order=2))]


def _verify_cartesian(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    factors = _factor_codes(bound)
    pairs = list(itertools.combinations_with_replacement(factors, 2))
    c4 = canonical_str(fam.cycle(4))
    for code, wed in _pmap(_product_row, pairs, jobs):
        if wed:
            v.witnesses.append(code)
        if wed != (code == c4):
            v.counterexamples.append(code)
    v.graphs_checked += len(pairs)


def _verify_factors(v: TheoremVerdict, bound: int, jobs: int, source) -> None:
    factors = [c for c in _factor_codes(bound) if not has_perfect_matching(graph6_decode(c))]
    factor_wed = {c: _wed_of(c) for c in factors}
    pairs = list(itertools.combinations_with_replacement(factors, 2))
    for (a, b), (code, wed) in zip(pairs, _pmap(_product_row, pairs, jobs)):
        if wed:
            v.witnesses.append(code)
            if not (factor_wed[a] and factor_wed[b]):
                v.counterexamples.append(code)
    v.graphs_checked += len(pairs)


_VERIFIERS = {
    "KN": _verify_kn,
    "KRS": _verify_krs,
    "RANDOMLY_MATCHABLE": _verify_randomly_matchable,
    "TRIANGLE_FREE": _verify_triangle_free,
    "SPLIT": _verify_split,
    "CARTESIAN": _verify_cartesian,
    "GIRTH5": _verify_girth5,
    "MATCH_REMOVAL": _verify_match_removal,
    "GAMMA_EQUALS_I": _verify_gamma_equals_i,
    "FACTORS": _verify_factors,
}


# census queries


def _equimatchable(G: Graph) -> bool:
    prof = matching_profile(G)
    return prof.i_prime == prof.alpha_prime


def _randomly_matchable(G: Graph) -> bool:
    return G.order % 2 == 0 and 2 * minimum_maximal_matching_size(G) == G.order


PREDICATES: dict[str, Callable[[Graph], bool]] = {
    "wed": is_wed,
    "equimatchable": _equimatchable,
    "randomly-matchable": _randomly_matchable,
}


def _predicate_row(item: tuple[str, str]) -> bool:
    name, g6 = item
    return PREDICATES[name](graph6_decode(g6))


def census_codes(
    flt: CensusFilter, predicate: Optional[str] = None, *, jobs: int = 1
) -> list[str]:
    """Canonical codes of the classes passing ``flt`` (and ``predicate``),
    sorted."""
    if predicate is not None and predicate not in PREDICATES:
        raise CensusError(f"unknown predicate {predicate!r}")
    graphs = census_graphs(flt)
    if predicate is not None:
        keep = _pmap(_predicate_row, [(predicate, graph6_encode(G)) for G in graphs], jobs)
        graphs = [G for G, ok in zip(graphs, keep) if ok]
    return sorted(canonical_str(G, MAX_CENSUS_ORDER) for G in graphs)


__all__ = [
    "CensusError",
    "CensusFilter",
    "ConsistencyError",
    "InvariantReport",
    "MAX_CENSUS_ORDER",
    "PREDICATES",
    "THEOREMS",
    "TheoremVerdict",
    "canonical_code",
    "census_codes",
    "census_graphs",
    "connected_codes",
    "enumerate_connected",
    "enumerate_graphs",
    "graph6_decode",
    "graph6_encode",
    "graph_code",
    "invariant_report",
    "split_wed_members",
    "verify",
]
