"""Canonical forms of small graphs.

Two forms are provided.

``canonical_code`` is the lexicographically least upper-triangle bit string
(graph6 column order) over all vertex permutations.  In that order the
string is a sequence of columns, column ``k`` holding the adjacencies of the
``k``-th placed vertex to the earlier ones, so a permutation can only be
optimal if every column is minimal given its prefix.  The search therefore
grows all tied prefixes level by level and keeps only the extensions with
the smallest next column.

``certificate_adj`` is faster and used for de-duplication inside the
census: individualisation-refinement to equitable ordered partitions, the
certificate being the least bit string over the leaves of the search tree.
Refinement depends only on structure, so isomorphic graphs share the set of
leaf strings, but the minimum is not the global lexicographic minimum.

Both searches skip interchangeable twins (``N(u) - v == N(v) - u``): the
transposition of two twins is an automorphism fixing everything else.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError
from .graph6 import encode_bits

MAX_CANON_ORDER = 12


def _refine(adj, cells: list[list[int]]) -> list[list[int]]:
    while True:
        split = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            out = []
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) == 1:
                    out.append(cell)
                else:
                    split = True
                    out.extend(groups[k] for k in sorted(groups))
            cells = out
            if split:
                break
        if not split:
            return cells


def _code(adj, order: list[int]) -> int:
    value = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            value = value << 1 | (row >> order[i] & 1)
    return value


def _twin_classes(adj: Sequence[int]) -> list[int]:
    # twinship is an equivalence relation; label each class by its least vertex
    n = len(adj)
    cls = list(range(n))
    for v in range(n):
        for u in range(v):
            if cls[u] == u and (adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)):
                cls[v] = u
                break
    return cls


def lexmin_code_adj(adj: Sequence[int]) -> int:
    """Least upper-triangle bit string over all relabellings, as an int."""
    n = len(adj)
    if n <= 1:
        return 0
    cls = _twin_classes(adj)
    # frontier entries: (placed mask, per-vertex column against the prefix)
    frontier = []
    reps = sorted(set(cls))
    for v in reps:
        frontier.append((1 << v, [adj[c] >> v & 1 for c in range(n)]))
    code = 0
    for k in range(1, n):
        best = None
        keep: list[tuple[int, list[int], int]] = []
        for placed, cols in frontier:
            tried = set()
            for c in range(n):
                if placed >> c & 1 or cls[c] in tried:
                    continue
                val = cols[c]
                if best is not None and val > best:
                    continue
                tried.add(cls[c])
                if best is None or val < best:
                    best = val
                    keep = []
                keep.append((placed, cols, c))
        code = code << k | best
        if k == n - 1:
            break
        frontier = []
        for placed, cols, c in keep:
            row = adj[c]
            frontier.append(
                (placed | 1 << c, [x << 1 | (row >> i & 1) for i, x in enumerate(cols)])
            )
    return code


def certificate_adj(adj: Sequence[int]) -> int:
    """Isomorphism certificate (refinement-based) as an int."""
    return canonical_labeling_adj(adj)[0]


def canonical_labeling_adj(adj: Sequence[int]) -> tuple[int, list[int]]:
    """``(code, order)`` from the refinement search.

    ``order[k]`` is the vertex placed at position ``k`` and ``code`` packs
    the relabelled upper triangle in graph6 bit order.
    """
    n = len(adj)
    if n <= 1:
        return 0, list(range(n))
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        pos = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if pos is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[pos]
        tried: list[int] = []
        for v in cell:
            if any((adj[v] & ~(1 << u)) == (adj[u] & ~(1 << v)) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:pos] + [[v], rest] + cells[pos + 1:])

    search([list(range(n))])
    return best[0], best[1]


def canonical_labeling(G: Graph) -> tuple[int, list[int]]:
    return canonical_labeling_adj(G.adj)


def code_to_graph6(order: int, code: int) -> str:
    nbits = order * (order - 1) // 2
    return encode_bits(order, [code >> (nbits - 1 - k) & 1 for k in range(nbits)])


def code_to_adj(order: int, code: int) -> list[int]:
    adj = [0] * order
    k = order * (order - 1) // 2
    for j in range(1, order):
        for i in range(j):
            k -= 1
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def canonical_code(G: Graph, max_order: int = MAX_CANON_ORDER) -> bytes:
    """graph6 bytes of the lexicographically least relabelling.

    Equal iff isomorphic.
    """
    return canonical_str(G, max_order).encode("ascii")


def canonical_str(G: Graph, max_order: int = MAX_CANON_ORDER) -> str:
    if G.order > max_order:
        raise GraphError(f"canonical code supports order <= {max_order}, got {G.order}")
    return code_to_graph6(G.order, lexmin_code_adj(G.adj))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.order != H.order or G.size != H.size:
        return False
    return certificate_adj(G.adj) == certificate_adj(H.adj)
