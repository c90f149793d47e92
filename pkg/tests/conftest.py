from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from wedgraphs.graph import Graph, from_edge_list

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order: int = 0, max_order: int = 8, max_edges: int | None = None):
    n = draw(st.integers(min_order, max_order))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges) if pairs else st.just([]))
    return from_edge_list(n, chosen)


@st.composite
def connected_graphs(draw, min_order: int = 1, max_order: int = 8):
    n = draw(st.integers(min_order, max_order))
    # random spanning tree plus extra edges
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    pairs = [(u, v) for v in range(n) for u in range(v)]
    if pairs:
        edges |= set(draw(st.lists(st.sampled_from(pairs), unique=True, max_size=2 * n)))
    return from_edge_list(n, sorted(edges))


@st.composite
def relabellings(draw, G: Graph):
    return draw(st.permutations(range(G.order)))


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.order))
    H.add_edges_from(G.edges)
    return H


@pytest.fixture
def nxify():
    return to_nx


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        )
