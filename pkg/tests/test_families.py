from __future__ import annotations

import itertools
import re

import networkx as nx
import pytest

from conftest import to_nx
from wedgraphs import families as fam
from wedgraphs.canon import canonical_code
from wedgraphs.edge_domination import is_wed
from wedgraphs.families import FamilyError, FamilySpec, build, family_order, parameter_grid
from wedgraphs.graph import blowup, girth, is_bipartite, is_connected, is_split


def test_gstar_shape():
    G = fam.gstar()
    assert (G.order, G.size) == (11, 15)
    assert (0, 1) in G.edges and (9, 10) in G.edges


def test_gstar_blowup_identities():
    c7 = blowup(fam.gstar(), (1, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0))
    k46 = blowup(fam.gstar(), (2, 0, 0, 0, 3, 0, 0, 0, 2, 3, 0))
    assert canonical_code(c7) == canonical_code(fam.cycle(7))
    assert canonical_code(k46) == canonical_code(fam.biclique(4, 6))


def test_hstar():
    H = fam.hstar()
    assert (H.order, H.size) == (7, 8)
    assert canonical_code(H) == canonical_code(build(FamilySpec("F11", {"n": 1})))
    assert girth(H) == 4 and is_bipartite(H) is None
    assert is_wed(H)


def test_f11_layout():
    G = build(FamilySpec("F11", {"n": 2}))
    assert G.order == 9
    assert fam.gstar_multiplicities("F11", {"n": 2}) == (1, 1, 1, 1, 1, 2, 2, 0, 0, 0, 0)
    layout = fam.gstar_layout((1, 1, 1, 1, 1, 2, 2, 0, 0, 0, 0))
    assert list(layout["u6"]) == [5, 6] and list(layout["u7"]) == [7, 8]


def test_h_families():
    H2 = fam.h2(1)
    assert (H2.order, H2.size) == (5, 6)
    assert fam.h1(2).order == 6 and fam.h1(2).size == 8
    assert fam.h3().order == 5
    for G in (fam.h1(1), fam.h1(3), fam.h2(1), fam.h2(3), fam.h3(), fam.star(4)):
        assert is_split(G) and is_wed(G)
    with pytest.raises(FamilyError, match="leaves >= 1"):
        fam.h2(0)
    with pytest.raises(FamilyError):
        fam.h1(0)


def test_standard_graphs():
    assert fam.standard("CYCLE", 5).size == 5
    assert fam.standard("BICLIQUE", 3, 3).size == 9
    assert nx.is_isomorphic(to_nx(fam.standard("STAR", 1)), nx.complete_graph(2))
    with pytest.raises(FamilyError):
        fam.standard("CYCLE", 2)
    with pytest.raises(FamilyError):
        fam.standard("COMPLETE", 0)


@pytest.mark.parametrize(
    "family, params, fragment",
    [
        ("F21", {"n": 1, "r": 1, "s": 1}, "n - 1 >= r >= 1"),
        ("F21", {"n": 3, "r": 2, "s": 2}, "n >= r + s"),
        ("F11", {"n": 0}, "n >= 1"),
        ("G11", {"m": 0, "n": 1}, "m >= 1"),
        ("G31", {"k": 1, "l": 2, "m": 2, "n": 2, "r": 1, "s": 1}, "m - 1 >= l >= 1"),
        ("F11", {"n": 1, "q": 2}, "unexpected"),
        ("F21", {"n": 3}, "missing"),
        ("F11", {"n": "2"}, "integer"),
        ("NOPE", {}, "unknown"),
    ],
)
def test_constraint_violations_are_named(family, params, fragment):
    with pytest.raises(FamilyError, match=re.escape(fragment)):
        build(FamilySpec(family, params))


def test_f3_and_g22_lack_the_sum_condition():
    # r + s > n is allowed in these two families only
    build(FamilySpec("F3", {"n": 3, "r": 2, "s": 2}))
    build(FamilySpec("G22", {"m": 1, "n": 3, "r": 2, "s": 2}))
    with pytest.raises(FamilyError):
        build(FamilySpec("F4", {"n": 3, "r": 2, "s": 2}))


@pytest.mark.parametrize(
    "family, params, order",
    [
        ("F11", {"n": 3}, 11),
        ("F12", {"n": 1}, 9),
        ("F21", {"n": 2, "r": 1, "s": 1}, 9),
        ("F22", {"n": 2, "r": 1, "s": 1}, 11),
        ("F3", {"n": 2, "r": 1, "s": 1}, 9),
        ("F4", {"n": 2, "r": 1, "s": 1}, 9),
        ("G11", {"m": 1, "n": 1}, 11),
        ("G21", {"m": 1, "n": 2, "r": 1, "s": 1}, 11),
        ("G31", {"k": 1, "l": 1, "m": 2, "n": 2, "r": 1, "s": 1}, 13),
    ],
)
def test_family_orders(family, params, order):
    assert family_order(family, params) == order == build(FamilySpec(family, params)).order


def test_parameter_grids():
    assert [s.params["n"] for s in parameter_grid("F11", 9)] == [1, 2]
    # G11 has order 2m + 2n + 7, so its first member needs order 11
    assert parameter_grid("G11", 10) == []
    assert [dict(s.params) for s in parameter_grid("G11", 11)] == [{"m": 1, "n": 1}]
    grid = parameter_grid("F21", 9)
    assert grid and all(
        p["n"] - 1 >= p["r"] >= 1 and p["n"] - 1 >= p["s"] >= 1 and p["n"] >= p["r"] + p["s"]
        for p in (s.params for s in grid)
    )
    assert parameter_grid("HSTAR", 6) == []
    with pytest.raises(FamilyError):
        parameter_grid("BLOWUP", 5)
    with pytest.raises(FamilyError):
        parameter_grid("F11", 0)


def test_grid_is_complete():
    # every valid tuple with small values shows up
    for fid in fam.GSTAR_FAMILIES:
        grid = {tuple(sorted(s.params.items())) for s in parameter_grid(fid, 12)}
        keys = fam.GSTAR_FAMILIES[fid].keys
        for values in itertools.product(range(8), repeat=len(keys)):
            params = dict(zip(keys, values))
            try:
                order = family_order(fid, params)
            except FamilyError:
                continue
            assert (order <= 12) == (tuple(sorted(params.items())) in grid)


def test_members_are_connected_girth_four_nonbipartite():
    for fid in fam.F_FAMILIES + fam.G_FAMILIES:
        for spec in parameter_grid(fid, 11):
            G = build(spec)
            assert is_connected(G) and girth(G) == 4 and is_bipartite(G) is None, spec.label()


def test_blowup_and_product_specs():
    spec = FamilySpec("BLOWUP", {"base": FamilySpec("PATH", {"n": 3}), "multiplicities": (1, 2, 1)})
    assert build(spec).order == 4
    prod = FamilySpec("PRODUCT", {"left": FamilySpec("COMPLETE", {"n": 2}), "right": FamilySpec("CYCLE", {"n": 3})})
    assert (build(prod).order, build(prod).size) == (6, 9)
    with pytest.raises(FamilyError):
        build(FamilySpec("PRODUCT", {"left": FamilySpec("COMPLETE", {"n": 2})}))
    assert spec.label().startswith("BLOWUP(")


def test_members_are_not_wed_except_hstar():
    hstar = canonical_code(fam.hstar())
    wed = []
    for fid in fam.F_FAMILIES + fam.G_FAMILIES:
        for spec in parameter_grid(fid, 12):
            G = build(spec)
            if is_wed(G):
                wed.append(canonical_code(G))
    assert wed == [hstar]
