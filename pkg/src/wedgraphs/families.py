"""Named graphs and parameterised families.

Most families are blow-ups of the 11-vertex graph ``G*`` (vertices
``u1..u11`` at ids ``0..10``).  In a blow-up the copies of ``u_i`` occupy a
contiguous id block, blocks in increasing ``i``; :func:`gstar_layout` gives
the blocks for a multiplicity vector so individual copies can be addressed.

Split-graph families use this layout:

* ``H1(leaves=t)``: K4 on ``0..3``, leaves ``4..3+t`` all attached to ``0``.
* ``H2(leaves=t)``: K4 on ``0..3`` minus the edge ``01``, leaves at ``0``.
* ``H3``: K4 minus ``01`` plus vertex ``4`` adjacent to ``0`` (degree 2 in
  K4 - e) and ``2`` (degree 3 in K4 - e).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .graph import Graph, GraphError, blowup, blowup_blocks, cartesian_product, from_edge_list

GSTAR_EDGES = (
    (1, 2), (1, 5), (1, 10), (2, 3), (2, 11), (3, 4), (3, 8), (4, 5),
    (4, 7), (5, 6), (5, 9), (6, 7), (7, 8), (9, 10), (10, 11),
)


class FamilyError(GraphError):
    """Unknown family or parameters violating its constraints."""


def gstar() -> Graph:
    """G* with ``u_i`` at id ``i - 1``."""
    return from_edge_list(11, ((a - 1, b - 1) for a, b in GSTAR_EDGES))


def gstar_layout(multiplicities) -> dict[str, range]:
    """Id block of each ``u_i`` copy set, keyed ``"u1"`` .. ``"u11"``."""
    return {f"u{i + 1}": r for i, r in enumerate(blowup_blocks(multiplicities))}


def hstar() -> Graph:
    """5-cycle ``u1..u5`` and 4-cycle ``u4 u7 u6 u5`` sharing ``u4u5``."""
    return blowup(gstar(), (1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0))


# standard graphs


def complete(n: int) -> Graph:
    _need(n >= 1, "n >= 1")
    return from_edge_list(n, itertools.combinations(range(n), 2))


def biclique(r: int, s: int) -> Graph:
    """K_{r,s}: one side ``0..r-1``, the other ``r..r+s-1``."""
    _need(r >= 1, "r >= 1")
    _need(s >= 1, "s >= 1")
    return from_edge_list(r + s, ((i, r + j) for i in range(r) for j in range(s)))


def star(n: int) -> Graph:
    """K_{1,n} with centre 0."""
    return biclique(1, n)


def cycle(n: int) -> Graph:
    _need(n >= 3, "n >= 3")
    return from_edge_list(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    _need(n >= 1, "n >= 1")
    return from_edge_list(n, ((i, i + 1) for i in range(n - 1)))


STANDARD: dict[str, Callable[..., Graph]] = {
    "COMPLETE": complete,
    "BICLIQUE": biclique,
    "STAR": star,
    "CYCLE": cycle,
    "PATH": path,
}


def standard(kind: str, *sizes: int) -> Graph:
    try:
        ctor = STANDARD[kind.upper()]
    except KeyError:
        raise FamilyError(f"unknown standard graph {kind!r}") from None
    return ctor(*sizes)


# split families


def _k4_minus_edge() -> list[tuple[int, int]]:
    return [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def h1(leaves: int) -> Graph:
    _need(leaves >= 1, "leaves >= 1")
    edges = list(itertools.combinations(range(4), 2))
    edges += [(0, 4 + i) for i in range(leaves)]
    return from_edge_list(4 + leaves, edges)


def h2(leaves: int) -> Graph:
    _need(leaves >= 1, "leaves >= 1")
    edges = _k4_minus_edge() + [(0, 4 + i) for i in range(leaves)]
    return from_edge_list(4 + leaves, edges)


def h3() -> Graph:
    return from_edge_list(5, _k4_minus_edge() + [(4, 0), (4, 2)])


# G* families: each maps a parameter dict to (constraints, multiplicities)

def _rule(text: str, test: Callable[..., bool]) -> tuple[str, Callable[..., bool]]:
    return text, test


_N1 = _rule("n >= 1", lambda v: v["n"] >= 1)
_M1 = _rule("m >= 1", lambda v: v["m"] >= 1)
_NRS = (
    _rule("n - 1 >= r >= 1", lambda v: v["n"] - 1 >= v["r"] >= 1),
    _rule("n - 1 >= s >= 1", lambda v: v["n"] - 1 >= v["s"] >= 1),
)
_NRS_SUM = _NRS + (_rule("n >= r + s", lambda v: v["n"] >= v["r"] + v["s"]),)
_MKL = (
    _rule("m - 1 >= l >= 1", lambda v: v["m"] - 1 >= v["l"] >= 1),
    _rule("m - 1 >= k >= 1", lambda v: v["m"] - 1 >= v["k"] >= 1),
    _rule("m >= k + l", lambda v: v["m"] >= v["k"] + v["l"]),
)


@dataclass(frozen=True)
class _Blowup:
    keys: tuple[str, ...]
    constraints: tuple[tuple[str, Callable[..., bool]], ...]
    mult: Callable[..., tuple[int, ...]]


GSTAR_FAMILIES: dict[str, _Blowup] = {
    "F11": _Blowup(("n",), (_N1,),
                   lambda n: (1, 1, 1, 1, 1, n, n, 0, 0, 0, 0)),
    "F12": _Blowup(("n",), (_N1,),
                   lambda n: (1, 1, 1, 0, 1, n + 1, n + 1, 1, 0, 0, 0)),
    "F21": _Blowup(("n", "r", "s"), _NRS_SUM,
                   lambda n, r, s: (1, 1, 1, n - r - s + 1, 1, r, n, s, 0, 0, 0)),
    "F22": _Blowup(("n", "r", "s"), _NRS_SUM,
                   lambda n, r, s: (1, 1, 1, n - r - s, 1, r + 1, n + 1, s + 1, 0, 0, 0)),
    "F3": _Blowup(("n", "r", "s"), _NRS,
                  lambda n, r, s: (1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, 0, 0)),
    "F4": _Blowup(("n", "r", "s"), _NRS_SUM,
                  lambda n, r, s: (r + 1, n + 1, s + 1, 1, 1, 0, 0, 0, 0, 0, n - r - s)),
    "G11": _Blowup(("m", "n"), (_N1, _M1),
                   lambda m, n: (m + 1, m + 1, 1, 0, 1, 1, n + 1, n + 1, 0, 0, 0)),
    "G12": _Blowup(("m", "n", "r", "s"), (_M1,) + _NRS_SUM,
                   lambda m, n, r, s: (m + 1, m + 1, 1, n - r - s, 1, r + 1, n + 1, s + 1, 0, 0, 0)),
    "G21": _Blowup(("m", "n", "r", "s"), (_M1,) + _NRS_SUM,
                   lambda m, n, r, s: (1, 1, 1, n - r - s + 1, 1, r, n, s, 0, m, m)),
    "G22": _Blowup(("m", "n", "r", "s"), (_M1,) + _NRS,
                   lambda m, n, r, s: (1, 1, r + 1, s + 1, 1, 0, n - s, n - r, 0, m, m)),
    "G23": _Blowup(("m", "n", "r", "s"), (_M1,) + _NRS_SUM,
                   lambda m, n, r, s: (r + 1, n + 1, s + 1, 1, 1, m, m, 0, 0, 0, n - r - s)),
    "G31": _Blowup(("k", "l", "m", "n", "r", "s"), _NRS_SUM + _MKL,
                   lambda k, l, m, n, r, s: (m - k - l + 1, 1, 1, n - r - s + 1, 1, r, n, s, l, m, k)),
    "G32": _Blowup(("k", "l", "m", "n", "r", "s"), _NRS_SUM + _MKL,
                   lambda k, l, m, n, r, s: (k + 1, l + 1, 1, n - r - s + 1, 1, r, n, s, 0, m - l, m - k)),
}

F_FAMILIES = ("F11", "F12", "F21", "F22", "F3", "F4")
G_FAMILIES = ("G11", "G12", "G21", "G22", "G23", "G31", "G32")

_FIXED: dict[str, tuple[tuple[str, ...], Callable[..., Graph]]] = {
    "COMPLETE": (("n",), complete),
    "BICLIQUE": (("r", "s"), biclique),
    "STAR": (("n",), star),
    "CYCLE": (("n",), cycle),
    "PATH": (("n",), path),
    "GSTAR": ((), gstar),
    "HSTAR": ((), hstar),
    "H1": (("leaves",), h1),
    "H2": (("leaves",), h2),
    "H3": ((), h3),
}

FAMILY_IDS = tuple(_FIXED) + tuple(GSTAR_FAMILIES) + ("BLOWUP", "PRODUCT")


@dataclass(frozen=True)
class FamilySpec:
    """A named construction plus its integer parameters.

    ``BLOWUP`` takes ``base`` (a FamilySpec) and ``multiplicities``;
    ``PRODUCT`` takes ``left`` and ``right`` FamilySpecs.
    """

    family_id: str
    params: Mapping[str, object] = field(default_factory=dict)

    def label(self) -> str:
        if not self.params:
            return self.family_id
        inner = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        return f"{self.family_id}({inner})"


def _need(ok: bool, what: str) -> None:
    if not ok:
        raise FamilyError(f"constraint violated: {what}")


def _check(rule, values: Mapping[str, int]) -> None:
    text, test = rule
    if not test(values):
        shown = ", ".join(f"{k}={values[k]}" for k in sorted(values))
        raise FamilyError(f"constraint violated: {text} (with {shown})")


def gstar_multiplicities(family_id: str, params: Mapping[str, int]) -> tuple[int, ...]:
    fam = GSTAR_FAMILIES[family_id]
    values = _int_params(family_id, fam.keys, params)
    for c in fam.constraints:
        _check(c, values)
    return fam.mult(**values)


def _int_params(family_id: str, keys, params: Mapping[str, object]) -> dict[str, int]:
    extra = set(params) - set(keys)
    if extra:
        raise FamilyError(f"{family_id}: unexpected parameter(s) {sorted(extra)}")
    missing = [k for k in keys if k not in params]
    if missing:
        raise FamilyError(f"{family_id}: missing parameter(s) {missing}")
    values = {}
    for k in keys:
        v = params[k]
        if isinstance(v, bool) or not isinstance(v, int):
            raise FamilyError(f"{family_id}: parameter {k} must be an integer")
        values[k] = v
    return values


def build(spec: FamilySpec) -> Graph:
    fid = spec.family_id.upper()
    if fid in GSTAR_FAMILIES:
        return blowup(gstar(), gstar_multiplicities(fid, spec.params))
    if fid in _FIXED:
        keys, ctor = _FIXED[fid]
        values = _int_params(fid, keys, spec.params)
        return ctor(*(values[k] for k in keys))
    if fid == "BLOWUP":
        base = spec.params.get("base")
        mult = spec.params.get("multiplicities")
        if not isinstance(base, FamilySpec) or mult is None:
            raise FamilyError("BLOWUP needs base (FamilySpec) and multiplicities")
        return blowup(build(base), tuple(mult))
    if fid == "PRODUCT":
        left, right = spec.params.get("left"), spec.params.get("right")
        if not isinstance(left, FamilySpec) or not isinstance(right, FamilySpec):
            raise FamilyError("PRODUCT needs left and right FamilySpecs")
        return cartesian_product(build(left), build(right))
    raise FamilyError(f"unknown family {spec.family_id!r}")


def family_order(family_id: str, params: Mapping[str, int]) -> int:
    """Order of the built graph without building it."""
    fid = family_id.upper()
    if fid in GSTAR_FAMILIES:
        return sum(gstar_multiplicities(fid, params))
    return build(FamilySpec(fid, params)).order


def parameter_grid(family_id: str, max_order: int) -> list[FamilySpec]:
    """Every valid parameter tuple whose graph has order <= ``max_order``,
    in lexicographic order of the parameter values (keys sorted by name)."""
    if max_order < 1:
        raise FamilyError("max_order must be at least 1")
    fid = family_id.upper()
    if fid in GSTAR_FAMILIES:
        keys = GSTAR_FAMILIES[fid].keys
        out = []
        # every G* family has order >= 2n and >= 2m, and r, s < n, k, l < m
        bound = max_order // 2 + 1
        for values in itertools.product(range(bound + 1), repeat=len(keys)):
            params = dict(zip(keys, values))
            try:
                order = family_order(fid, params)
            except FamilyError:
                continue
            if order <= max_order:
                out.append(FamilySpec(fid, params))
        return out
    if fid in ("GSTAR", "HSTAR", "H3"):
        spec = FamilySpec(fid)
        return [spec] if build(spec).order <= max_order else []
    if fid in ("H1", "H2"):
        return [FamilySpec(fid, {"leaves": t}) for t in range(1, max_order - 3)]
    if fid == "COMPLETE":
        return [FamilySpec(fid, {"n": n}) for n in range(1, max_order + 1)]
    if fid == "STAR":
        return [FamilySpec(fid, {"n": n}) for n in range(1, max_order)]
    if fid == "CYCLE":
        return [FamilySpec(fid, {"n": n}) for n in range(3, max_order + 1)]
    if fid == "PATH":
        return [FamilySpec(fid, {"n": n}) for n in range(1, max_order + 1)]
    if fid == "BICLIQUE":
        return [
            FamilySpec(fid, {"r": r, "s": s})
            for r in range(1, max_order)
            for s in range(1, max_order - r + 1)
        ]
    raise FamilyError(f"no parameter grid for family {family_id!r}")
