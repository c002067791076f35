"""Built-in worked examples with their expected values.

Five standard examples: a symplectic solvmanifold, three symplectic Lie
algebras / nilmanifolds and the Wallach flag manifold SU(3)/T^2 with the
invariant inner product ``-1/6 * Killing``.  Golden values listed in
``derived`` were recomputed by hand or by the brute-force oracles in
``tests/oracles.py``; the others are reference values taken as given.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Callable

from .exactla import Mat, vec
from .liealg import LieAlgebra
from .redspace import SymplecticSpace


class UnknownExample(KeyError):
    pass


@dataclass
class CatalogEntry:
    name: str
    title: str
    space: SymplecticSpace
    metric: Mat | None = None
    golden: dict = field(default_factory=dict)
    # values taken as given vs. recomputed independently
    derived: frozenset = frozenset()

    @property
    def algebra(self) -> LieAlgebra:
        return self.space.alg


def _alg(names, brackets: dict[tuple[str, str], dict[str, object]]) -> LieAlgebra:
    """Algebra from ``{("e1","e2"): {"e3": 1}}``-style bracket lists."""
    pos = {n: i for i, n in enumerate(names)}
    table = {}
    for (x, y), coeffs in brackets.items():
        v = [0] * len(names)
        for name, c in coeffs.items():
            v[pos[name]] = F(c)
        table[(pos[x], pos[y])] = v
    return LieAlgebra(names, table)


def _two_form(k: int, terms: list[tuple[int, int, object]]) -> Mat:
    """Sum of ``c * e_i^* wedge e_j^*`` (1-based indices)."""
    M = [[F(0)] * k for _ in range(k)]
    for i, j, c in terms:
        M[i - 1][j - 1] += F(c)
        M[j - 1][i - 1] -= F(c)
    return Mat(M)


def _linear_matrix(rows: Callable[[list[F]], list[list[object]]], x) -> Mat:
    return Mat(rows(list(x)))


# -- solvmanifold R~/Gamma ----------------------------------------------------


def _solv_r4() -> CatalogEntry:
    names = ["e1", "e2", "e3", "e4"]
    alg = _alg(names, {("e4", "e3"): {"e3": 1}, ("e1", "e2"): {"e3": 1}, ("e4", "e1"): {"e1": 1}})
    omega = _two_form(4, [(1, 2, 1), (3, 4, -1)])

    def ad_gamma(n1, n2, n3):
        # columns: images of e1..e4
        return Mat.from_columns([
            [1, 0, -n1, 0],
            [0, 1, -n3, 0],
            [0, 0, 1, 0],
            [n3, 0, -n2, 1],
        ])

    # the lattice generator with n1 != 0 does not preserve omega, so only
    # the n2 / n3 directions are stored (see test_catalog)
    autos = [ad_gamma(0, 1, 0), ad_gamma(0, 0, 1), ad_gamma(0, -1, 0), ad_gamma(0, 0, -1)]
    space = SymplecticSpace(alg, [], range(4), omega, autos)
    golden = {
        "brackets": {(0, 1): vec([0, 0, 1, 0]), (3, 2): vec([0, 0, 1, 0]), (3, 0): vec([1, 0, 0, 0])},
        "trace_vector": vec([0, 0, 0, 2]),
        "u_vector": vec([0, 0, -2, 0]),
        "zero_one_flat": True,
    }
    return CatalogEntry("solv-r4", "4-dim solvmanifold R~/Gamma, omega = e12 - e34", space, None, golden,
                        frozenset({"trace_vector", "u_vector"}))


# -- r6 ---------------------------------------------------------------------


def _r6() -> CatalogEntry:
    names = [f"e{i}" for i in range(1, 7)]
    alg = _alg(names, {
        ("e1", "e5"): {"e2": 1},
        ("e2", "e5"): {"e1": 1},
        ("e3", "e5"): {"e4": 1},
        ("e4", "e5"): {"e3": -1},
    })
    omega = _two_form(6, [(1, 2, 1), (3, 4, 1), (5, 6, 1)])
    space = SymplecticSpace(alg, [], range(6), omega)
    ad_e5 = Mat([
        [0, -1, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, -1, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0],
    ])
    golden = {
        "ad_e5": ad_e5,
        "ad_e6": Mat.zeros(6),
        "killing_form": Mat.zeros(6),
        "unimodular": True,
        "ricci_natural": Mat.zeros(6),
        "solvability_step": 2,
        "nilpotent": False,
    }
    return CatalogEntry("r6", "unimodular solvable symplectic Lie algebra r6", space, None, golden)


# -- nilmanifolds -------------------------------------------------------------


def _nil_rrif1() -> CatalogEntry:
    names = ["e1", "e2", "e3", "e4"]
    alg = _alg(names, {("e2", "e4"): {"e3": 1}})
    omega = _two_form(4, [(1, 4, 1), (2, 3, 1)])
    autos = [Mat.from_columns([[1, 0, 0, 0], [0, 1, -1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])]
    space = SymplecticSpace(alg, [], range(4), omega, autos)
    golden = {
        "nilpotency_step": 2,
        "center": [vec([1, 0, 0, 0]), vec([0, 0, 1, 0])],
        "natural_flat": True,
        "zero_one_flat": True,
        "ricci_natural": Mat.zeros(4),
    }
    return CatalogEntry("nil-rriF1", "2-step symplectic nilmanifold, [e2,e4] = e3", space, None, golden)


def _nil_rrif2() -> CatalogEntry:
    names = ["e1", "e2", "e3", "e4"]
    alg = _alg(names, {("e2", "e4"): {"e1": 1}, ("e3", "e4"): {"e2": 1}})
    omega = _two_form(4, [(1, 4, 1), (2, 3, 1)])
    autos = [Mat.from_columns([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1]])]
    space = SymplecticSpace(alg, [], range(4), omega, autos)
    e = lambda i: vec([1 if k == i - 1 else 0 for k in range(4)])
    golden = {
        "nilpotency_step": 3,
        # the only nonzero values of the zero-one product: (x, y) -> L_x(y)
        "zero_one_product": {(2, 4): e(1), (3, 3): e(1), (4, 3): tuple(-c for c in e(2)), (4, 4): e(3)},
        "natural_curvature_e3_e4_e4": vec([F(-4, 9), 0, 0, 0]),
        "natural_flat": False,
        "zero_one_flat": True,
        "ricci_natural": Mat.zeros(4),
    }
    return CatalogEntry("nil-rriF2", "3-step symplectic nilmanifold, [e2,e4] = e1, [e3,e4] = e2", space, None,
                        golden)


# -- SU(3)/T^2 ------------------------------------------------------------------


def su3_algebra() -> LieAlgebra:
    names = ["f1", "f2", "e1", "e2", "e3", "e4", "e5", "e6"]
    b: dict[tuple[str, str], dict[str, object]] = {}

    def put(x, y, target, c):
        b.setdefault((x, y), {})[target] = c

    # grouped by target vector
    for x, y, c in [("f2", "e2", 1), ("f1", "e2", -1), ("e3", "e5", -1), ("e4", "e6", -1)]:
        put(x, y, "e1", c)
    for x, y, c in [("f1", "e1", 1), ("f2", "e1", -1), ("e3", "e6", 1), ("e4", "e5", -1)]:
        put(x, y, "e2", c)
    for x, y, c in [("e1", "e5", 1), ("f2", "e4", -1), ("f1", "e4", -2), ("e2", "e6", -1)]:
        put(x, y, "e3", c)
    for x, y, c in [("f2", "e3", 1), ("f1", "e3", 2), ("e1", "e6", 1), ("e2", "e5", 1)]:
        put(x, y, "e4", c)
    for x, y, c in [("f1", "e6", -1), ("f2", "e6", -2), ("e1", "e3", -1), ("e2", "e4", -1)]:
        put(x, y, "e5", c)
    for x, y, c in [("f1", "e5", 1), ("f2", "e5", 2), ("e1", "e4", -1), ("e2", "e3", 1)]:
        put(x, y, "e6", c)
    put("e1", "e2", "f1", 2)
    put("e1", "e2", "f2", -2)
    put("e3", "e4", "f1", 2)
    put("e5", "e6", "f2", 2)
    return _alg(names, b)


def su3_bracket_display(x) -> list[list[object]]:
    """Reference matrix of ``L^{1,0}_X`` on m, X = (x1..x6)."""
    x1, x2, x3, x4, x5, x6 = x
    return [
        [0, 0, x5, x6, -x3, -x4],
        [0, 0, -x6, x5, -x4, x3],
        [-x5, x6, 0, 0, x1, -x2],
        [-x6, -x5, 0, 0, x2, x1],
        [x3, x4, -x1, -x2, 0, 0],
        [x4, -x3, x2, -x1, 0, 0],
    ]


def su3_zero_one_display(x) -> list[list[object]]:
    x1, x2, x3, x4, x5, x6 = x
    h = F(1, 2)
    return [
        [0, 0, h * x5, h * x6, -h * x3, -h * x4],
        [0, 0, -h * x6, h * x5, -h * x4, h * x3],
        [-2 * x5, 2 * x6, 0, 0, -x1, x2],
        [-2 * x6, -2 * x5, 0, 0, -x2, -x1],
        [2 * x3, 2 * x4, x1, x2, 0, 0],
        [2 * x4, -2 * x3, -x2, x1, 0, 0],
    ]


def su3_natural_display(x) -> list[list[object]]:
    x1, x2, x3, x4, x5, x6 = x
    h = F(1, 2)
    return [
        [0, 0, h * x5, h * x6, -h * x3, -h * x4],
        [0, 0, -h * x6, h * x5, -h * x4, h * x3],
        [-x5, x6, 0, 0, 0, 0],
        [-x6, -x5, 0, 0, 0, 0],
        [x3, x4, 0, 0, 0, 0],
        [x4, -x3, 0, 0, 0, 0],
    ]


def su3_d_display(x, y) -> list[list[object]]:
    """Reference matrix of ``D_{X,Y}`` on m."""
    x1, x2, x3, x4, x5, x6 = x
    y1, y2, y3, y4, y5, y6 = y
    return [
        [4 * x2 * y2, -4 * x1 * y2, 2 * x4 * y2, -2 * x3 * y2, -2 * x6 * y2, 2 * x5 * y2],
        [-4 * x2 * y1, 4 * x1 * y1, -2 * x4 * y1, 2 * x3 * y1, 2 * x6 * y1, -2 * x5 * y1],
        [2 * x2 * y4, -2 * x1 * y4, 4 * x4 * y4, -4 * x3 * y4, 2 * x6 * y4, -2 * x5 * y4],
        [-2 * x2 * y3, 2 * x1 * y3, -4 * x4 * y3, 4 * x3 * y3, -2 * x6 * y3, 2 * x5 * y3],
        [-2 * x2 * y6, 2 * x1 * y6, 2 * x4 * y6, -2 * x3 * y6, 4 * x6 * y6, -4 * x5 * y6],
        [2 * x2 * y5, -2 * x1 * y5, -2 * x4 * y5, 2 * x3 * y5, -4 * x6 * y5, 4 * x5 * y5],
    ]


def _su3_t2() -> CatalogEntry:
    alg = su3_algebra()
    omega = _two_form(6, [(1, 2, 4), (3, 4, 2), (5, 6, -2)])
    space = SymplecticSpace(alg, [0, 1], range(2, 8), omega)
    metric = Mat.identity(6) * 2
    W = Mat([
        [0, -2, 0, 0, 0, 0],
        [2, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, -1, 0],
    ])
    basis = [[1 if k == i else 0 for k in range(6)] for i in range(6)]
    golden = {
        "W": W,
        "X0": vec([1, -1, 0, 0, 0, 0, 0, 0]),
        "metric": metric,
        "bracket_m": [Mat(su3_bracket_display(e)) for e in basis],
        "zero_one_product": [Mat(su3_zero_one_display(e)) for e in basis],
        "natural_product": [Mat(su3_natural_display(e)) for e in basis],
        "ricci_natural": Mat([[-8 if i == j and i < 2 else (-4 if i == j else 0) for j in range(6)]
                              for i in range(6)]),
        "ricci_parallel": True,
        "preferred": True,
        "u_vector": vec([0] * 6),
    }
    return CatalogEntry("su3-t2", "Wallach flag manifold SU(3)/T^2", space, metric, golden,
                        frozenset({"metric"}))


_BUILDERS = {
    "solv-r4": _solv_r4,
    "r6": _r6,
    "nil-rriF1": _nil_rrif1,
    "nil-rriF2": _nil_rrif2,
    "su3-t2": _su3_t2,
}

EXAMPLE_NAMES: tuple[str, ...] = tuple(_BUILDERS)


def load_example(name: str) -> CatalogEntry:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise UnknownExample(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}") from None
    return builder()
