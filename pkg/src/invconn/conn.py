"""The two-parameter family of invariant connections and its tensors.

An invariant connection is encoded by its Nomizu product ``L`` on m:
``L_x(y)`` for m-vectors x, y.  The member with parameters ``(a, b)`` is the
unique product with

    omega(L_x y, z) = a * omega([x, y]_m, z) + b * omega([x, z]_m, y).

``(0, 1)`` is the zero-one connection, ``(1/3, 1/3)`` the natural symplectic
connection and ``(1, 0)`` the plain m-bracket.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactla import (
    ZERO,
    Mat,
    Number,
    Q,
    Vec,
    commutator,
    is_zero_vec,
    mat_lincomb,
    solve_many,
    trace,
    unit,
    vec,
    vsub,
)
from .redspace import SymplecticSpace

NATURAL = (Fraction(1, 3), Fraction(1, 3))
ZERO_ONE = (Fraction(0), Fraction(1))


@dataclass(frozen=True)
class ProductTable:
    """``L[i]`` is the matrix of ``L_{e_i}`` on the m-basis."""

    a: Fraction
    b: Fraction
    L: tuple[Mat, ...]

    @property
    def params(self) -> tuple[Fraction, Fraction]:
        return self.a, self.b

    @property
    def k(self) -> int:
        return len(self.L)

    def op(self, x: Sequence[Number]) -> Mat:
        return mat_lincomb(vec(x), self.L)

    def apply(self, x: Sequence[Number], y: Sequence[Number]) -> Vec:
        return self.op(x) @ vec(y)

    def R(self, x: Sequence[Number]) -> Mat:
        """The transposed-argument operator ``y -> L_y(x)``."""
        x = vec(x)
        return Mat.from_columns([m @ x for m in self.L])

    @property
    def R_basis(self) -> tuple[Mat, ...]:
        return tuple(self.R(unit(self.k, i)) for i in range(self.k))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.L)


class CurvatureTensor:
    """``K(e_i, e_j)`` stored for ``i < j``; the rest follows by antisymmetry."""

    def __init__(self, k: int, ops: dict[tuple[int, int], Mat]):
        self.k = k
        self._ops = {key: ops[key] for key in combinations(range(k), 2)}
        self._zero = Mat.zeros(k)

    def op(self, i: int, j: int) -> Mat:
        if i == j:
            return self._zero
        if i < j:
            return self._ops[(i, j)]
        return -self._ops[(j, i)]

    def __call__(self, x: Sequence[Number], y: Sequence[Number]) -> Mat:
        x, y = vec(x), vec(y)
        sx, sy = [p for p, c in enumerate(x) if c], [p for p, c in enumerate(y) if c]
        if len(sx) == 1 and len(sy) == 1:
            (i,), (j,) = sx, sy
            return self.op(i, j) * (x[i] * y[j])
        out = self._zero
        for (i, j), m in self._ops.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                out = out + m * c
        return out

    def apply(self, i: int, j: int, l: int) -> Vec:
        return self.op(i, j).col(l)

    def items(self):
        return self._ops.items()

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self._ops.values())

    def first_nonzero(self) -> tuple[int, int, int, Vec] | None:
        """First ``(i, j, l, K(e_i,e_j)e_l)`` with nonzero value, i < j."""
        for (i, j), m in self._ops.items():
            for l in range(self.k):
                v = m.col(l)
                if not is_zero_vec(v):
                    return i, j, l, v
        return None

    def __eq__(self, other):
        if not isinstance(other, CurvatureTensor):
            return NotImplemented
        return self.k == other.k and self._ops == other._ops

    def __repr__(self):
        nonzero = sum(1 for m in self._ops.values() if not m.is_zero())
        return f"CurvatureTensor(k={self.k}, nonzero_pairs={nonzero})"


# -- products -------------------------------------------------------------


def nomizu_product(space: SymplecticSpace, a: Number, b: Number) -> ProductTable:
    """The product ``L^{a,b}``, one exact solve against omega per basis vector."""
    a, b = Q(a), Q(b)
    Om = space.omega
    OmT = Om.T
    mats = []
    for L10 in space.L10_basis:
        # rhs[l][j] = a*omega([e_i,e_j]_m, e_l) + b*omega([e_i,e_l]_m, e_j)
        rhs = OmT @ L10 * a + L10.T @ Om * b
        mats.append(solve_many(OmT, rhs))
    return ProductTable(a, b, tuple(mats))


def zero_one_product(space: SymplecticSpace) -> ProductTable:
    return nomizu_product(space, *ZERO_ONE)


def natural_product(space: SymplecticSpace) -> ProductTable:
    return nomizu_product(space, *NATURAL)


def check_defining_identity(space: SymplecticSpace, prod: ProductTable) -> bool:
    k = space.k
    e = [unit(k, p) for p in range(k)]
    for i in range(k):
        for j in range(k):
            for l in range(k):
                lhs = space.w(prod.L[i].col(j), e[l])
                rhs = prod.a * space.w(space.L10_basis[i].col(j), e[l]) + prod.b * space.w(
                    space.L10_basis[i].col(l), e[j]
                )
                if lhs != rhs:
                    return False
    return True


# -- isotropy terms ---------------------------------------------------------


def _h_action(space: SymplecticSpace, hvec: Vec) -> Mat:
    """Action on m of an h-vector given in g-coordinates."""
    return mat_lincomb([hvec[i] for i in space.h_idx], space.isotropy_basis) if space.h_idx else Mat.zeros(space.k)


def ad_h_of_bracket(space: SymplecticSpace, x: Sequence[Number], y: Sequence[Number]) -> Mat:
    """``ad_{[x,y]_h}`` restricted to m."""
    return _h_action(space, space.bracket_h(x, y))


def d_endo(space: SymplecticSpace, x: Sequence[Number], y: Sequence[Number]) -> Mat:
    """Matrix of ``z -> [[x, z]_h, y]`` on m."""
    x, y = vec(x), vec(y)
    k = space.k
    cols = [_h_action(space, space.bracket_h(x, unit(k, q))) @ y for q in range(k)]
    return Mat.from_columns(cols)


# -- torsion, omega-defect, curvature, Ricci ------------------------------


def torsion(space: SymplecticSpace, prod: ProductTable) -> dict[tuple[int, int], Vec]:
    """``T(e_i, e_j) = L_i e_j - L_j e_i - [e_i, e_j]_m`` for i < j."""
    L10 = space.L10_basis
    return {
        (i, j): vsub(vsub(prod.L[i].col(j), prod.L[j].col(i)), L10[i].col(j))
        for i, j in combinations(range(space.k), 2)
    }


def n_tensor(space: SymplecticSpace, prod: ProductTable) -> tuple:
    """``N[x][y][z] = -omega(L_x y, z) - omega(y, L_x z)`` on basis triples."""
    k = space.k
    Om = space.omega
    out = []
    for i in range(k):
        # -(L_i^T Om + Om L_i)[y][z]
        M = -(prod.L[i].T @ Om + Om @ prod.L[i])
        out.append(tuple(tuple(M[j, l] for l in range(k)) for j in range(k)))
    return tuple(out)


def curvature(space: SymplecticSpace, prod: ProductTable) -> CurvatureTensor:
    """``K(x,y) = [L_x, L_y] - L_{[x,y]_m} - ad_{[x,y]_h}``."""
    k = space.k
    L10 = space.L10_basis
    ops = {}
    for i, j in combinations(range(k), 2):
        ei, ej = unit(k, i), unit(k, j)
        ops[(i, j)] = (
            commutator(prod.L[i], prod.L[j])
            - prod.op(L10[i].col(j))
            - ad_h_of_bracket(space, ei, ej)
        )
    return CurvatureTensor(k, ops)


def ricci_of(K: CurvatureTensor) -> Mat:
    """``ric(x, y) = tr(z -> K(x, z) y)`` as a matrix on basis pairs."""
    k = K.k
    return Mat([[sum((K.op(i, q)[q, j] for q in range(k)), ZERO) for j in range(k)] for i in range(k)])


def ricci(space: SymplecticSpace, prod: ProductTable) -> Mat:
    return ricci_of(curvature(space, prod))


# -- closed forms -----------------------------------------------------------


def _zero_one_via_adjoint(space: SymplecticSpace) -> tuple[tuple[Mat, ...], tuple[Mat, ...]]:
    """``L^{0,1}`` and ``R^{0,1}`` from the omega-adjoint of the m-bracket."""
    k = space.k
    L01 = tuple(-space.omega_adjoint(m) for m in space.L10_basis)
    R01 = tuple(Mat.from_columns([m @ unit(k, i) for m in L01]) for i in range(k))
    return L01, R01


def curvature_zero_one_closed(space: SymplecticSpace) -> CurvatureTensor:
    """``K^{0,1}(x,y) = D*_{x,y} - D*_{y,x}``."""
    k = space.k
    ops = {}
    for i, j in combinations(range(k), 2):
        ei, ej = unit(k, i), unit(k, j)
        ops[(i, j)] = space.omega_adjoint(d_endo(space, ei, ej)) - space.omega_adjoint(d_endo(space, ej, ei))
    return CurvatureTensor(k, ops)


def curvature_natural_closed(space: SymplecticSpace) -> CurvatureTensor:
    """Curvature of the natural connection assembled from zero-one data."""
    k = space.k
    L10 = space.L10_basis
    L01, R01 = _zero_one_via_adjoint(space)
    K01 = curvature_zero_one_closed(space)
    ninth, two_ninths = Fraction(1, 9), Fraction(2, 9)
    ops = {}
    for i, j in combinations(range(k), 2):
        ei, ej = unit(k, i), unit(k, j)
        bm = L10[i].col(j)
        first = mat_lincomb(bm, R01) - commutator(R01[i], R01[j]) - mat_lincomb(bm, L01) * 2
        K = K01.op(i, j)
        second = K - space.omega_adjoint(K) - ad_h_of_bracket(space, ei, ej) * Fraction(5, 2)
        ops[(i, j)] = first * ninth + second * two_ninths
    return CurvatureTensor(k, ops)


def _trace_pairs(space: SymplecticSpace):
    k = space.k
    L10 = space.L10_basis
    tLL = [[trace(L10[i] @ L10[j]) for j in range(k)] for i in range(k)]
    trD = [[trace(d_endo(space, unit(k, i), unit(k, j))) for j in range(k)] for i in range(k)]
    return tLL, trD


def ricci_zero_one_closed(space: SymplecticSpace) -> Mat:
    """``2tr(L_x L_y) + 2tr(L_x L_y*) + 2 omega(L_u x, y) - tr D_{x,y}`` with L the m-bracket."""
    k = space.k
    L10 = space.L10_basis
    Lu = space.L10(space.u_vector())
    tLL, trD = _trace_pairs(space)
    adj = [space.omega_adjoint(m) for m in L10]
    return Mat([
        [
            2 * tLL[i][j] + 2 * trace(L10[i] @ adj[j]) + 2 * space.w(Lu.col(i), unit(k, j)) - trD[i][j]
            for j in range(k)
        ]
        for i in range(k)
    ])


def ricci_natural_closed(space: SymplecticSpace) -> Mat:
    k = space.k
    Lu = space.L10(space.u_vector())
    tLL, trD = _trace_pairs(space)
    ric01 = ricci_zero_one_closed(space)
    ninth, two_ninths = Fraction(1, 9), Fraction(2, 9)
    return Mat([
        [
            ninth * (tLL[i][j] + space.w(unit(k, i), Lu.col(j)))
            + two_ninths * (ric01[i, j] - trD[j][i] - Fraction(5, 2) * trD[i][j])
            for j in range(k)
        ]
        for i in range(k)
    ])
