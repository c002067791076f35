"""Reductive splittings g = h + m and invariant symplectic tensors on m.

Vectors of ``g`` are length-``dim`` tuples in the ambient basis; vectors of
``m`` are length-``k`` tuples in the m-basis, ordered as ``m_idx``.
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
    SingularMatrix,
    Vec,
    mat_lincomb,
    rank,
    solve,
    solve_many,
    trace,
    unit,
    vec,
    zeros,
)
from .liealg import BasisMismatch, LieAlgebra


class InvalidReductiveSpace(ValueError):
    def __init__(self, report: "ReductiveReport"):
        super().__init__(report.describe())
        self.report = report


class InvalidSymplecticTensor(ValueError):
    def __init__(self, report: "SymplecticReport"):
        super().__init__(report.describe())
        self.report = report


@dataclass(frozen=True)
class ReductiveReport:
    subalgebra_ok: bool
    reductive_ok: bool
    subalgebra_violation: tuple[int, int] | None = None
    reductive_violation: tuple[int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.subalgebra_ok and self.reductive_ok

    def describe(self) -> str:
        if self.ok:
            return "[h,h] in h and [h,m] in m"
        parts = []
        if not self.subalgebra_ok:
            parts.append(f"[h,h] leaves h at basis pair {self.subalgebra_violation}")
        if not self.reductive_ok:
            parts.append(f"[h,m] leaves m at basis pair {self.reductive_violation}")
        return "; ".join(parts)


@dataclass(frozen=True)
class SymplecticReport:
    skew_ok: bool
    nondegenerate_ok: bool
    cocycle_ok: bool
    inf_invariant_ok: bool
    autos_ok: bool
    cocycle_violation: tuple[int, int, int] | None = None
    invariance_violation: tuple[int, int, int] | None = None
    autos_violation: int | None = None
    # infinitesimal + supplied automorphisms only; full Ad(H)-invariance is never certified
    scope: str = "infinitesimal+supplied"

    @property
    def ok(self) -> bool:
        return self.skew_ok and self.nondegenerate_ok and self.cocycle_ok and self.inf_invariant_ok and self.autos_ok

    def as_dict(self) -> dict:
        return {
            "skew_ok": self.skew_ok,
            "nondegenerate_ok": self.nondegenerate_ok,
            "cocycle_ok": self.cocycle_ok,
            "inf_invariant_ok": self.inf_invariant_ok,
            "autos_ok": self.autos_ok,
            "cocycle_violation": self.cocycle_violation,
            "invariance_violation": self.invariance_violation,
            "autos_violation": self.autos_violation,
            "scope": self.scope,
        }

    def describe(self) -> str:
        bad = [name for name, value in self.as_dict().items() if name.endswith("_ok") and not value]
        return "symplectic tensor ok" if not bad else "failed: " + ", ".join(bad)


class ReductiveSpace:
    """A validated Lie algebra with a basis-adapted splitting into h and m."""

    def __init__(self, alg: LieAlgebra, h_idx: Sequence[int], m_idx: Sequence[int]):
        alg.require_valid()
        h_idx, m_idx = tuple(h_idx), tuple(m_idx)
        if set(h_idx) & set(m_idx):
            raise ValueError("h and m index sets overlap")
        if sorted(h_idx + m_idx) != list(range(alg.dim)):
            raise ValueError("h and m index sets must partition the basis")
        if not m_idx:
            raise ValueError("m must be nonzero")
        self.alg = alg
        self.h_idx = h_idx
        self.m_idx = m_idx
        self.k = len(m_idx)
        self._m_pos = {g: p for p, g in enumerate(m_idx)}
        self._L10: tuple[Mat, ...] | None = None
        self._adh: tuple[Mat, ...] | None = None

    # -- coordinates --------------------------------------------------------

    @property
    def m_names(self) -> tuple[str, ...]:
        return tuple(self.alg.basis_names[i] for i in self.m_idx)

    @property
    def h_names(self) -> tuple[str, ...]:
        return tuple(self.alg.basis_names[i] for i in self.h_idx)

    def _check_m(self, *vectors: Vec):
        for v in vectors:
            if len(v) != self.k:
                raise BasisMismatch(f"m-vector of length {len(v)}, expected {self.k}")

    def embed_m(self, x: Sequence[Number]) -> Vec:
        """m-coordinates to g-coordinates."""
        x = vec(x)
        self._check_m(x)
        out = [ZERO] * self.alg.dim
        for p, g in enumerate(self.m_idx):
            out[g] = x[p]
        return tuple(out)

    def m_part(self, x: Vec) -> Vec:
        """m-coordinates of the m-projection of a g-vector."""
        return tuple(x[g] for g in self.m_idx)

    def h_part(self, x: Vec) -> Vec:
        """g-coordinates of the h-projection of a g-vector."""
        hs = set(self.h_idx)
        return tuple(c if i in hs else ZERO for i, c in enumerate(x))

    def split(self, x: Sequence[Number]) -> tuple[Vec, Vec]:
        """``(x_h, x_m)`` in g-coordinates with ``x == x_h + x_m``."""
        x = vec(x)
        if len(x) != self.alg.dim:
            raise BasisMismatch(f"g-vector of length {len(x)}, expected {self.alg.dim}")
        hs = set(self.h_idx)
        xh = tuple(c if i in hs else ZERO for i, c in enumerate(x))
        xm = tuple(ZERO if i in hs else c for i, c in enumerate(x))
        return xh, xm

    def m_unit(self, p: int) -> Vec:
        return unit(self.k, p)

    # -- checks -------------------------------------------------------------

    def check_reductive(self) -> ReductiveReport:
        alg = self.alg
        hs = set(self.h_idx)
        sub_bad = None
        for i, j in combinations(self.h_idx, 2):
            b = alg.basis_bracket(i, j)
            if any(b[g] != 0 for g in self.m_idx):
                sub_bad = (i, j)
                break
        red_bad = None
        for i in self.h_idx:
            for j in self.m_idx:
                b = alg.basis_bracket(i, j)
                if any(b[g] != 0 for g in hs):
                    red_bad = (i, j)
                    break
            if red_bad:
                break
        return ReductiveReport(sub_bad is None, red_bad is None, sub_bad, red_bad)

    def require_reductive(self) -> "ReductiveSpace":
        report = self.check_reductive()
        if not report.ok:
            raise InvalidReductiveSpace(report)
        return self

    # -- brackets on m ------------------------------------------------------

    def ad_m(self, x: Sequence[Number]) -> Mat:
        """Matrix of ``y -> [x, y]_m`` on m, for any g-vector ``x``."""
        x = vec(x)
        cols = [self.m_part(self.alg.bracket(x, self.embed_m(unit(self.k, q)))) for q in range(self.k)]
        return Mat.from_columns(cols)

    @property
    def L10_basis(self) -> tuple[Mat, ...]:
        """``L^{1,0}_{e_p}`` for each m-basis vector."""
        if self._L10 is None:
            self._L10 = tuple(self.ad_m(self.embed_m(unit(self.k, p))) for p in range(self.k))
        return self._L10

    @property
    def isotropy_basis(self) -> tuple[Mat, ...]:
        """Action of each h-basis vector on m."""
        if self._adh is None:
            self._adh = tuple(self.ad_m(unit(self.alg.dim, i)) for i in self.h_idx)
        return self._adh

    def L10(self, x: Sequence[Number]) -> Mat:
        x = vec(x)
        self._check_m(x)
        return mat_lincomb(x, self.L10_basis)

    def bracket_m(self, x: Sequence[Number], y: Sequence[Number]) -> Vec:
        """``[x, y]_m`` for m-vectors."""
        x, y = vec(x), vec(y)
        self._check_m(x, y)
        return self.m_part(self.alg.bracket(self.embed_m(x), self.embed_m(y)))

    def bracket_h(self, x: Sequence[Number], y: Sequence[Number]) -> Vec:
        """``[x, y]_h`` (as a g-vector) for m-vectors."""
        x, y = vec(x), vec(y)
        self._check_m(x, y)
        return self.h_part(self.alg.bracket(self.embed_m(x), self.embed_m(y)))

    def is_locally_symmetric(self) -> bool:
        return all(m.is_zero() for m in self.L10_basis)

    def m_is_ideal(self) -> bool:
        for i in range(self.alg.dim):
            for g in self.m_idx:
                b = self.alg.basis_bracket(i, g)
                if any(b[j] != 0 for j in self.h_idx):
                    return False
        return True

    def isotropy_faithful(self) -> bool:
        if not self.h_idx:
            return True
        # columns: flattened action of each h-basis element
        flat = [[m[r, c] for r in range(self.k) for c in range(self.k)] for m in self.isotropy_basis]
        return rank(Mat(flat)) == len(self.h_idx)

    # -- symplectic data ----------------------------------------------------

    def validate_symplectic(self, omega: Mat, autos: Sequence[Mat] = ()) -> SymplecticReport:
        k = self.k
        if omega.shape != (k, k):
            raise BasisMismatch(f"omega has shape {omega.shape}, expected {(k, k)}")
        w = lambda x, y: sum((x[p] * omega[p, q] * y[q] for p in range(k) for q in range(k) if x[p] and y[q]), ZERO)
        skew = omega.is_skew()
        try:
            solve(omega, zeros(k))
            nondeg = True
        except SingularMatrix:
            nondeg = False
        L = self.L10_basis
        cyc_bad = None
        for i, j, l in combinations(range(k), 3):
            e = lambda p: unit(k, p)
            s = w(L[i].col(j), e(l)) + w(L[l].col(i), e(j)) + w(L[j].col(l), e(i))
            if s != 0:
                cyc_bad = (i, j, l)
                break
        inv_bad = None
        for a, A in enumerate(self.isotropy_basis):
            # omega([h,x],y) + omega(x,[h,y]) = 0  <=>  A^T Omega + Omega A = 0
            M = A.T @ omega + omega @ A
            if not M.is_zero():
                i, j = next((i, j) for i in range(k) for j in range(k) if M[i, j] != 0)
                inv_bad = (a, i, j)
                break
        autos_bad = None
        for n, A in enumerate(autos):
            if A.shape != (k, k) or A.T @ omega @ A != omega:
                autos_bad = n
                break
            if any(
                A @ L[i].col(j) != mat_lincomb(A.col(i), L) @ A.col(j)
                for i in range(k) for j in range(k)
            ):
                autos_bad = n
                break
        return SymplecticReport(
            skew_ok=skew,
            nondegenerate_ok=nondeg,
            cocycle_ok=cyc_bad is None,
            inf_invariant_ok=inv_bad is None,
            autos_ok=autos_bad is None,
            cocycle_violation=cyc_bad,
            invariance_violation=inv_bad,
            autos_violation=autos_bad,
        )

    def __repr__(self):
        return f"ReductiveSpace(h={list(self.h_names)}, m={list(self.m_names)})"


class SymplecticSpace(ReductiveSpace):
    """A reductive space together with a validated invariant symplectic tensor.

    ``omega[i, j]`` is the value on the i-th and j-th m-basis vectors.
    Construction fails with :class:`InvalidReductiveSpace` or
    :class:`InvalidSymplecticTensor` when any check does not pass.
    """

    def __init__(self, alg: LieAlgebra, h_idx: Sequence[int], m_idx: Sequence[int],
                 omega, autos: Sequence = ()):
        super().__init__(alg, h_idx, m_idx)
        self.require_reductive()
        omega = omega if isinstance(omega, Mat) else Mat(omega)
        autos = tuple(a if isinstance(a, Mat) else Mat(a) for a in autos)
        report = self.validate_symplectic(omega, autos)
        if not report.ok:
            raise InvalidSymplecticTensor(report)
        self.omega = omega
        self.autos = autos
        self.symplectic_report = report
        self._omega_inv = solve_many(omega, Mat.identity(self.k))
        self._omega_support = [(p, q) for p in range(self.k) for q in range(self.k) if omega[p, q]]
        self._u: Vec | None = None

    def w(self, x: Sequence[Number], y: Sequence[Number]) -> Fraction:
        """``omega(x, y)`` for m-vectors."""
        return sum(
            (x[p] * self.omega[p, q] * y[q] for p, q in self._omega_support if x[p] and y[q]),
            ZERO,
        )

    def omega_adjoint(self, F: Mat) -> Mat:
        """``F*`` with ``omega(F* x, y) == omega(x, F y)``."""
        return self._omega_inv @ F.T @ self.omega

    def dual(self, values: Sequence[Number]) -> Vec:
        """The vector ``v`` with ``omega(v, e_l) == values[l]`` for every l."""
        return solve(self.omega.T, values)

    def u_vector(self) -> Vec:
        if self._u is None:
            self._u = self.dual([trace(m) for m in self.L10_basis])
        return self._u

    def __repr__(self):
        return f"SymplecticSpace(h={list(self.h_names)}, m={list(self.m_names)})"
