"""Theorem-level checks built on the connection tensors.

Every flag here is computed from actual tensors.  Where a closed-form
prediction is also available (the (a, b) conditions for metric-preservation
and torsion-freeness, the bracket criterion for zero-one flatness) the two are
compared and a disagreement raises :class:`TheoremMismatch`: it can only mean
a bug in the engine.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Iterable

from .conn import (
    ProductTable,
    ad_h_of_bracket,
    curvature,
    curvature_zero_one_closed,
    n_tensor,
    natural_product,
    nomizu_product,
    ricci_of,
    torsion,
    zero_one_product,
)
from .exactla import Mat, Number, Q, is_zero_vec, unit
from .liealg import series_of
from .redspace import SymplecticSpace

GRID_VALUES: tuple[Fraction, ...] = (Fraction(-1), Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(1))


class LocallySymmetric(ValueError):
    """Raised when a classification needs [m, m] not contained in h."""


class NotLieGroupCase(ValueError):
    pass


class TheoremMismatch(AssertionError):
    """A computed flag disagrees with its closed-form prediction."""


@dataclass(frozen=True)
class ClassificationReport:
    a: Fraction
    b: Fraction
    preserves_omega: bool
    torsion_free: bool
    symplectic: bool
    flat: bool
    ricci_flat: bool
    predicted_preserves_omega: bool
    predicted_torsion_free: bool

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class FlatnessReport:
    bracket_criterion: bool
    k01_zero: bool
    m_is_ideal: bool
    isotropy_faithful: bool

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class NilpotencyCheck:
    flat01: bool
    flatS: bool
    m_nilpotent: bool

    @property
    def implication_holds(self) -> bool:
        return not (self.flat01 and self.flatS) or self.m_nilpotent

    def as_dict(self) -> dict:
        return {**asdict(self), "implication_holds": self.implication_holds}


def classify(space: SymplecticSpace, a: Number, b: Number) -> ClassificationReport:
    if space.is_locally_symmetric():
        raise LocallySymmetric(
            "[m,m] lies in h: every product in the family vanishes and all members "
            "coincide with the canonical symplectic connection; no classification applies"
        )
    a, b = Q(a), Q(b)
    prod = nomizu_product(space, a, b)
    preserves = all(v == 0 for plane in n_tensor(space, prod) for row in plane for v in row)
    tfree = all(is_zero_vec(v) for v in torsion(space, prod).values())
    K = curvature(space, prod)
    report = ClassificationReport(
        a=a,
        b=b,
        preserves_omega=preserves,
        torsion_free=tfree,
        symplectic=preserves and tfree,
        flat=K.is_zero(),
        ricci_flat=ricci_of(K).is_zero(),
        predicted_preserves_omega=(a == b),
        predicted_torsion_free=(2 * a == 1 - b),
    )
    if report.preserves_omega != report.predicted_preserves_omega or report.torsion_free != report.predicted_torsion_free:
        raise TheoremMismatch(f"tensor flags disagree with the (a, b) conditions at {(a, b)}: {report}")
    return report


def classification_grid(space: SymplecticSpace, values: Iterable[Number] = GRID_VALUES) -> list[ClassificationReport]:
    values = [Q(v) for v in values]
    return [classify(space, a, b) for a in values for b in values]


def bracket_criterion(space: SymplecticSpace) -> bool:
    """``[[m, m]_h, m] == 0``."""
    k = space.k
    return all(
        ad_h_of_bracket(space, unit(k, i), unit(k, j)).is_zero()
        for i in range(k) for j in range(i + 1, k)
    )


def flatness_report(space: SymplecticSpace) -> FlatnessReport:
    report = FlatnessReport(
        bracket_criterion=bracket_criterion(space),
        k01_zero=curvature_zero_one_closed(space).is_zero(),
        m_is_ideal=space.m_is_ideal(),
        isotropy_faithful=space.isotropy_faithful(),
    )
    if report.bracket_criterion != report.k01_zero:
        raise TheoremMismatch(f"bracket criterion and zero-one curvature disagree: {report}")
    if report.isotropy_faithful and report.k01_zero != report.m_is_ideal:
        raise TheoremMismatch(f"zero-one flatness and the ideal criterion disagree: {report}")
    return report


def cov_ricci(space: SymplecticSpace, prod: ProductTable, ric: Mat) -> tuple:
    """``C[x][y][z] = (nabla_x ric)(y, z) = -ric(L_x y, z) - ric(y, L_x z)``."""
    k = space.k
    out = []
    for i in range(k):
        # -(L_i^T ric + ric L_i)[y][z]
        M = -(prod.L[i].T @ ric + ric @ prod.L[i])
        out.append(tuple(tuple(M[j, l] for l in range(k)) for j in range(k)))
    return tuple(out)


def is_ricci_parallel(space: SymplecticSpace, prod: ProductTable, ric: Mat) -> bool:
    C = cov_ricci(space, prod, ric)
    return all(v == 0 for plane in C for row in plane for v in row)


def preferred_defect(space: SymplecticSpace, prod: ProductTable, ric: Mat) -> tuple | None:
    """First basis triple where the cyclic sum of ``nabla ric`` is nonzero."""
    C = cov_ricci(space, prod, ric)
    k = space.k
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if C[x][y][z] + C[z][x][y] + C[y][z][x] != 0:
                    return x, y, z
    return None


def is_preferred(space: SymplecticSpace, prod: ProductTable, ric: Mat) -> bool:
    return preferred_defect(space, prod, ric) is None


def lie_group_ricci(space: SymplecticSpace) -> Mat:
    """Natural-connection Ricci form from the Killing form, for h = 0."""
    if space.h_idx:
        raise NotLieGroupCase("the Killing-form expression applies only when h = 0")
    kappa = space.alg.killing_form()
    Lu = space.L10(space.u_vector())
    k = space.k
    ninth = Fraction(1, 9)
    return Mat([[ninth * (kappa[i, j] + space.w(unit(k, i), Lu.col(j))) for j in range(k)] for i in range(k)])


def m_bracket_series(space: SymplecticSpace):
    """Lower central / derived series of (m, [., .]_m)."""
    return series_of(space.bracket_m, space.k)


def doubly_flat_nilpotency_check(space: SymplecticSpace) -> NilpotencyCheck:
    flat01 = curvature(space, zero_one_product(space)).is_zero()
    flatS = curvature(space, natural_product(space)).is_zero()
    check = NilpotencyCheck(flat01, flatS, m_bracket_series(space).is_nilpotent)
    if not check.implication_holds:
        raise TheoremMismatch(f"both connections flat but (m, [,]_m) is not nilpotent: {check}")
    return check
