"""Compact-case machinery: an ad-invariant inner product on m and the
operator ``W`` with ``omega(x, y) = <W x, y>``.

Only the m-block of the inner product is available, so the checks are the
conditions the formulas actually use (symmetry, nondegeneracy, skewness of
``[x, .]_m`` and of the isotropy action).  Whether the block extends to an
Ad(G)-invariant product on all of g is not decided.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .conn import d_endo, natural_product, zero_one_product
from .exactla import (
    Mat,
    Number,
    Q,
    SingularMatrix,
    commutator,
    det,
    inverse,
    is_positive_definite,
    trace,
    unit,
)
from .redspace import SymplecticSpace


class NotPositiveDefinite(ValueError):
    pass


class InvalidMetric(ValueError):
    pass


@dataclass(frozen=True)
class Metric:
    """Gram matrix on the m-basis."""

    G: Mat
    positive_definite: bool
    scope: str = "m-block conditions only"

    def inner(self, x, y) -> Fraction:
        return sum((x[p] * self.G[p, q] * y[q] for p in range(self.G.rows) for q in range(self.G.rows)), Fraction(0))


def metric_checks(space: SymplecticSpace, G: Mat) -> dict[str, bool]:
    k = space.k
    if G.shape != (k, k):
        raise InvalidMetric(f"metric has shape {G.shape}, expected {(k, k)}")
    # <A y, z> + <y, A z> = 0  <=>  A^T G + G A = 0
    skew = lambda A: (A.T @ G + G @ A).is_zero()
    return {
        "symmetric": G.is_symmetric(),
        "nondegenerate": det(G) != 0,
        "m_bracket_skew": all(skew(A) for A in space.L10_basis),
        "isotropy_skew": all(skew(A) for A in space.isotropy_basis),
        "positive_definite": is_positive_definite(G),
    }


def make_metric(space: SymplecticSpace, G) -> Metric:
    G = G if isinstance(G, Mat) else Mat(G)
    checks = metric_checks(space, G)
    failed = [name for name, ok in checks.items() if name != "positive_definite" and not ok]
    if failed:
        raise InvalidMetric("metric fails: " + ", ".join(failed))
    return Metric(G, checks["positive_definite"])


def metric_from_killing(space: SymplecticSpace, c: Number) -> Metric:
    """``c * Killing`` restricted to m; must be positive definite."""
    c = Q(c)
    if c == 0:
        raise NotPositiveDefinite("scale factor must be nonzero")
    kappa = space.alg.killing_form()
    G = Mat([[c * kappa[i, j] for j in space.m_idx] for i in space.m_idx])
    if not is_positive_definite(G):
        raise NotPositiveDefinite(f"{c} * Killing form is not positive definite on m")
    return make_metric(space, G)


def w_operator(space: SymplecticSpace, metric: Metric) -> Mat:
    """Unique ``W`` with ``omega(x, y) == <W x, y>``, i.e. ``W^T G = Omega``."""
    try:
        return inverse(metric.G) @ space.omega.T
    except SingularMatrix as exc:
        raise InvalidMetric("metric is degenerate") from exc


@dataclass(frozen=True)
class WPropertyReport:
    skew: bool
    commutes_with_isotropy: bool
    bracket_derivation: bool
    conjugates_zero_one: bool
    conjugates_d_adjoint: bool

    @property
    def ok(self) -> bool:
        return all(asdict(self).values())

    def as_dict(self) -> dict:
        return asdict(self)


def w_property_report(space: SymplecticSpace, metric: Metric) -> WPropertyReport:
    k = space.k
    W = w_operator(space, metric)
    Winv = inverse(W)
    G = metric.G
    L10 = space.L10_basis
    L01 = zero_one_product(space).L
    e = [unit(k, i) for i in range(k)]
    return WPropertyReport(
        skew=(W.T @ G + G @ W).is_zero(),
        commutes_with_isotropy=all(commutator(W, A).is_zero() for A in space.isotropy_basis),
        bracket_derivation=all(commutator(W, L10[i]) == space.L10(W.col(i)) for i in range(k)),
        conjugates_zero_one=all(L01[i] == Winv @ L10[i] @ W for i in range(k)),
        conjugates_d_adjoint=all(
            space.omega_adjoint(d_endo(space, e[i], e[j])) == Winv @ d_endo(space, e[j], e[i]) @ W
            for i in range(k) for j in range(k)
        ),
    )


def _twisted_traces(space: SymplecticSpace, W: Mat) -> list[list[Fraction]]:
    """``tr(L_x W^{-1} L_{W y})`` on basis pairs, L the m-bracket."""
    k = space.k
    Winv = inverse(W)
    L10 = space.L10_basis
    LW = [space.L10(W.col(j)) for j in range(k)]
    return [[trace(L10[i] @ Winv @ LW[j]) for j in range(k)] for i in range(k)]


def ricci_zero_one_compact(space: SymplecticSpace, metric: Metric) -> Mat:
    k = space.k
    tw = _twisted_traces(space, w_operator(space, metric))
    return Mat([[2 * tw[i][j] - trace(d_endo(space, unit(k, i), unit(k, j))) for j in range(k)] for i in range(k)])


def ricci_natural_compact(space: SymplecticSpace, metric: Metric) -> Mat:
    k = space.k
    L10 = space.L10_basis
    tw = _twisted_traces(space, w_operator(space, metric))
    return Mat([
        [
            Fraction(1, 9) * trace(L10[i] @ L10[j])
            + Fraction(4, 9) * tw[i][j]
            - trace(d_endo(space, unit(k, i), unit(k, j)))
            for j in range(k)
        ]
        for i in range(k)
    ])


@dataclass(frozen=True)
class WParallelDefect:
    is_parallel: bool
    witness: int | None


def w_parallel_defect(space: SymplecticSpace, metric: Metric) -> WParallelDefect:
    """Covariant derivative of ``W`` along ``e_i`` is ``[L^s_{e_i}, W]``."""
    W = w_operator(space, metric)
    Ls = natural_product(space).L
    witness = next((i for i, m in enumerate(Ls) if not commutator(m, W).is_zero()), None)
    if witness is None and not space.is_locally_symmetric():
        raise AssertionError("W is parallel on a space that is not locally symmetric")
    return WParallelDefect(witness is None, witness)
