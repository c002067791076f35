"""Finite-dimensional Lie algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .exactla import (
    ZERO,
    Mat,
    Number,
    SizeMismatch,
    Vec,
    is_zero_vec,
    nullspace,
    row_basis,
    trace,
    unit,
    vadd,
    vec,
    vscale,
    zeros,
)


class BasisMismatch(SizeMismatch):
    pass


class InvalidLieAlgebra(ValueError):
    def __init__(self, report: "StructureReport"):
        super().__init__(report.describe())
        self.report = report


@dataclass(frozen=True)
class StructureReport:
    antisymmetry_ok: bool
    jacobi_ok: bool
    antisymmetry_violation: tuple[int, int] | None = None
    jacobi_violation: tuple[int, int, int] | None = None

    @property
    def ok(self) -> bool:
        return self.antisymmetry_ok and self.jacobi_ok

    def describe(self) -> str:
        if self.ok:
            return "structure constants satisfy antisymmetry and Jacobi"
        parts = []
        if not self.antisymmetry_ok:
            parts.append(f"antisymmetry fails at {self.antisymmetry_violation}")
        if not self.jacobi_ok:
            parts.append(f"Jacobi identity fails at {self.jacobi_violation}")
        return "; ".join(parts)


@dataclass(frozen=True)
class SeriesProfile:
    lower_central: list[int]
    derived: list[int]
    is_nilpotent: bool
    is_solvable: bool
    center: list[Vec]
    nilpotency_step: int | None = None
    solvability_step: int | None = None


def _span_bracket(bracket, left: Sequence[Vec], right: Sequence[Vec], n: int) -> list[Vec]:
    products = [bracket(x, y) for x in left for y in right]
    return row_basis([p for p in products if not is_zero_vec(p)]) if products else []


def series_of(bracket, n: int) -> SeriesProfile:
    """Lower central and derived series of any bilinear bracket on an n-space.

    Subspace dimensions come from exact ranks; a series stops as soon as two
    consecutive terms have equal dimension.
    """
    full = [unit(n, i) for i in range(n)]

    def run(step_left):
        dims = [n]
        current = full
        while True:
            nxt = _span_bracket(bracket, step_left(current), current, n)
            dims.append(len(nxt))
            if len(nxt) == len(current):
                return dims
            current = nxt
            if not current:
                return dims

    lower = run(lambda cur: full)
    derived = run(lambda cur: cur)
    nilpotent = lower[-1] == 0
    solvable = derived[-1] == 0
    columns = [[bracket(unit(n, i), unit(n, j)) for i in range(n)] for j in range(n)]
    # x in the center iff sum_i x_i [e_i, e_j] = 0 for every j
    rows = []
    for j in range(n):
        for r in range(n):
            rows.append([columns[j][i][r] for i in range(n)])
    center = nullspace(Mat(rows))
    return SeriesProfile(
        lower_central=lower,
        derived=derived,
        is_nilpotent=nilpotent,
        is_solvable=solvable,
        center=center,
        nilpotency_step=len(lower) - 1 if nilpotent else None,
        solvability_step=len(derived) - 1 if solvable else None,
    )


class LieAlgebra:
    """A Lie algebra given by a basis and the brackets ``[e_i, e_j]``.

    ``brackets`` maps index pairs to coefficient sequences.  A pair listed in
    only one order is mirrored; a pair listed in both orders is kept verbatim
    so that :meth:`validate_structure` can report the inconsistency.  Nothing
    beyond :meth:`validate_structure` may be used before the table has been
    validated; other methods validate lazily and raise
    :class:`InvalidLieAlgebra` on failure.
    """

    def __init__(self, basis_names: Sequence[str], brackets: Mapping[tuple[int, int], Sequence[Number]]):
        names = list(basis_names)
        if not names:
            raise ValueError("a Lie algebra needs at least one basis vector")
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        n = len(names)
        self.basis_names: tuple[str, ...] = tuple(names)
        self.dim = n
        raw: dict[tuple[int, int], Vec] = {}
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"bracket index ({i}, {j}) out of range for dimension {n}")
            c = vec(coeffs)
            if len(c) != n:
                raise BasisMismatch(f"bracket ({i}, {j}) has {len(c)} coefficients, expected {n}")
            raw[(i, j)] = c
        for (i, j), c in list(raw.items()):
            if (j, i) not in raw and i != j:
                raw[(j, i)] = vscale(-1, c)
        self._raw = raw
        self._report: StructureReport | None = None
        self._ad: tuple[Mat, ...] | None = None

    @classmethod
    def from_table(cls, basis_names: Sequence[str], table: Sequence[Sequence[Sequence[Number]]]) -> "LieAlgebra":
        """Build from a full n x n table of bracket vectors (every entry explicit)."""
        n = len(basis_names)
        brackets = {(i, j): table[i][j] for i in range(n) for j in range(n)}
        return cls(basis_names, brackets)

    @classmethod
    def abelian(cls, n: int, prefix: str = "e") -> "LieAlgebra":
        return cls([f"{prefix}{i + 1}" for i in range(n)], {})

    # -- raw access ---------------------------------------------------------

    def _raw_bracket(self, i: int, j: int) -> Vec:
        return self._raw.get((i, j), zeros(self.dim))

    def structure_constants(self) -> dict[tuple[int, int], Vec]:
        """Nonzero brackets ``[e_i, e_j]`` for ``i < j``."""
        self.require_valid()
        return {
            (i, j): self._raw_bracket(i, j)
            for i, j in combinations(range(self.dim), 2)
            if not is_zero_vec(self._raw_bracket(i, j))
        }

    # -- validation ---------------------------------------------------------

    def validate_structure(self) -> StructureReport:
        if self._report is not None:
            return self._report
        n = self.dim
        anti_bad = None
        for i in range(n):
            for j in range(i, n):
                if vadd(self._raw_bracket(i, j), self._raw_bracket(j, i)) != zeros(n):
                    anti_bad = (i, j)
                    break
            if anti_bad:
                break
        jac_bad = None
        if anti_bad is None:
            for i, j, k in combinations(range(n), 3):
                total = vadd(
                    vadd(self._raw_apply(unit(n, i), self._raw_bracket(j, k)),
                         self._raw_apply(unit(n, j), self._raw_bracket(k, i))),
                    self._raw_apply(unit(n, k), self._raw_bracket(i, j)),
                )
                if not is_zero_vec(total):
                    jac_bad = (i, j, k)
                    break
        report = StructureReport(
            antisymmetry_ok=anti_bad is None,
            jacobi_ok=anti_bad is None and jac_bad is None,
            antisymmetry_violation=anti_bad,
            jacobi_violation=jac_bad,
        )
        self._report = report
        return report

    @property
    def is_valid(self) -> bool:
        return self.validate_structure().ok

    def require_valid(self) -> "LieAlgebra":
        report = self.validate_structure()
        if not report.ok:
            raise InvalidLieAlgebra(report)
        return self

    def _raw_apply(self, x: Vec, y: Vec) -> Vec:
        out = [ZERO] * self.dim
        ys = [(j, yj) for j, yj in enumerate(y) if yj]
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in ys:
                c = self._raw.get((i, j))
                if c is not None:
                    s = xi * yj
                    for t, ct in enumerate(c):
                        if ct:
                            out[t] += s * ct
        return tuple(out)

    # -- operations ---------------------------------------------------------

    def _check(self, *vectors: Vec):
        for v in vectors:
            if len(v) != self.dim:
                raise BasisMismatch(f"vector of length {len(v)} in a {self.dim}-dimensional algebra")

    def bracket(self, x: Sequence[Number], y: Sequence[Number]) -> Vec:
        x, y = vec(x), vec(y)
        self._check(x, y)
        self.require_valid()
        return self._raw_apply(x, y)

    def basis_bracket(self, i: int, j: int) -> Vec:
        self.require_valid()
        return self._raw_bracket(i, j)

    def _ad_basis(self) -> tuple[Mat, ...]:
        if self._ad is None:
            self.require_valid()
            n = self.dim
            self._ad = tuple(
                Mat.from_columns([self._raw_bracket(i, j) for j in range(n)]) for i in range(n)
            )
        return self._ad

    def ad(self, x: Sequence[Number]) -> Mat:
        """Matrix of ``y -> [x, y]``."""
        x = vec(x)
        self._check(x)
        mats = self._ad_basis()
        out = Mat.zeros(self.dim)
        for c, m in zip(x, mats):
            if c != 0:
                out = out + m * c
        return out

    def killing_form(self) -> Mat:
        mats = self._ad_basis()
        n = self.dim
        return Mat([[trace(mats[i] @ mats[j]) for j in range(n)] for i in range(n)])

    def trace_vector(self) -> Vec:
        return tuple(trace(m) for m in self._ad_basis())

    def unimodularity(self) -> dict:
        tv = self.trace_vector()
        return {"is_unimodular": is_zero_vec(tv), "trace_vector": tv}

    def series_profile(self) -> SeriesProfile:
        self.require_valid()
        return series_of(self._raw_apply, self.dim)

    def vector(self, **coeffs: Number) -> Vec:
        """Vector from basis-name keywords, e.g. ``alg.vector(e1=1, f2=-2)``."""
        out = [ZERO] * self.dim
        for name, c in coeffs.items():
            out[self.basis_names.index(name)] = Fraction(c)
        return tuple(out)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"
