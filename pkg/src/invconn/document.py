"""JSON input format.

Rationals travel as strings (``"3"``, ``"-2"``, ``"1/3"``) and indices are
0-based.  Brackets are sparse (``i < j``, nonzero coefficients); omega, the
optional metric and the optional automorphisms are dense grids on m.
Serialization is canonical: sorted keys, two-space indent, trailing newline.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .exactla import Mat
from .liealg import LieAlgebra
from .redspace import SymplecticSpace

FORMAT_VERSION = 1
_RATIONAL = re.compile(r"-?[0-9]+(/[0-9]+)?")


class ParseError(ValueError):
    """Malformed input; ``path`` names the offending field, e.g. ``omega[0][1]``."""

    def __init__(self, message: str, path: str = "", line: int | None = None):
        self.path = path
        self.line = line
        where = path or "document"
        if line is not None:
            where += f" (line {line})"
        super().__init__(f"{where}: {message}")


def parse_rational(text, path: str = "") -> Fraction:
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {type(text).__name__} {text!r}", path)
    if not _RATIONAL.fullmatch(text):
        raise ParseError(f"not a rational of the form p or p/q: {text!r}", path)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", path)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    return str(Fraction(q))


def _grid(raw, k: int, path: str) -> Mat:
    if not isinstance(raw, list) or len(raw) != k:
        raise ParseError(f"expected a {k}x{k} grid", path)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != k:
            raise ParseError(f"expected a row of length {k}", f"{path}[{i}]")
        rows.append([parse_rational(v, f"{path}[{i}][{j}]") for j, v in enumerate(row)])
    return Mat(rows)


def _dump_grid(M: Mat) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in M.tolist()]


def _index(raw, n: int, path: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or not 0 <= raw < n:
        raise ParseError(f"expected an index in [0, {n}), got {raw!r}", path)
    return raw


def _require(data: dict, key: str, kind: type):
    if key not in data:
        raise ParseError("missing field", key)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseError(f"expected {kind.__name__}", key)
    return value


@dataclass(frozen=True)
class InputDocument:
    name: str
    basis: tuple[str, ...]
    h_indices: tuple[int, ...]
    m_indices: tuple[int, ...]
    brackets: dict[tuple[int, int], dict[int, Fraction]]
    omega: Mat
    metric: Mat | None = None
    automorphisms: tuple[Mat, ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def k(self) -> int:
        return len(self.m_indices)

    # -- conversion -----------------------------------------------------------

    def algebra(self) -> LieAlgebra:
        n = self.dim
        table = {}
        for (i, j), coeffs in self.brackets.items():
            v = [Fraction(0)] * n
            for t, c in coeffs.items():
                v[t] = c
            table[(i, j)] = v
        return LieAlgebra(self.basis, table)

    def to_space(self) -> SymplecticSpace:
        return SymplecticSpace(self.algebra(), self.h_indices, self.m_indices, self.omega, self.automorphisms)

    @classmethod
    def from_entry(cls, entry) -> "InputDocument":
        space = entry.space
        brackets = {
            key: {t: c for t, c in enumerate(v) if c != 0}
            for key, v in space.alg.structure_constants().items()
        }
        return cls(
            name=entry.name,
            basis=space.alg.basis_names,
            h_indices=tuple(space.h_idx),
            m_indices=tuple(space.m_idx),
            brackets=brackets,
            omega=space.omega,
            metric=entry.metric,
            automorphisms=tuple(space.autos),
        )

    # -- serialization ----------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "format": FORMAT_VERSION,
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis),
            "h_indices": list(self.h_indices),
            "m_indices": list(self.m_indices),
            "brackets": [
                {"i": i, "j": j, "coeffs": {str(t): format_rational(c) for t, c in sorted(coeffs.items()) if c != 0}}
                for (i, j), coeffs in sorted(self.brackets.items())
                if any(c != 0 for c in coeffs.values())
            ],
            "omega": _dump_grid(self.omega),
        }
        if self.metric is not None:
            out["metric"] = _dump_grid(self.metric)
        if self.automorphisms:
            out["automorphisms"] = [_dump_grid(A) for A in self.automorphisms]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def save(self, path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_dict(cls, data) -> "InputDocument":
        if not isinstance(data, dict):
            raise ParseError("top level must be an object")
        version = _require(data, "format", int)
        if version != FORMAT_VERSION:
            raise ParseError(f"unsupported format version {version}", "format")
        name = _require(data, "name", str)
        dim = _require(data, "dim", int)
        basis = _require(data, "basis", list)
        if len(basis) != dim or dim < 1:
            raise ParseError(f"expected {dim} basis names", "basis")
        for p, b in enumerate(basis):
            if not isinstance(b, str):
                raise ParseError("basis names must be strings", f"basis[{p}]")
        if len(set(basis)) != dim:
            raise ParseError("basis names must be distinct", "basis")
        h = tuple(_index(v, dim, f"h_indices[{p}]") for p, v in enumerate(_require(data, "h_indices", list)))
        m = tuple(_index(v, dim, f"m_indices[{p}]") for p, v in enumerate(_require(data, "m_indices", list)))
        if sorted(h + m) != list(range(dim)):
            raise ParseError("h_indices and m_indices must partition the basis", "m_indices")
        if not m:
            raise ParseError("m must be nonempty", "m_indices")

        brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
        for p, item in enumerate(_require(data, "brackets", list)):
            path = f"brackets[{p}]"
            if not isinstance(item, dict):
                raise ParseError("expected an object", path)
            i = _index(item.get("i"), dim, f"{path}.i")
            j = _index(item.get("j"), dim, f"{path}.j")
            if i >= j:
                raise ParseError("brackets must be listed with i < j", path)
            if (i, j) in brackets:
                raise ParseError(f"duplicate bracket ({i}, {j})", path)
            coeffs = item.get("coeffs")
            if not isinstance(coeffs, dict):
                raise ParseError("expected an object", f"{path}.coeffs")
            parsed = {}
            for key, val in coeffs.items():
                kpath = f"{path}.coeffs[{key}]"
                if not re.fullmatch(r"[0-9]+", key) or int(key) >= dim:
                    raise ParseError(f"expected a basis index in [0, {dim})", kpath)
                parsed[int(key)] = parse_rational(val, kpath)
            brackets[(i, j)] = parsed

        k = len(m)
        omega = _grid(data.get("omega"), k, "omega")
        metric = _grid(data["metric"], k, "metric") if data.get("metric") is not None else None
        autos_raw = data.get("automorphisms") or []
        if not isinstance(autos_raw, list):
            raise ParseError("expected a list of grids", "automorphisms")
        autos = tuple(_grid(A, k, f"automorphisms[{p}]") for p, A in enumerate(autos_raw))
        return cls(name, tuple(basis), h, m, brackets, omega, metric, autos)

    @classmethod
    def loads(cls, text: str) -> "InputDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, "json", exc.lineno) from exc
        return cls.from_dict(data)

    @classmethod
    def load(cls, path) -> "InputDocument":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise ParseError(str(exc), str(path)) from exc
        return cls.loads(text)
