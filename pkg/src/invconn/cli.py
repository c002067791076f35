"""Command-line interface.

    invconn validate FILE
    invconn report FILE [--a P/Q --b P/Q | --grid] [--compact] [--format json|text]
    invconn catalog list | show NAME | export NAME PATH

Exit codes: 0 success, 1 parse error, 2 validation failure (including
``--compact`` on a document without a metric).  ``INVCONN_COLOR=0`` turns
off ANSI styling in text output.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import analysis, compact, conn
from .catalog import EXAMPLE_NAMES, UnknownExample, load_example
from .document import InputDocument, ParseError, format_rational, parse_rational
from .exactla import Mat
from .liealg import InvalidLieAlgebra
from .redspace import InvalidReductiveSpace, InvalidSymplecticTensor, ReductiveSpace

EXIT_OK, EXIT_PARSE, EXIT_INVALID = 0, 1, 2


class MissingMetric(ValueError):
    pass


# -- rendering ------------------------------------------------------------------


def _use_color(stream) -> bool:
    if os.environ.get("INVCONN_COLOR") == "0":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


class _Style:
    def __init__(self, enabled: bool):
        self.enabled = enabled

    def _wrap(self, code: str, text: str) -> str:
        return f"\x1b[{code}m{text}\x1b[0m" if self.enabled else text

    def head(self, text: str) -> str:
        return self._wrap("1", text)

    def flag(self, value: bool) -> str:
        return self._wrap("32" if value else "31", "true" if value else "false")


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Mat):
        return [[format_rational(v) for v in row] for row in value.tolist()]
    if isinstance(value, dict):
        return {str(key): _jsonable(v) for key, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def dumps_json(report: dict) -> str:
    return json.dumps(_jsonable(report), sort_keys=True, indent=2) + "\n"


def _matrix_lines(M: Mat, rows: tuple[str, ...], cols: tuple[str, ...]) -> list[str]:
    cells = [[format_rational(v) for v in row] for row in M.tolist()]
    width = max([len(c) for row in cells for c in row] + [len(c) for c in cols])
    label = max(len(r) for r in rows)
    lines = [" " * label + "  " + " ".join(c.rjust(width) for c in cols)]
    for name, row in zip(rows, cells):
        lines.append(name.ljust(label) + "  " + " ".join(c.rjust(width) for c in row))
    return lines


def _vec_text(v, names) -> str:
    out = ""
    for c, n in zip(v, names):
        if c == 0:
            continue
        mag = abs(c)
        term = n if mag == 1 else f"{format_rational(mag)}*{n}"
        if not out:
            out = term if c > 0 else f"-{term}"
        else:
            out += f" {'+' if c > 0 else '-'} {term}"
    return out or "0"


# -- validation -----------------------------------------------------------------


def validation_report(doc: InputDocument) -> dict:
    """All structural checks, never raising on a failed check."""
    alg = doc.algebra()
    structure = alg.validate_structure()
    out = {
        "structure": {
            "antisymmetry_ok": structure.antisymmetry_ok,
            "jacobi_ok": structure.jacobi_ok,
            "antisymmetry_violation": structure.antisymmetry_violation,
            "jacobi_violation": structure.jacobi_violation,
        },
        "reductive": None,
        "symplectic": None,
        "metric": None,
    }
    if not structure.ok:
        out["ok"] = False
        return out
    rs = ReductiveSpace(alg, doc.h_indices, doc.m_indices)
    red = rs.check_reductive()
    out["reductive"] = {"subalgebra_ok": red.subalgebra_ok, "reductive_ok": red.reductive_ok}
    if not red.ok:
        out["ok"] = False
        return out
    sym = rs.validate_symplectic(doc.omega, doc.automorphisms)
    out["symplectic"] = sym.as_dict()
    ok = sym.ok
    if doc.metric is not None:
        checks = compact.metric_checks(rs, doc.metric)
        out["metric"] = {**checks, "scope": "m-block conditions only"}
        ok = ok and all(v for key, v in checks.items() if key != "positive_definite")
    out["ok"] = ok
    return out


def _validation_text(report: dict, style: _Style) -> str:
    lines = [style.head("validation")]
    for section in ("structure", "reductive", "symplectic", "metric"):
        data = report[section]
        if data is None:
            continue
        lines.append(f"  {section}:")
        for key, value in data.items():
            if isinstance(value, bool):
                lines.append(f"    {key}: {style.flag(value)}")
            elif value is not None:
                lines.append(f"    {key}: {value}")
    lines.append(f"  ok: {style.flag(report['ok'])}")
    return "\n".join(lines)


# -- report ---------------------------------------------------------------------


def _connection_section(space, a: Fraction, b: Fraction) -> dict:
    k = space.k
    names = space.m_names
    prod = conn.nomizu_product(space, a, b)
    K = conn.curvature(space, prod)
    ric = conn.ricci_of(K)
    nonzero_torsion = [
        {"i": i, "j": j, "value": v} for (i, j), v in conn.torsion(space, prod).items() if any(v)
    ]
    N = conn.n_tensor(space, prod)
    nonzero_n = [
        {"i": i, "j": j, "l": l, "value": N[i][j][l]}
        for i in range(k) for j in range(k) for l in range(k) if N[i][j][l] != 0
    ]
    curv = [
        {"i": i, "j": j, "l": l, "value": m.col(l)}
        for (i, j), m in K.items() for l in range(k) if any(m.col(l))
    ]
    first = K.first_nonzero()
    witness = None
    if first is not None:
        i, j, l, v = first
        witness = {"i": i, "j": j, "l": l, "x": names[i], "y": names[j], "z": names[l], "value": v}
    try:
        classification = analysis.classify(space, a, b).as_dict()
    except analysis.LocallySymmetric as exc:
        classification = {"skipped": str(exc)}
    return {
        "params": {"a": a, "b": b},
        "product": {names[i]: prod.L[i] for i in range(k)},
        "torsion": nonzero_torsion,
        "torsion_free": not nonzero_torsion,
        "n_tensor": nonzero_n,
        "preserves_omega": not nonzero_n,
        "curvature": curv,
        "flat": first is None,
        "flat_witness": witness,
        "ricci": ric,
        "ricci_flat": ric.is_zero(),
        "ricci_parallel": analysis.is_ricci_parallel(space, prod, ric),
        "preferred": analysis.is_preferred(space, prod, ric),
        "classification": classification,
    }


def _grid_section(space) -> list | dict:
    try:
        return [r.as_dict() for r in analysis.classification_grid(space)]
    except analysis.LocallySymmetric as exc:
        return {"skipped": str(exc)}


def _compact_section(space, G: Mat) -> dict:
    metric = compact.make_metric(space, G)
    W = compact.w_operator(space, metric)
    defect = compact.w_parallel_defect(space, metric)
    ric01 = compact.ricci_zero_one_compact(space, metric)
    ricS = compact.ricci_natural_compact(space, metric)
    return {
        "scope": metric.scope,
        "positive_definite": metric.positive_definite,
        "W": W,
        "w_properties": compact.w_property_report(space, metric).as_dict(),
        "u_zero": not any(space.u_vector()),
        "ricci_zero_one": ric01,
        "ricci_natural": ricS,
        "ricci_zero_one_matches_generic": ric01 == conn.ricci(space, conn.zero_one_product(space)),
        "ricci_natural_matches_generic": ricS == conn.ricci(space, conn.natural_product(space)),
        "w_parallel": defect.is_parallel,
        "w_parallel_witness": defect.witness,
    }


def build_report(doc: InputDocument, a=None, b=None, grid: bool = False, use_compact: bool = False) -> dict:
    if use_compact and doc.metric is None:
        raise MissingMetric("--compact needs a 'metric' field in the input document")
    space = doc.to_space()
    alg = space.alg
    report = {
        "name": doc.name,
        "basis": list(alg.basis_names),
        "m_basis": list(space.m_names),
        "killing_zero": alg.killing_form().is_zero(),
        "unimodular": not any(alg.trace_vector()),
        "locally_symmetric": space.is_locally_symmetric(),
        "u_vector": space.u_vector(),
        "flatness": analysis.flatness_report(space).as_dict(),
        "nilpotency": analysis.doubly_flat_nilpotency_check(space).as_dict(),
    }
    if grid:
        report["grid"] = _grid_section(space)
    else:
        a = conn.NATURAL[0] if a is None else a
        b = conn.NATURAL[1] if b is None else b
        report.update(_connection_section(space, a, b))
    if use_compact:
        report["compact"] = _compact_section(space, doc.metric)
    return report


def report_text(report: dict, space, style: _Style) -> str:
    names = space.m_names
    lines = [style.head(f"{report['name']}  (m = {', '.join(names)})")]
    for key in ("killing_zero", "unimodular", "locally_symmetric"):
        lines.append(f"  {key}: {style.flag(report[key])}")
    lines.append(f"  u_vector: {_vec_text(report['u_vector'], names)}")
    for key, value in report["flatness"].items():
        lines.append(f"  {key}: {style.flag(value)}")
    if "grid" in report:
        lines.append(style.head("grid"))
        if isinstance(report["grid"], dict):
            lines.append("  " + report["grid"]["skipped"])
        else:
            lines.append("       a       b  omega  torsion-free  symplectic  flat  ricci-flat")
            for r in report["grid"]:
                lines.append(
                    f"  {format_rational(r['a']):>6} {format_rational(r['b']):>6}  "
                    f"{style.flag(r['preserves_omega']):>5}  {style.flag(r['torsion_free']):>12}  "
                    f"{style.flag(r['symplectic']):>10}  {style.flag(r['flat']):>4}  {style.flag(r['ricci_flat']):>10}"
                )
    if "product" in report:
        p = report["params"]
        lines.append(style.head(f"connection (a, b) = ({format_rational(p['a'])}, {format_rational(p['b'])})"))
        for x, M in report["product"].items():
            lines.append(f"  L_{x}:")
            lines += ["    " + s for s in _matrix_lines(M, names, names)]
        for key in ("torsion_free", "preserves_omega", "flat"):
            lines.append(f"  {key}: {style.flag(report[key])}")
        w = report["flat_witness"]
        if w is not None:
            lines.append(f"  K({w['x']},{w['y']}){w['z']} = {_vec_text(w['value'], names)}")
        lines.append("  ricci:")
        lines += ["    " + s for s in _matrix_lines(report["ricci"], names, names)]
        for key in ("ricci_flat", "ricci_parallel", "preferred"):
            lines.append(f"  {key}: {style.flag(report[key])}")
    if "compact" in report:
        c = report["compact"]
        lines.append(style.head(f"compact ({c['scope']})"))
        lines.append("  W:")
        lines += ["    " + s for s in _matrix_lines(c["W"], names, names)]
        for key, value in c["w_properties"].items():
            lines.append(f"  {key}: {style.flag(value)}")
        for key in ("u_zero", "ricci_zero_one_matches_generic", "ricci_natural_matches_generic", "w_parallel"):
            lines.append(f"  {key}: {style.flag(c[key])}")
        if c["w_parallel_witness"] is not None:
            lines.append(f"  w_parallel_witness: {names[c['w_parallel_witness']]}")
    return "\n".join(lines)


# -- catalog --------------------------------------------------------------------


def catalog_show_text(name: str, style: _Style) -> str:
    entry = load_example(name)
    space = entry.space
    alg = space.alg
    names = space.m_names
    lines = [style.head(f"{entry.name}: {entry.title}")]
    lines.append(f"  basis: {', '.join(alg.basis_names)}")
    lines.append(f"  h: {', '.join(space.h_names) or '0'}")
    lines.append("  brackets:")
    for (i, j), v in alg.structure_constants().items():
        lines.append(f"    [{alg.basis_names[i]},{alg.basis_names[j]}] = {_vec_text(v, alg.basis_names)}")
    lines.append("  omega:")
    lines += ["    " + s for s in _matrix_lines(space.omega, names, names)]
    natural_flat = conn.curvature(space, conn.natural_product(space)).is_zero()
    zero_one_flat = conn.curvature(space, conn.zero_one_product(space)).is_zero()
    lines.append(f"  natural connection flat: {style.flag(natural_flat)}")
    lines.append(f"  zero-one connection flat: {style.flag(zero_one_flat)}")
    lines.append("  golden values:")
    for key in sorted(entry.golden):
        tag = " (derived)" if key in entry.derived else ""
        value = _jsonable(entry.golden[key])
        lines.append(f"    {key}{tag}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines)


# -- entry point ----------------------------------------------------------------


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invconn", description="Exact invariant-connection computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="run all structural and symplectic checks")
    p.add_argument("file", help="input document (JSON)")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("report", help="compute connection tensors and theorem checks")
    p.add_argument("file", help="input document (JSON)")
    p.add_argument("--a", type=_rational_arg, help="first family parameter, e.g. 1/3")
    p.add_argument("--b", type=_rational_arg, help="second family parameter, e.g. 1/3")
    p.add_argument("--grid", action="store_true", help="classify every (a, b) in {-1, 0, 1/3, 1/2, 1}^2")
    p.add_argument("--compact", action="store_true", help="add W-operator and metric-based Ricci checks")
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("catalog", help="built-in examples")
    csub = p.add_subparsers(dest="action", required=True)
    csub.add_parser("list", help="print example names")
    s = csub.add_parser("show", help="summary and expected values")
    s.add_argument("name")
    e = csub.add_parser("export", help="write an example as an input document")
    e.add_argument("name")
    e.add_argument("path")
    return parser


def _cmd_validate(args, out, err) -> int:
    doc = InputDocument.load(args.file)
    report = validation_report(doc)
    if args.format == "json":
        out.write(dumps_json(report))
    else:
        out.write(_validation_text(report, _Style(_use_color(out))) + "\n")
    return EXIT_OK if report["ok"] else EXIT_INVALID


def _cmd_report(args, out, err) -> int:
    if args.grid and (args.a is not None or args.b is not None):
        err.write("invconn: --grid cannot be combined with --a/--b\n")
        return EXIT_PARSE
    if (args.a is None) != (args.b is None):
        err.write("invconn: --a and --b must be given together\n")
        return EXIT_PARSE
    doc = InputDocument.load(args.file)
    try:
        report = build_report(doc, args.a, args.b, args.grid, args.compact)
    except MissingMetric as exc:
        err.write(f"invconn: {exc}\n")
        return EXIT_INVALID
    except (InvalidLieAlgebra, InvalidReductiveSpace, InvalidSymplecticTensor, compact.InvalidMetric) as exc:
        err.write(f"invconn: invalid input: {exc}\n")
        return EXIT_INVALID
    if args.format == "json":
        out.write(dumps_json(report))
    else:
        out.write(report_text(report, doc.to_space(), _Style(_use_color(out))) + "\n")
    return EXIT_OK


def _cmd_catalog(args, out, err) -> int:
    if args.action == "list":
        out.write("".join(f"{n}\n" for n in EXAMPLE_NAMES))
        return EXIT_OK
    try:
        if args.action == "show":
            out.write(catalog_show_text(args.name, _Style(_use_color(out))) + "\n")
        else:
            InputDocument.from_entry(load_example(args.name)).save(args.path)
    except UnknownExample as exc:
        err.write(f"invconn: {exc.args[0]}\n")
        return EXIT_PARSE
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    handler = {"validate": _cmd_validate, "report": _cmd_report, "catalog": _cmd_catalog}[args.command]
    try:
        return handler(args, out, err)
    except ParseError as exc:
        err.write(f"invconn: parse error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
