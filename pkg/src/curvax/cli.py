"""Command-line front end.

Subcommands
-----------
frenet    frame, curvature, torsion at one parameter value
surface   tessellate a curvature-axis or tangent-developable surface to OBJ
classify  cylinder / cone / tangent / non-developable decision
invert    recover a generating curve from a regression curve (CSV output)
singular  curve singularities, surface singular locus, singularity types
example   one-shot reproduction of a built-in demonstration curve

Examples
--------
  curvax frenet --curve "(cos(t), sin(t), t)" --t 1.0
  curvax surface --curve "(cos(t), sin(t), t)" --kind curvature-axis \
      --u-range 0:6.28318530718 --lambda-range -1:1 --nu 128 --nl 16 --out helix.obj
  curvax classify --curve "(2*cos(t), sin(t), 0)" --u-range 0:6.28318530718
  curvax invert --x-curve "(cos(s), sin(s), s)" --kappa 0.5 \
      --constants 1,1,1,0,1,0 --range 0:12.5663706144 --out alpha.csv
  curvax singular --curve "(t^2, t^3, t^4)" --range -1:1 --n-grid 64
  curvax example --name nephroid --out-dir out/

Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure,
3 I/O failure. All reports are JSON with sorted keys and a "schema": 1 field;
identical arguments produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import gallery
from .classify import classify_developable
from .errors import (
    ArityError,
    CurvaxError,
    DomainError,
    GeometryError,
    IoError,
    ParseError,
    TooFewSamples,
)
from .expr import parse_curve
from .frenet import curvature_axis, frenet_apparatus
from .inverse import recover_generator, rms_ode_residual, ruling_alignment_report
from .mesh import tessellate, write_circle_texture, write_curve_csv, write_obj, write_surface_csv
from .ruled import curvature_axis_surface, developability_residual, tangent_developable
from .singular import find_curve_singularities, singularity_report

TWO_PI = 2.0 * math.pi


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, not argparse's default 2
        raise UsageError(message)


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) != 2:
        raise UsageError(f"range must be written a:b, got {text!r}")
    try:
        a, b = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise UsageError(f"range bounds must be numbers: {text!r}") from exc
    if not b > a:
        raise UsageError(f"range must be increasing, got {text!r}")
    return a, b


def _parse_constants(text: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != 6:
        raise UsageError(f"--constants takes 6 comma-separated numbers, got {len(parts)}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"bad constant in {text!r}") from exc


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    return obj


def _report(command: str, inputs: dict, **extra) -> dict:
    doc = {
        "schema": 1,
        "command": command,
        "inputs": inputs,
        "metrics": {},
        "outputs": [],
        "warnings": [],
    }
    doc.update(extra)
    return _jsonable(doc)


def _emit(doc: dict) -> str:
    text = json.dumps(doc, sort_keys=True, indent=2)
    print(text)
    return text


# --- subcommands -------------------------------------------------------------


def _cmd_frenet(args) -> dict:
    c = parse_curve(args.curve)
    fd = frenet_apparatus(c, args.t)
    return _report(
        "frenet",
        {"curve": args.curve, "t": args.t},
        metrics={
            "kappa": fd.kappa,
            "tau": fd.tau,
            "kappa_s": fd.kappa_s,
            "tau_s": fd.tau_s,
            "speed": fd.speed,
        },
        result={
            "tangent": fd.tangent,
            "normal": fd.normal,
            "binormal": fd.binormal,
        },
    )


def _surface_for(curve, kind: str, u_range):
    if kind == "curvature-axis":
        return curvature_axis_surface(curve, u_range)
    if kind == "tangent-dev":
        return tangent_developable(curve, u_range)
    raise UsageError(f"unknown surface kind {kind!r}")


def _singularity_warnings(c, u_range) -> list[str]:
    margin = 0.25 * (u_range[1] - u_range[0])
    try:
        sings = find_curve_singularities(c, (u_range[0] - margin, u_range[1] + margin), 64)
    except CurvaxError:
        return []
    return [f"curve singularity near t={(0.0 if abs(s) < 1e-9 else s):.6g}" for s in sings]


def _cmd_surface(args) -> dict:
    c = parse_curve(args.curve)
    u_range = _parse_range(args.u_range)
    lambda_range = _parse_range(args.lambda_range)
    S = _surface_for(c, args.kind, u_range)
    m = tessellate(S, u_range, lambda_range, args.nu, args.nl)
    write_obj(m, args.out)
    outputs = [args.out]
    if args.csv:
        write_surface_csv(S, u_range, lambda_range, args.nu, args.nl, args.csv)
        outputs.append(args.csv)
    residuals = [
        abs(developability_residual(S, u)) for u in np.linspace(u_range[0], u_range[1], args.nu)
    ]
    return _report(
        "surface",
        {
            "curve": args.curve,
            "kind": args.kind,
            "u_range": list(u_range),
            "lambda_range": list(lambda_range),
            "nu": args.nu,
            "nl": args.nl,
        },
        metrics={
            "max_developability_residual": max(residuals),
            "vertices": len(m.vertices),
            "triangles": len(m.triangles),
            "degenerate_skipped": m.degenerate_skipped,
        },
        outputs=outputs,
        warnings=_singularity_warnings(c, u_range),
    )


def _classification_doc(cls) -> dict:
    doc = {"kind": cls.kind.value, "samples_used": cls.samples_used, "tolerance": cls.tolerance}
    if cls.apex is not None:
        doc["apex"] = cls.apex
        doc["apex_residual"] = cls.apex_residual
    if cls.regression_rms is not None:
        doc["regression_rms"] = cls.regression_rms
    if cls.max_residual is not None:
        doc["max_residual"] = cls.max_residual
    return doc


def _cmd_classify(args) -> dict:
    c = parse_curve(args.curve)
    u_range = _parse_range(args.u_range)
    S = curvature_axis_surface(c, u_range)
    cls = classify_developable(S, args.samples, args.tol)
    metrics = {}
    for key in ("apex_residual", "regression_rms", "max_residual"):
        value = getattr(cls, key)
        if value is not None and math.isfinite(value):
            metrics[key] = value
    return _report(
        "classify",
        {"curve": args.curve, "u_range": list(u_range), "samples": args.samples, "tol": args.tol},
        metrics=metrics,
        result=_classification_doc(cls),
    )


def _cmd_invert(args) -> dict:
    if not args.kappa > 0:
        raise UsageError(f"--kappa must be positive, got {args.kappa}")
    x = parse_curve(args.x_curve)
    s_range = _parse_range(args.range)
    constants = _parse_constants(args.constants)
    rec = recover_generator(x, args.kappa, constants, s_range)
    write_curve_csv(rec.curve, s_range, args.n_samples, args.out)
    metrics = {"rms_ode_residual": rms_ode_residual(rec.curve, x, rec.kappa, s_range)}
    metrics.update(ruling_alignment_report(rec))
    return _report(
        "invert",
        {
            "x_curve": args.x_curve,
            "kappa": args.kappa,
            "constants": list(constants),
            "range": list(s_range),
        },
        metrics=metrics,
        outputs=[args.out],
    )


def _cmd_singular(args) -> dict:
    c = parse_curve(args.curve)
    t_range = _parse_range(args.range)
    rep = singularity_report(c, t_range, args.n_grid)
    return _report(
        "singular",
        {"curve": args.curve, "range": list(t_range), "n_grid": args.n_grid},
        metrics={
            "n_curve_singularities": len(rep.curve_singular_params),
            "n_surface_singular_samples": len(rep.surface_singular_samples),
        },
        result={
            "curve_singular_params": rep.curve_singular_params,
            "surface_singular_samples": [
                {"u": u, "lambda_star": lam, "point": p}
                for u, lam, p in rep.surface_singular_samples
            ],
            "tangent_dev_class": [{"t": t, "kind": k.value} for t, k in rep.tangent_dev_class],
        },
    )


# --- example command ----------------------------------------------------------

EXAMPLE_NAMES = ("helix", "twisted", "asteroid", "nephroid")


def _cmd_example(args) -> dict:
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(f"cannot create {out_dir}: {exc}") from exc
    builder = {
        "helix": _example_helix,
        "twisted": _example_twisted,
        "asteroid": _example_asteroid,
        "nephroid": _example_nephroid,
    }[args.name]
    doc = builder(out_dir)
    texture = out_dir / "circle_pattern.ppm"
    write_circle_texture(str(texture), n_cells=8, resolution=256)
    report_path = out_dir / f"{args.name}_report.json"
    doc["outputs"].extend([str(texture), str(report_path)])
    text = json.dumps(doc, sort_keys=True, indent=2)
    try:
        report_path.write_text(text + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {report_path}: {exc}") from exc
    return doc


def _max_residual(S, u_range, n=100) -> float:
    return max(
        abs(developability_residual(S, u)) for u in np.linspace(u_range[0], u_range[1], n)
    )


def _example_helix(out_dir: Path) -> dict:
    curve = gallery.builtin_curve("helix")
    u_range = (0.0, TWO_PI)
    S = curvature_axis_surface(curve, u_range)
    m = tessellate(S, u_range, (-1.0, 1.0), 128, 16)
    obj_path = out_dir / "helix_axis.obj"
    write_obj(m, str(obj_path))

    fd = frenet_apparatus(curve, 1.0)
    cls = classify_developable(S)
    s_range = (0.0, 4.0 * math.pi)
    rec = recover_generator(
        curve, gallery.HELIX_RECOVERY_KAPPA, gallery.HELIX_RECOVERY_CONSTANTS, s_range
    )
    csv_path = out_dir / "helix_recovered.csv"
    write_curve_csv(rec.curve, s_range, 257, str(csv_path))
    rep = singularity_report(curve, u_range, 64)

    return _report(
        "example",
        {"name": "helix"},
        metrics={
            "kappa": fd.kappa,
            "tau": fd.tau,
            "max_developability_residual": _max_residual(S, u_range),
            "rms_ode_residual": rms_ode_residual(rec.curve, curve, rec.kappa, s_range),
            "n_curve_singularities": len(rep.curve_singular_params),
            "degenerate_skipped": m.degenerate_skipped,
        },
        result={
            "classification": cls.kind.value,
            "tangent_dev_class": sorted({k.value for _, k in rep.tangent_dev_class}),
        },
        outputs=[str(obj_path), str(csv_path)],
    )


def _example_twisted(out_dir: Path) -> dict:
    curve = gallery.builtin_curve("twisted")
    u_range = (0.1, 1.5)  # stay clear of the t=0 curve singularity
    S = curvature_axis_surface(curve, u_range)
    m = tessellate(S, u_range, (-2.0, 2.0), 96, 24)
    obj_path = out_dir / "twisted_axis.obj"
    write_obj(m, str(obj_path))
    rep = singularity_report(curve, (-1.0, 1.0), 64)
    return _report(
        "example",
        {"name": "twisted"},
        metrics={
            "max_developability_residual": _max_residual(S, u_range),
            "n_curve_singularities": len(rep.curve_singular_params),
            "n_surface_singular_samples": len(
                singularity_report(curve, u_range, 64).surface_singular_samples
            ),
            "degenerate_skipped": m.degenerate_skipped,
        },
        result={"curve_singular_params": rep.curve_singular_params},
        outputs=[str(obj_path)],
        warnings=_singularity_warnings(curve, u_range),
    )


def _example_asteroid(out_dir: Path) -> dict:
    curve = gallery.builtin_curve("asteroid")
    u_range = (0.1, math.pi / 2.0 - 0.1)
    S = curvature_axis_surface(curve, u_range)
    outputs = []
    for tag, lo, hi in (("narrow", -0.5, 0.5), ("mid", -2.0, 2.0), ("wide", -5.0, 5.0)):
        m = tessellate(S, u_range, (lo, hi), 96, 24)
        path = out_dir / f"asteroid_axis_{tag}.obj"
        write_obj(m, str(path))
        outputs.append(str(path))

    max_line_dist = 0.0
    max_dir_dev = 0.0
    for t in np.linspace(0.2, 1.3, 23):
        line = curvature_axis(curve, t)
        point_cf, dir_cf = gallery.asteroid_axis_ruling(t)
        max_line_dist = max(
            max_line_dist, float(np.linalg.norm(np.cross(line.origin - point_cf, dir_cf)))
        )
        max_dir_dev = max(max_dir_dev, float(np.linalg.norm(np.cross(line.direction, dir_cf))))

    rep = singularity_report(curve, (0.0, TWO_PI), 128)
    return _report(
        "example",
        {"name": "asteroid"},
        metrics={
            "max_developability_residual": _max_residual(S, u_range),
            "closed_form_max_line_dist": max_line_dist,
            "closed_form_max_dir_dev": max_dir_dev,
            "n_curve_singularities": len(rep.curve_singular_params),
        },
        result={"curve_singular_params": rep.curve_singular_params},
        outputs=outputs,
    )


def _example_nephroid(out_dir: Path) -> dict:
    curve = gallery.builtin_curve("nephroid")
    u_range = (0.2, math.pi - 0.2)  # cusps at 0 and pi
    S = curvature_axis_surface(curve, u_range)
    m = tessellate(S, u_range, (-2.0, 2.0), 96, 24)
    obj_path = out_dir / "nephroid_axis.obj"
    write_obj(m, str(obj_path))
    cls = classify_developable(S)
    rep = singularity_report(curve, (0.0, TWO_PI), 64)
    metrics = {
        "max_developability_residual": _max_residual(S, u_range),
        "n_curve_singularities": len(rep.curve_singular_params),
        "degenerate_skipped": m.degenerate_skipped,
    }
    if cls.apex_residual is not None:
        metrics["apex_residual"] = cls.apex_residual
    return _report(
        "example",
        {"name": "nephroid"},
        metrics=metrics,
        result={
            "classification": _classification_doc(cls),
            "curve_singular_params": rep.curve_singular_params,
        },
        outputs=[str(obj_path)],
    )


# --- driver -------------------------------------------------------------------


def build_parser() -> _ArgumentParser:
    p = _ArgumentParser(prog="curvax", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("frenet", help="frame and invariants at one parameter value")
    f.add_argument("--curve", required=True)
    f.add_argument("--t", type=float, required=True)

    s = sub.add_parser("surface", help="tessellate a developable surface to OBJ")
    s.add_argument("--curve", required=True)
    s.add_argument("--kind", choices=("curvature-axis", "tangent-dev"), default="curvature-axis")
    s.add_argument("--u-range", default=f"0:{TWO_PI}")
    s.add_argument("--lambda-range", default="-1:1")
    s.add_argument("--nu", type=int, default=128)
    s.add_argument("--nl", type=int, default=16)
    s.add_argument("--out", required=True)
    s.add_argument("--csv", default=None, help="also write a u,lambda,x,y,z,residual CSV")

    c = sub.add_parser("classify", help="cylinder / cone / tangent / non-developable")
    c.add_argument("--curve", required=True)
    c.add_argument("--u-range", default=f"0:{TWO_PI}")
    c.add_argument("--samples", type=int, default=64)
    c.add_argument("--tol", type=float, default=1e-6)

    i = sub.add_parser("invert", help="recover a generating curve from a regression curve")
    i.add_argument("--x-curve", required=True)
    i.add_argument("--kappa", type=float, required=True)
    i.add_argument("--constants", required=True, help="c11,c12,c21,c22,c31,c32")
    i.add_argument("--range", default=f"0:{2.0 * TWO_PI}")
    i.add_argument("--n-samples", type=int, default=257)
    i.add_argument("--out", required=True)

    g = sub.add_parser("singular", help="singularities of the curve and its axis surface")
    g.add_argument("--curve", required=True)
    g.add_argument("--range", default=f"0:{TWO_PI}")
    g.add_argument("--n-grid", type=int, default=64)

    e = sub.add_parser("example", help="reproduce a built-in demonstration end to end")
    e.add_argument("--name", choices=EXAMPLE_NAMES, required=True)
    e.add_argument("--out-dir", default="out")

    return p


_HANDLERS = {
    "frenet": _cmd_frenet,
    "surface": _cmd_surface,
    "classify": _cmd_classify,
    "invert": _cmd_invert,
    "singular": _cmd_singular,
    "example": _cmd_example,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        doc = _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ArityError, TooFewSamples) as exc:
        _emit(_error_doc(exc))
        return 1
    except (GeometryError, DomainError) as exc:
        _emit(_error_doc(exc))
        return 2
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _emit(doc)
    return 0


def _error_doc(exc: Exception) -> dict:
    return {
        "schema": 1,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
