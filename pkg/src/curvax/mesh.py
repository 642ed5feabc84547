"""Tessellation of ruled surfaces and deterministic file export.

Outputs are byte-deterministic for identical inputs: fixed 9-significant-digit
formatting, LF line endings, no timestamps. OBJ carries positions and UVs
only; the PPM circle texture is the environment-map pattern used to make
surface singularities visually obvious (circles smear into flower-like fans
around a singular point when reflected in the surface).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EmptyMesh, GeometryError, IoError
from .ruled import RuledSurface, developability_residual, eval_surface

AREA_EPS = 1e-12  # relative to (bbox diagonal)^2


@dataclass(frozen=True)
class Mesh:
    vertices: list[np.ndarray]
    uvs: list[tuple[float, float]]
    triangles: list[tuple[int, int, int]]
    degenerate_skipped: int


def _triangle_area(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    return 0.5 * float(np.linalg.norm(np.cross(b - a, c - a)))


def tessellate(
    S: RuledSurface,
    u_range: tuple[float, float],
    lambda_range: tuple[float, float],
    nu: int,
    nl: int,
) -> Mesh:
    """Uniform (nu x nl) grid of surface samples, two triangles per cell.

    Cells whose corners fail to evaluate, or whose triangles are smaller than
    AREA_EPS * (bbox diagonal)^2, are skipped and counted. Raises EmptyMesh
    when nothing survives.
    """
    if nu < 2 or nl < 2:
        raise ValueError("nu and nl must both be at least 2")
    us = np.linspace(u_range[0], u_range[1], nu)
    ls = np.linspace(lambda_range[0], lambda_range[1], nl)

    grid_points: list[np.ndarray | None] = []
    for u in us:
        try:
            base = S.base.point(u)
            director = S.director.point(u)
        except GeometryError:
            grid_points.extend([None] * nl)
            continue
        for lam in ls:
            grid_points.append(base + lam * director)

    valid = [p for p in grid_points if p is not None]
    if not valid:
        raise EmptyMesh("no tessellation cell evaluated successfully")
    arr = np.array(valid)
    diag2 = float(np.sum((arr.max(axis=0) - arr.min(axis=0)) ** 2))
    area_threshold = AREA_EPS * diag2

    vertices: list[np.ndarray] = []
    uvs: list[tuple[float, float]] = []
    index_of: dict[int, int] = {}
    for i in range(nu):
        for j in range(nl):
            g = i * nl + j
            p = grid_points[g]
            if p is None:
                continue
            index_of[g] = len(vertices)
            vertices.append(p)
            uvs.append((i / (nu - 1), j / (nl - 1)))

    triangles: list[tuple[int, int, int]] = []
    skipped = 0
    for i in range(nu - 1):
        for j in range(nl - 1):
            corners = [i * nl + j, (i + 1) * nl + j, (i + 1) * nl + (j + 1), i * nl + (j + 1)]
            if any(g not in index_of for g in corners):
                skipped += 1
                continue
            a, b, c, d = (index_of[g] for g in corners)
            pa, pb, pc, pd = (vertices[k] for k in (a, b, c, d))
            if (
                _triangle_area(pa, pb, pc) <= area_threshold
                or _triangle_area(pa, pc, pd) <= area_threshold
            ):
                skipped += 1
                continue
            triangles.append((a, b, c))
            triangles.append((a, c, d))

    if not triangles:
        raise EmptyMesh(f"all {skipped} cells were degenerate or failed to evaluate")
    return Mesh(vertices, uvs, triangles, skipped)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _fmt_obj(x: float) -> str:
    # 12 significant digits: 9 would round-trip only to ~5e-9 relative, which
    # breaks the 1e-9 coordinate-preservation contract for mantissas near 1
    return f"{x:.12g}"


def write_obj(m: Mesh, path: str) -> None:
    """ASCII OBJ with v/vt/f records, one-based f a/a b/b c/c faces."""
    if not m.triangles:
        raise EmptyMesh("refusing to write an OBJ with no faces")
    lines = []
    for v in m.vertices:
        lines.append(f"v {_fmt_obj(v[0])} {_fmt_obj(v[1])} {_fmt_obj(v[2])}")
    for u, w in m.uvs:
        lines.append(f"vt {_fmt_obj(u)} {_fmt_obj(w)}")
    for a, b, c in m.triangles:
        lines.append(f"f {a + 1}/{a + 1} {b + 1}/{b + 1} {c + 1}/{c + 1}")
    data = "\n".join(lines) + "\n"
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(data)
    except OSError as exc:
        raise IoError(f"cannot write OBJ to {path}: {exc}") from exc


def write_surface_csv(
    S: RuledSurface,
    u_range: tuple[float, float],
    lambda_range: tuple[float, float],
    nu: int,
    nl: int,
    path: str,
) -> None:
    """Sampled surface points with the per-ruling developability residual."""
    lines = ["u,lambda,x,y,z,residual"]
    for u in np.linspace(u_range[0], u_range[1], nu):
        res = developability_residual(S, u)
        for lam in np.linspace(lambda_range[0], lambda_range[1], nl):
            p = eval_surface(S, u, lam)
            lines.append(
                f"{_fmt(u)},{_fmt(lam)},{_fmt(p[0])},{_fmt(p[1])},{_fmt(p[2])},{_fmt(res)}"
            )
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write CSV to {path}: {exc}") from exc


def write_curve_csv(curve, s_range: tuple[float, float], n: int, path: str) -> None:
    """Sampled points of a derived curve: header s,x,y,z."""
    lines = ["s,x,y,z"]
    for s in np.linspace(s_range[0], s_range[1], n):
        p = curve.point(s)
        lines.append(f"{_fmt(s)},{_fmt(p[0])},{_fmt(p[1])},{_fmt(p[2])}")
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write CSV to {path}: {exc}") from exc


def write_circle_texture(path: str, n_cells: int = 8, resolution: int = 512) -> None:
    """Binary PPM (P6): white discs of radius 0.35*cell on a black background."""
    if n_cells < 1:
        raise ValueError("n_cells must be at least 1")
    if resolution < 16:
        raise ValueError("resolution must be at least 16")
    cell = resolution / n_cells
    radius = 0.35 * cell
    r2 = radius * radius
    img = np.zeros((resolution, resolution), dtype=bool)
    centers = (np.arange(n_cells) + 0.5) * cell
    coords = np.arange(resolution) + 0.5
    for cy in centers:
        dy2 = (coords - cy) ** 2
        for cx in centers:
            dx2 = (coords - cx) ** 2
            img |= dy2[:, None] + dx2[None, :] <= r2
    rgb = np.repeat(np.where(img, 255, 0).astype(np.uint8)[:, :, None], 3, axis=2)
    header = f"P6\n{resolution} {resolution}\n255\n".encode("ascii")
    try:
        with open(path, "wb") as fh:
            fh.write(header)
            fh.write(rgb.tobytes())
    except OSError as exc:
        raise IoError(f"cannot write PPM to {path}: {exc}") from exc
