"""Minimal independent OBJ reader used as the round-trip oracle.

Deliberately separate from the package's writer: it knows nothing about how
the file was produced, only the v/vt/f record grammar.
"""

from __future__ import annotations

import numpy as np


def read_obj(path: str):
    """Returns (vertices (n,3), uvs (m,2), faces list of (vi, ti) triples, zero-based)."""
    vertices: list[list[float]] = []
    uvs: list[list[float]] = []
    faces: list[list[tuple[int, int]]] = []
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "v":
                vertices.append([float(x) for x in parts[1:4]])
            elif parts[0] == "vt":
                uvs.append([float(x) for x in parts[1:3]])
            elif parts[0] == "f":
                corners = []
                for token in parts[1:]:
                    fields = token.split("/")
                    vi = int(fields[0]) - 1
                    ti = int(fields[1]) - 1 if len(fields) > 1 and fields[1] else -1
                    corners.append((vi, ti))
                faces.append(corners)
    return np.array(vertices), np.array(uvs), faces
