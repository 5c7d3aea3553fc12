"""Bundled test catalogs and their file formats.

Matrix catalogs are JSON with named entries whose generator (or element)
matrices are row-major arrays of (re, im) pairs; finite-group catalogs
reuse the multiplication-table document from :mod:`freecomm.groups`.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .groups import (
    FiniteGroup,
    cyclic_group,
    klein_group,
    quaternion_group,
    symmetric_group,
)


def matrix_to_pairs(m: np.ndarray) -> list[list[list[float]]]:
    a = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in a]


def matrix_from_pairs(rows) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def quaternion_generators() -> tuple[np.ndarray, np.ndarray]:
    """The unit quaternions i and j as SU(2) matrices."""
    qi = np.array([[1j, 0], [0, -1j]])
    qj = np.array([[0, 1], [-1, 0]], dtype=complex)
    return qi, qj


def pauli_generators() -> tuple[np.ndarray, np.ndarray]:
    x = np.array([[0, 1], [1, 0]], dtype=complex)
    z = np.array([[1, 0], [0, -1]], dtype=complex)
    return x, z


def binary_tetrahedral_generators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Quaternions i, j and omega = (-1 + i + j + k)/2 (order 24 closure)."""
    qi, qj = quaternion_generators()
    qk = np.array([[0, 1j], [1j, 0]])
    omega = 0.5 * (-np.eye(2, dtype=complex) + qi + qj + qk)
    return qi, qj, omega


def unitary_group_catalog() -> dict[str, tuple[np.ndarray, ...]]:
    """Generator sets for the bundled discreteness-filtration checks."""
    return {
        "quaternion_su2": quaternion_generators(),
        "pauli_u2": pauli_generators(),
        "binary_tetrahedral_su2": binary_tetrahedral_generators(),
        "cyclic13_u1": (np.array([[np.exp(2j * np.pi / 13)]]),),
    }


def write_unitary_catalog(path: str | Path, catalog: dict[str, tuple] | None = None) -> None:
    catalog = unitary_group_catalog() if catalog is None else catalog
    doc = {
        "entries": {
            name: {"generators": [matrix_to_pairs(g) for g in gens]}
            for name, gens in catalog.items()
        }
    }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True))


def load_unitary_catalog(path: str | Path) -> dict[str, tuple[np.ndarray, ...]]:
    doc = json.loads(Path(path).read_text())
    out = {}
    for name, entry in doc["entries"].items():
        out[name] = tuple(matrix_from_pairs(g) for g in entry["generators"])
    return out


def finite_group_catalog() -> dict[str, FiniteGroup]:
    """Groups used by the mixed-identity checks."""
    return {
        "cyclic2": cyclic_group(2),
        "cyclic3": cyclic_group(3),
        "cyclic6": cyclic_group(6),
        "klein4": klein_group(),
        "sym3": symmetric_group(3),
        "sym4": symmetric_group(4),
        "quaternion8": quaternion_group(),
    }


# -- representation catalog ------------------------------------------------------


def rep_catalog():
    """Named reps with their nontrivial-irreducible dimension fixtures.

    The dimension lists come from standard character data and are inputs,
    not computed.
    """
    from .reps import FiniteRep, alt5_rotation_rep, cyclic_su2_rep, quaternion_su2_rep

    entries: dict[str, tuple[FiniteRep, tuple[int, ...] | None]] = {
        "alt5_rotation": (alt5_rotation_rep(), (3, 3, 4, 5)),
        "quaternion_2d": (quaternion_su2_rep(), (1, 1, 1, 2)),
        "cyclic8_su2": (cyclic_su2_rep(8), (1, 1, 1, 1, 1, 1, 1)),
    }
    return entries


def write_rep_catalog(path: str | Path, entries=None) -> None:
    entries = rep_catalog() if entries is None else entries
    doc = {"entries": {}}
    for name, (rep, dims) in entries.items():
        doc["entries"][name] = {
            "group": rep.group.to_json_dict(),
            "elements": [matrix_to_pairs(m) for m in rep.images],
            "dims": None if dims is None else list(dims),
        }
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True))


def load_rep_catalog(path: str | Path):
    from .reps import FiniteRep

    doc = json.loads(Path(path).read_text())
    out = {}
    for name, entry in doc["entries"].items():
        group = FiniteGroup.from_json_dict(entry["group"])
        images = tuple(matrix_from_pairs(m) for m in entry["elements"])
        dims = entry.get("dims")
        out[name] = (FiniteRep(group=group, images=images), None if dims is None else tuple(dims))
    return out
