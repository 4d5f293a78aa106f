"""
JSON codecs for lattice objects.

Complex samples are always written row-major as ``[[re, im], ...]`` pairs of
Python floats, which json encodes with repr precision; decoding is bit-exact.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from ...domain.entities import CoefficientField, Molecule, TentField
from ...domain.exceptions import ShapeMismatchError
from ...domain.value_objects import Ball, GridFunction, MultiIndex, TimeGrid, TorusGrid


def encode_complex(values: np.ndarray) -> List[List[float]]:
    arr = np.asarray(values, dtype=np.complex128).ravel()
    return [[float(z.real), float(z.imag)] for z in arr]


def decode_complex(pairs: Sequence[Sequence[float]], shape: Tuple[int, ...]) -> np.ndarray:
    """Inverse of encode_complex; the pair count must match the target shape."""
    arr = np.asarray(pairs, dtype=float)
    expected = int(np.prod(shape, dtype=int))
    if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] != expected:
        raise ShapeMismatchError(f"{expected} [re, im] pairs for shape {tuple(shape)}", arr.shape)
    return (arr[:, 0] + 1j * arr[:, 1]).reshape(shape)


def _grid_from(payload: Dict[str, Any]) -> TorusGrid:
    return TorusGrid(int(payload["n"]), int(payload["N"]))


# ----------------------------------------------------------------------------
# GridFunction: {n, N, values}
# ----------------------------------------------------------------------------

def grid_function_to_dict(f: GridFunction) -> Dict[str, Any]:
    return {"n": f.grid.n, "N": f.grid.points_per_axis, "values": encode_complex(f.values)}


def grid_function_from_dict(payload: Dict[str, Any]) -> GridFunction:
    grid = _grid_from(payload)
    return GridFunction(grid, decode_complex(payload["values"], grid.shape))


# ----------------------------------------------------------------------------
# CoefficientField: {m, n, N, entries: [{alpha, beta, values}]}
# ----------------------------------------------------------------------------

def coefficient_field_to_dict(coeffs: CoefficientField) -> Dict[str, Any]:
    indices = coeffs.indices
    return {
        "m": coeffs.m,
        "n": coeffs.grid.n,
        "N": coeffs.grid.points_per_axis,
        "entries": [
            {
                "alpha": list(alpha.components),
                "beta": list(beta.components),
                "values": encode_complex(coeffs.tensor[i, j]),
            }
            for i, alpha in enumerate(indices)
            for j, beta in enumerate(indices)
        ],
    }


def coefficient_field_from_dict(payload: Dict[str, Any]) -> CoefficientField:
    """
    Entries may come in any order, but every (alpha, beta) pair with
    |alpha| = m = |beta| must be present exactly once.
    """
    m = int(payload["m"])
    grid = _grid_from(payload)
    indices = MultiIndex.of_order(grid.n, m)
    position = {alpha.components: i for i, alpha in enumerate(indices)}
    size = len(indices)
    tensor = np.zeros((size, size) + grid.shape, dtype=np.complex128)
    seen = set()
    for entry in payload["entries"]:
        alpha, beta = tuple(entry["alpha"]), tuple(entry["beta"])
        if alpha not in position or beta not in position:
            raise ShapeMismatchError(f"multi-indices of order {m} in dimension {grid.n}", (alpha, beta))
        if (alpha, beta) in seen:
            raise ShapeMismatchError("each (alpha, beta) once", ("duplicate", alpha, beta))
        seen.add((alpha, beta))
        tensor[position[alpha], position[beta]] = decode_complex(entry["values"], grid.shape)
    if len(seen) != size * size:
        raise ShapeMismatchError(f"{size * size} entries", len(seen))
    return CoefficientField(m, grid, tensor)


def save_coefficient_field(coeffs: CoefficientField, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(coefficient_field_to_dict(coeffs)), encoding="utf-8")
    return path


def load_coefficient_field(path: Path) -> CoefficientField:
    with open(path, "r", encoding="utf-8") as handle:
        return coefficient_field_from_dict(json.load(handle))


# ----------------------------------------------------------------------------
# TentField: {N, n, t_samples, values}
# ----------------------------------------------------------------------------

def tent_field_to_dict(F: TentField) -> Dict[str, Any]:
    """values are row-major over (t_j, site); time_grid keeps the window so samples rebuild exactly."""
    return {
        "N": F.grid.points_per_axis,
        "n": F.grid.n,
        "time_grid": F.time_grid.to_dict(),
        "t_samples": F.time_grid.samples.tolist(),
        "values": encode_complex(F.values),
    }


def tent_field_from_dict(payload: Dict[str, Any]) -> TentField:
    grid = _grid_from(payload)
    window = payload["time_grid"]
    time_grid = TimeGrid(float(window["t_min"]), float(window["t_max"]), int(window["levels"]))
    return TentField(grid, time_grid, decode_complex(payload["values"], (time_grid.levels,) + grid.shape))


# ----------------------------------------------------------------------------
# Molecule archive: {ball, p, M, epsilon, witness, achieved_bounds, ...}
# ----------------------------------------------------------------------------

def molecule_to_archive(molecule: Molecule) -> Dict[str, Any]:
    archive = molecule.to_dict()
    archive["sample"] = grid_function_to_dict(molecule.sample)
    archive["witness"] = grid_function_to_dict(molecule.witness)
    return archive


def molecule_from_archive(archive: Dict[str, Any]) -> Molecule:
    ball = archive["ball"]
    return Molecule(
        sample=grid_function_from_dict(archive["sample"]),
        ball=Ball(tuple(ball["center"]), float(ball["radius"])),
        p=float(archive["p"]),
        M=int(archive["M"]),
        epsilon=float(archive["epsilon"]),
        witness=grid_function_from_dict(archive["witness"]),
        achieved_bounds=np.asarray(archive["achieved_bounds"], dtype=float),
        normalization=float(archive.get("normalization", 1.0)),
        seed=archive.get("seed"),
    )
