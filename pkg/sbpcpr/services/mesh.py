from __future__ import annotations

import numpy as np

from ..models import ConfigurationError, GridKind, Mapping, Mesh1D

# width ratios relative to the first element for the five-element grids
_ALTERNATING_RATIOS = np.array([1.0, 0.1, 1.0, 0.1, 1.0])
_GEOMETRIC_RATIOS = 1.5 ** np.arange(5)


def map_element(mapping: Mapping, xmin: float, xmax: float, xi):
    """Map reference points ``xi`` in [-1, 1] into [xmin, xmax]; returns ``(x, dx/dxi)``."""
    xi = np.asarray(xi, dtype=np.float64)
    width = xmax - xmin
    if mapping is Mapping.LINEAR:
        x = 0.5 * (xmax + xmin) + 0.5 * width * xi
        dxdxi = np.full_like(xi, 0.5 * width)
    elif mapping is Mapping.QUADRATIC:
        x = width / 8.0 * (xi + 2.0) ** 2 + xmin - width / 8.0
        dxdxi = width / 4.0 * (xi + 2.0)
    else:
        raise ValueError(f"Unsupported mapping: {mapping}")
    if x.ndim == 0:
        return float(x), float(dxdxi)
    return x, dxdxi


def grid_widths(grid: GridKind, elements: int, length: float) -> np.ndarray:
    if grid is GridKind.UNIFORM:
        ratios = np.ones(elements)
    else:
        if elements != 5:
            raise ConfigurationError(f"the {grid.value} grid is defined for exactly 5 elements")
        ratios = _ALTERNATING_RATIOS if grid is GridKind.ALTERNATING else _GEOMETRIC_RATIOS
    return length * ratios / ratios.sum()


def build_mesh(
    xmin: float,
    xmax: float,
    elements: int,
    grid: GridKind = GridKind.UNIFORM,
    mapping: Mapping = Mapping.LINEAR,
) -> Mesh1D:
    if elements < 1:
        raise ConfigurationError("a mesh needs at least one element")
    widths = grid_widths(grid, elements, xmax - xmin)
    boundaries = np.concatenate([[xmin], xmin + np.cumsum(widths)])
    boundaries[-1] = xmax
    return Mesh1D(boundaries=boundaries, mapping=mapping, grid_kind=grid)


def physical_points(mesh: Mesh1D, xi: np.ndarray) -> np.ndarray:
    """Physical coordinates of reference points ``xi`` in every element, shape ``(K, len(xi))``."""
    return np.vstack([map_element(mesh.mapping, *mesh.element_bounds(k), xi)[0] for k in range(mesh.elements)])
