from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.linalg import cho_factor


class ConfigurationError(ValueError):
    """Raised when a run configuration is invalid."""


class BlowUpDetected(FloatingPointError):
    """Raised by a right-hand side that receives non-finite coefficients."""


class BasisKind(str, Enum):
    GAUSS_LEGENDRE = "gauss"
    LOBATTO_LEGENDRE = "lobatto"
    CHEBYSHEV1_ROOTS = "cheb1-roots"
    CHEBYSHEV1_EXTREMA = "cheb1-extrema"
    CHEBYSHEV2_ROOTS = "cheb2-roots"
    MODAL_LEGENDRE = "modal"

    @property
    def is_nodal(self) -> bool:
        return self is not BasisKind.MODAL_LEGENDRE

    @property
    def is_diagonal_norm(self) -> bool:
        return self in {BasisKind.GAUSS_LEGENDRE, BasisKind.LOBATTO_LEGENDRE}

    @property
    def is_dense_norm(self) -> bool:
        return self in {
            BasisKind.CHEBYSHEV1_ROOTS,
            BasisKind.CHEBYSHEV1_EXTREMA,
            BasisKind.CHEBYSHEV2_ROOTS,
        }


class FluxKind(str, Enum):
    ECON = "econ"
    LOCAL_LAX_FRIEDRICHS = "llf"
    OSHER = "osher"
    CENTRAL = "central"

    @property
    def is_burgers(self) -> bool:
        return self is not FluxKind.CENTRAL


class CorrectionMode(str, Enum):
    BOTH = "both"
    DIV_ONLY = "div"
    RES_ONLY = "res"
    NONE = "none"

    @property
    def uses_div(self) -> bool:
        return self in {CorrectionMode.BOTH, CorrectionMode.DIV_ONLY}

    @property
    def uses_res(self) -> bool:
        return self in {CorrectionMode.BOTH, CorrectionMode.RES_ONLY}


class Equation(str, Enum):
    BURGERS = "burgers"
    ADVECTION = "advection"


class Mapping(str, Enum):
    LINEAR = "linear"
    QUADRATIC = "quadratic"


class GridKind(str, Enum):
    UNIFORM = "uniform"
    ALTERNATING = "alternating"
    GEOMETRIC = "geometric"


class JacobianStrategy(str, Enum):
    NODAL_DIAGONAL = "nodal"
    VIA_GAUSS_TRANSFORM = "via-gauss"


def _frozen(array: np.ndarray) -> np.ndarray:
    out = np.array(array, dtype=np.float64, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class OperatorSet:
    """Discrete SBP operator on the reference element [-1, 1].

    Coefficient vectors are nodal values for nodal kinds and Legendre
    coefficients for the modal kind. ``R`` row 0 restricts to -1, row 1 to +1.
    """

    kind: BasisKind
    p: int
    nodes: np.ndarray | None
    M: np.ndarray
    D: np.ndarray
    R: np.ndarray
    V: np.ndarray
    B: np.ndarray = field(default_factory=lambda: np.diag([-1.0, 1.0]))
    m_factor: tuple = field(init=False, repr=False)

    def __post_init__(self) -> None:
        for name in ("M", "D", "R", "V", "B"):
            object.__setattr__(self, name, _frozen(getattr(self, name)))
        if self.nodes is not None:
            object.__setattr__(self, "nodes", _frozen(self.nodes))
        object.__setattr__(self, "m_factor", cho_factor(self.M))

    @property
    def n(self) -> int:
        return self.p + 1

    @property
    def one(self) -> np.ndarray:
        """Coefficients of the constant function 1."""
        if self.kind.is_nodal:
            return np.ones(self.n)
        unit = np.zeros(self.n)
        unit[0] = 1.0
        return unit


@dataclass(frozen=True)
class Mesh1D:
    boundaries: np.ndarray
    mapping: Mapping = Mapping.LINEAR
    grid_kind: GridKind = GridKind.UNIFORM

    def __post_init__(self) -> None:
        boundaries = _frozen(self.boundaries)
        if boundaries.ndim != 1 or boundaries.size < 2:
            raise ConfigurationError("a mesh needs at least one element")
        if np.any(np.diff(boundaries) <= 0.0):
            raise ConfigurationError("element boundaries must be strictly increasing")
        object.__setattr__(self, "boundaries", boundaries)

    @property
    def elements(self) -> int:
        return self.boundaries.size - 1

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.boundaries)

    def element_bounds(self, k: int) -> tuple[float, float]:
        return float(self.boundaries[k]), float(self.boundaries[k + 1])


@dataclass
class SolutionField:
    mesh: Mesh1D
    ops: OperatorSet
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        self.coeffs = np.asarray(self.coeffs, dtype=np.float64)
        expected = (self.mesh.elements, self.ops.n)
        if self.coeffs.shape != expected:
            raise ConfigurationError(f"coefficients must have shape {expected}, got {self.coeffs.shape}")

    def with_coeffs(self, coeffs: np.ndarray) -> SolutionField:
        return SolutionField(mesh=self.mesh, ops=self.ops, coeffs=coeffs)


@dataclass
class DiagnosticsSeries:
    samples: list[tuple[float, float, float]] = field(default_factory=list)
    blowup_time: float | None = None

    def record(self, t: float, momentum: float, energy: float) -> None:
        if self.samples and t <= self.samples[-1][0]:
            raise ValueError("diagnostic samples must have strictly increasing time")
        self.samples.append((float(t), float(momentum), float(energy)))

    @property
    def blown_up(self) -> bool:
        return self.blowup_time is not None

    def as_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if not self.samples:
            empty = np.zeros(0)
            return empty, empty, empty
        t, momentum, energy = (np.array(column) for column in zip(*self.samples))
        return t, momentum, energy
