from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .models import BasisKind, CorrectionMode, Equation, FluxKind, GridKind, JacobianStrategy, Mapping
from .validation import sanitize_output_prefix


class Config:
    BASE_DIR = Path(__file__).resolve().parent.parent
    OUTPUT_DIR = BASE_DIR / "output"

    P_MAX = 20
    SBP_TOL_FACTOR = 1e-11
    NEWTON_MAX_ITER = 100
    NEWTON_TOL = 1e-15
    VANDERMONDE_COND_WARN = 1e12

    BLOWUP_THRESHOLD = 1e6
    # u0 peaks at 1 and the stable advection runs stay O(1) in amplitude
    ADVECTION_BLOWUP_THRESHOLD = 1e2
    DEFAULT_SAMPLE_EVERY = 10
    CSV_DIGITS = 17
    OVERLAY_POINTS = 10

    @classmethod
    def tol_sbp(cls, p: int) -> float:
        return cls.SBP_TOL_FACTOR * (p + 1) ** 2


class IntegrationConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    t_final: float = Field(gt=0.0)
    steps: int = Field(ge=1)
    sample_every: int = Field(default=Config.DEFAULT_SAMPLE_EVERY, ge=1)
    blowup_threshold: float = Field(default=Config.BLOWUP_THRESHOLD, gt=0.0)

    @property
    def dt(self) -> float:
        return self.t_final / self.steps


DEFAULT_DOMAINS: dict[Equation, tuple[float, float]] = {
    Equation.BURGERS: (0.0, 2.0),
    Equation.ADVECTION: (-1.0, 1.0),
}


class ExperimentConfig(BaseModel):
    """One experiment run; every field maps to a command-line flag."""

    model_config = ConfigDict(frozen=True)

    equation: Equation
    basis: BasisKind
    p: int = Field(ge=1, le=Config.P_MAX)
    elements: int = Field(ge=1)
    flux: FluxKind
    corrections: CorrectionMode | None = None
    grid: GridKind | None = None
    mapping: Mapping | None = None
    jacobian: JacobianStrategy | None = None
    t_final: float = Field(gt=0.0)
    steps: int = Field(ge=1)
    sample_every: int = Field(default=Config.DEFAULT_SAMPLE_EVERY, ge=1)
    blowup_threshold: float = Field(default=Config.BLOWUP_THRESHOLD, gt=0.0)
    out: str = "sbpcpr"
    xmin: float
    xmax: float
    adjoint: bool = True
    interp_basis: BasisKind = BasisKind.GAUSS_LEGENDRE

    @field_validator("out")
    @classmethod
    def _clean_prefix(cls, value: str) -> str:
        return sanitize_output_prefix(value)

    @model_validator(mode="before")
    @classmethod
    def _fill_equation_defaults(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = {key: value for key, value in data.items() if value is not None}
        try:
            equation = Equation(data.get("equation"))
        except ValueError:
            return data
        if equation is Equation.BURGERS:
            data.setdefault("corrections", CorrectionMode.BOTH)
        else:
            data.setdefault("grid", GridKind.UNIFORM)
            data.setdefault("mapping", Mapping.LINEAR)
            data.setdefault("jacobian", JacobianStrategy.NODAL_DIAGONAL)
            data.setdefault("blowup_threshold", Config.ADVECTION_BLOWUP_THRESHOLD)
        xmin, xmax = DEFAULT_DOMAINS[equation]
        data.setdefault("xmin", xmin)
        data.setdefault("xmax", xmax)
        return data

    @model_validator(mode="after")
    def _check_compatibility(self) -> ExperimentConfig:
        if self.equation is Equation.BURGERS:
            if not self.flux.is_burgers:
                raise ValueError("the central flux applies to linear advection only")
            if self.grid is not None or self.mapping is not None or self.jacobian is not None:
                raise ValueError("grid, mapping and jacobian apply to advection only")
        else:
            if self.flux is not FluxKind.CENTRAL:
                raise ValueError("linear advection uses the central flux")
            if self.corrections is not None:
                raise ValueError("corrections apply to Burgers' equation only")
            if not self.adjoint:
                raise ValueError("plain multiplication applies to Burgers' equation only")
            if self.jacobian is JacobianStrategy.NODAL_DIAGONAL and not self.basis.is_nodal:
                raise ValueError("the nodal diagonal Jacobian requires a nodal basis")
            if self.grid is not GridKind.UNIFORM and self.elements != 5:
                raise ValueError(f"the {self.grid.value} grid is defined for exactly 5 elements")

        if not self.interp_basis.is_nodal:
            raise ValueError("interp_basis must be a nodal basis kind")
        if self.xmax <= self.xmin:
            raise ValueError("xmax must be greater than xmin")
        return self

    @property
    def integration(self) -> IntegrationConfig:
        return IntegrationConfig(
            t_final=self.t_final,
            steps=self.steps,
            sample_every=self.sample_every,
            blowup_threshold=self.blowup_threshold,
        )
