"""Two-point numerical fluxes for Burgers' equation and linear advection.

All functions accept scalars or arrays and evaluate elementwise.
"""

from __future__ import annotations

import numpy as np

from .models import FluxKind


def econ_flux(u_minus, u_plus):
    return 0.25 * (u_plus**2 + u_minus**2) - (u_plus - u_minus) ** 2 / 12.0


def llf_flux(u_minus, u_plus):
    speed = np.maximum(np.abs(u_plus), np.abs(u_minus))
    return 0.25 * (u_plus**2 + u_minus**2) - 0.5 * speed * (u_plus - u_minus)


def osher_flux(u_minus, u_plus):
    u_minus = np.asarray(u_minus, dtype=np.float64)
    u_plus = np.asarray(u_plus, dtype=np.float64)
    # first matching case wins on the zero-measure boundaries
    cases = [
        (u_plus > 0.0) & (u_minus > 0.0),
        (u_plus < 0.0) & (u_minus < 0.0),
        (u_minus >= 0.0) & (u_plus <= 0.0),
        (u_minus <= 0.0) & (u_plus >= 0.0),
    ]
    values = [
        0.5 * u_minus**2,
        0.5 * u_plus**2,
        0.5 * u_plus**2 + 0.5 * u_minus**2,
        np.zeros_like(u_minus),
    ]
    result = np.select(cases, values, default=0.0)
    return result[()] if result.ndim == 0 else result


def central_flux(u_minus, u_plus):
    return 0.5 * (u_minus + u_plus)


def burgers_flux(kind: FluxKind, u_minus, u_plus):
    kind = FluxKind(kind)
    if kind is FluxKind.ECON:
        return econ_flux(u_minus, u_plus)
    if kind is FluxKind.LOCAL_LAX_FRIEDRICHS:
        return llf_flux(u_minus, u_plus)
    if kind is FluxKind.OSHER:
        return osher_flux(u_minus, u_plus)
    raise ValueError(f"{kind.value} is not a flux for Burgers' equation")


def entropy_condition(kind: FluxKind, u_minus, u_plus):
    """Interface energy production; non-positive for entropy stable fluxes."""
    return (u_minus**3 - u_plus**3) / 6.0 - (u_minus - u_plus) * burgers_flux(kind, u_minus, u_plus)
