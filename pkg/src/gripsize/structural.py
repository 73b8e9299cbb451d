"""Finger stiffness check.

Each finger is idealised as a straight prismatic cantilever of rectangular
section, clamped at the pivot and loaded by a point force at the tip that
bends it about the weak (thickness) axis.  Euler-Bernoulli theory, no
shear deformation.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._checks import Checker

ALUMINIUM_YOUNGS_MODULUS_PA = 69e9


@dataclass(frozen=True)
class FingerBeam:
    length_m: float
    width_m: float
    thickness_m: float
    youngs_modulus_pa: float = ALUMINIUM_YOUNGS_MODULUS_PA
    deflection_limit_m: float | None = None


@dataclass(frozen=True)
class StiffnessResult:
    force_n: float
    deflection_m: float
    stiffness_n_per_m: float
    deflection_limit_m: float | None
    passed: bool | None  # None: no limit configured, not evaluated


def check_finger_beam(chk: Checker, beam: FingerBeam, prefix: str) -> None:
    chk.positive(f"{prefix}.length_m", beam.length_m)
    chk.positive(f"{prefix}.width_m", beam.width_m)
    chk.positive(f"{prefix}.thickness_m", beam.thickness_m)
    chk.positive(f"{prefix}.youngs_modulus_pa", beam.youngs_modulus_pa)
    if beam.deflection_limit_m is not None:
        chk.positive(f"{prefix}.deflection_limit_m", beam.deflection_limit_m)


def rect_second_moment(width_m: float, thickness_m: float) -> float:
    return width_m * thickness_m**3 / 12.0


def tip_stiffness(beam: FingerBeam) -> float:
    """End-load stiffness 3EI/L^3 in N/m."""
    inertia = rect_second_moment(beam.width_m, beam.thickness_m)
    return 3.0 * beam.youngs_modulus_pa * inertia / beam.length_m**3


def tip_deflection(force_n: float, beam: FingerBeam) -> float:
    inertia = rect_second_moment(beam.width_m, beam.thickness_m)
    return force_n * beam.length_m**3 / (3.0 * beam.youngs_modulus_pa * inertia)


def stiffness_check(force_n: float, beam: FingerBeam) -> StiffnessResult:
    deflection = tip_deflection(force_n, beam)
    limit = beam.deflection_limit_m
    return StiffnessResult(
        force_n=force_n,
        deflection_m=deflection,
        stiffness_n_per_m=tip_stiffness(beam),
        deflection_limit_m=limit,
        passed=None if limit is None else deflection <= limit,
    )
