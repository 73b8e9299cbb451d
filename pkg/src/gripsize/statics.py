"""Planar quasistatic gripping model.

Two fingers pinch an object of mass ``m`` by Coulomb friction.  Vertical
force balance on the object gives the normal reaction each finger must
press with::

    2 * mu * R = m * g          ->  R = m * g / (2 * mu)

Moment balance about the finger pivot, with the normal reaction acting on
lever ``b`` and the friction force ``mu * R`` on lever ``a``, gives the
reaction torque transmitted through the finger link::

    T_link = R * b - mu * R * a

and the torque the drive must hold at the driven gear is that link torque
plus the pivot's own moment balance::

    T = T_link + R * b - mu * R * a = 2 * (R * b - mu * R * a)

which reduces to ``m * g * (b - mu * a) / mu``.  ``T`` is returned signed.
For ``b <= mu * a`` the friction moment dominates (self-locking geometry)
and the model predicts no torque is needed to hold.

The model is valid only under these conditions, none of which can be
checked from the inputs:

1. rigid bodies touching at point contacts, analysed in the plane;
2. kinematics linearised about the current configuration;
3. quasistatic loading, with inertia and viscous drag neglected;
4. fingertips neither slide nor roll on the object;
5. no redundant degrees of freedom and no over-constrained grasp;
6. object and contact state fully known, with no sensing in the loop.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonPositiveFriction

SELF_LOCKING_NOTE = (
    "friction moment dominates; model predicts no opening torque needed to hold"
)


@dataclass(frozen=True)
class TorqueSensitivities:
    dT_da: float
    dT_db: float
    dT_dmu: float


@dataclass(frozen=True)
class GraspSolution:
    normal_force_n: float
    link_torque_nm: float
    holding_torque_nm: float
    geometry_feasible: bool
    applied_normal_force_n: float
    slip_margin_n: float
    crush_margin_n: float | None  # None: no crush limit, not evaluated
    sensitivities: TorqueSensitivities
    note: str | None = None


def _require_friction(mu: float) -> None:
    if not mu > 0:
        raise NonPositiveFriction(mu)


def required_normal_force(m: float, mu: float, g: float) -> float:
    """Normal reaction per finger that just prevents the object slipping."""
    _require_friction(mu)
    return m * g / (2.0 * mu)


def link_reaction_torque(R: float, mu: float, a: float, b: float) -> float:
    # Factored so the sign is exactly that of b - mu*a.
    return R * (b - mu * a)


def holding_torque(m: float, mu: float, g: float, a: float, b: float) -> float:
    """Minimum (stall) torque the drive must hold, signed.

    Composed as ``R -> T_link -> T`` rather than from the reduced form so
    the reduced form can serve as an independent check.
    """
    R = required_normal_force(m, mu, g)
    return 2.0 * link_reaction_torque(R, mu, a, b)


def equilibrium_residual(
    m: float,
    mu: float,
    g: float,
    R_applied: float,
    T_applied: float,
    a: float,
    b: float,
) -> tuple[float, float]:
    """Force and moment imbalance of an applied ``(R, T)`` pair.

    Both components vanish exactly when the pair solves the model.
    """
    sum_fy = 2.0 * mu * R_applied - m * g
    sum_m = T_applied - 2.0 * link_reaction_torque(R_applied, mu, a, b)
    return sum_fy, sum_m


def slip_margin(m: float, mu: float, g: float, R_applied: float) -> float:
    """Excess friction capacity in N; negative means the object slips."""
    return 2.0 * mu * R_applied - m * g


def crush_margin(R_applied: float, crush_limit_n: float | None) -> float | None:
    if crush_limit_n is None:
        return None
    return crush_limit_n - R_applied


def torque_sensitivities(
    m: float, mu: float, g: float, a: float, b: float
) -> TorqueSensitivities:
    _require_friction(mu)
    w = m * g
    return TorqueSensitivities(dT_da=-w, dT_db=w / mu, dT_dmu=-w * b / mu**2)


def solve_grasp(
    m: float,
    mu: float,
    g: float,
    a: float,
    b: float,
    *,
    applied_normal_force: float | None = None,
    crush_limit_n: float | None = None,
) -> GraspSolution:
    """Evaluate the full model for one configuration.

    ``applied_normal_force`` defaults to the required normal force, which
    gives a slip margin of zero.
    """
    R = required_normal_force(m, mu, g)
    t_link = link_reaction_torque(R, mu, a, b)
    T = 2.0 * t_link
    R_applied = R if applied_normal_force is None else applied_normal_force
    feasible = T > 0
    return GraspSolution(
        normal_force_n=R,
        link_torque_nm=t_link,
        holding_torque_nm=T,
        geometry_feasible=feasible,
        applied_normal_force_n=R_applied,
        slip_margin_n=slip_margin(m, mu, g, R_applied),
        crush_margin_n=crush_margin(R_applied, crush_limit_n),
        sensitivities=torque_sensitivities(m, mu, g, a, b),
        note=None if feasible else SELF_LOCKING_NOTE,
    )


def solve_scenario(scenario, applied_normal_force: float | None = None) -> GraspSolution:
    """:func:`solve_grasp` with every input taken from a validated scenario."""
    return solve_grasp(
        scenario.object.mass_kg,
        scenario.contact.mu,
        scenario.environment.g_m_s2,
        scenario.geometry.arm_a_m,
        scenario.geometry.arm_b_m,
        applied_normal_force=applied_normal_force,
        crush_limit_n=scenario.object.crush_limit_n,
    )
