"""Exception types raised by gripsize.

Input problems derive from :class:`InputError`, physically infeasible
requests from :class:`Infeasible`. The CLI maps the two families to
distinct exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass


class GripsizeError(Exception):
    """Base class for every error raised deliberately by this package."""


class InputError(GripsizeError, ValueError):
    """Malformed or invalid user input."""


class Infeasible(GripsizeError):
    """The request is well formed but has no physical solution."""


@dataclass(frozen=True)
class InvalidField:
    """One violated invariant, addressed by a dotted field path."""

    path: str
    reason: str

    def __str__(self) -> str:
        return f"{self.path}: {self.reason}"


class ValidationError(InputError):
    """Collects every :class:`InvalidField` found in one validation pass."""

    def __init__(self, fields: list[InvalidField]):
        self.fields = list(fields)
        super().__init__("; ".join(str(f) for f in self.fields))


class NonPositiveFriction(InputError):
    def __init__(self, mu: float):
        self.mu = mu
        super().__init__(f"friction coefficient must be > 0, got {mu!r}")


class SpeedOutOfRange(InputError):
    def __init__(self, omega: float, no_load_speed: float):
        self.omega = omega
        self.no_load_speed = no_load_speed
        super().__init__(
            f"speed {omega!r} rad/s outside [0, {no_load_speed!r}] rad/s"
        )


class FreeFall(InputError):
    def __init__(self, lift_accel: float, g: float):
        self.lift_accel = lift_accel
        self.g = g
        super().__init__(
            f"lift acceleration {lift_accel!r} m/s^2 must exceed -g = {-g!r} m/s^2"
        )


class EmptyCatalog(InputError):
    def __init__(self) -> None:
        super().__init__("motor catalog is empty")


class ParseError(InputError):
    """Unreadable document, missing required key or wrongly typed value."""

    def __init__(self, message: str, *, key: str | None = None, line: int | None = None):
        self.key = key
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)


class UnknownKey(InputError):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"unknown key {key!r}")


class BadHeader(InputError):
    def __init__(self, found: list[str], expected: list[str]):
        self.found = found
        self.expected = expected
        super().__init__(
            f"catalog header {','.join(found)!r} does not match {','.join(expected)!r}"
        )


class BadRow(InputError):
    def __init__(self, line_number: int, reason: str):
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"catalog line {line_number}: {reason}")


class DuplicateId(InputError):
    def __init__(self, motor_id: str):
        self.id = motor_id
        super().__init__(f"duplicate motor id {motor_id!r}")


class InfeasibleGeometry(Infeasible):
    def __init__(self, holding_torque_nm: float):
        self.holding_torque_nm = holding_torque_nm
        super().__init__(
            "friction moment dominates (b <= mu*a); holding torque "
            f"{holding_torque_nm!r} N*m is not positive, nothing to size"
        )


class NoFeasibleMotor(Infeasible):
    def __init__(self, required_torque: float, best_shortfall: float):
        self.required_torque = required_torque
        self.best_shortfall = best_shortfall
        super().__init__(
            f"no catalog motor delivers {required_torque:.6g} N*m within its "
            f"thermal limit (smallest torque shortfall {best_shortfall:.6g} N*m)"
        )


class NoFeasiblePoint(Infeasible):
    def __init__(self, evaluated: int):
        self.evaluated = evaluated
        super().__init__(f"none of the {evaluated} grid points satisfies the constraints")
