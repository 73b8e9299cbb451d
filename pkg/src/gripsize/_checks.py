"""Invariant checking helpers shared by the validators."""

from __future__ import annotations

import math
from numbers import Real

from .errors import InvalidField, ValidationError


def is_finite_number(value) -> bool:
    return (
        not isinstance(value, bool)
        and isinstance(value, Real)
        and math.isfinite(value)
    )


class Checker:
    """Accumulates violations instead of stopping at the first one."""

    def __init__(self) -> None:
        self.issues: list[InvalidField] = []

    def fail(self, path: str, reason: str) -> None:
        self.issues.append(InvalidField(path, reason))

    def number(self, path: str, value) -> bool:
        if isinstance(value, bool) or not isinstance(value, Real):
            self.fail(path, "must be a number")
            return False
        if not math.isfinite(value):
            self.fail(path, "must be finite")
            return False
        return True

    def positive(self, path: str, value) -> None:
        if self.number(path, value) and not value > 0:
            self.fail(path, "must be > 0")

    def non_negative(self, path: str, value) -> None:
        if self.number(path, value) and not value >= 0:
            self.fail(path, "must be >= 0")

    def at_least(self, path: str, value, bound: float) -> None:
        if self.number(path, value) and not value >= bound:
            self.fail(path, f"must be >= {bound:g}")

    def greater(self, path: str, value, bound: float, label: str | None = None) -> None:
        if self.number(path, value) and not value > bound:
            self.fail(path, f"must be > {label or format(bound, 'g')}")

    def within(self, path: str, value, lo: float, hi: float, lo_open: bool = False) -> None:
        if not self.number(path, value):
            return
        if lo_open and not value > lo:
            self.fail(path, f"must be > {lo:g}")
        elif not lo_open and not value >= lo:
            self.fail(path, f"must be >= {lo:g}")
        elif not value <= hi:
            self.fail(path, f"must be <= {hi:g}")

    def integer_at_least(self, path: str, value, bound: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail(path, "must be an integer")
        elif value < bound:
            self.fail(path, f"must be >= {bound}")

    def raise_if_any(self) -> None:
        if self.issues:
            raise ValidationError(self.issues)
