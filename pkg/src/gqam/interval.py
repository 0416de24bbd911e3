from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation
from .rational import Extended, as_extended, fmt, is_finite


@dataclass(frozen=True)
class OpenInterval:
    """Open interval ``(left, right)`` of the extended line."""

    left: Extended
    right: Extended

    def __post_init__(self):
        object.__setattr__(self, "left", as_extended(self.left))
        object.__setattr__(self, "right", as_extended(self.right))
        if not self.left < self.right:
            raise InvariantViolation(f"interval: left < right required, got ({fmt(self.left)}, {fmt(self.right)})")

    def __contains__(self, x) -> bool:
        return self.left < x < self.right

    @property
    def bounded(self) -> bool:
        return is_finite(self.left) and is_finite(self.right)

    def interior_point(self) -> Fraction:
        """A deterministic rational point of the interval."""
        if self.bounded:
            return (self.left + self.right) / 2
        if is_finite(self.left):
            return self.left + 1
        if is_finite(self.right):
            return self.right - 1
        return Fraction(0)

    def __str__(self) -> str:
        return f"({fmt(self.left)}, {fmt(self.right)})"
