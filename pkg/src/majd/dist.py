"""Generating polynomials sum_x q^stat(x), stored as coefficient vectors."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

__all__ = ["DistPolynomial"]


@dataclass(frozen=True)
class DistPolynomial:
    """``coeffs[m]`` counts the objects whose statistic equals ``m``.

    Trailing zeros are stripped on construction, so equality of two
    instances is equality of the polynomials.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "DistPolynomial":
        counts = Counter(values)
        if not counts:
            return cls(())
        if min(counts) < 0:
            raise ValueError("statistic values must be nonnegative")
        return cls(tuple(counts.get(m, 0) for m in range(max(counts) + 1)))

    @classmethod
    def from_record(cls, record: dict) -> "DistPolynomial":
        return cls(tuple(record["coeffs"]))

    def to_record(self) -> dict:
        return {"coeffs": list(self.coeffs)}

    def __add__(self, other: "DistPolynomial") -> "DistPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return DistPolynomial(tuple(x + y for x, y in zip(a, b)))

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = [f"{c}*q^{m}" if m else str(c) for m, c in enumerate(self.coeffs) if c]
        return " + ".join(terms) or "0"
