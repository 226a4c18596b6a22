"""Exact real numbers of the form sum q * pi^a * sqrt(7)^b.

Every quantity in the volume pipeline (zeta values, L-values, discriminant
powers) lives in the ring Q[pi, pi^-1, sqrt(7), sqrt(7)^-1].  Keeping these
symbolic lets the final covolume assert exact cancellation of all pi powers
instead of comparing floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

import mpmath

Rat = Fraction


class NotRational(ValueError):
    """Raised when a SymbolicReal is forced to a rational but carries pi or sqrt(7)."""


def _normalize(terms: Mapping[tuple[int, int], Fraction]) -> dict[tuple[int, int], Fraction]:
    out: dict[tuple[int, int], Fraction] = {}
    for (pi_pow, seven_half), coeff in terms.items():
        if coeff == 0:
            continue
        # Fold even powers of sqrt(7) into the rational coefficient so the
        # radical exponent is canonically 0 or 1.
        whole, rad = divmod(seven_half, 2)
        key = (pi_pow, rad)
        c = coeff * Fraction(7) ** whole
        new = out.get(key, Fraction(0)) + c
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


@dataclass(frozen=True)
class SymbolicReal:
    """Finite sum of terms q * pi^a * 7^(b/2), immutable and canonically reduced."""

    _terms: tuple[tuple[int, int, Fraction], ...]

    @staticmethod
    def from_terms(terms: Mapping[tuple[int, int], Fraction]) -> "SymbolicReal":
        norm = _normalize(terms)
        return SymbolicReal(tuple(sorted((p, s, c) for (p, s), c in norm.items())))

    @staticmethod
    def rational(q: Fraction | int) -> "SymbolicReal":
        return SymbolicReal.from_terms({(0, 0): Fraction(q)})

    @staticmethod
    def term(coeff: Fraction | int, pi_power: int = 0, seven_half_power: int = 0) -> "SymbolicReal":
        return SymbolicReal.from_terms({(pi_power, seven_half_power): Fraction(coeff)})

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "SymbolicReal") -> "SymbolicReal":
        acc: dict[tuple[int, int], Fraction] = {(p, s): c for p, s, c in self._terms}
        for p, s, c in other._terms:
            acc[(p, s)] = acc.get((p, s), Fraction(0)) + c
        return SymbolicReal.from_terms(acc)

    def __neg__(self) -> "SymbolicReal":
        return SymbolicReal(tuple((p, s, -c) for p, s, c in self._terms))

    def __sub__(self, other: "SymbolicReal") -> "SymbolicReal":
        return self + (-other)

    def __mul__(self, other: "SymbolicReal") -> "SymbolicReal":
        acc: dict[tuple[int, int], Fraction] = {}
        for p1, s1, c1 in self._terms:
            for p2, s2, c2 in other._terms:
                key = (p1 + p2, s1 + s2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return SymbolicReal.from_terms(acc)

    def as_rational(self) -> Fraction:
        """Exact rational value; raises NotRational on any pi or sqrt(7) residue."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1:
            p, s, c = self._terms[0]
            if p == 0 and s == 0:
                return c
        raise NotRational(f"not a rational value: {self}")

    def to_float(self, precision_bits: int = 64) -> mpmath.mpf:
        """Approximation good to ~2^-precision_bits relative error."""
        if precision_bits < 32:
            raise ValueError("precision_bits must be >= 32")
        with mpmath.workprec(precision_bits + 16):
            total = mpmath.mpf(0)
            for p, s, c in self._terms:
                t = mpmath.mpf(c.numerator) / c.denominator
                t *= mpmath.pi ** p
                if s:
                    t *= mpmath.sqrt(7) ** s
                total += t
            return +total

    def to_json(self) -> list[dict]:
        return [
            {"pi": p, "seven_half": s, "num": str(c.numerator), "den": str(c.denominator)}
            for p, s, c in self._terms
        ]

    @staticmethod
    def from_json(data: list[dict]) -> "SymbolicReal":
        return SymbolicReal.from_terms(
            {(int(t["pi"]), int(t["seven_half"])): Fraction(int(t["num"]), int(t["den"])) for t in data}
        )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for p, s, c in self._terms:
            factors = [str(c)]
            if p:
                factors.append(f"pi^{p}" if p != 1 else "pi")
            if s:
                factors.append("7^(1/2)")
            parts.append(" * ".join(factors))
        return " + ".join(parts)


ZERO = SymbolicReal.from_terms({})
ONE = SymbolicReal.rational(1)
PI = SymbolicReal.term(1, pi_power=1)
SQRT7 = SymbolicReal.term(1, seven_half_power=1)
