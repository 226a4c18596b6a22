"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Elements are rational coefficient vectors in the power basis
zeta^0 .. zeta^(phi(N)-1), reduced modulo the N-th cyclotomic polynomial.
N = 7 carries the core field L = Q(zeta_7) with its quadratic subfield
K = Q(sqrt(-7)); N = 21 is used for mixed order-3/order-7 fixed point data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


class DivisionByZero(ZeroDivisionError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers (dense lists of Fractions, lowest degree first)

def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    while len(a) >= len(b) and _poly_trim(a):
        if len(a) < len(b):
            break
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q[d] = c
        for i, bi in enumerate(b):
            a[d + i] -= c * bi
        _poly_trim(a)
    return _poly_trim(q), a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, computed by dividing x^n - 1 by lower factors."""
    p = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            p, r = _poly_divmod(p, list(cyclotomic_polynomial(d)))
            assert not r
    return tuple(p)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CycElt:
    """Element of Q(zeta_N) in the power basis, canonically reduced."""

    modulus: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.coeffs) == euler_phi(self.modulus)

    # -- constructors

    @staticmethod
    def from_poly(n: int, poly: list[Fraction]) -> "CycElt":
        phi = list(cyclotomic_polynomial(n))
        _, r = _poly_divmod(_poly_trim(list(poly)), phi)
        d = euler_phi(n)
        r = r + [Fraction(0)] * (d - len(r))
        return CycElt(n, tuple(r))

    @staticmethod
    def zero(n: int) -> "CycElt":
        return CycElt(n, tuple([Fraction(0)] * euler_phi(n)))

    @staticmethod
    def one(n: int) -> "CycElt":
        return CycElt.rational(n, 1)

    @staticmethod
    def rational(n: int, q: Fraction | int) -> "CycElt":
        c = [Fraction(0)] * euler_phi(n)
        c[0] = Fraction(q)
        return CycElt(n, tuple(c))

    @staticmethod
    def zeta(n: int, power: int = 1) -> "CycElt":
        poly = [Fraction(0)] * (power % n) + [Fraction(1)]
        return CycElt.from_poly(n, poly)

    # -- ring/field structure

    def _check(self, other: "CycElt") -> None:
        if self.modulus != other.modulus:
            raise ValueError("mixed cyclotomic moduli")

    def __add__(self, other: "CycElt") -> "CycElt":
        self._check(other)
        return CycElt(self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycElt":
        return CycElt(self.modulus, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycElt") -> "CycElt":
        return self + (-other)

    def __mul__(self, other) -> "CycElt":
        if isinstance(other, (int, Fraction)):
            return CycElt(self.modulus, tuple(a * other for a in self.coeffs))
        self._check(other)
        return CycElt.from_poly(self.modulus, _poly_mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def inverse(self) -> "CycElt":
        """Field inverse via the extended Euclidean algorithm against Phi_N."""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        a = _poly_trim(list(self.coeffs))
        phi = list(cyclotomic_polynomial(self.modulus))
        r0, r1 = phi, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            qs = _poly_mul(q, s1)
            width = max(len(s0), len(qs))
            s0, s1 = s1, _poly_trim([
                (s0[i] if i < len(s0) else Fraction(0)) - (qs[i] if i < len(qs) else Fraction(0))
                for i in range(width)
            ])
        # r0 is the gcd, a nonzero constant since Phi_N is irreducible
        assert len(r0) == 1
        return CycElt.from_poly(self.modulus, [c / r0[0] for c in s0])

    def __truediv__(self, other: "CycElt") -> "CycElt":
        return self * other.inverse()

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    # -- Galois

    def galois(self, k: int) -> "CycElt":
        """Apply zeta -> zeta^k (k must be a unit mod N)."""
        n = self.modulus
        if gcd(k, n) != 1:
            raise ValueError(f"exponent {k} not invertible mod {n}")
        poly = [Fraction(0)] * (n + euler_phi(n))
        for i, c in enumerate(self.coeffs):
            poly[(i * k) % n] += c
        return CycElt.from_poly(n, poly)

    def conjugate(self) -> "CycElt":
        return self.galois(self.modulus - 1)

    def is_real(self) -> bool:
        return self.conjugate() == self

    # -- numerics

    def interval(self, prec: int):
        """Certified mpmath interval enclosing the (real part of the) value.

        Only meaningful as a total value for real elements; used by sign().
        """
        with mpmath.workprec(prec):
            iv = mpmath.iv
            iv.prec = prec
            two_pi = 2 * iv.pi
            n = self.modulus
            total = iv.mpf(0)
            for i, c in enumerate(self.coeffs):
                if c:
                    coeff = iv.mpf(c.numerator) / iv.mpf(c.denominator)
                    total += coeff * iv.cos(two_pi * i / n)
            return total

    def complex_value(self, prec: int = 64) -> complex:
        with mpmath.workprec(prec):
            z = mpmath.exp(2j * mpmath.pi / self.modulus)
            return complex(sum(complex(c) * z ** i for i, c in enumerate(self.coeffs)))

    def sign(self) -> int:
        """Exact sign (-1, 0, +1) of a real cyclotomic number.

        Zero is decided structurally (canonical coefficients); otherwise the
        certified cosine-interval evaluation is refined until 0 is excluded.
        """
        if not self.is_real():
            raise ValueError("sign of a non-real cyclotomic number")
        if self.is_zero():
            return 0
        prec = 64
        while True:
            box = self.interval(prec)
            if box.a > 0:
                return 1
            if box.b < 0:
                return -1
            prec *= 2
            if prec > 1 << 16:
                raise RuntimeError("sign refinement failed to separate from zero")

    # -- traces and norms

    def trace_to_K(self) -> "CycElt":
        """Trace from L = Q(zeta_7) to K = Q(sqrt(-7)): a + a^sigma + a^sigma^2."""
        self._require_mod7()
        return self + self.galois(2) + self.galois(4)

    def norm_to_K(self) -> "CycElt":
        """Norm from L to K: a * a^sigma * a^sigma^2."""
        self._require_mod7()
        return self * self.galois(2) * self.galois(4)

    def rational_norm(self) -> Fraction:
        """Absolute norm: product over all phi(N) Galois conjugates."""
        n = self.modulus
        prod = CycElt.one(n)
        for k in range(1, n):
            if gcd(k, n) == 1:
                prod = prod * self.galois(k)
        return prod.as_rational()

    def norm_K_to_Q(self) -> Fraction:
        """Norm of an element of the subfield K down to Q (x * conj(x))."""
        if not self.in_K():
            raise ValueError("element not in K")
        return (self * self.conjugate()).as_rational()

    def in_K(self) -> bool:
        """True when the element lies in the sigma-fixed subfield K (N = 7)."""
        self._require_mod7()
        return self.galois(2) == self

    def _require_mod7(self) -> None:
        if self.modulus != 7:
            raise ValueError("operation defined for Q(zeta_7) only")

    # -- serialization / display

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "CycElt":
        return CycElt(int(data["modulus"]), tuple(Fraction(c) for c in data["coeffs"]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                z = f"z^{i}" if i > 1 else "z"
                parts.append(z if c == 1 else f"{c}*{z}")
        return " + ".join(parts)


@dataclass(frozen=True)
class GaloisAuto:
    """The automorphism zeta_N -> zeta_N^k of Q(zeta_N)."""

    modulus: int
    exponent: int

    def __post_init__(self):
        if gcd(self.exponent, self.modulus) != 1:
            raise ValueError("exponent must be invertible mod N")

    def __call__(self, a: CycElt) -> CycElt:
        if a.modulus != self.modulus:
            raise ValueError("modulus mismatch")
        return a.galois(self.exponent)

    def compose(self, other: "GaloisAuto") -> "GaloisAuto":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        return GaloisAuto(self.modulus, (self.exponent * other.exponent) % self.modulus)


# distinguished elements of L = Q(zeta_7)

def zeta7() -> CycElt:
    return CycElt.zeta(7)


def lam() -> CycElt:
    """lambda = zeta + zeta^2 + zeta^4 = (-1 + sqrt(-7)) / 2, generator of o_K."""
    z = zeta7()
    return z + z.galois(2) + z.galois(4)


def lam_bar() -> CycElt:
    return lam().conjugate()


def alpha() -> CycElt:
    """alpha = lambda / lambda_bar, the cyclic-algebra parameter."""
    return lam() / lam_bar()


SIGMA = GaloisAuto(7, 2)
