"""Exact dimension formula for spaces of automorphic forms on the 2-ball.

The dimension of the weight-k space is a finite sum over fixed-point
conjugacy classes.  Each class contributes its virtual Euler number times a
root of unity to the k-th power, divided by the class order and r+1, times
a power-series coefficient R(r, k).  All arithmetic happens in Q(zeta_21)
so order-7 and order-3 rotation data mix exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .cyclotomic import CycElt, euler_phi


class EigenvalueOne(ValueError):
    pass


class NotAnInteger(ValueError):
    pass


@dataclass(frozen=True)
class FixedPointClass:
    r: int
    virtual_euler: Fraction
    j: CycElt
    m: int
    normal_eigenvalues: tuple[CycElt, ...]

    def __post_init__(self):
        if self.r not in (0, 2):
            raise ValueError("fixed set dimension must be 0 or 2")
        if self.r == 2 and (self.normal_eigenvalues or self.j != CycElt.one(self.j.modulus)):
            raise ValueError("a 2-dimensional fixed set has no normal data and j = 1")
        if self.r == 0 and len(self.normal_eigenvalues) != 2:
            raise ValueError("an isolated fixed point carries exactly 2 eigenvalues")
        if self.m < 1:
            raise ValueError("class order must be positive")


@dataclass(frozen=True)
class ClassDataset:
    label: str
    cyclotomic_modulus: int
    classes: tuple[FixedPointClass, ...]

    def conjugated(self, s: int) -> "ClassDataset":
        """Apply zeta -> zeta^s to every root of unity in the dataset."""
        n = self.cyclotomic_modulus
        if math.gcd(s, n) != 1:
            raise ValueError("s must be coprime to the modulus")
        out = tuple(
            FixedPointClass(c.r, c.virtual_euler, c.j.galois(s), c.m,
                            tuple(e.galois(s) for e in c.normal_eigenvalues))
            for c in self.classes)
        return ClassDataset(self.label, n, out)


def R_coefficient(r: int, k: int,
                  normal_eigenvalues: tuple[CycElt, ...] = ()) -> CycElt:
    """Coefficient of z^r in (1-z)^{3k-1} * prod 1/(1 - nu_i + nu_i z)."""
    if r == 2:
        if normal_eigenvalues:
            raise ValueError("r = 2 takes no normal eigenvalues")
        return CycElt.rational(21, Fraction(math.comb(3 * k - 1, 2)))
    if r == 0:
        if len(normal_eigenvalues) != 2:
            raise ValueError("r = 0 needs exactly 2 eigenvalues")
        n = normal_eigenvalues[0].modulus
        acc = CycElt.one(n)
        for nu in normal_eigenvalues:
            fac = CycElt.one(n) - nu
            if fac.is_zero():
                raise EigenvalueOne("normal eigenvalue 1 makes R undefined")
            acc = acc * fac
        return acc.inverse()
    raise ValueError("only r in {0, 2} occurs on a 2-ball quotient")


def dimension(dataset: ClassDataset, k: int) -> int:
    """Exact class sum for the weight-k dimension; must come out a
    nonnegative rational integer."""
    if k < 2:
        raise ValueError("weights below 2 are out of scope")
    n = dataset.cyclotomic_modulus
    total = CycElt.zero(n)
    for c in dataset.classes:
        jk = CycElt.one(n)
        for _ in range(k):
            jk = jk * c.j
        coeff = R_coefficient(c.r, k, c.normal_eigenvalues)
        w = Fraction(c.virtual_euler, c.m * (c.r + 1))
        total = total + (jk * coeff) * w
    if total != total.conjugate():
        raise NotAnInteger(f"class sum {total} is not real")
    if not total.is_rational():
        raise NotAnInteger(f"class sum {total} is not rational")
    val = total.as_rational()
    if val.denominator != 1 or val < 0:
        raise NotAnInteger(f"class sum {val} is not a nonnegative integer")
    return int(val)


# ---------------------------------------------------------------------------
# dataset fixtures

def _root(spec: list, n: int) -> CycElt:
    mod, e = spec
    if mod != n:
        raise ValueError("dataset root of unity modulus mismatch")
    return CycElt.zeta(n, e)


def _load(name: str) -> ClassDataset:
    raw = json.loads(resources.files("ballquot.data")
                     .joinpath(name).read_text())
    n = raw["cyclotomic_modulus"]
    classes = tuple(
        FixedPointClass(
            r=c["r"],
            virtual_euler=Fraction(c["virtual_euler"]),
            j=_root(c["j"], n),
            m=c["m"],
            normal_eigenvalues=tuple(_root(e, n) for e in c["normal_eigenvalues"]),
        )
        for c in raw["classes"])
    return ClassDataset(raw["label"], n, classes)


def build_gamma_dataset() -> ClassDataset:
    return _load("classes_gamma.json")


def build_gamma_tilde_dataset() -> ClassDataset:
    return _load("classes_gamma_tilde.json")
