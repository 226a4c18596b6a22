"""Cyclic quotient singularities: resolution chains, defects, and heights.

A point of type (n,q) resolves into a Hirzebruch-Jung chain of rational
curves read off from the continued fraction of n/q.  Dedekind sums give the
signature defect of each point; Euler and signature heights of an orbifold
surface then behave multiplicatively under coverings, which also drives the
exhaustive branch-data solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement


class NotPrimitive(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


@dataclass(frozen=True)
class CyclicSingularity:
    n: int
    q: int

    def __post_init__(self):
        if self.n < 2 or not (1 <= self.q < self.n) or math.gcd(self.n, self.q) != 1:
            raise ValueError(f"({self.n},{self.q}) is not a valid cyclic type")


@dataclass(frozen=True)
class HJChain:
    self_intersections: tuple[int, ...]

    def intersection_matrix(self) -> list[list[int]]:
        r = len(self.self_intersections)
        m = [[0] * r for _ in range(r)]
        for i, b in enumerate(self.self_intersections):
            m[i][i] = b
            if i + 1 < r:
                m[i][i + 1] = m[i + 1][i] = 1
        return m

    def determinant(self) -> int:
        m = [row[:] for row in self.intersection_matrix()]
        rows = [[Fraction(v) for v in row] for row in m]
        det = Fraction(1)
        n = len(rows)
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
            if piv is None:
                return 0
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det *= rows[col][col]
            for r in range(col + 1, n):
                if rows[r][col] != 0:
                    f = rows[r][col] / rows[col][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        assert det.denominator == 1
        return int(det)


@dataclass(frozen=True)
class OrbifoldSurface:
    euler: Fraction
    signature: Fraction
    points: tuple[CyclicSingularity, ...]


def hj_expand(s: CyclicSingularity) -> HJChain:
    """Continued fraction n/q = b1 - 1/(b2 - 1/(...)), all b_i >= 2."""
    n, q = s.n, s.q
    digits = []
    while q:
        b = -((-n) // q)  # ceil(n/q)
        digits.append(b)
        n, q = q, b * q - n
    return HJChain(tuple(-b for b in digits))


def singularity_type_from_rotation(n: int, a: int, b: int) -> CyclicSingularity:
    """Type of the quotient by diag(zeta_n^a, zeta_n^b) with gcd(a,n)=1."""
    if math.gcd(a, n) != 1 or math.gcd(b, n) != 1:
        raise NotPrimitive("rotation eigenvalues must be primitive n-th roots")
    q = (b * pow(a, -1, n)) % n
    return CyclicSingularity(n, q)


def _sawtooth(x: Fraction) -> Fraction:
    x = x - math.floor(x)
    if x == 0:
        return Fraction(0)
    return x - Fraction(1, 2)


def dedekind_sum(q: int, n: int) -> Fraction:
    if n < 1 or math.gcd(q, n) != 1:
        raise ValueError("need n >= 1 and gcd(q,n) = 1")
    return sum((_sawtooth(Fraction(k, n)) * _sawtooth(Fraction(k * q, n))
                for k in range(1, n)), Fraction(0))


def signature_defect(s: CyclicSingularity) -> Fraction:
    return -4 * dedekind_sum(s.q, s.n)


def euler_height(x: OrbifoldSurface) -> Fraction:
    return Fraction(x.euler) - sum((1 - Fraction(1, p.n) for p in x.points),
                                   Fraction(0))


def signature_height(x: OrbifoldSurface) -> Fraction:
    return Fraction(x.signature) - sum((signature_defect(p) for p in x.points),
                                       Fraction(0))


def check_cover_multiplicativity(y_euler: Fraction, y_sign: Fraction,
                                 x: OrbifoldSurface, degree: int) -> bool:
    """Euler and signature of a smooth finite cover against heights times degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return (Fraction(y_euler) == degree * euler_height(x)
            and Fraction(y_sign) == degree * signature_height(x))


def resolve_invariants(x: OrbifoldSurface) -> tuple[Fraction, Fraction, int]:
    """Invariants of the minimal resolution: each exceptional curve of every
    resolution chain bumps the Euler number by one and drops the signature
    by one (the chains are negative definite)."""
    blowups = sum(len(hj_expand(p).self_intersections) for p in x.points)
    return (Fraction(x.euler) + blowups, Fraction(x.signature) - blowups, blowups)


def solve_branch_data(total_euler: Fraction, total_sign: Fraction,
                      known_points: list[CyclicSingularity],
                      target_euler_height: Fraction,
                      target_sign_height: Fraction,
                      d_max: int) -> list[tuple[int, tuple[CyclicSingularity, ...]]]:
    """All multisets of extra quotient points matching both height targets.

    Enumerates multisets of types (d, e) with 2 <= d <= d_max exhaustively;
    the multiset size is bounded because every point costs at least 1/2 of
    Euler height.
    """
    if d_max < 2:
        raise ValueError("d_max must be >= 2")
    base = OrbifoldSurface(Fraction(total_euler), Fraction(total_sign),
                           tuple(known_points))
    e_budget = euler_height(base) - Fraction(target_euler_height)
    s_budget = signature_height(base) - Fraction(target_sign_height)
    if e_budget < 0:
        return []
    types = [CyclicSingularity(d, e)
             for d in range(2, d_max + 1)
             for e in range(1, d) if math.gcd(d, e) == 1]
    max_points = int(e_budget / Fraction(1, 2))
    solutions = []
    for r in range(max_points + 1):
        for combo in combinations_with_replacement(types, r):
            e_used = sum((1 - Fraction(1, p.n) for p in combo), Fraction(0))
            if e_used != e_budget:
                continue
            s_used = sum((signature_defect(p) for p in combo), Fraction(0))
            if s_used == s_budget:
                solutions.append((r, combo))
    return solutions


def chain_divisor_system(chain: HJChain, k: int,
                         d: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Exact solution a of M a = (k - d_1, -d_2, ..., -d_r) on a chain whose
    leading curve meets the canonical class with multiplicity k."""
    m = chain.intersection_matrix()
    r = len(m)
    if len(d) != r:
        raise ValueError("d must match the chain length")
    rhs = [Fraction(k) - Fraction(d[0])] + [-Fraction(di) for di in d[1:]]
    rows = [[Fraction(v) for v in row] + [rhs[i]] for i, row in enumerate(m)]
    for col in range(r):
        piv = next((rr for rr in range(col, r) if rows[rr][col] != 0), None)
        if piv is None:
            raise SingularMatrix("chain intersection matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for rr in range(r):
            if rr != col and rows[rr][col] != 0:
                f = rows[rr][col]
                rows[rr] = [v - f * w for v, w in zip(rows[rr], rows[col])]
    a = tuple(rows[i][r] for i in range(r))
    # substitute back
    for i in range(r):
        acc = sum(Fraction(m[i][j]) * a[j] for j in range(r))
        expect = (Fraction(k) if i == 0 else Fraction(0)) - Fraction(d[i])
        assert acc == expect
    return a
