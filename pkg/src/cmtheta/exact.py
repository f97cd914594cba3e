"""Exact arithmetic in cyclotomic fields Q(zeta_n), plus roots of unity as formal phases.

Elements are represented on the power basis 1, zeta, ..., zeta^(phi(n)-1) with
Fraction coefficients, reduced via the n-th cyclotomic polynomial.  Everything
here is exact; numerical embeddings are the only place floats appear.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import mpmath


def euler_phi(n: int) -> int:
    result = n
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divide_exact(num: list[int], den: list[int]) -> list[int]:
    # exact division of integer polynomials (ascending coefficients), den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]  # X^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divide_exact(num, list(cyclotomic_coeffs(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # zeta_n^m on the power basis, for m = 0 .. max(n, 2*phi-1) - 1
    phi = euler_phi(n)
    top = [-c for c in cyclotomic_coeffs(n)[:phi]]  # zeta^phi
    table: list[tuple[int, ...]] = []
    row = [1] + [0] * (phi - 1)
    for _ in range(max(n, 2 * phi - 1)):
        table.append(tuple(row))
        carry = row[phi - 1]
        row = [0] + row[:-1]
        if carry:
            row = [row[j] + carry * top[j] for j in range(phi)]
    return tuple(table)


def unit_residues(n: int) -> tuple[int, ...]:
    """Residues coprime to n, i.e. (Z/n)^* as a sorted tuple."""
    return tuple(a for a in range(1, n + 1) if math.gcd(a, n) == 1)


class CycloElem:
    """An element of Q(zeta_n), exact.

    Coefficients live on the power basis of length phi(n).  Mixed-order
    arithmetic lifts both operands into the compositum Q(zeta_lcm).
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs) -> None:
        phi = euler_phi(n)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > phi:
            table = _power_table(n)
            reduced = [Fraction(0)] * phi
            for m, c in enumerate(cs):
                if c:
                    for j, t in enumerate(table[m]):
                        reduced[j] += c * t
            cs = reduced
        else:
            cs += [Fraction(0)] * (phi - len(cs))
        self.n = n
        self.coeffs = tuple(cs)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloElem":
        coeffs = [Fraction(0)] * (k % n) + [Fraction(1)]
        return cls(n, coeffs)

    @classmethod
    def from_rational(cls, n: int, q) -> "CycloElem":
        return cls(n, [Fraction(q)])

    # -- coercion ---------------------------------------------------------

    def lift(self, m: int) -> "CycloElem":
        """Rewrite in Q(zeta_m) where n | m."""
        if m == self.n:
            return self
        assert m % self.n == 0, f"cannot lift order {self.n} into {m}"
        step = m // self.n
        coeffs = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            coeffs[step * j] = c
        return CycloElem(m, coeffs)

    @staticmethod
    def _pair(a, b):
        if isinstance(b, (int, Fraction)):
            b = CycloElem.from_rational(a.n, b)
        if not isinstance(b, CycloElem):
            return None, None
        if a.n != b.n:
            m = a.n * b.n // math.gcd(a.n, b.n)
            a, b = a.lift(m), b.lift(m)
        return a, b

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(self, other)
        if a is None:
            return NotImplemented
        return CycloElem(a.n, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.n, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, CycloElem) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElem(self.n, [c * q for c in self.coeffs])
        a, b = self._pair(self, other)
        if a is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycloElem(a.n, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElem":
        """Exact inverse, via the multiplication-by-self matrix."""
        phi = len(self.coeffs)
        cols = []
        for j in range(phi):
            cols.append((self * CycloElem.zeta(self.n, j) if j else self).coeffs)
        # solve M b = e_0 where column j of M is self * zeta^j
        rows = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(1)] + [Fraction(0)] * (phi - 1)
        sol = solve_exact(rows, rhs)
        if sol is None:
            raise ZeroDivisionError("inverse of zero (or non-unit) cyclotomic element")
        return CycloElem(self.n, sol)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        a, b = self._pair(self, other)
        if a is None:
            return NotImplemented
        return a * b.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElem.from_rational(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        if not isinstance(other, CycloElem):
            return NotImplemented
        a, b = self._pair(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                z = f"z{self.n}" if j == 1 else f"z{self.n}^{j}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- field structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        assert self.is_rational()
        return self.coeffs[0]

    def galois(self, t: int) -> "CycloElem":
        """Apply sigma_t : zeta -> zeta^t.  Requires gcd(t, n) = 1."""
        assert math.gcd(t, self.n) == 1, f"sigma_{t} is not an automorphism of Q(zeta_{self.n})"
        table = _power_table(self.n)
        phi = len(self.coeffs)
        out = [Fraction(0)] * phi
        for j, c in enumerate(self.coeffs):
            if c:
                for k, v in enumerate(table[(j * t) % self.n]):
                    out[k] += c * v
        return CycloElem(self.n, out)

    def conj(self) -> "CycloElem":
        return self.galois(self.n - 1)

    def embed(self, t: int = 1, prec: int | None = None) -> complex:
        """Numerical value under zeta -> exp(2*pi*i*t/n)."""
        if prec is None:
            z = cmath.exp(2j * cmath.pi * t / self.n)
            total, zp = 0j, 1 + 0j
            for c in self.coeffs:
                if c:
                    total += float(c) * zp
                zp *= z
            return total
        with mpmath.workdps(prec):
            z = mpmath.e ** (2j * mpmath.pi * t / self.n)
            total = mpmath.mpc(0)
            for j, c in enumerate(self.coeffs):
                if c:
                    total += mpmath.mpf(c.numerator) / c.denominator * z**j
            return complex(total)

    def degree(self) -> int:
        """Degree of Q(self) over Q, by exact linear dependence of powers."""
        basis: list[tuple[Fraction, ...]] = []
        power = CycloElem.from_rational(self.n, 1)
        for d in range(1, len(self.coeffs) + 2):
            vec = power.coeffs
            if _in_span(basis, vec):
                return d - 1
            basis.append(vec)
            power = power * self
        raise AssertionError("unreachable: powers must become dependent")


def orbit_sum(a: CycloElem, residues) -> CycloElem:
    """Sum of sigma_t(a) over t in residues."""
    total = CycloElem.from_rational(a.n, 0)
    for t in residues:
        total = total + a.galois(t)
    return total


def orbit_product(a: CycloElem, residues) -> CycloElem:
    total = CycloElem.from_rational(a.n, 1)
    for t in residues:
        total = total * a.galois(t)
    return total


def galois_conjugate(a: CycloElem, t: int) -> CycloElem:
    return a.galois(t)


def cyclo_embed(a: CycloElem, k: int = 1, prec: int | None = None) -> complex:
    assert math.gcd(k, a.n) == 1
    return a.embed(k, prec)


def is_subgroup(n: int, residues) -> bool:
    s = {t % n for t in residues}
    if 1 not in s or any(math.gcd(t, n) != 1 for t in s):
        return False
    return all((t * u) % n in s for t in s for u in s)


def rel_trace_norm(a: CycloElem, subgroup, mode: str) -> CycloElem:
    """Exact trace or norm of a over the fixed field of the given subgroup."""
    if not is_subgroup(a.n, subgroup):
        raise ValueError(f"{sorted(set(subgroup))} is not a subgroup of units mod {a.n}")
    if mode == "trace":
        return orbit_sum(a, subgroup)
    if mode == "norm":
        return orbit_product(a, subgroup)
    raise ValueError(f"mode must be 'trace' or 'norm', got {mode!r}")


def degree_over_rationals(a: CycloElem) -> int:
    return a.degree()


# -- exact linear algebra (Fractions) --------------------------------------


def solve_exact(rows, rhs):
    """Solve the square system rows * x = rhs over Fraction; None if singular."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _in_span(basis: list[tuple[Fraction, ...]], vec) -> bool:
    # row-reduce a copy of basis + vec and see whether vec adds rank
    rows = [list(b) for b in basis] + [list(vec)]
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = Fraction(1) / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank == len(basis)


class RootOfUnity:
    """e(q) = exp(2*pi*i*q) for rational q, kept exact as q mod 1."""

    __slots__ = ("exponent",)

    def __init__(self, exponent) -> None:
        self.exponent = Fraction(exponent) % 1

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(0)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + other.exponent)

    def __truediv__(self, other: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent - other.exponent)

    def __pow__(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * k)

    def conj(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    @property
    def order(self) -> int:
        return self.exponent.denominator

    def value(self) -> complex:
        return cmath.exp(2j * cmath.pi * float(self.exponent))

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        return self.exponent == other.exponent

    def __hash__(self):
        return hash(self.exponent)

    def __repr__(self):
        return f"e({self.exponent})"
