"""Products of theta constants and the even-level modularity criterion.

A family is a formal product prod_i Phi_[r_i; s_i]^{m_i} with all
characteristics in (1/N)Z^2g for an even level N.  Such a product is modular
for Gamma(N) exactly when the integer congruences checked by check_family
hold; gamma_multiplier computes the obstruction e(X) for individual gamma.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import RootOfUnity
from .symplectic import blocks, identity, intmat
from .theta import Characteristic, EvalSettings, DEFAULT_SETTINGS, phi_eval, theta_null


@dataclass(frozen=True)
class ThetaProduct:
    """prod_i Phi_{chi_i}^{m_i} with canonical, distinct, non-vanishing characteristics."""

    level: int
    terms: tuple[tuple[Characteristic, int], ...]

    def __post_init__(self):
        assert self.level % 2 == 0 and self.level > 0, "level must be a positive even integer"
        seen = set()
        for chi, m in self.terms:
            for v in chi.r + chi.s:
                assert (self.level * v).denominator == 1, f"{chi} is not (1/{self.level})-integral"
            assert chi.is_canonical(), f"{chi} is not reduced into [0,1)"
            assert not chi.in_sigma_minus(), f"{chi} indexes the zero function"
            assert m != 0, "exponents must be nonzero"
            assert chi not in seen, f"duplicate characteristic {chi}"
            seen.add(chi)

    @property
    def g(self) -> int:
        return self.terms[0][0].g if self.terms else 2

    def __mul__(self, other: "ThetaProduct") -> "ThetaProduct":
        assert self.level == other.level
        return theta_product(self.level, self.terms + other.terms)

    def __pow__(self, k: int) -> "ThetaProduct":
        return theta_product(self.level, tuple((chi, m * k) for chi, m in self.terms))


def theta_product(level: int, terms) -> ThetaProduct:
    """Build a ThetaProduct, canonicalizing characteristics and merging duplicates.

    Reduction here is mod-1 bookkeeping on the family's index set (translation
    phases are not tracked); exponent-zero terms are dropped.
    """
    merged: dict[Characteristic, int] = {}
    for chi, m in terms:
        red = chi if chi.is_canonical() else chi.reduce()[0]
        merged[red] = merged.get(red, 0) + m
    kept = tuple((chi, m) for chi, m in merged.items() if m != 0)
    return ThetaProduct(level, kept)


def serialize(prod: ThetaProduct) -> str:
    lines = [f"{prod.g} {prod.level}"]
    for chi, m in prod.terms:
        parts = [str(m)] + [str(v) for v in chi.r] + [str(v) for v in chi.s]
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def parse(text: str) -> ThetaProduct:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln]
    g, level = (int(v) for v in rows[0].split())
    terms = []
    for ln in rows[1:]:
        parts = ln.split()
        assert len(parts) == 1 + 2 * g, f"expected m and {2 * g} rationals: {ln!r}"
        m = int(parts[0])
        vals = [Fraction(p) for p in parts[1:]]
        terms.append((Characteristic.make(vals[:g], vals[g:]), m))
    return theta_product(level, terms)


@dataclass
class FamilyCheck:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def check_family(prod: ThetaProduct, n: int | None = None) -> FamilyCheck:
    """Exact modularity test for Gamma(level).

    With n_i = level * r_i and t_i = level * s_i (integer vectors), requires
    for all coordinate pairs (j, k):

        sum_i m_i n_ij n_ik = 0  (mod 2*level)
        sum_i m_i t_ij t_ik = 0  (mod 2*level)
        sum_i m_i n_ij t_ik = 0  (mod level)
    """
    if n is not None and n != prod.level:
        prod = ThetaProduct(n, prod.terms)  # re-validate at the requested level
    n = prod.level
    g = prod.g
    nr = [[int(n * v) for v in chi.r] for chi, _ in prod.terms]
    ns = [[int(n * v) for v in chi.s] for chi, _ in prod.terms]
    ms = [m for _, m in prod.terms]
    failures = []
    for j in range(g):
        for k in range(g):
            srr = sum(m * a[j] * a[k] for m, a in zip(ms, nr))
            sss = sum(m * b[j] * b[k] for m, b in zip(ms, ns))
            srs = sum(m * a[j] * b[k] for m, a, b in zip(ms, nr, ns))
            if j <= k and srr % (2 * n):
                failures.append(("rr", j, k, srr % (2 * n), 2 * n))
            if j <= k and sss % (2 * n):
                failures.append(("ss", j, k, sss % (2 * n), 2 * n))
            if srs % n:
                failures.append(("rs", j, k, srs % n, n))
    return FamilyCheck(ok=not failures, failures=failures)


def _char_multiplier_exponent(gamma_over_n, n: int, chi: Characteristic) -> Fraction:
    a0, b0, c0, d0 = gamma_over_n
    nr = np.array([int(n * v) for v in chi.r], dtype=object)
    ns = np.array([int(n * v) for v in chi.s], dtype=object)
    half = Fraction(n, 2)
    m_rr = -b0.T + n * (a0 @ b0.T)
    m_ss = c0 + n * (c0 @ d0.T)
    m_rs = a0 + half * (a0 @ d0.T + d0.T @ a0 + b0 @ c0.T - b0.T @ c0)
    x = (
        -Fraction(1, 2 * n) * (nr @ (m_rr @ nr))
        - Fraction(1, 2 * n) * (ns @ (m_ss @ ns))
        - Fraction(1, n) * (nr @ (m_rs @ ns))
    )
    return Fraction(x)


def gamma_multiplier(gamma, target, n: int) -> RootOfUnity:
    """The exact multiplier e(X) with Phi(gamma Z) = e(X) Phi(Z), gamma in Gamma(n).

    target may be a single Characteristic or a ThetaProduct (multipliers add
    with the exponents).  n must be even and gamma = I mod n.
    """
    assert n % 2 == 0
    gamma = intmat(gamma)
    diff = gamma - identity(gamma.shape[0])
    assert (diff % n == 0).all(), "gamma is not congruent to I mod n"
    over = np.vectorize(lambda v: v // n, otypes=[object])(diff)
    gb = blocks(over)
    if isinstance(target, Characteristic):
        return RootOfUnity(_char_multiplier_exponent(gb, n, target))
    total = Fraction(0)
    for chi, m in target.terms:
        total += m * _char_multiplier_exponent(gb, n, chi)
    return RootOfUnity(total)


def eval_product(prod: ThetaProduct, z, settings: EvalSettings = DEFAULT_SETTINGS) -> complex:
    """Numerical value of the product at Z, sharing one theta-null denominator."""
    den = theta_null(z, settings)
    value = 1 + 0j
    for chi, m in prod.terms:
        value *= phi_eval(chi, z, settings, null_value=den) ** m
    return value
