"""Exact symplectic-group machinery and the action on the Siegel upper half-space.

Integer matrices are kept exact as numpy object arrays (arbitrary-precision
Python ints), so multiplier computations and congruence tests never overflow.
Only act_siegel and SiegelPoint work in floating point.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np


def intmat(rows) -> np.ndarray:
    """Exact integer matrix (dtype=object) from nested lists/arrays."""
    arr = np.array(rows, dtype=object)
    assert arr.ndim == 2
    for v in arr.flat:
        assert v == int(v), f"non-integer entry {v!r}"
    return np.vectorize(int, otypes=[object])(arr)


def identity(n: int) -> np.ndarray:
    return intmat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def jmat(g: int) -> np.ndarray:
    z, i = np.zeros((g, g), dtype=object), identity(g)
    return np.block([[z, -i], [i, z]])


def blocks(m: np.ndarray):
    """Split a 2g x 2g matrix into (A, B, C, D)."""
    g = m.shape[0] // 2
    return m[:g, :g], m[:g, g:], m[g:, :g], m[g:, g:]


def sympl_multiplier(m, modulus: int | None = None):
    """The similitude nu with tM J M = nu J, or None if M is not in GSp.

    Over Z the unit condition forces nu in {1, -1}; for a modulus the
    congruence is checked mod modulus and nu must be coprime to it.
    """
    m = intmat(m)
    g = m.shape[0] // 2
    t = m.T @ jmat(g) @ m
    nu = -t[0, g]
    target = nu * jmat(g)
    if modulus is None:
        if not (t == target).all():
            return None
        return int(nu) if nu in (1, -1) else None
    if ((t - target) % modulus != 0).any():
        return None
    nu = int(nu) % modulus
    from math import gcd

    return nu if gcd(nu, modulus) == 1 else None


def is_symplectic(m) -> bool:
    return sympl_multiplier(m) == 1


def in_gamma(m, n: int) -> bool:
    """Membership in the principal congruence subgroup Gamma(n) of Sp_2g(Z)."""
    m = intmat(m)
    if not is_symplectic(m):
        return False
    return ((m - identity(m.shape[0])) % n == 0).all()


def _even_theta_diagonals(m) -> bool:
    a, b, c, d = blocks(m)
    return all((a.T @ c)[j, j] % 2 == 0 for j in range(a.shape[0])) and all(
        (b.T @ d)[j, j] % 2 == 0 for j in range(a.shape[0])
    )


def in_s_group(m, n: int) -> bool:
    """S_n: symplectic mod n with even diagonals of tAC and tBD.

    Parity is read off the supplied integer representative; for even n it is
    independent of the choice of lift.
    """
    return sympl_multiplier(m, modulus=n) == 1 % n and _even_theta_diagonals(intmat(m))


def in_g_group(m, n: int) -> bool:
    """G_n: GSp mod n (any unit multiplier) with the same parity condition."""
    return sympl_multiplier(m, modulus=n) is not None and _even_theta_diagonals(intmat(m))


def membership(m, which: str, n: int | None = None) -> bool:
    """Dispatch on which in {"Sp", "Gamma", "S", "G"} (the latter three need n)."""
    if which == "Sp":
        return is_symplectic(m)
    assert n is not None, f"{which} membership needs a level"
    return {"Gamma": in_gamma, "S": in_s_group, "G": in_g_group}[which](m, n)


def iota(a: int, g: int, modulus: int | None = None) -> np.ndarray:
    """iota(a) = diag(I_g, a^{-1} I_g); nu(iota(a)) = a^{-1}."""
    if modulus is None:
        assert a in (1, -1), "over Z only a = +-1 is invertible"
        ainv = a
    else:
        ainv = pow(a, -1, modulus)
    m = identity(2 * g)
    for j in range(g, 2 * g):
        m[j, j] = ainv
    return m


def special_gamma(kind: str, j: int, k: int, n: int, g: int = 2) -> np.ndarray:
    """Distinguished generators of Gamma(n), indexed by 1-based (j, k).

    kind is "upper", "lower" or "mixed"; the seed block is E_jj on the
    diagonal and the symmetrized E_jk + E_kj off it, which keeps all three
    shapes inside Sp_2g(Z).
    """
    assert 1 <= j <= g and 1 <= k <= g, "generator indices are 1-based"
    a0 = intmat(np.zeros((g, g), dtype=int))
    if j == k:
        a0[j - 1, j - 1] = 1
    else:
        a0[j - 1, k - 1] = 1
        a0[k - 1, j - 1] = 1
    i, z = identity(g), intmat(np.zeros((g, g), dtype=int))
    na = n * a0
    if kind == "upper":
        m = np.block([[i, na], [z, i]])
    elif kind == "lower":
        m = np.block([[i, z], [na, i]])
    elif kind == "mixed":
        m = np.block([[i - na, na], [-na, i + na]])
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    assert in_gamma(m, n)
    return m


# -- Siegel upper half-space ------------------------------------------------


class SiegelPoint:
    """A point of the Siegel upper half-space H_g, validated on construction.

    Small symmetry defects (from floating-point matrix actions) are repaired
    by symmetrization; genuine asymmetry or a non-positive-definite imaginary
    part raises ValueError.
    """

    def __init__(self, mat, sym_tol: float = 1e-9) -> None:
        z = np.asarray(mat, dtype=complex)
        if z.ndim != 2 or z.shape[0] != z.shape[1]:
            raise ValueError("Siegel point must be a square matrix")
        defect = np.abs(z - z.T).max()
        if defect > sym_tol * max(1.0, np.abs(z).max()):
            raise ValueError(f"matrix is not symmetric (defect {defect:.3g})")
        z = (z + z.T) / 2
        eigs = np.linalg.eigvalsh(z.imag)
        if eigs.min() <= 1e-12:
            raise ValueError(f"imaginary part is not positive definite (min eig {eigs.min():.3g})")
        self.mat = z
        self.g = z.shape[0]
        self.min_im_eig = float(eigs.min())

    def __repr__(self):
        return f"SiegelPoint(g={self.g}, min_im_eig={self.min_im_eig:.4g})"


def act_siegel(m, z, rcond_min: float = 1e-10) -> SiegelPoint:
    """gamma(Z) = (AZ + B)(CZ + D)^{-1} for gamma in GSp_2g^+."""
    zp = z.mat if isinstance(z, SiegelPoint) else np.asarray(z, dtype=complex)
    m = intmat(m)
    a, b, c, d = (blk.astype(float) for blk in blocks(m))
    den = c @ zp + d
    sv = np.linalg.svd(den, compute_uv=False)
    if sv.min() / sv.max() < rcond_min:
        raise ValueError(f"CZ + D nearly singular (rcond {sv.min() / sv.max():.3g})")
    w = (a @ zp + b) @ np.linalg.inv(den)
    return SiegelPoint(w)
