"""Group actions on theta constants through their characteristics.

Three mechanisms: the iota-twist on Fourier coefficients (substitutes s -> a s),
the action of G_N on the family of 2N^2-th powers (pure characteristic
bookkeeping through the transpose), and the action on a single theta constant
of odd denominator, which carries an explicit root-of-unity multiplier.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import RootOfUnity
from .symplectic import in_g_group, intmat, sympl_multiplier
from .theta import Characteristic


@dataclass(frozen=True)
class ActionResult:
    multiplier: RootOfUnity
    chi_out: Characteristic

    def canonical(self) -> "ActionResult":
        """Fold the translation phase of reducing chi_out into the multiplier."""
        red, extra = self.chi_out.reduce()
        return ActionResult(self.multiplier * extra, red)


def _transpose_apply(alpha, chi: Characteristic) -> Characteristic:
    col = chi.column()
    at = intmat(alpha).T
    g = chi.g
    out = [sum((Fraction(int(at[i, j])) * col[j] for j in range(2 * g)), Fraction(0)) for i in range(2 * g)]
    return Characteristic.make(out[:g], out[g:])


def act_iota_inv(a: int, chi: Characteristic, modulus: int | None = None) -> Characteristic:
    """Characteristic of Phi^{iota(a)^{-1}}: (r, s) -> (r, a s), canonical.

    In the power-family context the reduction is free of phase; modulus, if
    given, only validates that a is a unit there.
    """
    if modulus is not None:
        pow(a, -1, modulus)  # raises if not a unit
    moved = Characteristic.make(chi.r, [a * v for v in chi.s])
    return moved.reduce()[0]


def act_power_family(alpha, chi: Characteristic, n: int) -> Characteristic:
    """Action of alpha in G_n on the family of 2n^2-th powers: chi -> t(alpha) chi mod 1."""
    assert n % 2 == 0, "family level must be even"
    assert all((n * v).denominator == 1 for v in chi.r + chi.s), f"{chi} not (1/{n})-integral"
    if not in_g_group(alpha, n):
        raise ValueError("alpha is not in G_n")
    return _transpose_apply(alpha, chi).reduce()[0]


def act_phi(alpha, chi: Characteristic, m: int) -> ActionResult:
    """Action on a single Phi_[r;s] with odd denominator m, alpha in G_{2m^2}.

    Returns the multiplier e((tr.a.s - tr'.s')/2) together with the raw image
    [r'; s'] = t(alpha)[r; s]; canonical reduction (and its translation phase)
    is left to the caller via ActionResult.canonical().
    """
    assert m % 2 == 1, "denominator must be odd"
    assert all((m * v).denominator == 1 for v in chi.r + chi.s), f"{chi} not (1/{m})-integral"
    level = 2 * m * m
    if not in_g_group(alpha, level):
        raise ValueError("alpha is not in G_{2m^2}")
    a = sympl_multiplier(alpha, modulus=level)
    moved = _transpose_apply(alpha, chi)
    before = sum((rv * a * sv for rv, sv in zip(chi.r, chi.s)), Fraction(0))
    after = sum((rv * sv for rv, sv in zip(moved.r, moved.s)), Fraction(0))
    return ActionResult(RootOfUnity((before - after) / 2), moved)
