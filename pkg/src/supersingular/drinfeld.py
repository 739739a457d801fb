"""Rank-2 Drinfeld modules phi_T = alpha + A1 tau + A2 tau^2 over a tower level.

Coefficients may be numbers (FFElement at ``mid`` or ``top``) or
polynomials in lambda (UPoly), in which case everything below is computed in
L[lambda]{tau} by the same code.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import SymbolicCoefficients
from .field import FFElement, FieldTower, UPoly, UPolyRing, bracket
from .partitions import enumerate_P, h_complete_eval, w_of
from .twisted import TwistedPoly


def frob_power(x, S):
    """x^(w(S)) as the product of x^(q^i) over i in S; exact in characteristic p."""
    out = None
    for i in S:
        t = x.frob(i)
        out = t if out is None else out * t
    if out is None:
        return x * 0 + 1
    return out


@dataclass(eq=False)
class DrinfeldModule:
    tower: FieldTower
    A1: object
    A2: object
    _powers: list = dc_field(default_factory=list, repr=False)

    def __post_init__(self):
        if not self.A2:
            raise ValueError("A2 must be nonzero for a rank-2 module")
        symbolic = isinstance(self.A1, UPoly) or isinstance(self.A2, UPoly)
        if symbolic:
            F = _common_field(self.A1, self.A2)
            self.ring = UPolyRing(F)
        else:
            F = self.A1.field.common(self.A2.field) if isinstance(self.A1, FFElement) \
                else self.A2.field
            self.ring = F
        self.A1 = self.ring(self.A1)
        self.A2 = self.ring(self.A2)
        self.alpha = self.ring(self.tower.alpha)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.ring, UPolyRing)

    @property
    def field(self):
        return self.ring.field if self.symbolic else self.ring

    @property
    def phi_T(self) -> TwistedPoly:
        return TwistedPoly(self.ring, [self.alpha, self.A1, self.A2])

    def phi_T_power(self, m: int) -> TwistedPoly:
        """phi_{T^m}, built as phi_T * phi_{T^(m-1)}."""
        if not self._powers:
            self._powers.append(TwistedPoly(self.ring, [self.ring.one]))
        while len(self._powers) <= m:
            self._powers.append(self.phi_T * self._powers[-1])
        return self._powers[m]


def _common_field(*xs):
    F = None
    for x in xs:
        if isinstance(x, (UPoly, FFElement)):
            F = x.field if F is None else F.common(x.field)
    return F


def normal_form(tower: FieldTower, lam=None, level: str = "mid") -> DrinfeldModule:
    """phi_T = alpha + (alpha + lambda) tau + lambda tau^2.

    With ``lam=None`` lambda is the indeterminate of ``level``[lambda].
    """
    F = tower.level(level)
    if lam is None:
        lam = UPoly.gen(F)
        return DrinfeldModule(tower, lam + tower.alpha, lam)
    lam = F(lam) if not isinstance(lam, FFElement) else lam
    return DrinfeldModule(tower, tower.alpha + lam, lam)


def phi_of(dm: DrinfeldModule, a) -> TwistedPoly:
    """phi_a for ``a`` in F_q[T], given as ascending base-field codes or a UPoly."""
    coeffs = a.coeffs if isinstance(a, UPoly) else list(a)
    base = dm.tower.base
    out = TwistedPoly(dm.ring, ())
    for i, c in enumerate(coeffs):
        if c:
            out = out + FFElement(base, c) * dm.phi_T_power(i)
    return out


@dataclass(frozen=True)
class PpCoefficients:
    g: tuple

    @property
    def H(self):
        return self.g[(len(self.g) - 1) // 2]


def pp_coeffs(dm: DrinfeldModule) -> PpCoefficients:
    """The 2d+1 coefficients of phi_{p(T)}; g_0..g_{d-1} are checked to vanish."""
    d = dm.tower.d
    phi = phi_of(dm, dm.tower.ideal.mu)
    g = tuple(phi[i] for i in range(2 * d + 1))
    for i in range(d):
        if g[i]:
            raise AssertionError(f"g_{i} != 0 in phi_p(T): arithmetic bug")
    return PpCoefficients(g)


def is_supersingular(dm: DrinfeldModule) -> bool:
    if dm.symbolic:
        raise SymbolicCoefficients("supersingularity needs numeric A1, A2")
    return not pp_coeffs(dm).H


def j_invariant(dm: DrinfeldModule):
    if dm.symbolic:
        raise SymbolicCoefficients("j-invariant needs numeric A1, A2")
    return dm.A1 ** (dm.tower.q + 1) / dm.A2


def c_coeff(dm: DrinfeldModule, n: int, m: int):
    """Coefficient of tau^n in phi_{T^m} by the partition-sum formula.

    c(n; m) = sum over P(n) of A1^w(S1) A2^w(S2) h_{m-|S|}^{S'} with S' = S u {n}
    and X_i = alpha^(q^i).
    """
    ring = dm.ring
    if n < 0 or n > 2 * m:
        return ring.zero
    mid = dm.tower.mid
    a = dm.tower.alpha
    total = ring.zero
    for pair in enumerate_P(n):
        k = m - len(pair.S)
        if k < 0:
            continue
        h = h_complete_eval(k, [a.frob(i).code for i in pair.S_prime], mid)
        if not h:
            continue
        term = frob_power(dm.A1, pair.S1) * frob_power(dm.A2, pair.S2)
        total = total + term * FFElement(mid, h)
    return total


def H_via_c(dm: DrinfeldModule):
    """H = sum_{i=ceil(d/2)}^{d} mu_i c(d; i)."""
    d = dm.tower.d
    total = dm.ring.zero
    base = dm.tower.base
    for i in range((d + 1) // 2, d + 1):
        mu_i = dm.tower.ideal.mu[i]
        if mu_i:
            total = total + c_coeff(dm, d, i) * FFElement(base, mu_i)
    return total


def g_recursion_residuals(dm: DrinfeldModule, g) -> list:
    """Residual of (alpha^(q^i) - alpha) g_i = g_{i-2}^(q^2) A2 - g_{i-2} A2^(q^(i-2))
    + g_{i-1}^q A1 - g_{i-1} A1^(q^(i-1)) for every i in 0..2d+1 (g beyond 2d is 0)."""
    tower = dm.tower
    d = tower.d
    zero = dm.ring.zero

    def gi(i):
        return g[i] if 0 <= i < len(g) else zero

    out = []
    for i in range(0, 2 * d + 2):
        lhs = gi(i) * bracket(tower, i)
        rhs = zero
        if i >= 2:
            rhs = rhs + gi(i - 2).frob(2) * dm.A2 - gi(i - 2) * dm.A2.frob(i - 2)
        if i >= 1:
            rhs = rhs + gi(i - 1).frob(1) * dm.A1 - gi(i - 1) * dm.A1.frob(i - 1)
        out.append(lhs - rhs)
    return out


def top_coefficient_exponent(q: int, d: int) -> int:
    """(q^(2d) - 1)/(q^2 - 1): exponent of lambda in g_{2d} for the normal form."""
    return (q ** (2 * d) - 1) // (q * q - 1)


__all__ = [
    "DrinfeldModule", "PpCoefficients", "normal_form", "phi_of", "pp_coeffs",
    "is_supersingular", "j_invariant", "c_coeff", "H_via_c", "g_recursion_residuals",
    "frob_power", "top_coefficient_exponent", "w_of",
]
