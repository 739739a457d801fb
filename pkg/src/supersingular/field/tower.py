"""The tower F_q c F_{q^d} c F_{q^{2d}} attached to a prime ideal (p(T)).

``mid`` is F_q[x]/(p(x)), so the residue class of ``x`` *is* alpha, and
``top`` is a relative quadratic extension of ``mid``.  All three levels share
one integer code space, so moving an element up the tower never changes it.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

from ..errors import IdealIsT, NotIrreducible, NotMonic, NotPrimePower
from .gf import GF, FFElement, digits, extension_field, prime_factors, prime_field, DEFAULT_TABLE_CAP
from .upoly import UPoly, first_irreducible, is_irreducible

LEVELS = ("base", "mid", "top")


@dataclass(frozen=True)
class BasePrimePower:
    p: int
    e: int

    @property
    def q(self) -> int:
        return self.p ** self.e

    @classmethod
    def from_q(cls, q: int) -> "BasePrimePower":
        if q < 2:
            raise NotPrimePower(f"q={q} is not a prime power")
        fs = prime_factors(q)
        if len(fs) != 1:
            raise NotPrimePower(f"q={q} is not a prime power")
        p = fs[0]
        e, m = 0, q
        while m > 1:
            m //= p
            e += 1
        return cls(p, e)


@dataclass(frozen=True)
class PrimeIdeal:
    """Monic irreducible p(T) != T, stored as ascending base-field codes."""

    mu: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.mu) - 1


def base_field(bpp: BasePrimePower, table_cap: int = DEFAULT_TABLE_CAP) -> GF:
    """F_q, as F_p itself or F_p[z]/(f) with f the first irreducible of degree e."""
    if bpp.e == 1:
        return prime_field(bpp.p, name="base", q=bpp.q)
    fp = prime_field(bpp.p, name="prime", q=bpp.p)
    f = first_irreducible(fp, bpp.e)
    return extension_field(fp, f.coeffs, name="base", q=bpp.q, table_cap=table_cap)


def auto_ideal(q: int, d: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``d`` with nonzero constant term.

    Candidates are ordered by the integer whose base-q digits are the
    coefficients, constant term least significant.
    """
    F = base_field(BasePrimePower.from_q(q))
    return first_irreducible(F, d, nonzero_constant=True).coeffs


def _first_irreducible_quadratic(mid: GF) -> tuple[int, int, int]:
    # y^2 + c1 y + c0 is irreducible iff -c0 is not a value of y^2 + c1 y
    values = {}
    for c0 in range(mid.order):
        target = mid.neg(c0)
        for c1 in range(mid.order):
            if c1 not in values:
                values[c1] = {mid.add(mid.mul(y, y), mid.mul(c1, y)) for y in range(mid.order)}
            if target not in values[c1]:
                return (c0, c1, 1)
    raise AssertionError("no irreducible quadratic")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldTower:
    bpp: BasePrimePower
    ideal: PrimeIdeal
    base: GF
    mid: GF
    top: GF
    alpha_code: int
    quadratic: tuple[int, int, int]
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.bpp.q

    @property
    def p(self) -> int:
        return self.bpp.p

    @property
    def d(self) -> int:
        return self.ideal.d

    @property
    def alpha(self) -> FFElement:
        return FFElement(self.mid, self.alpha_code)

    @property
    def mu(self) -> list[FFElement]:
        return [FFElement(self.base, c) for c in self.ideal.mu]

    def level(self, name: str) -> GF:
        return {"base": self.base, "mid": self.mid, "top": self.top}[name]

    def p_of_T(self) -> UPoly:
        return UPoly(self.base, self.ideal.mu)

    def bracket(self, n: int) -> FFElement:
        return bracket(self, n)

    @cached_property
    def w_full(self) -> int:
        """(q^d - 1)/(q - 1), the degree of the supersingular polynomial."""
        return (self.q ** self.d - 1) // (self.q - 1)

    def describe(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "e": self.bpp.e,
            "p_of_T": list(self.ideal.mu),
            "d": self.d,
            "base_modulus": list(self.base.modulus) if self.base.modulus else None,
            "top_quadratic": list(self.quadratic),
        }


def build_tower(q, p_of_T, *, table_cap: int = DEFAULT_TABLE_CAP) -> FieldTower:
    """Construct the tower for ``q`` and ``p_of_T`` (ascending base-field codes).

    Raises :class:`NotMonic`, :class:`IdealIsT` or :class:`NotIrreducible`.
    """
    bpp = q if isinstance(q, BasePrimePower) else BasePrimePower.from_q(int(q))
    base = base_field(bpp, table_cap)
    coeffs = list(p_of_T.coeffs if isinstance(p_of_T, UPoly) else p_of_T)
    if any(not 0 <= c < bpp.q for c in coeffs):
        raise ValueError(f"coefficients of p(T) must be codes in [0, {bpp.q})")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise NotIrreducible("p(T) must have degree >= 1")
    if coeffs[-1] != 1:
        raise NotMonic(f"leading coefficient {coeffs[-1]} != 1")
    if coeffs == [0, 1]:
        raise IdealIsT("p(T) = T is excluded")
    poly = UPoly(base, coeffs)
    if not is_irreducible(poly):
        raise NotIrreducible(f"p(T) = {coeffs} is reducible over F_{bpp.q}")
    d = len(coeffs) - 1
    mid = extension_field(base, coeffs, name="mid", q=bpp.q, table_cap=table_cap)
    if d >= 2:
        alpha = base.order
    else:
        alpha = base.neg(coeffs[0])
    quad = _first_irreducible_quadratic(mid)
    top = extension_field(mid, quad, name="top", q=bpp.q, table_cap=table_cap)
    return FieldTower(bpp, PrimeIdeal(tuple(coeffs)), base, mid, top, alpha, quad)


def frob(x: FFElement, k: int = 1) -> FFElement:
    """``x**(q**k)``, computed by ``k`` successive q-power maps."""
    F = x.field
    n, size = 0, 1
    while size < F.order:
        size *= F.q
        n += 1
    c = x.code
    # the q-power map has order n on a field of q^n elements
    for _ in range(k % n if n else 0):
        c = F.pow(c, F.q)
    return FFElement(F, c)


def bracket(tower: FieldTower, n: int) -> FFElement:
    """[n] = alpha^(q^n) - alpha in F_{q^d}."""
    if n < 0:
        raise ValueError("bracket index must be >= 0")
    key = ("bracket", n % tower.d)
    cache = tower._cache
    if key not in cache:
        a = tower.alpha
        cache[key] = a.frob(n) - a
    return cache[key]


def pow_big(x: FFElement, e: int) -> FFElement:
    """``x**e`` by square-and-multiply with an arbitrary-precision exponent."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    F = x.field
    result, base = 1, x.code
    while e:
        if e & 1:
            result = F.mul(result, base)
        e >>= 1
        if e:
            base = F.mul(base, base)
    return FFElement(F, result)


# serialization ---------------------------------------------------------

def element_to_json(tower: FieldTower, x: FFElement) -> dict:
    """{"level": ..., "coeffs": [[prime residues of c_0], [..c_1], ...]}.

    The coefficients are over F_q in the basis alpha^i (mid) or
    alpha^i * y^j (top, i fastest), each as a residue vector of length e.
    """
    F = x.field
    n = {"base": 1, "mid": tower.d, "top": 2 * tower.d}[F.name]
    fq = digits(x.code, tower.q, n)
    return {"level": F.name, "coeffs": [digits(c, tower.p, tower.bpp.e) for c in fq]}


def element_from_json(tower: FieldTower, obj: dict) -> FFElement:
    F = tower.level(obj["level"])
    code = 0
    for c in reversed(obj["coeffs"]):
        r = 0
        for v in reversed(c):
            r = r * tower.p + int(v)
        code = code * tower.q + r
    return F.element(code)


def upoly_to_json(tower: FieldTower, f: UPoly) -> dict:
    return {"level": f.field.name,
            "coeffs": [element_to_json(tower, f[i])["coeffs"] for i in range(len(f))]}


def upoly_from_json(tower: FieldTower, obj: dict) -> UPoly:
    F = tower.level(obj["level"])
    return UPoly(F, [element_from_json(tower, {"level": obj["level"], "coeffs": c}).code
                     for c in obj["coeffs"]])
