"""The twisted polynomial ring R{tau}, where tau * r = r^q * tau.

``R`` is any ring carrying a q-power Frobenius: a field level (elements are
:class:`FFElement`) or a polynomial ring over a level (elements are
:class:`UPoly`).  The coefficients only need ``+``, ``*``, ``bool`` and
``frob(k)``.
"""
from __future__ import annotations

from .errors import LevelMismatch, RingMismatch
from .field import GF, FFElement, UPoly, UPolyRing, element_to_json, upoly_to_json


class TwistedPoly:
    """Sum of ``coeffs[i] * tau**i`` over ``ring``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        self.ring = ring
        cs = [ring(c) if not _in_ring(ring, c) else c for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def tau(cls, ring, k: int = 1) -> "TwistedPoly":
        return cls(ring, [ring.zero] * k + [ring.one])

    @classmethod
    def constant(cls, ring, c) -> "TwistedPoly":
        return cls(ring, [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"({c!r})*tau^{i}" for i, c in enumerate(self.coeffs) if c]
        return "TwistedPoly(" + (" + ".join(terms) or "0") + ")"

    def _check(self, other):
        if not isinstance(other, TwistedPoly):
            return None
        if other.ring != self.ring:
            raise RingMismatch(f"{_ring_name(self.ring)} vs {_ring_name(other.ring)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TwistedPoly(self.ring, out)

    def __neg__(self):
        return TwistedPoly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TwistedPoly):
            # a scalar on the right is r * tau^0, which still gets twisted
            other = TwistedPoly(self.ring, [self.ring(other)])
        other = self._check(other)
        if not self.coeffs or not other.coeffs:
            return TwistedPoly(self.ring, ())
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b.frob(i)
        return TwistedPoly(self.ring, out)

    def __rmul__(self, scalar):
        # r * f scales coefficients with no twist
        r = self.ring(scalar)
        return TwistedPoly(self.ring, [r * c for c in self.coeffs])

    def __pow__(self, n: int) -> "TwistedPoly":
        result = TwistedPoly(self.ring, [self.ring.one])
        for _ in range(n):
            result = self * result
        return result

    def map_coeffs(self, fn, ring=None) -> "TwistedPoly":
        return TwistedPoly(ring or self.ring, [fn(c) for c in self.coeffs])


def _in_ring(ring, c) -> bool:
    if isinstance(ring, GF):
        return isinstance(c, FFElement) and c.field is ring
    return isinstance(c, UPoly) and c.field is ring.field


def _ring_name(ring):
    return getattr(ring, "name", repr(ring))


def tp_add(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    return f + g


def tp_mul(f: TwistedPoly, g: TwistedPoly) -> TwistedPoly:
    """Composition product: (a tau^i)(b tau^j) = a * b^(q^i) * tau^(i+j)."""
    return f * g


def tp_eval_linearized(f: TwistedPoly, x: FFElement) -> FFElement:
    """The additive polynomial sum(c_i * x^(q^i)) evaluated at ``x``."""
    if not isinstance(f.ring, GF):
        raise LevelMismatch("linearized evaluation needs coefficients in a field level")
    F = x.field.common(f.ring)
    acc = 0
    xi = x.code
    for i, c in enumerate(f.coeffs):
        if i:
            xi = F.frob(xi)
        if c:
            acc = F.add(acc, F.mul(c.code, xi))
    return FFElement(F, acc)


def twisted_to_json(tower, f: TwistedPoly) -> dict:
    out = []
    for c in f.coeffs:
        if isinstance(c, UPoly):
            out.append(upoly_to_json(tower, c))
        else:
            out.append(element_to_json(tower, c))
    return {"tau_coeffs": out}


__all__ = ["TwistedPoly", "UPolyRing", "tp_add", "tp_mul", "tp_eval_linearized", "twisted_to_json"]
