"""Sparse multivariate polynomials with arbitrary-precision integer coefficients."""
from __future__ import annotations

from collections import defaultdict


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MPolyZ:
    """Map from monomials to nonzero ints.

    A monomial is a sorted tuple of ``(variable, exponent)`` pairs with
    positive exponents; ``()`` is the constant monomial.  Variables are any
    mutually comparable keys (ints for X_0, X_1, ...; strings elsewhere).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, c: int) -> "MPolyZ":
        return cls({(): c})

    @classmethod
    def var(cls, v, exp: int = 1) -> "MPolyZ":
        return cls({((v, exp),): 1} if exp else {(): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPolyZ.const(other)
        if not isinstance(other, MPolyZ):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "MPolyZ(0)"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"X{v}" + (f"^{e}" if e > 1 else "") for v, e in m)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPolyZ(" + " + ".join(parts) + ")"

    def _lift(self, other):
        if isinstance(other, MPolyZ):
            return other
        if isinstance(other, int):
            return MPolyZ.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MPolyZ(out)

    __radd__ = __add__

    def __neg__(self):
        return MPolyZ({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[_mono_mul(m1, m2)] += c1 * c2
        return MPolyZ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPolyZ":
        result = MPolyZ.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reduce_mod(self, p: int) -> "MPolyZ":
        return MPolyZ({m: c % p for m, c in self.terms.items()})

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=-1)

    def evaluate(self, values: dict, field=None):
        """Substitute ``values[v]``.  With ``field`` (a GF), values are codes
        and the result is a code of that field; otherwise plain ints."""
        if field is None:
            total = 0
            for m, c in self.terms.items():
                t = c
                for v, e in m:
                    t *= values[v] ** e
                total += t
            return total
        total = 0
        for m, c in self.terms.items():
            t = field.scale_int(1, c)
            for v, e in m:
                t = field.mul(t, field.pow(values[v], e))
            total = field.add(total, t)
        return total
