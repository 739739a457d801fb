"""Table-driven finite fields.

Every field is stored as a positional code space: an element of an extension
``F = P[x]/(m(x))`` of degree ``k`` with coordinates ``(c_0, ..., c_{k-1})``
over the parent ``P`` gets the integer code ``sum(c_i * |P|**i)``.  Because a
parent element ``c`` has code ``c`` in the child as well, the embedding of a
subfield is the identity on codes.  This is what lets the three tower levels
(F_q, F_{q^d}, F_{q^2d}) share integers freely.

Arithmetic runs through discrete-log/antilog tables plus a Zech table for
addition in odd characteristic; in characteristic 2 addition is XOR.
"""
from __future__ import annotations

import random as _random

from ..errors import FieldTooLarge, LevelMismatch

DEFAULT_TABLE_CAP = 1 << 21


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def digits(code: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, base)
        out.append(r)
    return out


def undigits(ds, base: int) -> int:
    code = 0
    for c in reversed(list(ds)):
        code = code * base + c
    return code


class GF:
    """A finite field with integer-coded elements.

    Build instances with :func:`prime_field` or :func:`extension_field`.
    ``q`` is the size of the field whose Frobenius ``x -> x**q`` is used by
    :meth:`frob`; it need not be the prime.
    """

    def __init__(self, *, order, p, parent, modulus, name, q, exp, log, zech):
        self.order = order
        self.p = p
        self.parent = parent
        self.modulus = tuple(modulus) if modulus is not None else None
        self.degree = 1 if parent is None else len(modulus) - 1
        self.name = name
        self.q = q
        self._m = order - 1
        self._exp = exp
        self._exp2 = exp + exp
        self._log = log
        self._zech = zech
        self._half = self._m // 2
        if parent is None:
            self.add = self._add_mod
            self.neg = self._neg_mod
        elif p == 2:
            self.add = self._add_xor
            self.neg = self._neg_char2
        else:
            self.add = self._add_zech
            self.neg = self._neg_log

    def __repr__(self):
        return f"GF({self.order}, name={self.name!r})"

    # integer-level arithmetic --------------------------------------------

    def _add_mod(self, a, b):
        return (a + b) % self.p

    def _add_xor(self, a, b):
        return a ^ b

    def _add_zech(self, a, b):
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._m]
        if z < 0:
            return 0
        return self._exp2[la + z]

    def _neg_mod(self, a):
        return (-a) % self.p

    def _neg_char2(self, a):
        return a

    def _neg_log(self, a):
        if not a:
            return 0
        return self._exp2[self._log[a] + self._half]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a and b:
            return self._exp2[self._log[a] + self._log[b]]
        return 0

    def inv(self, a):
        if not a:
            raise ZeroDivisionError(f"inverse of zero in {self.name}")
        return self._exp[-self._log[a] % self._m]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        """``a**e`` for any integer exponent, arbitrary precision."""
        if e == 0:
            return 1
        if not a:
            if e < 0:
                raise ZeroDivisionError(f"zero to a negative power in {self.name}")
            return 0
        return self._exp[(self._log[a] * e) % self._m]

    def frob(self, a, k: int = 1):
        """``a**(q**k)``."""
        if not a or k == 0:
            return a
        return self._exp[(self._log[a] * pow(self.q, k, self._m)) % self._m]

    def scale_int(self, a, n: int):
        """``n * a`` with ``n`` read in the prime field."""
        return self.mul(a, n % self.p)

    def log(self, a):
        return self._log[a]

    def generator(self):
        return self._exp[1 % self._m] if self._m else 1

    # structure -----------------------------------------------------------

    def chain(self):
        f = self
        while f is not None:
            yield f
            f = f.parent

    def contains(self, other: "GF") -> bool:
        return any(f is other for f in self.chain())

    def common(self, other: "GF") -> "GF":
        if self.contains(other):
            return self
        if other.contains(self):
            return other
        raise LevelMismatch(f"{self.name} and {other.name} are not in one tower")

    def vector(self, code: int) -> list[int]:
        """Coordinates over the parent field."""
        if self.parent is None:
            return [code]
        return digits(code, self.parent.order, self.degree)

    def __call__(self, code) -> "FFElement":
        if isinstance(code, FFElement):
            if not self.contains(code.field):
                raise LevelMismatch(f"{code.field.name} does not embed in {self.name}")
            return FFElement(self, code.code)
        return FFElement(self, int(code) % self.p)

    def element(self, code: int) -> "FFElement":
        """Wrap a raw code (no prime-field reduction)."""
        if not 0 <= code < self.order:
            raise ValueError(f"code {code} out of range for {self.name}")
        return FFElement(self, code)

    @property
    def zero(self):
        return FFElement(self, 0)

    @property
    def one(self):
        return FFElement(self, 1)

    def elements(self):
        return (FFElement(self, c) for c in range(self.order))

    def random(self, rng: _random.Random | None = None, nonzero=False) -> "FFElement":
        rng = rng or _random
        lo = 1 if nonzero else 0
        return FFElement(self, rng.randrange(lo, self.order))


def _find_primitive_root(p):
    m = p - 1
    fs = prime_factors(m)
    for g in range(1, p):
        if all(pow(g, m // r, p) != 1 for r in fs):
            return g
    raise AssertionError("no primitive root")  # pragma: no cover


def prime_field(p: int, *, name=None, q=None) -> GF:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    g = _find_primitive_root(p) if p > 2 else 1
    exp = [pow(g, i, p) for i in range(p - 1)]
    log = [-1] * p
    for i, v in enumerate(exp):
        log[v] = i
    return GF(order=p, p=p, parent=None, modulus=None, name=name or f"F_{p}",
              q=q or p, exp=exp, log=log, zech=None)


class _VecArith:
    """Polynomial arithmetic modulo a monic modulus, over a tabled parent."""

    def __init__(self, parent: GF, modulus):
        self.P = parent
        self.m = list(modulus)
        self.k = len(modulus) - 1

    def mul(self, a, b):
        P, k = self.P, self.k
        r = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    r[i + j] = P.add(r[i + j], P.mul(ai, bj))
        return self.reduce(r)

    def reduce(self, r):
        P, k, m = self.P, self.k, self.m
        r = list(r)
        for i in range(len(r) - 1, k - 1, -1):
            c = r[i]
            if c:
                for j in range(k):
                    if m[j]:
                        r[i - k + j] = P.sub(r[i - k + j], P.mul(c, m[j]))
                r[i] = 0
        return (r + [0] * k)[:k]

    def times_x(self, a):
        P, k, m = self.P, self.k, self.m
        top = a[-1]
        out = [0] + a[:-1]
        if top:
            for j in range(k):
                if m[j]:
                    out[j] = P.sub(out[j], P.mul(top, m[j]))
        return out

    def pow(self, a, e):
        result = [1] + [0] * (self.k - 1)
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result


def extension_field(parent: GF, modulus, *, name: str, q: int,
                    table_cap: int = DEFAULT_TABLE_CAP) -> GF:
    """``parent[x]/(modulus)`` for a monic irreducible ``modulus``.

    ``modulus`` is an ascending list of parent codes.  Irreducibility is the
    caller's responsibility; a reducible modulus shows up here as a failure to
    find a generator of the multiplicative group.
    """
    k = len(modulus) - 1
    if k < 1 or modulus[-1] != 1:
        raise ValueError("modulus must be monic of degree >= 1")
    order = parent.order ** k
    if order > table_cap:
        raise FieldTooLarge(f"{name} has {order} elements; table cap is {table_cap}")
    va = _VecArith(parent, modulus)
    M = order - 1
    fs = prime_factors(M) if M > 1 else []
    one = [1] + [0] * (k - 1)

    def is_generator(v):
        return all(va.pow(v, M // r) != one for r in fs)

    x = digits(parent.order, parent.order, k) if k >= 2 else va.reduce([0, 1])
    exp = [0] * M
    if k >= 2 and is_generator(x):
        cur = one
        for i in range(M):
            exp[i] = undigits(cur, parent.order)
            cur = va.times_x(cur)
    else:
        for code in range(1, order):
            g = digits(code, parent.order, k)
            if is_generator(g):
                break
        else:  # pragma: no cover
            raise ValueError("modulus is reducible: no generator found")
        cur = one
        for i in range(M):
            exp[i] = undigits(cur, parent.order)
            cur = va.mul(cur, g)
    if cur != one:
        raise ValueError("modulus is reducible: generator order mismatch")
    log = [-1] * order
    for i, v in enumerate(exp):
        log[v] = i
    if -1 in log[1:]:
        raise ValueError("modulus is reducible: multiplicative group not cyclic")
    p = parent.p
    zech = None
    if p != 2:
        zech = [-1] * M
        for i, v in enumerate(exp):
            low = v % p
            w = v - low + (low + 1) % p
            zech[i] = log[w] if w else -1
    return GF(order=order, p=p, parent=parent, modulus=modulus, name=name, q=q,
              exp=exp, log=log, zech=zech)


class FFElement:
    """An element of a :class:`GF`, with operator overloading.

    Mixed arithmetic between a field and one of its subfields lands in the
    larger field.  Python ints are read in the prime field.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        self.field = field
        self.code = code

    @property
    def level(self):
        return self.field.name

    def _coerce(self, other):
        if isinstance(other, FFElement):
            return self.field.common(other.field), other.code
        if isinstance(other, int):
            return self.field, other % self.field.p
        return None, None

    def __add__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.sub(self.code, c))

    def __rsub__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.sub(c, self.code))

    def __neg__(self):
        return FFElement(self.field, self.field.neg(self.code))

    def __mul__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.div(self.code, c))

    def __rtruediv__(self, other):
        F, c = self._coerce(other)
        if F is None:
            return NotImplemented
        return FFElement(F, F.div(c, self.code))

    def __pow__(self, e: int):
        return FFElement(self.field, self.field.pow(self.code, e))

    def inverse(self):
        return FFElement(self.field, self.field.inv(self.code))

    def frob(self, k: int = 1):
        return FFElement(self.field, self.field.frob(self.code, k))

    def __eq__(self, other):
        if isinstance(other, FFElement):
            try:
                self.field.common(other.field)
            except LevelMismatch:
                return False
            return self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash(self.code)

    def __bool__(self):
        return self.code != 0

    def __repr__(self):
        return f"{self.field.name}<{self.code}>"

    def embed(self, field: GF) -> "FFElement":
        if not field.contains(self.field):
            raise LevelMismatch(f"{self.field.name} does not embed in {field.name}")
        return FFElement(field, self.code)
