"""Dense univariate polynomials over a table-driven field level."""
from __future__ import annotations

from ..errors import LevelMismatch, SearchSpaceTooLarge
from .gf import GF, FFElement, prime_factors

NEG_INF = float("-inf")
DEFAULT_SCAN_CAP = 1 << 24


def _strip(cs):
    cs = list(cs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class UPoly:
    """Polynomial with ascending integer-coded coefficients in ``field``.

    The zero polynomial has degree ``NEG_INF``.  Instances are immutable and
    hashable.  A ``UPoly`` is also a Frobenius ring element: :meth:`frob`
    raises every coefficient to the ``q``-th power and multiplies every
    exponent by ``q``, which is the ``q``-power map of the polynomial ring.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        self.field = field
        self.coeffs = _strip(coeffs)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = _strip(coeffs)
        return obj

    @classmethod
    def constant(cls, field: GF, c) -> "UPoly":
        if isinstance(c, FFElement):
            field = field.common(c.field)
            c = c.code
        else:
            c = int(c) % field.p
        return cls._raw(field, (c,))

    @classmethod
    def gen(cls, field: GF) -> "UPoly":
        return cls._raw(field, (0, 1))

    @classmethod
    def from_elements(cls, elements, field: GF | None = None) -> "UPoly":
        elements = list(elements)
        if field is None:
            field = elements[0].field
            for e in elements[1:]:
                field = field.common(e.field)
        return cls(field, [e.code if isinstance(e, FFElement) else int(e) % field.p
                           for e in elements])

    # basic accessors -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i) -> FFElement:
        if 0 <= i < len(self.coeffs):
            return FFElement(self.field, self.coeffs[i])
        return FFElement(self.field, 0)

    def leading(self) -> FFElement:
        return self[len(self.coeffs) - 1] if self.coeffs else self.field.zero

    def __eq__(self, other):
        if isinstance(other, UPoly):
            if other.field is not self.field:
                try:
                    self.field.common(other.field)
                except LevelMismatch:
                    return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, FFElement)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return f"UPoly[{self.field.name}](0)"
        terms = [f"{c}*l^{i}" if i else f"{c}" for i, c in enumerate(self.coeffs) if c]
        return f"UPoly[{self.field.name}](" + " + ".join(terms) + ")"

    # coercion ------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, UPoly):
            return other
        if isinstance(other, FFElement):
            return UPoly.constant(self.field.common(other.field), other)
        if isinstance(other, int):
            return UPoly.constant(self.field, other)
        return None

    def _pair(self, other):
        o = self._lift(other)
        if o is None:
            return None, None, None
        F = self.field if o.field is self.field else self.field.common(o.field)
        return F, self.coeffs, o.coeffs

    # ring operations -----------------------------------------------------

    def __add__(self, other):
        F, a, b = self._pair(other)
        if F is None:
            return NotImplemented
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        add = F.add
        for i, c in enumerate(b):
            if c:
                out[i] = add(out[i], c)
        return UPoly._raw(F, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.field.neg
        return UPoly._raw(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, FFElement)):
            return self.scale(other)
        F, a, b = self._pair(other)
        if F is None:
            return NotImplemented
        if not a or not b:
            return UPoly._raw(F, ())
        log, exp2, add = F._log, F._exp2, F.add
        a_nz = [(i, log[c]) for i, c in enumerate(a) if c]
        b_nz = [(j, log[c]) for j, c in enumerate(b) if c]
        out = [0] * (len(a) + len(b) - 1)
        if F.p == 2 and F.parent is not None:
            for i, la in a_nz:
                for j, lb in b_nz:
                    out[i + j] ^= exp2[la + lb]
        else:
            for i, la in a_nz:
                for j, lb in b_nz:
                    out[i + j] = add(out[i + j], exp2[la + lb])
        return UPoly._raw(F, out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def scale(self, c) -> "UPoly":
        if isinstance(c, FFElement):
            F = self.field.common(c.field)
            c = c.code
        else:
            F = self.field
            c = int(c) % F.p
        mul = F.mul
        return UPoly._raw(F, [mul(x, c) for x in self.coeffs])

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UPoly._raw(self.field, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "UPoly":
        """Multiply by ``lambda**k``."""
        if not self.coeffs:
            return self
        return UPoly._raw(self.field, (0,) * k + self.coeffs)

    def frob(self, k: int = 1) -> "UPoly":
        if k == 0 or not self.coeffs:
            return self
        F = self.field
        step = F.q ** k
        out = [0] * ((len(self.coeffs) - 1) * step + 1)
        frob = F.frob
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] = frob(c, k)
        return UPoly._raw(F, out)

    def embed(self, field: GF) -> "UPoly":
        if not field.contains(self.field):
            raise LevelMismatch(f"{self.field.name} does not embed in {field.name}")
        return UPoly._raw(field, self.coeffs)

    # division ------------------------------------------------------------

    def __divmod__(self, other):
        F, a, b = self._pair(other)
        if F is None:
            return NotImplemented
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(a)
        db = len(b) - 1
        inv_lead = F.inv(b[-1])
        quot = [0] * max(len(a) - db, 0)
        mul, sub = F.mul, F.sub
        for i in range(len(a) - 1, db - 1, -1):
            c = rem[i]
            if not c:
                continue
            t = mul(c, inv_lead)
            quot[i - db] = t
            for j, bj in enumerate(b):
                if bj:
                    rem[i - db + j] = sub(rem[i - db + j], mul(t, bj))
        return UPoly._raw(F, quot), UPoly._raw(F, rem[:db] if db else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "UPoly") -> bool:
        return not (other % self)

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        F = self.field
        inv = F.inv(self.coeffs[-1])
        return UPoly._raw(F, [F.mul(c, inv) for c in self.coeffs])

    def derivative(self) -> "UPoly":
        F = self.field
        return UPoly._raw(F, [F.scale_int(c, i) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, e: int, modulus: "UPoly") -> "UPoly":
        result = UPoly._raw(self.field, (1,)) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    # evaluation ----------------------------------------------------------

    def eval_code(self, x: int, field: GF | None = None) -> int:
        """Horner evaluation at a raw code of ``field`` (default: own field)."""
        F = field or self.field
        acc = 0
        add, mul = F.add, F.mul
        for c in reversed(self.coeffs):
            acc = add(mul(acc, x), c)
        return acc

    def __call__(self, x):
        if isinstance(x, FFElement):
            F = self.field.common(x.field)
            return FFElement(F, self.eval_code(x.code, F))
        if isinstance(x, UPoly):
            return self.compose(x)
        return FFElement(self.field, self.eval_code(int(x) % self.field.p))

    def compose(self, g: "UPoly") -> "UPoly":
        """``self(g(s))`` by Horner's rule."""
        F = self.field.common(g.field)
        acc = UPoly._raw(F, ())
        for c in reversed(self.coeffs):
            acc = acc * g + UPoly._raw(F, (c,))
        return acc


def upoly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    if f.field is not g.field:
        if not (f.field.contains(g.field) or g.field.contains(f.field)):
            raise LevelMismatch(f"{f.field.name} vs {g.field.name}")
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def upoly_derivative(f: UPoly) -> UPoly:
    return f.derivative()


def upoly_roots_exhaustive(f: UPoly, field: GF | None = None,
                           cap: int = DEFAULT_SCAN_CAP) -> set[FFElement]:
    """All roots of ``f`` lying in ``field``, by evaluating at every element."""
    field = field or f.field
    if not field.contains(f.field):
        raise LevelMismatch(f"{f.field.name} does not embed in {field.name}")
    if field.order > cap:
        raise SearchSpaceTooLarge(f"{field.name} has {field.order} elements > cap {cap}")
    if not f:
        raise ValueError("every element is a root of the zero polynomial")
    return {FFElement(field, x) for x in range(field.order) if f.eval_code(x, field) == 0}


def is_irreducible(f: UPoly) -> bool:
    """Rabin's test over ``f.field``."""
    n = f.degree
    if n == NEG_INF or n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    Q = f.field.order
    x = UPoly.gen(f.field)
    powers = {}
    h = x % f
    for i in range(1, n + 1):
        h = h.powmod(Q, f)
        powers[i] = h
    if powers[n] != x % f:
        return False
    for r in prime_factors(n):
        if upoly_gcd(powers[n // r] - x, f).degree != 0:
            return False
    return True


def monic_polys(field: GF, degree: int, nonzero_constant=False):
    """Monic polynomials of a given degree, ascending by the integer whose
    base-|F| digits are the coefficients (constant term least significant)."""
    Q = field.order
    for n in range(Q ** degree):
        cs = []
        m = n
        for _ in range(degree):
            m, r = divmod(m, Q)
            cs.append(r)
        if nonzero_constant and cs[0] == 0:
            continue
        yield UPoly(field, cs + [1])


def first_irreducible(field: GF, degree: int, nonzero_constant=False) -> UPoly:
    for f in monic_polys(field, degree, nonzero_constant):
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


class UPolyRing:
    """F[lambda] as a coefficient ring for twisted polynomials."""

    def __init__(self, field: GF, var: str = "lambda"):
        self.field = field
        self.var = var
        self.name = f"{field.name}[{var}]"

    def __repr__(self):
        return f"UPolyRing({self.name})"

    @property
    def zero(self) -> UPoly:
        return UPoly(self.field, ())

    @property
    def one(self) -> UPoly:
        return UPoly(self.field, (1,))

    def gen(self) -> UPoly:
        return UPoly.gen(self.field)

    def contains(self, other) -> bool:
        if isinstance(other, UPolyRing):
            return self.field.contains(other.field)
        return self.field.contains(other)

    def __call__(self, x) -> UPoly:
        if isinstance(x, UPoly):
            return x.embed(self.field)
        return UPoly.constant(self.field, x)

    def __eq__(self, other):
        return isinstance(other, UPolyRing) and other.field is self.field

    def __hash__(self):
        return hash(("UPolyRing", id(self.field)))
