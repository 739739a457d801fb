"""P(d), weights, signed bracket products and the symmetric-function identities.

P(d) is the set of pairs (S1, S2) of subsets of {0, ..., d-1} such that S1,
S2 and S2+1 partition {0, ..., d-1}.  Listing order is by ``len(S2)`` and then
``S2`` lexicographically, which reproduces the term order of the hand-worked
expansions for d <= 5.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import KTooLarge
from .field import FFElement, FieldTower, bracket
from .mpoly import MPolyZ

IndexSet = tuple  # strictly ascending tuple of naturals


def shift(S, j: int) -> tuple:
    return tuple(i + j for i in S)


@dataclass(frozen=True)
class PartitionPair:
    S1: tuple
    S2: tuple
    d: int

    def __post_init__(self):
        S1, S2 = tuple(self.S1), tuple(self.S2)
        object.__setattr__(self, "S1", S1)
        object.__setattr__(self, "S2", S2)
        parts = list(S1) + list(S2) + list(shift(S2, 1))
        if sorted(parts) != list(range(self.d)) or list(S1) != sorted(set(S1)) \
                or list(S2) != sorted(set(S2)):
            raise ValueError(f"({S1}, {S2}) is not in P({self.d})")

    @property
    def S(self) -> tuple:
        return tuple(sorted(self.S1 + self.S2))

    @property
    def S_prime(self) -> tuple:
        return self.S + (self.d,)

    def to_json(self) -> dict:
        return {"S1": list(self.S1), "S2": list(self.S2)}


def _generate(lo: int, d: int):
    # pairs partitioning {lo, ..., d-1}
    if lo == d:
        yield (), ()
        return
    for S1, S2 in _generate(lo + 1, d):
        yield (lo,) + S1, S2
    if lo + 1 < d:
        for S1, S2 in _generate(lo + 2, d):
            yield S1, (lo,) + S2


@lru_cache(maxsize=None)
def enumerate_P(d: int) -> tuple[PartitionPair, ...]:
    """All of P(d) in canonical order; P(0) is the single pair (empty, empty)."""
    if d < 0:
        return ()
    pairs = [PartitionPair(S1, S2, d) for S1, S2 in _generate(0, d)]
    pairs.sort(key=lambda pr: (len(pr.S2), pr.S2))
    return tuple(pairs)


def w_of(S, q: int) -> int:
    """w(S) = sum of q^i over S (0 on the empty set)."""
    return sum(q ** i for i in S)


def L_of(S, tower: FieldTower) -> FFElement:
    """L(S) = (-1)^|S| * prod of [i] over S (1 on the empty set)."""
    out = tower.mid.one
    for i in S:
        out = out * (-bracket(tower, i))
    return out


# symmetric polynomials ---------------------------------------------------

def elem_sym(k: int, variables) -> MPolyZ:
    """Elementary symmetric polynomial of degree ``k`` in the negated variables."""
    variables = list(variables)
    if k > len(variables):
        raise KTooLarge(f"k={k} exceeds {len(variables)} variables")
    if k < 0:
        raise KTooLarge(f"k={k} is negative")
    sign = -1 if k % 2 else 1
    terms = {}
    for combo in itertools.combinations(sorted(variables), k):
        terms[tuple((v, 1) for v in combo)] = sign
    return MPolyZ(terms)


def h_complete(n: int, Sprime) -> MPolyZ:
    """Complete homogeneous polynomial of degree ``n`` in X_i, i in ``Sprime``.

    Dynamic programme over the variables: h_n(x, rest) = sum_j x^j h_{n-j}(rest).
    """
    Sprime = list(Sprime)
    if n < 0:
        return MPolyZ()
    if not Sprime:
        return MPolyZ.const(1) if n == 0 else MPolyZ()
    # row[m] = h_m over the variables processed so far
    row = [MPolyZ.var(Sprime[0], m) for m in range(n + 1)]
    for v in Sprime[1:]:
        new = []
        for m in range(n + 1):
            acc = MPolyZ()
            for j in range(m + 1):
                if row[m - j]:
                    acc = acc + MPolyZ.var(v, j) * row[m - j]
            new.append(acc)
        row = new
    return row[n]


def h_complete_direct(n: int, Sprime) -> MPolyZ:
    """Same polynomial by listing every exponent vector in I_n(S')."""
    Sprime = sorted(Sprime)
    if n < 0:
        return MPolyZ()
    if not Sprime:
        return MPolyZ.const(1) if n == 0 else MPolyZ()
    terms = {}
    for ks in itertools.product(range(n + 1), repeat=len(Sprime)):
        if sum(ks) == n:
            terms[tuple((v, k) for v, k in zip(Sprime, ks) if k)] = 1
    return MPolyZ(terms)


def h_complete_eval(n: int, values, field) -> int:
    """h_n at the given codes of ``field`` (numeric version of the DP)."""
    values = list(values)
    if n < 0:
        return 0
    if not values:
        return 1 if n == 0 else 0
    # h_m(x_1..x_k) = h_m(x_1..x_{k-1}) + x_k * h_{m-1}(x_1..x_k)
    row = [1] + [0] * n
    for x in values:
        for m in range(1, n + 1):
            row[m] = field.add(row[m], field.mul(x, row[m - 1]))
    return row[n]


# the identities ----------------------------------------------------------

def keylemma_lhs(d: int, pair: PartitionPair) -> MPolyZ:
    variables = range(d)
    S_size = len(pair.S)
    out = MPolyZ()
    for i in range((d + 1) // 2, d + 1):
        h = h_complete(i - S_size, pair.S_prime)
        if h:
            out = out + elem_sym(d - i, variables) * h
    return out


def keylemma_rhs(d: int, pair: PartitionPair) -> MPolyZ:
    out = MPolyZ.const(1)
    for i in pair.S2:
        out = out * (MPolyZ.var(d) - MPolyZ.var(i + 1))
    return out


def keylemma_check(d: int, pair: PartitionPair) -> bool:
    return keylemma_lhs(d, pair) == keylemma_rhs(d, pair)


def cor22b_lhs(d: int, pair: PartitionPair, tower: FieldTower) -> FFElement:
    """sum of mu_i * h_{i-|S|}^{S'} at X_i = alpha^(q^i), i from ceil(d/2) to d."""
    F = tower.mid
    a = tower.alpha
    values = [a.frob(i).code for i in pair.S_prime]
    S_size = len(pair.S)
    acc = 0
    for i in range((d + 1) // 2, d + 1):
        mu_i = tower.ideal.mu[i]
        if mu_i:
            acc = F.add(acc, F.mul(mu_i, h_complete_eval(i - S_size, values, F)))
    return FFElement(F, acc)


def cor22b_check(d: int, pair: PartitionPair, tower: FieldTower) -> bool:
    if d != tower.d:
        raise ValueError("the pair must come from P(d) with d = deg p(T)")
    return cor22b_lhs(d, pair, tower) == L_of(shift(pair.S2, 1), tower)
