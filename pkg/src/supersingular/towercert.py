"""Complete splitting in the recursive tower Y(Y+1)^(q-1) = X^q/(alpha(X+1))^(q-1).

Omega is the set of parameters s with H(-alpha^q s (s+1)^(q-1)) = 0.  Each
point of Omega has q distinct successors inside Omega, which gives at least
|Omega| q^n rational places at level n; with the genus of X_0(T^(n+2)) this
yields the ratio table that approaches q^d - 1.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonIntegerGenus, NotInOmega, SearchSpaceTooLarge, SplitDefect
from .field import FFElement, FieldTower, UPoly, element_to_json
from .field.upoly import DEFAULT_SCAN_CAP
from .mpoly import MPolyZ
from .ssformula import SsPolynomial, substituted


def drinfeld_vladut_bound(q: int, d: int) -> int:
    """A(q^(2d)) = q^d - 1, the ceiling for N/g over F_{q^(2d)}.  A known
    theorem, stored here rather than computed."""
    return q ** d - 1


# Omega -----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class OmegaSet:
    tower: FieldTower
    codes: tuple

    @property
    def elements(self) -> list[FFElement]:
        return [FFElement(self.tower.top, c) for c in self.codes]

    def __len__(self):
        return len(self.codes)

    def __contains__(self, x) -> bool:
        code = x.code if isinstance(x, FFElement) else int(x)
        return code in self._set

    @property
    def _set(self) -> frozenset:
        s = self.tower._cache.get(("omega_set", self.codes))
        if s is None:
            s = self.tower._cache[("omega_set", self.codes)] = frozenset(self.codes)
        return s

    @property
    def expected_size(self) -> int:
        return self.tower.q * self.tower.w_full

    @property
    def size_ok(self) -> bool:
        return len(self.codes) == self.expected_size

    @property
    def minus_one_absent(self) -> bool:
        return self.tower.top.neg(1) not in self._set


def _lambda0_code(tower: FieldTower, s: int) -> int:
    top, q = tower.top, tower.q
    c = top.neg(top.pow(tower.alpha_code, q))
    return top.mul(c, top.mul(s, top.pow(top.add(s, 1), q - 1)))


def _lambda1_code(tower: FieldTower, s: int) -> int:
    top, q = tower.top, tower.q
    num = top.neg(top.mul(top.pow(tower.alpha_code, q), top.pow(s, q)))
    den = top.pow(top.mul(tower.alpha_code, top.add(s, 1)), q - 1)
    return top.div(num, den)


def omega_compute(tower: FieldTower, ss: SsPolynomial, cap: int = DEFAULT_SCAN_CAP) -> OmegaSet:
    """Exhaustive scan of the top level for the zeros of H(-alpha^q s (s+1)^(q-1))."""
    top = tower.top
    if top.order > cap:
        raise SearchSpaceTooLarge(f"{top.order} elements > cap {cap}")
    H = ss.H
    memo: dict[int, bool] = {}
    found = []
    for s in range(top.order):
        lam = _lambda0_code(tower, s)
        hit = memo.get(lam)
        if hit is None:
            hit = memo[lam] = H.eval_code(lam, top) == 0
        if hit:
            found.append(s)
    return OmegaSet(tower, tuple(found))


# the splitting step ----------------------------------------------------------

def _preimages(tower: FieldTower) -> dict[int, list[int]]:
    """value -> every b with b (b+1)^(q-1) = value, over the top level."""
    key = "tower_preimages"
    cache = tower._cache
    if key not in cache:
        top, q = tower.top, tower.q
        out: dict[int, list[int]] = {}
        for b in range(top.order):
            v = top.mul(b, top.pow(top.add(b, 1), q - 1))
            out.setdefault(v, []).append(b)
        cache[key] = out
    return cache[key]


def tower_rhs(tower: FieldTower, a: FFElement) -> FFElement:
    """a^q / (alpha (a+1))^(q-1)."""
    q = tower.q
    a = a.embed(tower.top) if a.field is not tower.top else a
    return a ** q / (tower.alpha * (a + 1)) ** (q - 1)


def splitting_step(tower: FieldTower, omega: OmegaSet, a: FFElement,
                   cap: int = DEFAULT_SCAN_CAP) -> list[FFElement]:
    """All b in the top level above ``a``; exactly q of them, all in Omega."""
    if a not in omega:
        raise NotInOmega(f"{a!r} is not in Omega")
    if tower.top.order > cap:
        raise SearchSpaceTooLarge(f"{tower.top.order} elements > cap {cap}")
    rhs = tower_rhs(tower, a)
    sols = sorted(_preimages(tower).get(rhs.code, []))
    if len(sols) != tower.q:
        raise SplitDefect(f"{len(sols)} solutions above {a!r}, expected {tower.q}")
    outside = [b for b in sols if b not in omega]
    if outside:
        raise SplitDefect(f"successors {outside} of {a!r} fall outside Omega")
    return [FFElement(tower.top, b) for b in sols]


# the functional equation of H --------------------------------------------------

def prop41b_check(tower: FieldTower, ss: SsPolynomial) -> bool:
    """H(-alpha^q s (s+1)^(q-1)) = (s+1)^(q^d-1) H(-alpha^q s^q / (alpha(s+1))^(q-1)).

    With D = (alpha(s+1))^(q-1), N = -alpha^q s^q and h = deg H, both sides are
    multiplied by D^h so the right side becomes (s+1)^(q^d-1) sum c_k N^k D^(h-k).
    """
    q, d = tower.q, tower.d
    mid = tower.mid
    s = UPoly.gen(mid)
    one = UPoly(mid, (1,))
    D = ((s + 1) * tower.alpha) ** (q - 1)
    N = s ** q * (-(tower.alpha ** q))
    H = ss.H
    h = H.degree
    lhs = substituted(tower, H) * D ** h
    acc = UPoly(mid, ())
    Npow = one
    Dpows = [one]
    for _ in range(h):
        Dpows.append(Dpows[-1] * D)
    for k in range(h + 1):
        if H[k]:
            acc = acc + Npow * Dpows[h - k] * H[k]
        Npow = Npow * N
    rhs = (s + 1) ** (q ** d - 1) * acc
    return lhs == rhs


# genus and ratios --------------------------------------------------------------

def _ceil_half(n: int) -> int:
    return -((-n) // 2)


def genus_X0Tn(q: int, n: int) -> int:
    """(q^(n-1) - q^ceil((n-1)/2) - q^ceil((n-2)/2) + 1)/(q - 1), exactly."""
    if n < 0:
        raise ValueError("n must be >= 0")
    qq = Fraction(q)
    g = (qq ** (n - 1) - qq ** _ceil_half(n - 1) - qq ** _ceil_half(n - 2) + 1) / (q - 1)
    if g.denominator != 1 or g < 0:
        raise NonIntegerGenus(f"genus formula gave {g} for q={q}, n={n}")
    return int(g)


@dataclass(frozen=True)
class TowerLevelReport:
    n: int
    N_lower: int
    genus: int
    ratio: Fraction
    target: int

    @property
    def ratio_decimal(self) -> float:
        return float(self.ratio)

    @property
    def gap(self) -> Fraction:
        return self.ratio - self.target

    def to_json(self) -> dict:
        return {"n": self.n, "N_lower": self.N_lower, "genus": self.genus,
                "ratio_num": self.ratio.numerator, "ratio_den": self.ratio.denominator,
                "ratio_decimal": round(self.ratio_decimal, 12), "target": self.target}


def ratio_table(q: int, d: int, omega_size: int, n_max: int) -> list[TowerLevelReport]:
    """Level n of the tower is X_0(T^(n+2)); N is bounded below by |Omega| q^n."""
    target = drinfeld_vladut_bound(q, d)
    out = []
    for n in range(1, n_max + 1):
        N = omega_size * q ** n
        g = genus_X0Tn(q, n + 2)
        out.append(TowerLevelReport(n, N, g, Fraction(N, g), target))
    return out


def gap_decreasing(table: list[TowerLevelReport], start: int = 4) -> bool:
    gaps = [r.gap for r in table if r.n >= start]
    return all(b < a for a, b in zip(gaps, gaps[1:]))


CSV_FIELDS = ("n", "N_lower", "genus", "ratio_num", "ratio_den", "ratio_decimal", "target")


def ratio_table_csv(table: list[TowerLevelReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for row in table:
        w.writerow(row.to_json())
    return buf.getvalue()


# the modular relation ----------------------------------------------------------

def modular_relation_sides(q: int) -> tuple[MPolyZ, MPolyZ]:
    """Both sides of
    (T+l1)^(q+1) l0^q - (T^q+l0)^(q+1) l1
      = (T^(q+1) - l0 l1) (T^(q^2) + l0^q - (T^(q+1) - l0 l1)^(q-1) (T + l1))."""
    T, l0, l1 = MPolyZ.var("T"), MPolyZ.var("l0"), MPolyZ.var("l1")
    lhs = (T + l1) ** (q + 1) * l0 ** q - (T ** q + l0) ** (q + 1) * l1
    u = T ** (q + 1) - l0 * l1
    rhs = u * (T ** (q * q) + l0 ** q - u ** (q - 1) * (T + l1))
    return lhs, rhs


def minimal_relation(q: int) -> MPolyZ:
    """T^(q^2) + l0^q - (T^(q+1) - l0 l1)^(q-1) (T + l1)."""
    T, l0, l1 = MPolyZ.var("T"), MPolyZ.var("l0"), MPolyZ.var("l1")
    return T ** (q * q) + l0 ** q - (T ** (q + 1) - l0 * l1) ** (q - 1) * (T + l1)


def _char(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


def modular_relation_check(q: int) -> bool:
    lhs, rhs = modular_relation_sides(q)
    p = _char(q)
    return (lhs - rhs).reduce_mod(p) == MPolyZ()


def covering_consistency_check(tower: FieldTower, ss: SsPolynomial, omega: OmegaSet) -> dict:
    """For each s in Omega: lambda0 and lambda1 are roots of H and the minimal
    relation vanishes at (alpha, lambda0, lambda1)."""
    top = tower.top
    rel = minimal_relation(tower.q).reduce_mod(tower.p)
    l0_ok = l1_ok = rel_ok = True
    for s in omega.codes:
        l0, l1 = _lambda0_code(tower, s), _lambda1_code(tower, s)
        l0_ok &= ss.H.eval_code(l0, top) == 0
        l1_ok &= ss.H.eval_code(l1, top) == 0
        rel_ok &= rel.evaluate({"T": tower.alpha_code, "l0": l0, "l1": l1}, field=top) == 0
    return {"lambda0_roots": l0_ok, "lambda1_roots": l1_ok, "relation": rel_ok,
            "ok": l0_ok and l1_ok and rel_ok}


# certification bundle ----------------------------------------------------------

def tower_report(tower: FieldTower, ss: SsPolynomial, n_max: int,
                 scan_cap: int = DEFAULT_SCAN_CAP) -> dict:
    omega = omega_compute(tower, ss, scan_cap)
    witnesses = []
    split_ok = True
    for a in omega.elements:
        try:
            succ = splitting_step(tower, omega, a, scan_cap)
            witnesses.append({"a": element_to_json(tower, a),
                              "successors": [element_to_json(tower, b) for b in succ]})
        except SplitDefect as exc:
            split_ok = False
            witnesses.append({"a": element_to_json(tower, a), "error": str(exc)})
    table = ratio_table(tower.q, tower.d, len(omega), n_max)
    cover = covering_consistency_check(tower, ss, omega)
    checks = {
        "omega_size": omega.size_ok,
        "minus_one_absent": omega.minus_one_absent,
        "splitting": split_ok,
        "functional_equation": prop41b_check(tower, ss),
        "gap_decreasing": gap_decreasing(table) if n_max >= 5 else True,
        "modular_relation": modular_relation_check(tower.q),
        "covering": cover["ok"],
    }
    return {
        "q": tower.q,
        "p_of_T": list(tower.ideal.mu),
        "d": tower.d,
        "omega": {"size": len(omega), "expected": omega.expected_size,
                  "elements": [element_to_json(tower, s) for s in omega.elements]},
        "split_witnesses": witnesses,
        "ratio_table": [r.to_json() for r in table],
        "target": drinfeld_vladut_bound(tower.q, tower.d),
        "checks": checks,
        "ok": all(checks.values()),
    }


__all__ = [
    "drinfeld_vladut_bound", "OmegaSet", "omega_compute", "tower_rhs", "splitting_step",
    "prop41b_check", "genus_X0Tn", "TowerLevelReport", "ratio_table", "gap_decreasing",
    "ratio_table_csv", "CSV_FIELDS", "modular_relation_sides", "minimal_relation",
    "modular_relation_check", "covering_consistency_check", "tower_report",
]
