"""The supersingular polynomial H(lambda) and the routes that produce it.

Routes kept side by side:

* ``explicit``: the signed partition sum over P(d);
* ``symbolic``: the tau^d coefficient of phi_{p(T)} over mid[lambda];
* ``recursion``: (-1)^d alpha^(1+q+...+q^(d-1)) b(d) with b from its
  three-term recursion;
* ``closed_form``: the same with b summed over all subsets of {0..d-1}.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .drinfeld import frob_power, normal_form, pp_coeffs
from .errors import (BracketVanishes, CapExceeded, EvenCharacteristic, IndexAtD,
                     SearchSpaceTooLarge)
from .field import (FFElement, FieldTower, UPoly, bracket, upoly_gcd, upoly_roots_exhaustive,
                    upoly_to_json)
from .field.upoly import DEFAULT_SCAN_CAP
from .partitions import L_of, enumerate_P, shift

ROUTES = ("explicit", "symbolic", "recursion", "closed_form")
CLOSED_FORM_CAP = 16


@dataclass(frozen=True, eq=False)
class SsPolynomial:
    H: UPoly
    q: int
    d: int
    provenance: str

    @property
    def degree(self) -> int:
        return self.H.degree


# the explicit formula ----------------------------------------------------

def H_explicit(tower: FieldTower, A1, A2):
    """Sum over P(d) of L(S2+1) * A1^w(S1) * A2^w(S2)."""
    total = None
    for pair in enumerate_P(tower.d):
        term = frob_power(A1, pair.S1) * frob_power(A2, pair.S2) \
            * L_of(shift(pair.S2, 1), tower)
        total = term if total is None else total + term
    return total


@dataclass(frozen=True)
class FormulaTerm:
    """One summand: sign * prod [b] for b in brackets * A1^w(S1) * A2^w(S2)."""
    sign: int
    brackets: tuple
    S1: tuple
    S2: tuple

    def render(self) -> str:
        def power(name, S):
            if not S:
                return ""
            exps = [("q^%d" % i if i > 1 else "q" if i == 1 else "1") for i in sorted(S, reverse=True)]
            if exps == ["1"]:
                return name
            return f"{name}^{{{'+'.join(exps)}}}"

        body = "".join(f"[{b}]" for b in self.brackets) + power("A1", self.S1) + power("A2", self.S2)
        return ("+" if self.sign > 0 else "-") + (body or "1")


def formula_terms(d: int) -> list[FormulaTerm]:
    """The explicit formula for H as a list of symbolic terms in P(d) order."""
    out = []
    for pair in enumerate_P(d):
        sign = -1 if len(pair.S2) % 2 else 1
        out.append(FormulaTerm(sign, shift(pair.S2, 1), pair.S1, pair.S2))
    return out


def render_formula(d: int) -> str:
    s = " ".join(t.render() for t in formula_terms(d))
    return s[1:] if s.startswith("+") else s


def _lam(tower: FieldTower, level: str = "mid") -> UPoly:
    return UPoly.gen(tower.level(level))


def H_lambda(tower: FieldTower) -> SsPolynomial:
    """H with A1 = alpha + lambda, A2 = lambda, through the explicit formula.

    (alpha + lambda)^w(S1) comes out as prod (alpha^(q^i) + lambda^(q^i))
    because UPoly.frob is the coefficientwise q-power map.
    """
    lam = _lam(tower)
    H = H_explicit(tower, lam + tower.alpha, lam)
    return SsPolynomial(H, tower.q, tower.d, "explicit")


def H_symbolic(tower: FieldTower) -> SsPolynomial:
    H = pp_coeffs(normal_form(tower)).H
    return SsPolynomial(H, tower.q, tower.d, "symbolic")


# b(d) ----------------------------------------------------------------------

def _alpha_pow_int(tower, e: int) -> FFElement:
    """alpha^e for any integer e (alpha is a unit)."""
    return tower.alpha ** e


def b_recursive(tower: FieldTower, d: int) -> UPoly:
    """b(d)(lambda) at T = alpha through the three-term recursion.

    b(n) = -(1 + D_n) b(n-1) + D_n (alpha^(1-q^(n-1)) - 1) b(n-2) where
    D_n = lambda^(q^(n-1)) * alpha^(-q^n); b(0) = 1 and b(n<0) = 0.
    """
    mid, q = tower.mid, tower.q
    zero, one = UPoly(mid, ()), UPoly(mid, (1,))
    if d < 0:
        return zero
    prev2, prev = zero, one
    lam = _lam(tower)
    for n in range(1, d + 1):
        D = lam.frob(n - 1) * _alpha_pow_int(tower, -(q ** n))
        c = _alpha_pow_int(tower, 1 - q ** (n - 1)) - 1
        prev2, prev = prev, -(one + D) * prev + (D * c) * prev2
    return prev


def b_closed_form(tower: FieldTower, d: int, cap: int = CLOSED_FORM_CAP) -> UPoly:
    """(-1)^d * sum over S in subsets of {0..d-1} of (lambda/alpha^q)^w(S) / m(S).

    m(S) is the product of alpha^(q^i - 1) over i in S with i-1 not in S.
    """
    if d > cap:
        raise CapExceeded(f"2^{d} subsets exceeds the cap 2^{cap}")
    mid, q = tower.mid, tower.q
    if d < 0:
        return UPoly(mid, ())
    lam = _lam(tower)
    D = lam * _alpha_pow_int(tower, -q)
    total = UPoly(mid, ())
    for mask in range(1 << d):
        S = [i for i in range(d) if mask >> i & 1]
        e = 0
        for i in S:
            if i == 0 or not mask >> (i - 1) & 1:
                e += q ** i - 1
        total = total + frob_power(D, S) * _alpha_pow_int(tower, -e)
    return -total if d % 2 else total


def H_from_b(tower: FieldTower, b: UPoly, provenance: str) -> SsPolynomial:
    d = tower.d
    c = _alpha_pow_int(tower, tower.w_full)
    H = b * (-c if d % 2 else c)
    return SsPolynomial(H, tower.q, d, provenance)


def all_routes(tower: FieldTower) -> dict[str, SsPolynomial]:
    d = tower.d
    return {
        "explicit": H_lambda(tower),
        "symbolic": H_symbolic(tower),
        "recursion": H_from_b(tower, b_recursive(tower, d), "recursion"),
        "closed_form": H_from_b(tower, b_closed_form(tower, d), "closed_form"),
    }


def routes_agree(routes: dict[str, SsPolynomial]) -> list[str]:
    """Names of routes whose H equals the explicit one."""
    ref = routes["explicit"].H
    return [name for name in ROUTES if name in routes and routes[name].H == ref]


# the period side (odd q) -----------------------------------------------------

def _T(tower):
    return UPoly.gen(tower.base)


def bracket_T(tower: FieldTower, n: int) -> UPoly:
    """[n] = T^(q^n) - T in F_q[T]."""
    T = _T(tower)
    return T ** (tower.q ** n) - T


def L_T(tower: FieldTower, n: int) -> UPoly:
    """L_n = (-1)^n [n][n-1]...[1] in F_q[T]."""
    out = UPoly(tower.base, (1,))
    for i in range(1, n + 1):
        out = out * (-bracket_T(tower, i))
    return out


@dataclass(frozen=True, eq=False)
class PeriodContext:
    tower: FieldTower
    delta: FFElement
    L_d: FFElement
    xi_num: UPoly
    xi_den: UPoly

    def delta_squared_in_Fq(self) -> bool:
        return (self.delta * self.delta).code < self.tower.q


def period_context(tower: FieldTower) -> PeriodContext:
    """delta is the first code of the top level with delta^q = -delta and delta
    outside F_q; xi_d is kept as numerator/denominator in F_q[T] since L_d
    vanishes at alpha."""
    q = tower.q
    if q % 2 == 0:
        raise EvenCharacteristic("delta^q = -delta forces delta in F_q when q is even")
    top = tower.top
    delta = None
    for c in range(q, top.order):
        if top.pow(c, q) == top.neg(c):
            delta = FFElement(top, c)
            break
    if delta is None:  # pragma: no cover - existence holds for odd q
        raise AssertionError("no delta found")
    d = tower.d
    Ld = L_T(tower, d)
    L_d_at_alpha = Ld(tower.alpha)
    num = bracket_T(tower, 1) ** tower.w_full
    den = Ld if d % 2 == 0 else -Ld
    return PeriodContext(tower, delta, L_d_at_alpha, num, den)


def xi_product_check(pctx: PeriodContext) -> bool:
    """prod_{n<d} (1 - [n]/[n+1]) equals xi_d, compared after clearing denominators."""
    tower = pctx.tower
    num = UPoly(tower.base, (1,))
    den = UPoly(tower.base, (1,))
    for n in range(tower.d):
        upper = bracket_T(tower, n + 1)
        num = num * (upper - bracket_T(tower, n))
        den = den * upper
    return num * pctx.xi_den == pctx.xi_num * den


def a_recursive(tower: FieldTower, pctx: PeriodContext, n: int) -> UPoly:
    """a(n)(lambda) over top through -[n] a(n) = -a(n-1)(alpha^(q^n) + lambda^(q^(n-1)))
    + lambda^(q^(n-1)) a(n-2); a(0) = alpha delta, a(n<0) = 0."""
    top = tower.top
    zero = UPoly(top, ())
    if n < 0:
        return zero
    lam = _lam(tower, "top")
    prev2, prev = zero, UPoly.constant(top, tower.alpha * pctx.delta)
    for k in range(1, n + 1):
        bk = bracket(tower, k)
        if not bk:
            raise IndexAtD(f"[{k}] = 0 since d = {tower.d} divides {k}")
        lk = lam.frob(k - 1)
        nxt = (prev * (lk + tower.alpha.frob(k)) - lk * prev2) * bk.inverse()
        prev2, prev = prev, nxt
    return prev


def beta_coeff(tower: FieldTower, j: int) -> UPoly:
    """beta_j = sum over P(j) of A1^w(S1) A2^w(S2) / (L(S1+1) L(S2+2)) in normal form."""
    mid = tower.mid
    if j < 0:
        return UPoly(mid, ())
    lam = _lam(tower)
    A1, A2 = lam + tower.alpha, lam
    total = UPoly(mid, ())
    for pair in enumerate_P(j):
        den = L_of(shift(pair.S1, 1), tower) * L_of(shift(pair.S2, 2), tower)
        if not den:
            raise BracketVanishes(f"a bracket in the denominator of beta_{j} is 0 mod p(T)")
        total = total + frob_power(A1, pair.S1) * frob_power(A2, pair.S2) * den.inverse()
    return total


def a_beta(tower: FieldTower, pctx: PeriodContext, n: int) -> UPoly:
    """a(n) = alpha delta * sum_{j<=n} (-1)^j beta_j."""
    acc = UPoly(tower.mid, ())
    for j in range(n + 1):
        b = beta_coeff(tower, j)
        acc = acc - b if j % 2 else acc + b
    return acc.embed(tower.top) * (tower.alpha * pctx.delta)


def a_from_b(tower: FieldTower, pctx: PeriodContext, n: int) -> UPoly:
    """a(n) = delta alpha^(1+q+...+q^n) b(n) / L_n, valid while L_n(alpha) != 0."""
    Ln = L_T(tower, n)(tower.alpha)
    if not Ln:
        raise IndexAtD(f"L_{n} vanishes at alpha")
    w = sum(tower.q ** i for i in range(n + 1))
    c = _alpha_pow_int(tower, w) * pctx.delta / Ln
    return b_recursive(tower, n).embed(tower.top) * c


@dataclass(frozen=True)
class PeriodReport:
    identity: bool
    a_routes: dict
    delta_ok: bool
    xi_ok: bool

    @property
    def ok(self) -> bool:
        return self.identity and self.delta_ok and self.xi_ok and all(self.a_routes.values())


def truncated_period_sum(tower: FieldTower, pctx: PeriodContext) -> UPoly:
    """L_d * sum_{n<=d} a(n) (1/(delta alpha))^(q^n) over top[lambda].

    Each L_d a(n) is formed as (L_d/L_n)(alpha) * delta alpha^(1+...+q^n) b(n),
    where L_d/L_n = (-1)^(d-n) [d]...[n+1] is a polynomial in T.
    """
    d, q = tower.d, tower.q
    top = tower.top
    base_inv = (pctx.delta * tower.alpha).inverse()
    total = UPoly(top, ())
    for n in range(d + 1):
        ratio = UPoly(tower.base, (1,))
        for i in range(n + 1, d + 1):
            ratio = ratio * (-bracket_T(tower, i))
        r = ratio(tower.alpha)
        if not r:
            continue
        w = sum(q ** i for i in range(n + 1))
        coeff = r * _alpha_pow_int(tower, w) * pctx.delta * base_inv ** (q ** n)
        total = total + b_recursive(tower, n).embed(top) * coeff
    return total


def truncated_period_check(tower: FieldTower, pctx: PeriodContext | None = None,
                           H: SsPolynomial | None = None) -> PeriodReport:
    pctx = pctx or period_context(tower)
    H = H or H_lambda(tower)
    identity = truncated_period_sum(tower, pctx) == H.H.embed(tower.top)
    delta = pctx.delta
    delta_ok = delta.frob(1) == -delta and pctx.delta_squared_in_Fq() and delta.code >= tower.q
    a_routes = {}
    for n in range(tower.d):
        rec = a_recursive(tower, pctx, n)
        a_routes[f"a({n}) recursion = via b"] = rec == a_from_b(tower, pctx, n)
        try:
            a_routes[f"a({n}) recursion = via beta"] = rec == a_beta(tower, pctx, n)
        except BracketVanishes:
            pass
    return PeriodReport(identity, a_routes, delta_ok, xi_product_check(pctx))


# properties of H -----------------------------------------------------------

def roots_in_top(f: UPoly, tower: FieldTower, cap: int = DEFAULT_SCAN_CAP) -> list[FFElement]:
    """Roots of ``f`` in the top level, sorted by code."""
    return sorted(upoly_roots_exhaustive(f, tower.top, cap), key=lambda x: x.code)


def count_roots_of_lift(H: UPoly, tower: FieldTower, cap: int = DEFAULT_SCAN_CAP) -> int:
    """Number of x in the top level with H(x^(q+1)) = 0 (H evaluated once per value)."""
    top = tower.top
    if top.order > cap:
        raise SearchSpaceTooLarge(f"{top.order} elements > cap {cap}")
    e = tower.q + 1
    seen: dict[int, bool] = {}
    count = 0
    for x in range(top.order):
        y = top.pow(x, e)
        hit = seen.get(y)
        if hit is None:
            hit = seen[y] = H.eval_code(y, top) == 0
        count += hit
    return count


def substituted(tower: FieldTower, H: UPoly) -> UPoly:
    """G(s) = H(-alpha^q s (s+1)^(q-1)) over mid[s]."""
    q = tower.q
    s = UPoly.gen(tower.mid)
    inner = s * (s + 1) ** (q - 1) * (-(tower.alpha ** q))
    return H.compose(inner)


def even_d_special_value(tower: FieldTower) -> FFElement:
    """(-1)^(d/2) [1][3]...[d-1] (-alpha)^(1+q^2+...+q^(d-2)) for even d."""
    d, q = tower.d, tower.q
    out = tower.alpha * 0 + (1 if d % 4 == 0 else -1)
    for i in range(1, d, 2):
        out = out * bracket(tower, i)
    e = sum(q ** i for i in range(0, d - 1, 2))
    return out * (-tower.alpha) ** e


def _divisibility(tower: FieldTower) -> bool:
    g = pp_coeffs(normal_form(tower)).g
    d = tower.d
    return all(g[d].divides(g[i]) for i in range(d, 2 * d))


def _collapse(tower: FieldTower, roots) -> bool:
    d, q = tower.d, tower.q
    e = (q ** (2 * d) - 1) // (q * q - 1)
    for r in roots:
        g = pp_coeffs(normal_form(tower, r, level="top")).g
        if any(g[i] for i in range(d, 2 * d)) or g[2 * d] != r ** e:
            return False
    return True


def property_suite(ss: SsPolynomial, tower: FieldTower, scan_cap: int = DEFAULT_SCAN_CAP) -> dict:
    H = ss.H
    q, d = tower.q, tower.d
    report: dict = {}
    report["degree"] = H.degree
    report["degree_ok"] = H.degree == tower.w_full
    report["h0_ok"] = H[0] == tower.alpha ** tower.w_full and bool(H[0])
    report["separable"] = upoly_gcd(H, H.derivative()).degree == 0
    roots = roots_in_top(H, tower, scan_cap)
    report["H_roots_in_top"] = len(roots)
    report["all_H_roots_in_top"] = len(roots) == H.degree
    lifted = count_roots_of_lift(H, tower, scan_cap)
    report["lifted_roots_in_top"] = lifted
    report["roots_in_Fp2"] = lifted == (q + 1) * H.degree
    G = substituted(tower, H)
    report["substituted_separable"] = upoly_gcd(G, G.derivative()).degree == 0
    if d % 2 == 0:
        v = H(-tower.alpha)
        report["even_d_value_ok"] = bool(v) and v == even_d_special_value(tower)
    else:
        report["minus_alpha_is_root"] = not H(-tower.alpha)
    report["divisibility"] = _divisibility(tower)
    report["collapse"] = _collapse(tower, roots)
    report["ok"] = all(v for k, v in report.items()
                       if isinstance(v, bool) and k != "minus_alpha_is_root")
    return report


def ss_count_by_j(ss: SsPolynomial, tower: FieldTower, scan_cap: int = DEFAULT_SCAN_CAP):
    """(distinct j over the roots of H, the expected count, fiber structure ok)."""
    q, d = tower.q, tower.d
    fibers = Counter()
    for r in roots_in_top(ss.H, tower, scan_cap):
        j = (tower.alpha + r) ** (q + 1) / r
        fibers[j.code] += 1
    if d % 2 == 0:
        expected = (q ** d - 1) // (q * q - 1)
        fibers_ok = all(v == q + 1 for v in fibers.values())
    else:
        expected = (q ** d - q) // (q * q - 1) + 1
        fibers_ok = fibers.get(0) == 1 and all(v == q + 1 for k, v in fibers.items() if k)
    return len(fibers), expected, fibers_ok


HPOLY_CHECKS = ("routes", "properties", "jcount", "period")


def hpoly_report(tower: FieldTower, scan_cap: int = DEFAULT_SCAN_CAP, checks=None) -> dict:
    """Everything the hpoly command prints, as JSON-ready data.

    ``checks`` selects groups from HPOLY_CHECKS (default: all).  The period
    group is skipped for even q and listed under "skipped".
    """
    checks = tuple(checks or HPOLY_CHECKS)
    unknown = set(checks) - set(HPOLY_CHECKS)
    if unknown:
        raise ValueError(f"unknown check groups {sorted(unknown)}")
    ss = H_lambda(tower)
    out = {
        "q": tower.q,
        "p_of_T": list(tower.ideal.mu),
        "d": tower.d,
        "degree": ss.H.degree,
        "H_coeffs": upoly_to_json(tower, ss.H)["coeffs"],
    }
    results = {}
    if "routes" in checks:
        agree = routes_agree(all_routes(tower))
        out["routes_agree"] = agree
        results["routes"] = agree == list(ROUTES)
    if "properties" in checks:
        props = property_suite(ss, tower, scan_cap)
        out.update({k: v for k, v in props.items() if k != "ok"})
        results["properties"] = props["ok"]
    if "jcount" in checks:
        count, expected, fibers_ok = ss_count_by_j(ss, tower, scan_cap)
        out["j_count"] = count
        out["j_count_expected"] = expected
        out["j_fibers_ok"] = fibers_ok
        results["jcount"] = count == expected and fibers_ok
    skipped = []
    if "period" in checks:
        if tower.q % 2:
            pr = truncated_period_check(tower, H=ss)
            out["truncated_period"] = pr.identity
            out["a_routes"] = pr.a_routes
            results["period"] = pr.ok
        else:
            skipped.append("period")
    out["checks"] = results
    out["skipped"] = skipped
    out["ok"] = all(results.values())
    return out


__all__ = [
    "ROUTES", "SsPolynomial", "H_explicit", "H_lambda", "H_symbolic", "FormulaTerm",
    "formula_terms", "render_formula", "b_recursive", "b_closed_form", "H_from_b",
    "all_routes", "routes_agree", "PeriodContext", "period_context", "xi_product_check",
    "a_recursive", "beta_coeff", "a_beta", "a_from_b", "truncated_period_sum",
    "truncated_period_check", "PeriodReport", "roots_in_top", "count_roots_of_lift",
    "substituted", "even_d_special_value", "property_suite", "ss_count_by_j", "hpoly_report",
    "HPOLY_CHECKS",
]
