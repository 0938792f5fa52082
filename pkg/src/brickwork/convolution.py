"""Linear endomorphisms of k(x), the action q -> q_c, and the convolution solver.

k(x) has the k-basis {x^i} together with {1/(x - lam)^j : lam in k, j >= 1}.
A ``LazyLinearMap`` assigns values to basis elements on demand and extends
linearly through ``expand_basis``.  For c(x, y) = sum_j a_j(y) x^j,

    q_c(z) = sum_j a_j(x) q(x^j z).

``solve_convolution`` constructs q with q_c = p by recursion over the basis:
monomials first (seeded with c(x^n, x)), then poles of increasing order at
each point.  Only poles at ground-field points are supported.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Union

from .errors import NonSplitContent, NonSplitDenominator, ValidationError
from .poly import BiPoly, Poly, RatFun, ground_roots, partial_fraction_shift, poly_gcd, split_factorization


class Monomial(NamedTuple):
    i: int

    def to_ratfun(self, K) -> RatFun:
        return RatFun(Poly.monomial(self.i, K))

    def __str__(self):
        return f"x^{self.i}"


class Pole(NamedTuple):
    lam: object
    j: int

    def to_ratfun(self, K) -> RatFun:
        return RatFun(Poly.const(1, K), Poly.from_roots([self.lam] * self.j, K))

    def __str__(self):
        return f"1/(x - {self.lam})^{self.j}"


BasisElt = Union[Monomial, Pole]


def _series_quotient(num: Poly, den: Poly, order: int) -> list:
    """First ``order`` power-series coefficients of num/den at 0 (den(0) != 0)."""
    K = num.K
    inv0 = K.one / den.coeff(0)
    out = []
    for k in range(order):
        acc = num.coeff(k)
        for i in range(1, k + 1):
            d = den.coeff(i)
            if d:
                acc = acc - d * out[k - i]
        out.append(acc * inv0)
    return out


def expand_basis(r) -> list[tuple[object, BasisElt]]:
    """Write r as a finite combination [(coef, basis element)], exactly."""
    if isinstance(r, Poly):
        r = RatFun(r)
    K = r.K
    quo, rem = divmod(r.num, r.den)
    out = [(c, Monomial(i)) for i, c in enumerate(quo.c) if c]
    if rem:
        try:
            factors = split_factorization(r.den)
        except NonSplitDenominator:
            raise NonSplitDenominator(f"denominator of {r} does not split over the ground field") from None
        for lam, mult in factors:
            rest = Poly.from_roots([l for l, m in factors if l != lam for _ in range(m)], K)
            coeffs = _series_quotient(rem.shift(lam), rest.shift(lam), mult)
            for k, c in enumerate(coeffs):
                if c:
                    out.append((c, Pole(lam, mult - k)))
    check = RatFun(Poly((), K))
    for c, b in out:
        check = check + b.to_ratfun(K) * RatFun(Poly.const(c, K))
    if check != r:
        raise ArithmeticError(f"basis expansion of {r} does not recombine")
    return out


def _x_times(j: int, b: BasisElt, K) -> list[tuple[object, BasisElt]]:
    """x^j * b in the canonical basis."""
    if isinstance(b, Monomial):
        return [(K.one, Monomial(b.i + j))]
    h, u = partial_fraction_shift(j, b.j, b.lam, K)
    out = [(c, Monomial(i)) for i, c in enumerate(h.c) if c]
    out += [(c, Pole(b.lam, i)) for c, i in u]
    top = b.lam ** j if j else K.one
    if top:
        out.append((top, b))
    return out


class LazyLinearMap:
    """A k-linear map k(x) -> k(x) given by a rule on basis elements, memoized."""

    is_zero = False

    def __init__(self, rule: Callable[[BasisElt], RatFun], K, name: str = "q"):
        self.rule = rule
        self.K = K
        self.name = name
        self.memo: dict = {}

    def basis_value(self, b: BasisElt) -> RatFun:
        if b not in self.memo:
            self.memo[b] = self.rule(b)
        return self.memo[b]

    def __call__(self, z) -> RatFun:
        if isinstance(z, (Monomial, Pole)):
            return self.basis_value(z)
        return self.apply_terms(expand_basis(z))

    def apply_terms(self, terms) -> RatFun:
        K = self.K
        out = RatFun(Poly((), K))
        for c, b in terms:
            out = out + self.basis_value(b) * RatFun(Poly.const(c, K))
        return out


def zero_map(K) -> LazyLinearMap:
    q = LazyLinearMap(lambda b: RatFun(Poly((), K)), K, "0")
    q.is_zero = True
    return q


def identity_map(K) -> LazyLinearMap:
    return LazyLinearMap(lambda b: b.to_ratfun(K), K, "id")


def mu(r, K) -> LazyLinearMap:
    """Multiplication by r."""
    r = r if isinstance(r, RatFun) else RatFun(r)
    return LazyLinearMap(lambda b: r * b.to_ratfun(K), K, "mu")


def compose_maps(q1: LazyLinearMap, q2: LazyLinearMap) -> LazyLinearMap:
    return LazyLinearMap(lambda b: q1(q2.basis_value(b)), q1.K, f"{q1.name}.{q2.name}")


def table_map(values: dict, K, default: Callable | None = None) -> LazyLinearMap:
    """A map given by explicit basis values; ``default`` fills in the rest."""
    def rule(b):
        if b in values:
            v = values[b]
            return v if isinstance(v, RatFun) else RatFun(v) if isinstance(v, Poly) else RatFun.const(v, K)
        if default is None:
            raise KeyError(f"no value for {b}")
        return default(b)
    return LazyLinearMap(rule, K, "p")


def apply_c(q: LazyLinearMap, c: BiPoly) -> LazyLinearMap:
    """q_c(z) = sum_j a_j(x) q(x^j z) where c = sum_j a_j(y) x^j."""
    K = q.K
    coeffs = [RatFun(a) for a in c.x_coeffs()] if c else []

    def rule(b):
        out = RatFun(Poly((), K))
        for j, a in enumerate(coeffs):
            if a:
                out = out + a * q.apply_terms(_x_times(j, b, K))
        return out
    return LazyLinearMap(rule, K, f"{q.name}_c")


def x_content_split(c: BiPoly) -> tuple[BiPoly, list]:
    """c = c_t * prod (x - lam) with c_t(lam, y) != 0 at every ground point lam."""
    if not c:
        raise ValidationError("x_content_split of the zero polynomial")
    K = c.K
    g = None
    for b in c.y_coeffs():
        if b:
            g = b if g is None else poly_gcd(g, b)
    roots, cofactor = ground_roots(g)
    s = Poly.from_roots(roots, K)
    rows = [b // s for b in c.y_coeffs()]
    c_t = BiPoly({(i, j): v for j, b in enumerate(rows) for i, v in enumerate(b.c) if v}, K)
    if c_t * BiPoly.from_x_poly(s) != c:
        raise ArithmeticError("x-content split does not recombine")
    if cofactor.degree > 0 and ground_roots(cofactor)[0]:
        raise NonSplitContent(f"ground root left in the x-content of {c}")
    return c_t, roots


def seed_exponent(c: BiPoly) -> int:
    """Smallest n >= 1 with c(x^n, x) != 0."""
    bound = c.deg_x + c.deg_y + 1
    n = 1
    while not c.substitute_power(n):
        n += 1
        if n > bound:
            raise ArithmeticError(f"no seed exponent n <= {bound} for {c}")
    return n


def _special_case(c: BiPoly, p: LazyLinearMap) -> LazyLinearMap:
    """Solve q_c = p when c(lam, y) != 0 for every ground point lam."""
    K = p.K
    a = [RatFun(t) for t in c.x_coeffs()]
    m = len(a) - 1
    n = seed_exponent(c)
    theta_inv = RatFun(c.substitute_power(n)).inverse()
    pole_factor: dict = {}
    q = LazyLinearMap(lambda b: None, K, "q")

    def monomial_value(i: int) -> RatFun:
        key = Monomial(i)
        if key in q.memo:
            return q.memo[key]
        if i <= m:
            q1 = q.memo.get(Monomial(0))
            if q1 is None:
                q1 = theta_inv * p(Monomial(0))
                q.memo[Monomial(0)] = q1
            val = q1 * RatFun(Poly.monomial(n * i, K)) if i else q1
            q.memo[key] = val
            return val
        # fill lower indices first to keep the recursion shallow
        for k in range(m + 1, i):
            if Monomial(k) not in q.memo:
                monomial_value(k)
        base = i - m
        acc = p(Monomial(base))
        for j in range(m):
            if a[j]:
                acc = acc - a[j] * monomial_value(base + j)
        val = a[m].inverse() * acc
        q.memo[key] = val
        return val

    def pole_value(lam, s: int) -> RatFun:
        key = Pole(lam, s)
        if key in q.memo:
            return q.memo[key]
        for k in range(1, s):
            if Pole(lam, k) not in q.memo:
                pole_value(lam, k)
        if lam not in pole_factor:
            pole_factor[lam] = RatFun(c.at_x(lam)).inverse()
        acc = p(key)
        for j in range(m + 1):
            if not a[j] or j == 0:
                continue
            h, u = partial_fraction_shift(j, s, lam, K)
            rest = RatFun(Poly((), K))
            for i, coef in enumerate(h.c):
                if coef:
                    rest = rest + monomial_value(i) * RatFun(Poly.const(coef, K))
            for coef, i in u:
                rest = rest + pole_value(lam, i) * RatFun(Poly.const(coef, K))
            acc = acc - a[j] * rest
        val = pole_factor[lam] * acc
        q.memo[key] = val
        return val

    def rule(b):
        return monomial_value(b.i) if isinstance(b, Monomial) else pole_value(b.lam, b.j)

    q.rule = rule
    return q


def solve_convolution(c: BiPoly, p: LazyLinearMap, demands=()) -> LazyLinearMap:
    """A lazy q with q_c = p, verified on every element of ``demands``."""
    if not c:
        raise ValidationError("convolution by the zero polynomial")
    K = p.K
    c_t, roots = x_content_split(c)
    q = _special_case(c_t, p)
    if roots:
        s_inv = RatFun(Poly.const(1, K), Poly.from_roots(roots, K))
        inner = q
        q = LazyLinearMap(lambda b: inner(s_inv * b.to_ratfun(K)), K, "q")
    check = apply_c(q, c)
    for z in demands:
        if check(z) != p(z):
            raise ArithmeticError(f"convolution check failed at {z}")
    return q
