"""Univariate polynomials, rational functions and bivariate polynomials.

All three types are immutable and kept in canonical form:

* ``Poly``: ascending coefficient tuple without trailing zeros.
* ``RatFun``: gcd-reduced numerator and monic denominator.
* ``BiPoly``: sparse ``{(deg_x, deg_y): coef}`` with no stored zeros.

Coefficients live in a *coefficient domain* ``K`` (a ground field, or a
``RatFunField`` when polynomials over k(y) are needed).  The code only uses
the arithmetic operators and truthiness of coefficients, so any exact field
works.
"""

from __future__ import annotations

from math import comb, gcd as igcd

from .errors import NonSplitDenominator, ValidationError, ZeroDenominator
from .fields import GroundField, ModP, is_rational


class Poly:
    __slots__ = ("c", "K")

    def __init__(self, coeffs, K):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        self.c = tuple(c)
        self.K = K

    # construction helpers
    @classmethod
    def const(cls, value, K):
        return cls((K(value),), K)

    @classmethod
    def x(cls, K):
        return cls((K.zero, K.one), K)

    @classmethod
    def monomial(cls, n: int, K, coef=None):
        return cls([K.zero] * n + [K.one if coef is None else coef], K)

    @classmethod
    def from_roots(cls, roots, K):
        out = cls((K.one,), K)
        for r in roots:
            out = out * cls((-r, K.one), K)
        return out

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self):
        return self.c[-1] if self.c else self.K.zero

    def coeff(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else self.K.zero

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (RatFun, BiPoly)) and not isinstance(self.K, RatFunField):
            return None
        try:
            return Poly((self.K(other),), self.K)
        except (TypeError, ValidationError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out, self.K)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-v for v in self.c], self.K)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.c or not o.c:
            return Poly((), self.K)
        if len(o.c) == 1:
            s = o.c[0]
            return Poly([v * s for v in self.c], self.K)
        if len(self.c) == 1:
            s = self.c[0]
            return Poly([s * v for v in o.c], self.K)
        out = [self.K.zero] * (len(self.c) + len(o.c) - 1)
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.K)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly((self.K.one,), self.K)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.c)
        dq = len(rem) - len(o.c)
        if dq < 0:
            return Poly((), self.K), self
        inv = self.K.one / o.lc
        quo = [self.K.zero] * (dq + 1)
        n = len(o.c) - 1
        for k in range(dq, -1, -1):
            t = rem[k + n] * inv
            quo[k] = t
            if t:
                for j, b in enumerate(o.c):
                    rem[k + j] = rem[k + j] - t * b
        return Poly(quo, self.K), Poly(rem[:n], self.K)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.is_constant():
                return self * (self.K.one / other.lc)
            return RatFun(self, other)
        if isinstance(other, RatFun):
            return RatFun(self, Poly((self.K.one,), self.K)) / other
        return self * (self.K.one / self.K(other))

    def exquo(self, other):
        q, r = divmod(self, other)
        if r:
            raise ValidationError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if not self.c:
            return self
        inv = self.K.one / self.c[-1]
        return Poly([v * inv for v in self.c], self.K)

    # evaluation and transforms
    def __call__(self, value):
        if not self.c:
            return self.K.zero if not isinstance(value, (Poly, RatFun)) else value * 0
        acc = self.c[-1]
        for v in reversed(self.c[:-1]):
            acc = acc * value + v
        return acc

    def compose(self, other: "Poly") -> "Poly":
        out = Poly((), self.K)
        for v in reversed(self.c):
            out = out * other + v
        return out

    def shift(self, lam) -> "Poly":
        """Return p(x + lam)."""
        return self.compose(Poly((self.K(lam), self.K.one), self.K))

    def derivative(self) -> "Poly":
        return Poly([v * i for i, v in enumerate(self.c)][1:], self.K)

    def map_coeffs(self, f, K=None) -> "Poly":
        return Poly([f(v) for v in self.c], K or self.K)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.c == other.c
        if isinstance(other, RatFun):
            return other == self
        o = self._coerce(other)
        return o is not None and self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    if not a or not b:
        return (a or b).monic()
    if a.degree == 0 or b.degree == 0:
        return Poly((a.K.one,), a.K)
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return Poly((), a.K)
    return (a * b // poly_gcd(a, b)).monic()


class RatFun:
    """Element of K(x): gcd-reduced fraction with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, Poly):
            raise TypeError("RatFun numerator must be a Poly")
        if den is None:
            den = Poly((num.K.one,), num.K)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = Poly((num.K.one,), num.K)
            elif den.degree > 0:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lc
            if lc != num.K.one:
                inv = num.K.one / lc
                num = Poly([v * inv for v in num.c], num.K)
                den = Poly([v * inv for v in den.c], num.K)
        self.num = num
        self.den = den

    @property
    def K(self):
        return self.num.K

    @classmethod
    def const(cls, value, K):
        return cls(Poly.const(value, K))

    @classmethod
    def x(cls, K):
        return cls(Poly.x(K))

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self):
        if not self.is_constant():
            raise ValidationError(f"{self} is not constant")
        return self.num.coeff(0)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            if isinstance(other.K, RatFunField) and not isinstance(self.K, RatFunField):
                return None
            return RatFun(other, _reduced=True)
        if isinstance(other, BiPoly):
            return None
        try:
            return RatFun(Poly((self.K(other),), self.K), _reduced=True)
        except (TypeError, ValidationError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RatFun(self.num + o.num, self.den)
        return RatFun(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return RatFun(Poly((), self.K), _reduced=True)
        if self.den.degree == 0 and o.den.degree == 0:
            return RatFun(self.num * o.num, _reduced=True)
        return RatFun(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDenominator("inverse of zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFun(self.num ** e, self.den ** e, _reduced=True)

    def __bool__(self):
        return bool(self.num)

    def __call__(self, value):
        d = self.den(value)
        if not d:
            raise ZeroDenominator(f"denominator of {self} vanishes at {value}")
        return self.num(value) / d

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return False
        return self.num.c == o.num.c and self.den.c == o.den.c

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num.c)
        return hash((self.num.c, self.den.c))

    def __repr__(self):
        return f"RatFun({format_ratfun(self)!r})"

    def __str__(self):
        return format_ratfun(self)


def ratfun_normalize(num: Poly, den: Poly) -> RatFun:
    """Canonical form of num/den."""
    return RatFun(num, den)


class BiPoly:
    """Polynomial in x and y, stored sparsely as ``{(i, j): coef}``."""

    __slots__ = ("terms", "K")

    def __init__(self, terms, K):
        self.terms = {k: v for k, v in dict(terms).items() if v}
        self.K = K

    @classmethod
    def const(cls, value, K):
        return cls({(0, 0): K(value)}, K)

    @classmethod
    def x(cls, K):
        return cls({(1, 0): K.one}, K)

    @classmethod
    def y(cls, K):
        return cls({(0, 1): K.one}, K)

    @classmethod
    def from_x_poly(cls, p: Poly):
        return cls({(i, 0): v for i, v in enumerate(p.c)}, p.K)

    @classmethod
    def from_y_poly(cls, p: Poly):
        return cls({(0, j): v for j, v in enumerate(p.c)}, p.K)

    @property
    def deg_x(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (Poly, RatFun)):
            return None
        try:
            return BiPoly({(0, 0): self.K(other)}, self.K)
        except (TypeError, ValidationError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out[k] + v if k in out else v
        return BiPoly(out, self.K)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()}, self.K)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out[k] + a * b if k in out else a * b
        return BiPoly(out, self.K)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None or set(o.terms) - {(0, 0)}:
            raise ValidationError("bivariate polynomials can only be divided by constants")
        if not o:
            raise ZeroDenominator("division of a bivariate polynomial by zero")
        inv = self.K.one / o.terms[(0, 0)]
        return BiPoly({k: v * inv for k, v in self.terms.items()}, self.K)

    def __pow__(self, e: int):
        out = BiPoly.const(1, self.K)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, xv, yv):
        """Evaluate at x = xv, y = yv (scalars, Poly or RatFun)."""
        out = None
        xp, yp = {}, {}
        for (i, j), v in self.terms.items():
            if i not in xp:
                xp[i] = xv ** i if i else None
            if j not in yp:
                yp[j] = yv ** j if j else None
            t = v
            if xp[i] is not None:
                t = xp[i] * t
            if yp[j] is not None:
                t = yp[j] * t
            out = t if out is None else out + t
        if out is None:
            return self.K.zero
        return out

    def x_coeffs(self) -> list[Poly]:
        """[a_0, ..., a_m] with c(x, y) = sum_j a_j(y) x^j."""
        m = self.deg_x
        rows = [dict() for _ in range(m + 1)]
        for (i, j), v in self.terms.items():
            rows[i][j] = v
        return [_poly_from_dict(r, self.K) for r in rows]

    def y_coeffs(self) -> list[Poly]:
        """[b_0, ..., b_n] with c(x, y) = sum_i b_i(x) y^i."""
        n = self.deg_y
        rows = [dict() for _ in range(n + 1)]
        for (i, j), v in self.terms.items():
            rows[j][i] = v
        return [_poly_from_dict(r, self.K) for r in rows]

    def diagonal(self) -> Poly:
        """c(x, x) as a univariate polynomial."""
        out = {}
        for (i, j), v in self.terms.items():
            out[i + j] = out[i + j] + v if i + j in out else v
        return _poly_from_dict(out, self.K)

    def at_x(self, lam) -> Poly:
        """c(lam, y) as a polynomial in y."""
        out = {}
        for (i, j), v in self.terms.items():
            t = v * lam ** i if i else v
            out[j] = out[j] + t if j in out else t
        return _poly_from_dict(out, self.K)

    def at_y(self, lam) -> Poly:
        """c(x, lam) as a polynomial in x."""
        out = {}
        for (i, j), v in self.terms.items():
            t = v * lam ** j if j else v
            out[i] = out[i] + t if i in out else t
        return _poly_from_dict(out, self.K)

    def substitute_power(self, n: int) -> Poly:
        """c(x^n, x) as a univariate polynomial."""
        out = {}
        for (i, j), v in self.terms.items():
            k = n * i + j
            out[k] = out[k] + v if k in out else v
        return _poly_from_dict(out, self.K)

    def times_x_poly(self, p: Poly) -> "BiPoly":
        return self * BiPoly.from_x_poly(p)

    def swap(self) -> "BiPoly":
        return BiPoly({(j, i): v for (i, j), v in self.terms.items()}, self.K)

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)!r})"

    def __str__(self):
        return format_bipoly(self)


def _poly_from_dict(d, K) -> Poly:
    if not d:
        return Poly((), K)
    n = max(d)
    return Poly([d.get(i, K.zero) for i in range(n + 1)], K)


class PolyRing:
    """The ring K[x], as a coefficient domain for matrices."""

    is_field = False

    def __init__(self, K):
        self.ground = K
        self.zero = Poly((), K)
        self.one = Poly((K.one,), K)
        self.characteristic = K.characteristic

    def __call__(self, value):
        if isinstance(value, Poly):
            return value
        if isinstance(value, RatFun):
            if not value.is_polynomial():
                raise ValidationError(f"{value} is not a polynomial")
            return value.num
        return Poly((self.ground(value),), self.ground)

    def exquo(self, a, b):
        return a.exquo(b)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.ground == self.ground

    def __hash__(self):
        return hash(("PolyRing", self.ground))

    def __repr__(self):
        return f"PolyRing({self.ground!r})"


class RatFunField:
    """The field K(x), usable both as scalars and as a coefficient domain."""

    is_field = True

    def __init__(self, K):
        self.ground = K
        self.zero = RatFun(Poly((), K), _reduced=True)
        self.one = RatFun(Poly((K.one,), K), _reduced=True)
        self.characteristic = K.characteristic

    def __call__(self, value):
        if isinstance(value, RatFun):
            return value
        if isinstance(value, Poly):
            return RatFun(value, _reduced=True)
        if isinstance(value, BiPoly):
            raise ValidationError("cannot coerce a bivariate polynomial into K(x)")
        return RatFun(Poly((self.ground(value),), self.ground), _reduced=True)

    def exquo(self, a, b):
        return a / b

    def sample_points(self):
        return self.ground.sample_points()

    def spec(self):
        return f"{self.ground.spec()}(x)"

    def __eq__(self, other):
        return isinstance(other, RatFunField) and other.ground == self.ground

    def __hash__(self):
        return hash(("RatFunField", self.ground))

    def __repr__(self):
        return f"RatFunField({self.ground!r})"


class BiPolyRing:
    """The ring K[x, y], as a coefficient domain for coefficient matrices."""

    is_field = False

    def __init__(self, K):
        self.ground = K
        self.zero = BiPoly({}, K)
        self.one = BiPoly({(0, 0): K.one}, K)
        self.characteristic = K.characteristic

    def __call__(self, value):
        if isinstance(value, BiPoly):
            return value
        if isinstance(value, (Poly, RatFun)):
            raise ValidationError("ambiguous coercion of a univariate polynomial into K[x, y]")
        return BiPoly({(0, 0): self.ground(value)}, self.ground)

    def __eq__(self, other):
        return isinstance(other, BiPolyRing) and other.ground == self.ground

    def __hash__(self):
        return hash(("BiPolyRing", self.ground))

    def __repr__(self):
        return f"BiPolyRing({self.ground!r})"


def ground_of(K):
    """The ground field underneath a scalar domain."""
    while not isinstance(K, GroundField):
        K = K.ground
    return K


class LocalizedRing:
    """Gamma = K[x]_h: rational functions whose denominators divide a power of h."""

    def __init__(self, h: Poly):
        if not h:
            raise ValidationError("localizing polynomial h must be nonzero")
        self.h = h.monic()
        self.K = h.K

    def contains(self, r) -> bool:
        if isinstance(r, Poly):
            return True
        den = r.den
        while den.degree > 0:
            g = poly_gcd(den, self.h)
            if g.degree == 0:
                return False
            den = den // g
        return True

    def admits(self, lam) -> bool:
        return bool(self.h(lam))


# root finding -------------------------------------------------------------

def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _candidate_roots(p: Poly):
    K = p.K
    if isinstance(K, GroundField) and K.characteristic:
        return K.elements()
    if not isinstance(K, GroundField):
        raise NonSplitDenominator("root search needs ground-field coefficients")
    den = 1
    for v in p.c:
        den = den * int(v.denominator) // igcd(den, int(v.denominator))
    ints = [int(v * den) for v in p.c]
    low = next(i for i, v in enumerate(ints) if v)
    a0, an = ints[low], ints[-1]
    cands = {K.zero} if low else set()
    for d in _int_divisors(a0):
        for e in _int_divisors(an):
            cands.add(K(d) / K(e))
            cands.add(K(-d) / K(e))
    return sorted(cands)


def ground_roots(p: Poly) -> tuple[list, Poly]:
    """Ground-field roots of p with multiplicity, and the root-free cofactor.

    Roots are returned in ascending order (by residue in F_p).
    """
    if not p:
        raise ValidationError("roots of the zero polynomial")
    roots = []
    rest = p
    for r in _candidate_roots(p):
        if rest.degree < 1:
            break
        lin = Poly((-r, p.K.one), p.K)
        while rest.degree >= 1:
            q, rem = divmod(rest, lin)
            if rem:
                break
            roots.append(r)
            rest = q
    if isinstance(p.K, GroundField) and p.K.characteristic:
        roots.sort(key=lambda v: v.v)
    return roots, rest


def split_factorization(p: Poly) -> list[tuple[object, int]]:
    """Distinct roots with multiplicities; raise if p does not split."""
    roots, rest = ground_roots(p)
    if rest.degree > 0:
        raise NonSplitDenominator(f"{p} does not split into linear factors over the ground field")
    out: list[tuple[object, int]] = []
    for r in roots:
        if out and out[-1][0] == r:
            out[-1] = (r, out[-1][1] + 1)
        else:
            out.append((r, 1))
    return out


def partial_fraction_shift(r: int, s: int, lam, K):
    """Split x^r/(x-lam)^s into polynomial part, middle poles and top pole.

    Returns ``(h, u)`` where ``u`` lists ``(coef, i)`` for the nonzero middle
    terms coef/(x-lam)^i with 0 < i < s.  The top term is always
    lam^r/(x-lam)^s.  The identity is rechecked before returning.
    """
    if s < 1:
        raise ValidationError("partial_fraction_shift needs s >= 1")
    lam = K(lam)
    # expand (t + lam)^r in t = x - lam
    tc = [K(comb(r, k)) * lam ** (r - k) for k in range(r + 1)]
    shifted = Poly(tc[s:], K) if r >= s else Poly((), K)
    h = shifted.shift(-lam)
    u = [(tc[k], s - k) for k in range(1, min(s, r + 1)) if tc[k]]
    u.sort(key=lambda t: t[1])
    lhs = RatFun(Poly.monomial(r, K), Poly.from_roots([lam] * s, K))
    rhs = RatFun(h)
    for coef, i in u:
        rhs = rhs + RatFun(Poly.const(coef, K), Poly.from_roots([lam] * i, K))
    rhs = rhs + RatFun(Poly.const(lam ** r, K), Poly.from_roots([lam] * s, K))
    if lhs != rhs:
        raise ArithmeticError(f"partial fraction shift failed for r={r}, s={s}, lam={lam}")
    return h, u


# formatting -----------------------------------------------------------------

def format_scalar(v) -> str:
    if is_rational(v):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, ModP):
        return str(v.v)
    if isinstance(v, RatFun):
        return f"({format_ratfun(v)})"
    return str(v)


def _format_terms(items) -> str:
    """items: list of (coef, monomial string), already ordered."""
    parts = []
    for coef, mono in items:
        if isinstance(coef, RatFun):
            cs = f"({format_ratfun(coef)})"
            body = cs if not mono else f"{cs}*{mono}"
            parts.append(("+", body))
            continue
        neg = is_rational(coef) and coef < 0
        mag = -coef if neg else coef
        cs = format_scalar(mag)
        if not mono:
            body = cs
        elif cs == "1":
            body = mono
        else:
            body = f"{cs}*{mono}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _mono(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def format_poly(p: Poly, var: str = "x") -> str:
    return _format_terms([(v, _mono(var, i)) for i, v in enumerate(p.c) if v])


def format_ratfun(r: RatFun, var: str = "x") -> str:
    if r.den.degree == 0:
        return format_poly(r.num, var)
    return f"({format_poly(r.num, var)})/({format_poly(r.den, var)})"


def format_bipoly(b: BiPoly) -> str:
    items = []
    for (i, j) in sorted(b.terms):
        mono = "*".join(m for m in (_mono("x", i), _mono("y", j)) if m)
        items.append((b.terms[(i, j)], mono))
    return _format_terms(items)
