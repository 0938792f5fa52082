"""Ground fields: the rationals and prime fields.

Elements of QQ are ``gmpy2.mpq`` values when gmpy2 is installed and
``fractions.Fraction`` values otherwise; both compare and hash alike, so
callers may pass either.  Elements of a prime
field are ``ModP`` instances, which overload the arithmetic operators so that
the polynomial and matrix code can stay generic.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import count
from typing import Iterator

from .errors import ValidationError, ZeroDenominator

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    Rational = Fraction

RATIONAL_TYPES = (Fraction, type(Rational(0)))


def is_rational(v) -> bool:
    return isinstance(v, RATIONAL_TYPES)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class ModP:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise ValidationError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, RATIONAL_TYPES):
            num, den = int(other.numerator), int(other.denominator)
            if den % self.p == 0:
                raise ZeroDenominator(f"{other} has no image in F_{self.p}")
            return num * pow(den, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDenominator("division by zero in F_p")
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDenominator("division by zero in F_p")
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return ModP(1, self.p) / ModP(pow(self.v, -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other)
        return o is not None and self.v == o

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"ModP({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class GroundField:
    """Common interface of QQ and GF(p)."""

    characteristic: int
    zero: object
    one: object
    is_field = True

    def __call__(self, value):
        raise NotImplementedError

    def exquo(self, a, b):
        return a / b

    def sample_points(self) -> Iterator:
        """Yield 0, 1, -1, 2, -2, ... without repeats (finite in F_p)."""
        seen = set()
        for n in count(0):
            for v in (n, -n):
                e = self(v)
                if e not in seen:
                    seen.add(e)
                    yield e
            if self.characteristic and len(seen) == self.characteristic:
                return

    def spec(self) -> str:
        raise NotImplementedError


class RationalField(GroundField):
    characteristic = 0

    def __init__(self):
        self.zero = Rational(0)
        self.one = Rational(1)
        self._type = type(self.one)

    def __call__(self, value):
        if type(value) is self._type:
            return value
        if isinstance(value, ModP):
            raise ValidationError("cannot coerce an F_p element into QQ")
        if isinstance(value, str):
            try:
                return Rational(Fraction(value))
            except ValueError:
                raise ValidationError(f"not a rational number: {value!r}") from None
        return Rational(value)

    def spec(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(GroundField):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValidationError(f"field characteristic {p} is not prime")
        self.characteristic = p
        self.zero = ModP(0, p)
        self.one = ModP(1, p)

    def __call__(self, value):
        p = self.characteristic
        if isinstance(value, ModP):
            if value.p != p:
                raise ValidationError(f"cannot coerce F_{value.p} into F_{p}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, int):
            return ModP(value, p)
        if isinstance(value, RATIONAL_TYPES):
            return ModP(int(value.numerator), p) / ModP(int(value.denominator), p)
        raise ValidationError(f"cannot coerce {value!r} into F_{p}")

    def elements(self):
        return [ModP(i, self.characteristic) for i in range(self.characteristic)]

    def spec(self):
        return f"Fp:{self.characteristic}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str | None) -> GroundField:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    if spec is None or spec in ("Q", "QQ"):
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValidationError(f"field: bad prime in {spec!r}") from None
        return GF(p)
    raise ValidationError(f"field: expected 'Q' or 'Fp:<p>', got {spec!r}")
