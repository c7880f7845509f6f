"""Exact scalar arithmetic: rationals and Gaussian rationals.

Every computation in the toolkit runs over Q or Q(i) with arbitrary
precision integers underneath.  There is deliberately no floating-point
fallback anywhere: signatures, ranks and kernels are tolerance-free.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

QQ = "Q"
QI = "Q_i"

ZERO = Fraction(0)
ONE = Fraction(1)


class GaussianRational:
    """A number a + b*i with rational a, b.

    Supports field arithmetic, conjugation and exact division.  Mixed
    arithmetic with int / Fraction promotes the other operand.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re})"
        return f"GaussianRational({self.re}, {self.im})"

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)


I = GaussianRational(0, 1)


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return None


def conj(x):
    """Complex conjugate; the identity on rationals."""
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def compact(x):
    """Collapse integral values to plain ints; exact and much cheaper.

    Mixed int / Fraction / GaussianRational arithmetic coerces correctly
    everywhere in this package, so integer-valued entries may always be
    stored unboxed.
    """
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, GaussianRational):
        if x.im == 0 and x.re.denominator == 1:
            return x.re.numerator
        return x
    return x


def exact_div(a, b):
    """a / b staying in exact arithmetic (never float) for int operands."""
    if isinstance(a, int) and isinstance(b, int):
        return compact(Fraction(a, b))
    if isinstance(a, GaussianRational) or isinstance(b, GaussianRational):
        return to_gaussian(a) / to_gaussian(b)
    return compact(a / b)


def is_zero(x):
    return not x if isinstance(x, GaussianRational) else x == 0


def real_part(x):
    return x.re if isinstance(x, GaussianRational) else x


def imag_part(x):
    return x.im if isinstance(x, GaussianRational) else ZERO


def field_zero(field):
    return GaussianRational() if field == QI else ZERO


def field_one(field):
    return GaussianRational(1) if field == QI else ONE


def to_gaussian(x):
    """Promote a rational (or Gaussian rational) into Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(x)


def parse_rational(text):
    """Parse "num/den" (or "num") into a Fraction, rejecting junk."""
    if not isinstance(text, str):
        raise InputError(f"expected rational literal string, got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational literal {text!r}: {exc}") from exc


def parse_scalar(value, field):
    """Parse a file scalar: "num/den" over Q, ["re", "im"] pair over Q(i)."""
    if field == QQ:
        return parse_rational(value)
    if field == QI:
        if isinstance(value, str):
            return GaussianRational(parse_rational(value))
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return GaussianRational(parse_rational(value[0]), parse_rational(value[1]))
        raise InputError(f"bad Q(i) literal {value!r}: want \"a/b\" or [\"a/b\", \"c/d\"]")
    raise InputError(f"unknown field tag {field!r}")


def format_rational(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_scalar(x, field):
    if field == QQ:
        return format_rational(x)
    g = to_gaussian(x)
    if g.im == 0:
        return format_rational(g.re)
    return [format_rational(g.re), format_rational(g.im)]
