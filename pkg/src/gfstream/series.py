"""Exact truncated power series and polynomials over the rationals.

Scalars are :class:`fractions.Fraction` throughout (aliased ``Rat``).  A
:class:`Series` knows its coefficients ``a_0 .. a_n`` and nothing beyond;
binary operations truncate to the smaller order and never extrapolate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Callable, Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[Fraction, int, str]


class SeriesError(ValueError):
    """Raised for undefined series operations (non-invertible, non-square, ...)."""


def to_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean scalar {value!r}")
    return Fraction(value)


def fmt_rat(value: Fraction) -> str:
    """``num/den`` form, integers without a denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rat_sqrt(value: Fraction) -> Fraction:
    """Exact positive square root of a positive rational square."""
    if value <= 0:
        raise SeriesError(f"{fmt_rat(value)} is not a positive rational square")
    n, d = value.numerator, value.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise SeriesError(f"{fmt_rat(value)} is not a positive rational square")
    return Fraction(rn, rd)


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and ``degree is None``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable[RatLike] = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def const(cls, c: RatLike) -> "Poly":
        return cls([c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def lead(self) -> Fraction:
        if not self.coeffs:
            raise SeriesError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self), len(other))
        return Poly(self[k] + other[k] for k in range(n))

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | RatLike") -> "Poly":
        if not isinstance(other, Poly):
            c = to_rat(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other) - 1
        lead = other.lead()
        if len(rem) - 1 < dq:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return Poly(quot), Poly(rem[:dq])

    def monic(self) -> "Poly":
        return self * (1 / self.lead())

    def __call__(self, x: RatLike) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return "[" + ", ".join(fmt_rat(c) for c in self.coeffs) + "]"


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q (zero if both are zero)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


# ---------------------------------------------------------------------------
# Series


@dataclass(frozen=True)
class Series:
    """Power series known through ``x^order``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = tuple(to_rat(c) for c in coeffs)
        if not cs:
            raise SeriesError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls.from_poly(Poly([1]), order)

    @classmethod
    def x(cls, order: int) -> "Series":
        return cls.from_poly(Poly([0, 1]), order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p[k] for k in range(order + 1))

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first non-zero known coefficient."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    __radd__ = __add__

    def __neg__(self):
        return scale(-1, self)

    def __sub__(self, other):
        return add(self, -_promote(other, self.order))

    def __rsub__(self, other):
        return add(_promote(other, self.order), -self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(other, self)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Series):
            return divide(self, other)
        return scale(1 / to_rat(other), self)

    def __rtruediv__(self, other):
        return divide(_promote(other, self.order), self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only non-negative integer powers are supported")
        out = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                out = mul(out, base)
            n >>= 1
            if n:
                base = mul(base, base)
        return out

    def __str__(self) -> str:
        return dumps(self)


def _promote(value, order: int) -> Series:
    if isinstance(value, Series):
        return value
    return Series.from_poly(Poly([value]), order)


def add(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    return Series(f[k] + g[k] for k in range(n + 1))


def scale(c: RatLike, f: Series) -> Series:
    c = to_rat(c)
    return Series(c * a for a in f.coeffs)


def shift_mul_x(f: Series) -> Series:
    """Multiply by ``x``; the top known coefficient falls off so the order is kept."""
    return Series((Fraction(0),) + f.coeffs[:-1])


def div_x(f: Series, k: int = 1) -> Series:
    """Exact division by ``x^k``.  The first ``k`` coefficients must be zero."""
    if k > f.order:
        raise SeriesError(f"cannot divide a series of order {f.order} by x^{k}")
    for i in range(k):
        if f[i] != 0:
            raise SeriesError(
                f"division by x^{k} needs coefficient {i} to vanish, got {fmt_rat(f[i])}"
            )
    return Series(f.coeffs[k:])


def mul(f: Series, g: Series) -> Series:
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            ai = a[i]
            if ai:
                s += ai * b[k - i]
        out.append(s)
    return Series(out)


def inv(f: Series) -> Series:
    if f[0] == 0:
        raise SeriesError("series with zero constant term is not invertible")
    c0 = 1 / f[0]
    g = [c0]
    for k in range(1, f.order + 1):
        s = sum((f[i] * g[k - i] for i in range(1, k + 1)), Fraction(0))
        g.append(-s * c0)
    return Series(g)


def divide(f: Series, g: Series) -> Series:
    """``f / g``, allowing ``g = x^k u`` when ``f`` has ``k`` leading zeros.

    Each power of ``x`` removed from the divisor costs one order of the result.
    """
    k = g.valuation()
    if k is None:
        raise SeriesError("division by a series that is zero to its known order")
    if k == 0:
        return mul(f, inv(g))
    return divide(div_x(f, k), div_x(g, k))


def sqrt(f: Series) -> Series:
    """Square root with positive constant term, by the squaring recurrence."""
    g0 = rat_sqrt(f[0])
    g = [g0]
    two_g0 = 2 * g0
    for k in range(1, f.order + 1):
        s = Fraction(0)
        for i in range(1, k):
            s += g[i] * g[k - i]
        g.append((f[k] - s) / two_g0)
    return Series(g)


# ---------------------------------------------------------------------------
# Text format


def dumps(f: Series | Sequence[Fraction], sep: str = ", ") -> str:
    return sep.join(fmt_rat(c) for c in f)


def loads(text: str) -> Series:
    """Inverse of :func:`dumps`; accepts comma, whitespace or newline separators."""
    parts = [p for p in text.replace(",", " ").split() if p]
    return Series(Fraction(p) for p in parts)


def render(f: Series) -> str:
    """Polynomial expression for the known coefficients, re-readable by ``parse``."""
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        mag = fmt_rat(abs(c))
        if k == 0:
            body = mag
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if abs(c) == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not terms:
            terms.append(body if sign == "+" else f"0 - {body}")
        else:
            terms.append(f"{sign} {body}")
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Catalog of named generating functions


def _check_lm(lam: Fraction, mu: Fraction) -> None:
    if not (0 <= mu < lam <= 1):
        raise SeriesError(
            f"momentum parameters need 0 <= mu < lambda <= 1, got {fmt_rat(lam)}, {fmt_rat(mu)}"
        )


def g_one(order: int) -> Series:
    return Series([1] * (order + 1))


def g_exp(order: int) -> Series:
    return Series(2**k for k in range(order + 1))


def g_half(order: int) -> Series:
    return Series(Fraction(comb(2 * k, k), 4**k) for k in range(order + 1))


def central_binomial(order: int) -> Series:
    return Series(comb(2 * k, k) for k in range(order + 1))


def g_catalan(order: int) -> Series:
    out = [1]
    for k in range(order):
        out.append(out[-1] * 2 * (2 * k + 1) // (k + 2))
    return Series(out)


def g_lm(lam: RatLike, mu: RatLike, order: int) -> Series:
    """Coefficients of 1/((1 - lam x)(1 - mu x))."""
    lam, mu = to_rat(lam), to_rat(mu)
    _check_lm(lam, mu)
    out = [Fraction(1), lam + mu]
    for _ in range(2, order + 1):
        out.append((lam + mu) * out[-1] - lam * mu * out[-2])
    return Series(out[: order + 1])


def sqrt_g_lm(lam: RatLike, mu: RatLike, order: int) -> Series:
    """Coefficients of 1/sqrt((1 - lam x)(1 - mu x)) as a product of two binomial series."""
    lam, mu = to_rat(lam), to_rat(mu)
    _check_lm(lam, mu)
    half = g_half(order)
    left = Series(half[k] * lam**k for k in range(order + 1))
    right = Series(half[k] * mu**k for k in range(order + 1))
    return mul(left, right)


def junod_g(b: RatLike, c: RatLike, order: int) -> Series:
    """8/(b-c)^2 * (1 - (b+c)/2 x - sqrt((1 - b x)(1 - c x))) / x^2."""
    b, c = to_rat(b), to_rat(c)
    if b == c or b == 0 or c == 0:
        raise SeriesError("junod_g needs distinct non-zero b and c")
    n = order + 2
    radicand = Series.from_poly(Poly([1, -(b + c), b * c]), n)
    numer = Series.from_poly(Poly([1, -(b + c) / 2]), n) - sqrt(radicand)
    return scale(Fraction(8) / (b - c) ** 2, div_x(numer, 2))


CATALOG: dict[str, tuple[Callable[..., Series], int]] = {
    "g_one": (g_one, 0),
    "g_exp": (g_exp, 0),
    "g_half": (g_half, 0),
    "g_catalan": (g_catalan, 0),
    "central_binomial": (central_binomial, 0),
    "g_lm": (g_lm, 2),
    "sqrt_g_lm": (sqrt_g_lm, 2),
    "junod_g": (junod_g, 2),
}


def catalog(name: str, order: int, *params: RatLike) -> Series:
    """Named generating function to ``order``; parametric entries take rationals."""
    if order < 0:
        raise SeriesError("order must be non-negative")
    try:
        fn, arity = CATALOG[name]
    except KeyError:
        raise SeriesError(
            f"unknown catalog entry {name!r}; known: {', '.join(sorted(CATALOG))}"
        ) from None
    if len(params) != arity:
        raise SeriesError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*(to_rat(p) for p in params), order)
