"""Rational generating functions ``P/Q`` and Padé approximation."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gfstream.series import Poly, RatLike, Series, SeriesError, fmt_rat, poly_gcd, to_rat


class PadeError(ArithmeticError):
    pass


@dataclass(frozen=True)
class RationalGF:
    """Reduced ``P/Q`` with ``Q(0) = 1``.

    ``degree`` is the smallest ``d`` with ``deg Q <= d`` and ``deg P <= d - 1``,
    so a proper fraction has degree ``deg Q`` and a polynomial ``P`` over
    ``Q = 1`` has degree ``deg P + 1``.  The zero function has degree 0.
    """

    P: Poly
    Q: Poly

    def __init__(self, P: Poly, Q: Poly):
        if Q.is_zero() or Q[0] == 0:
            raise SeriesError("denominator must be invertible (non-zero constant term)")
        if P.is_zero():
            P, Q = Poly(), Poly([1])
        else:
            g = poly_gcd(P, Q)
            if g.degree:
                P, Q = P.divmod(g)[0], Q.divmod(g)[0]
        q0 = Q[0]
        object.__setattr__(self, "P", P * (1 / q0))
        object.__setattr__(self, "Q", Q * (1 / q0))

    @property
    def degree(self) -> int:
        if self.P.is_zero():
            return 0
        return max(self.Q.degree, self.P.degree + 1)

    def is_proper(self) -> bool:
        return self.P.is_zero() or self.Q.degree == 0 or self.P.degree < self.Q.degree

    def expand(self, order: int) -> Series:
        return expand(self, order)

    def __str__(self) -> str:
        return f"P: {self.P}\nQ: {self.Q}"


def make(P: Poly | list, Q: Poly | list) -> RationalGF:
    """Build ``P/Q`` in the strict proper form ``deg P < deg Q`` (any ``P`` over constant ``Q``)."""
    P = P if isinstance(P, Poly) else Poly(P)
    Q = Q if isinstance(Q, Poly) else Poly(Q)
    if Q.is_zero() or Q[0] == 0:
        raise SeriesError("denominator must be invertible (non-zero constant term)")
    if not P.is_zero() and Q.degree > 0 and P.degree >= Q.degree:
        raise SeriesError(
            f"numerator degree {P.degree} must be below denominator degree {Q.degree}"
        )
    return RationalGF(P, Q)


def expand(g: RationalGF, order: int) -> Series:
    """Taylor coefficients via ``a_k = p_k - sum_j q_j a_{k-j}`` (``q_0 = 1``)."""
    q = g.Q.coeffs
    a: list[Fraction] = []
    for k in range(order + 1):
        s = g.P[k]
        for j in range(1, min(k, len(q) - 1) + 1):
            s -= q[j] * a[k - j]
        a.append(s)
    return Series(a)


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan over Q; ``None`` if the square system is singular."""
    n = len(rows)
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [v - f * w for v, w in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


def pade(f: Series, d: int) -> RationalGF:
    """Padé approximant with ``deg Q <= d``, ``deg P <= d - 1`` matching ``f`` mod ``x^(2d)``.

    When the linear system for ``Q`` is singular the degree is lowered until it
    is not; the returned ``degree`` reports what was achieved.
    """
    if d < 0:
        raise PadeError("degree must be non-negative")
    if f.order < 2 * d - 1:
        raise PadeError(f"need order >= {2 * d - 1} for degree {d}, got {f.order}")
    for e in range(d, 0, -1):
        # sum_{j=1..e} q_j f_{k-j} = -f_k for k = e .. 2e-1
        rows = [[f[k - j] if k - j >= 0 else Fraction(0) for j in range(1, e + 1)]
                for k in range(e, 2 * e)]
        sol = _solve(rows, [-f[k] for k in range(e, 2 * e)])
        if sol is None:
            continue
        Q = Poly([Fraction(1)] + sol)
        P = Poly(sum((Q[j] * f[k - j] for j in range(k + 1)), Fraction(0)) for k in range(e))
        return RationalGF(P, Q)
    if any(f[k] for k in range(2 * d)):
        raise PadeError(f"Padé system singular at every degree <= {d}")
    return RationalGF(Poly(), Poly([1]))


def agreement(f: Series, g: RationalGF) -> int:
    """Number of leading coefficients of ``f`` reproduced by ``g``."""
    e = expand(g, f.order)
    for k in range(f.order + 1):
        if e[k] != f[k]:
            return k
    return f.order + 1


def coefficient_errors(f: Series, g: RationalGF, n: int) -> list[Fraction]:
    if f.order < n:
        raise SeriesError(f"series order {f.order} below requested index {n}")
    e = expand(g, n)
    return [abs(f[k] - e[k]) for k in range(n + 1)]


def approx_error(f: Series, g: RationalGF, n: int) -> Fraction:
    """``max_{k <= n} |f_k - expand(g)_k|``."""
    return max(coefficient_errors(f, g, n))


def dumps(g: RationalGF) -> str:
    return "P: [{}]\nQ: [{}]".format(
        ", ".join(fmt_rat(c) for c in g.P.coeffs) or "0",
        ", ".join(fmt_rat(c) for c in g.Q.coeffs),
    )


def from_coeffs(P: list[RatLike], Q: list[RatLike]) -> RationalGF:
    return RationalGF(Poly([to_rat(c) for c in P]), Poly([to_rat(c) for c in Q]))
