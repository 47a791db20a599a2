"""Desk-scale checks of the Hankel determinant and rank identities.

Every ``verify_*`` function returns a :class:`Report` holding the exact values
it computed; mathematical failures show up as ``ok=false`` rows rather than
exceptions.  Violated hypotheses raise :class:`VerificationError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from gfstream.hankel import HankelView, det, rank
from gfstream.series import (
    Poly,
    RatLike,
    Series,
    catalog,
    div_x,
    fmt_rat,
    inv,
    shift_mul_x,
    sqrt,
    to_rat,
)


class VerificationError(ValueError):
    pass


@dataclass(frozen=True)
class Defaults:
    det_dmax: int = 12
    rank_dmax: int = 10
    comp_dmax: int = 8


DEFAULTS = Defaults()


@dataclass(frozen=True)
class Row:
    d: int
    expected: str
    got: str
    ok: bool
    extra: tuple[tuple[str, str], ...] = ()

    def __str__(self) -> str:
        tail = "".join(f" {k}={v}" for k, v in self.extra)
        return f"d={self.d} expected={self.expected} got={self.got} ok={str(self.ok).lower()}{tail}"


@dataclass
class Report:
    name: str
    rows: list[Row] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[int]:
        return [r.d for r in self.rows if not r.ok]

    def lines(self) -> list[str]:
        return [f"# {n}" for n in self.notes] + [str(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _det_row(a: Series, d: int, expected: Fraction) -> Row:
    got = det(HankelView(a, d, d))
    return Row(d, fmt_rat(expected), fmt_rat(got), got == expected)


def verify_catalan_dets(d_max: int = DEFAULTS.det_dmax) -> Report:
    a = catalog("g_catalan", 2 * d_max)
    return Report("catalan", [_det_row(a, d, Fraction(1)) for d in range(d_max + 1)])


def verify_sqrt_dets(d_max: int = DEFAULTS.det_dmax) -> Report:
    """``det H[1/sqrt(1-4x)]^(d,d) = 2^d`` and full rank of the ``G_{1/2}`` truncations."""
    cb = catalog("central_binomial", 2 * d_max)
    half = catalog("g_half", 2 * d_max)
    rows = []
    for d in range(d_max + 1):
        row = _det_row(cb, d, Fraction(2**d))
        r = rank(HankelView(half, d, d))
        rows.append(Row(row.d, row.expected, row.got, row.ok and r == d + 1,
                        (("half_rank", str(r)),)))
    return Report("sqrtdet", rows)


def junod_expected(b: Fraction, c: Fraction, d: int) -> Fraction:
    # alpha = (b - c)^2 / 16, gamma = 1
    return ((b - c) ** 2 / 16) ** (d * (d + 1) // 2)


def verify_junod(b: RatLike, c: RatLike, d_max: int = 8) -> Report:
    b, c = to_rat(b), to_rat(c)
    if b == c or b == 0 or c == 0:
        raise VerificationError("need distinct non-zero b, c")
    # one spare coefficient so G'(0) is always reported
    n = 2 * d_max + 3
    radicand = Series.from_poly(Poly([1, -(b + c), b * c]), n)
    numer = Series.from_poly(Poly([1, -(b + c) / 2]), n) - sqrt(radicand)
    if numer[0] != 0 or numer[1] != 0:
        raise VerificationError("numerator is not divisible by x^2")
    G = div_x(numer, 2) * (Fraction(8) / (b - c) ** 2)
    W = 1 - inv(G)
    rep = Report("junod")
    rep.notes.append(f"b={fmt_rat(b)} c={fmt_rat(c)} alpha={fmt_rat((b - c) ** 2 / 16)} gamma=1")
    rep.notes.append(f"W(0)={fmt_rat(W[0])} G'(0)={fmt_rat(G[1])}")
    if W[0] != 0:
        raise VerificationError(f"W(0) = {fmt_rat(W[0])}, expected 0")
    rep.rows = [_det_row(G, d, junod_expected(b, c, d)) for d in range(d_max + 1)]
    return rep


def verify_corank(lam: RatLike, mu: RatLike, d_max: int = DEFAULTS.rank_dmax) -> Report:
    """Rank of ``H[sqrt(G_{lam,mu})]^(d,d)`` is at least ``d - 4`` (co-rank at most five)."""
    lam, mu = to_rat(lam), to_rat(mu)
    if not (0 <= mu < lam <= 1):
        raise VerificationError("need 0 <= mu < lambda <= 1")
    a = catalog("sqrt_g_lm", 2 * d_max, lam, mu)
    rows = []
    for d in range(d_max + 1):
        r = rank(HankelView(a, d, d))
        bound = max(d - 4, 0)
        rows.append(Row(d, f">={bound}", str(r), r >= bound, (("corank", str(d + 1 - r)),)))
    return Report("corank", rows)


@dataclass(frozen=True)
class CompRelation:
    """Claimed identity ``f g = alpha g + beta x g + gamma``."""

    f: Series
    g: Series
    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def residual(self) -> Series:
        g = self.g
        rhs = self.alpha * g + self.beta * shift_mul_x(g) + self.gamma
        return self.f * g - rhs


def harder_sqrt_relation(lam: RatLike, mu: RatLike, order: int) -> CompRelation:
    """``f = sqrt((1 - lam x)(1 - mu x))`` and ``G = (1 - (lam+mu)/2 x - f) / x^2`` with
    ``f G = ((lam+mu)/2 x - 1) G + (lam-mu)^2/4``."""
    lam, mu = to_rat(lam), to_rat(mu)
    n = order + 2
    f = sqrt(Series.from_poly(Poly([1, -(lam + mu), lam * mu]), n))
    G = div_x(Series.from_poly(Poly([1, -(lam + mu) / 2]), n) - f, 2)
    return CompRelation(f.truncate(order), G, Fraction(-1), (lam + mu) / 2, (lam - mu) ** 2 / 4)


def check_comp_relation(rel: CompRelation, d_max: int = DEFAULTS.comp_dmax) -> Report:
    """Series identity, then ``rank H[f]^(d,d) >= rank H[g]^(d,d) - 3`` (``- 2`` when beta = 0)."""
    if rel.f[0] == rel.alpha:
        raise VerificationError("hypothesis f_0 != alpha violated")
    if rel.g[0] == 0:
        raise VerificationError("hypothesis g_0 != 0 violated")
    if min(rel.f.order, rel.g.order) < 2 * d_max:
        raise VerificationError(f"series orders must be >= {2 * d_max}")
    res = rel.residual()
    if not res.is_zero():
        k = res.valuation()
        raise VerificationError(f"identity fails at x^{k}: residual {fmt_rat(res[k])}")
    slack = 2 if rel.beta == 0 else 3
    rep = Report("comp")
    rep.notes.append(f"identity residual zero to order {res.order}")
    for d in range(d_max + 1):
        rf = rank(HankelView(rel.f, d, d))
        rg = rank(HankelView(rel.g, d, d))
        rep.rows.append(Row(d, f">={max(rg - slack, 0)}", str(rf), rf >= rg - slack,
                            (("rank_g", str(rg)),)))
    return rep
