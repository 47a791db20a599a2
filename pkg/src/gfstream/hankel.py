"""Hankel truncations, exact determinant/rank, and rank-based certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm, prod

from gfstream.series import Series, SeriesError


@dataclass(frozen=True)
class HankelView:
    """``H^(I,J)``: the ``(I+1) x (J+1)`` matrix with entries ``a_{i+j}``."""

    source: Series
    I: int
    J: int

    def __post_init__(self):
        if self.I < 0 or self.J < 0:
            raise SeriesError("Hankel bounds must be non-negative")
        if self.source.order < self.I + self.J:
            raise SeriesError(
                f"H^({self.I},{self.J}) needs series order >= {self.I + self.J}, "
                f"got {self.source.order}"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.I + 1, self.J + 1

    def entry(self, i: int, j: int) -> Fraction:
        return self.source[i + j]

    def rows(self) -> list[list[Fraction]]:
        a = self.source
        return [[a[i + j] for j in range(self.J + 1)] for i in range(self.I + 1)]

    def columns(self, cols) -> list[list[Fraction]]:
        """Rows restricted to the given column indices."""
        a = self.source
        return [[a[i + j] for j in cols] for i in range(self.I + 1)]


def _integer_columns(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Scale each column by the lcm of its denominators."""
    ncols = len(rows[0]) if rows else 0
    scales = [lcm(*(r[j].denominator for r in rows)) for j in range(ncols)]
    ints = [[r[j].numerator * (scales[j] // r[j].denominator) for j in range(ncols)] for r in rows]
    return ints, scales


def bareiss(rows: list[list[Fraction]]) -> tuple[int, list[int], int]:
    """Fraction-free row echelon form of an integer-scaled copy of ``rows``.

    Returns ``(sign, pivot_columns, last_pivot)``; for a square non-singular
    matrix ``sign * last_pivot`` is the determinant of the scaled matrix.
    """
    m, _ = _integer_columns(rows)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    sign, prev, r = 1, 1, 0
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, nrows):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for k in range(c + 1, ncols):
                row_i[k] = (p * row_i[k] - mic * row_r[k]) // prev
            row_i[c] = 0
        prev = p
        pivots.append(c)
        r += 1
    return sign, pivots, prev


def det(h: HankelView) -> Fraction:
    if h.I != h.J:
        raise SeriesError(f"determinant needs a square view, got {h.shape}")
    rows = h.rows()
    n = len(rows)
    sign, pivots, last = bareiss(rows)
    if len(pivots) < n:
        return Fraction(0)
    _, scales = _integer_columns(rows)
    return Fraction(sign * last, prod(scales))


def rank(h: HankelView) -> int:
    return len(bareiss(h.rows())[1])


def rank_plain(rows: list[list[Fraction]]) -> int:
    """Rank by ordinary Gaussian elimination over Q (used to re-check witnesses)."""
    m = [list(r) for r in rows]
    rk = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(rk + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[rk][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        rk += 1
    return rk


@dataclass(frozen=True)
class RankCertificate:
    """``rank(H^(I,t))``, a lower bound on the buffer any streamer correct through
    ``t + I`` must reach by time ``t``."""

    t: int
    I: int
    rank: int
    witness: tuple[int, ...]

    def verify(self, a: Series) -> bool:
        h = HankelView(a, self.I, self.t)
        if len(self.witness) != self.rank or self.rank > min(self.I, self.t) + 1:
            return False
        return rank_plain(h.columns(self.witness)) == self.rank

    def __str__(self) -> str:
        w = ",".join(str(j) for j in self.witness)
        return f"t={self.t} I={self.I} rank={self.rank} witness=[{w}]"


def space_lower_bound(a: Series, t: int, I: int) -> RankCertificate:
    if a.order < t + I:
        raise SeriesError(f"certificate at t={t}, I={I} needs series order >= {t + I}")
    _, pivots, _ = bareiss(HankelView(a, I, t).rows())
    return RankCertificate(t=t, I=I, rank=len(pivots), witness=tuple(pivots))


@dataclass(frozen=True)
class DegreeReport:
    n: int
    ranks: tuple[int, ...]
    degree: int | None

    @property
    def verdict(self) -> str:
        if self.degree is None:
            return f"no rational degree <= {self.n} detected (rank still growing)"
        return f"consistent with rational degree {self.degree} at truncation {self.n}"

    def __str__(self) -> str:
        return "ranks=[{}]\n{}".format(",".join(map(str, self.ranks)), self.verdict)


def detect_degree(a: Series) -> DegreeReport:
    """Ranks of ``H^(k,k)`` for ``k = 0..n`` where ``a`` has order ``2n``.

    A degree ``d`` is reported when the ranks sit at ``d`` from ``k = d - 1``
    through ``n`` with ``d <= n``; otherwise the ranks are still growing.
    Finitely many coefficients never prove rationality, hence the hedged verdict.
    """
    if a.order < 2 or a.order % 2:
        raise SeriesError(f"degree detection needs an even order >= 2, got {a.order}")
    n = a.order // 2
    ranks = tuple(rank(HankelView(a, k, k)) for k in range(n + 1))
    d = ranks[-1]
    found = None
    if d <= n and all(r == d for r in ranks[max(d - 1, 0):]):
        found = d
    return DegreeReport(n=n, ranks=ranks, degree=found)
