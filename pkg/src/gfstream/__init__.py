"""Exact streaming of lower-triangular Toeplitz convolutions via generating functions."""

from gfstream.hankel import HankelView, RankCertificate, det, detect_degree, rank, space_lower_bound
from gfstream.parser import ParseError, parse
from gfstream.ratgf import RationalGF, approx_error, expand, make, pade
from gfstream.series import Poly, Rat, Series, SeriesError, catalog
from gfstream.streamkit import (
    StreamRun,
    Streamer,
    compose_par,
    compose_seq,
    dense_streamer,
    rational_streamer,
    run,
)

__all__ = [
    "HankelView", "ParseError", "Poly", "Rat", "RankCertificate", "RationalGF", "Series",
    "SeriesError", "StreamRun", "Streamer", "approx_error", "catalog", "compose_par",
    "compose_seq", "dense_streamer", "det", "detect_degree", "expand", "make", "pade", "parse",
    "rank", "rational_streamer", "run", "space_lower_bound",
]
