"""Correlated-noise continual counting ``A(z) = T_1 z + L y`` in exact arithmetic.

The noise is a seeded stream of small rationals (or a recorded list); privacy
calibration is deliberately absent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from gfstream.ratgf import RationalGF, approx_error, coefficient_errors, make, pade
from gfstream.series import Poly, RatLike, catalog, to_rat
from gfstream.streamkit import Streamer, rational_streamer


class NoiseExhausted(RuntimeError):
    pass


def rational_noise(seed: int, bound: int = 8) -> Iterator[Fraction]:
    """Uniform rationals ``k/m`` with ``|k| <= bound`` and ``1 <= m <= bound``."""
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    rng = random.Random(seed)
    while True:
        yield Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def counter() -> Streamer:
    """Prefix sums, ``T[1/(1-x)]``."""
    return rational_streamer(make(Poly([1]), Poly([1, -1])))


class Mechanism:
    def __init__(self, noise_shaper: Streamer, noise: Sequence[RatLike] | Iterator[Fraction]):
        self.counter = counter()
        self.noise_shaper = noise_shaper
        if isinstance(noise, Sequence):
            self._recorded = [to_rat(v) for v in noise]
            self._noise = iter(self._recorded)
        else:
            self._recorded = None
            self._noise = noise
        self.realized: list[Fraction] = []

    @property
    def buffer_size(self) -> int:
        return self.counter.buffer_size + self.noise_shaper.buffer_size

    def step(self, z: RatLike) -> Fraction:
        try:
            y = next(self._noise)
        except StopIteration:
            raise NoiseExhausted(f"recorded noise ran out at step {len(self.realized)}") from None
        self.realized.append(y)
        return self.counter.step(z) + self.noise_shaper.step(y)


def mechanism_step(m: Mechanism, z: RatLike) -> Fraction:
    return m.step(z)


@dataclass
class MechanismRun:
    approximant: RationalGF
    outputs: list[Fraction] = field(default_factory=list)
    noise: list[Fraction] = field(default_factory=list)
    max_buffer: int = 0
    coeff_error: Fraction = Fraction(0)
    coeff_errors: list[Fraction] = field(default_factory=list)


def mechanism_run(
    length: int,
    approx_degree: int,
    seed: int = 0,
    z: Sequence[RatLike] | None = None,
    noise: Sequence[RatLike] | None = None,
) -> MechanismRun:
    """Run with ``L`` the streamer of the degree-``approx_degree`` Padé approximant of
    ``1/sqrt(1-x)``.  ``coeff_error`` is measured over the indices ``0..length-1``
    that the run actually touches."""
    if approx_degree < 1:
        raise ValueError("approx_degree must be >= 1")
    if z is None:
        z = [0] * length
    if len(z) != length:
        raise ValueError(f"input has {len(z)} values, expected {length}")
    half = catalog("g_half", max(2 * approx_degree - 1, length - 1, 0))
    g = pade(half, approx_degree)
    m = Mechanism(rational_streamer(g), noise if noise is not None else rational_noise(seed))
    out = MechanismRun(approximant=g)
    for v in z:
        out.outputs.append(m.step(v))
        out.max_buffer = max(out.max_buffer, m.buffer_size)
    out.noise = m.realized
    if length:
        out.coeff_errors = coefficient_errors(half, g, length - 1)
        out.coeff_error = approx_error(half, g, length - 1)
    return out
