"""Online evaluation of ``(T[a] z)_t`` with explicit buffer accounting.

A streamer holds a state vector; ``step(z_t)`` replaces it by
``u(state, z_t)`` and returns ``m(state)``.  The length of the state after
each step is the buffer size ``beta(t)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from gfstream.ratgf import RationalGF, expand
from gfstream.series import RatLike, Series, to_rat


class StreamError(RuntimeError):
    pass


class Streamer:
    """Base class.  Subclasses implement ``_step``, ``state`` and ``reset``."""

    def __init__(self):
        self.t = -1

    def step(self, z: RatLike) -> Fraction:
        self.t += 1
        return self._step(to_rat(z))

    def _step(self, z: Fraction) -> Fraction:
        raise NotImplementedError

    @property
    def state(self) -> tuple[Fraction, ...]:
        raise NotImplementedError

    @property
    def buffer_size(self) -> int:
        return len(self.state)

    def buffer_profile(self, t: int) -> int:
        """Declared ``beta(t)``."""
        raise NotImplementedError

    def reset(self) -> None:
        self.t = -1


class DenseStreamer(Streamer):
    """Stores every input; output is the convolution with the stored prefix.

    Inputs are kept as integers over a shared denominator so that each output
    is one integer dot product followed by a single reduction.
    """

    def __init__(self, a: Series):
        super().__init__()
        self.a = a
        den = lcm(*(c.denominator for c in a.coeffs))
        self._a_den = den
        self._a_num = [c.numerator * (den // c.denominator) for c in a.coeffs]
        self.reset()

    def reset(self) -> None:
        super().reset()
        self._z_num: list[int] = []
        self._z_den = 1

    def _step(self, z: Fraction) -> Fraction:
        if self.t > self.a.order:
            raise StreamError(f"run exceeds series order {self.a.order} at t={self.t}")
        if self._z_den % z.denominator:
            new = lcm(self._z_den, z.denominator)
            k = new // self._z_den
            self._z_num = [v * k for v in self._z_num]
            self._z_den = new
        self._z_num.append(z.numerator * (self._z_den // z.denominator))
        t = self.t
        a, zs = self._a_num, self._z_num
        acc = 0
        for j in range(t + 1):
            acc += a[t - j] * zs[j]
        return Fraction(acc, self._a_den * self._z_den)

    @property
    def state(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self._z_den) for v in self._z_num)

    def buffer_profile(self, t: int) -> int:
        return t + 1


class RationalStreamer(Streamer):
    """Constant-buffer evaluation of ``T[P/Q]`` with ``beta(t) = min(t+1, d)``.

    For ``t < d`` the state is the raw prefix.  At ``t = d`` the prefix is
    replayed through a transposed direct-form realization whose state is
    ``(y_t, r_1, ..., r_{d-1})``; the missing last register always equals
    ``-q_d y_t`` because ``deg P <= d - 1``.
    """

    def __init__(self, g: RationalGF):
        super().__init__()
        self.g = g
        d = max(g.degree, 1)
        self.d = d
        self._p = [g.P[k] for k in range(d + 1)]
        self._q = [g.Q[k] for k in range(d + 1)]
        self._a = expand(g, d - 1).coeffs
        self.reset()

    def reset(self) -> None:
        super().reset()
        self._prefix: list[Fraction] | None = []
        self._regs: list[Fraction] = []

    def _advance(self, regs: list[Fraction], z: Fraction) -> list[Fraction]:
        """One transposed direct-form step on the compact state."""
        d, p, q = self.d, self._p, self._q
        y_prev = regs[0]
        tail = regs[1:] + [-q[d] * y_prev]
        y = p[0] * z + tail[0]
        return [y] + [p[i] * z - q[i] * y + tail[i] for i in range(1, d)]

    def _step(self, z: Fraction) -> Fraction:
        if self._prefix is not None:
            if self.t < self.d:
                self._prefix.append(z)
                t = self.t
                return sum((self._a[t - j] * self._prefix[j] for j in range(t + 1)), Fraction(0))
            regs = [Fraction(0)] * self.d
            for zj in self._prefix:
                regs = self._advance(regs, zj)
            self._prefix = None
            self._regs = regs
        self._regs = self._advance(self._regs, z)
        return self._regs[0]

    @property
    def state(self) -> tuple[Fraction, ...]:
        if self._prefix is not None:
            return tuple(self._prefix)
        return tuple(self._regs)

    def buffer_profile(self, t: int) -> int:
        return min(t + 1, self.d)


class SeqStreamer(Streamer):
    """``T[L] T[R]``: the right streamer's output feeds the left one."""

    def __init__(self, left: Streamer, right: Streamer):
        super().__init__()
        self.left, self.right = left, right

    def reset(self) -> None:
        super().reset()
        self.left.reset()
        self.right.reset()

    def _step(self, z: Fraction) -> Fraction:
        return self.left.step(self.right.step(z))

    @property
    def state(self) -> tuple[Fraction, ...]:
        return self.left.state + self.right.state

    def buffer_profile(self, t: int) -> int:
        return self.left.buffer_profile(t) + self.right.buffer_profile(t)


class ParStreamer(Streamer):
    """``T[A] + T[B]`` on the same input."""

    def __init__(self, a: Streamer, b: Streamer):
        super().__init__()
        self.a, self.b = a, b

    def reset(self) -> None:
        super().reset()
        self.a.reset()
        self.b.reset()

    def _step(self, z: Fraction) -> Fraction:
        return self.a.step(z) + self.b.step(z)

    @property
    def state(self) -> tuple[Fraction, ...]:
        return self.a.state + self.b.state

    def buffer_profile(self, t: int) -> int:
        return self.a.buffer_profile(t) + self.b.buffer_profile(t)


def dense_streamer(a: Series) -> DenseStreamer:
    return DenseStreamer(a)


def rational_streamer(g: RationalGF) -> RationalStreamer:
    return RationalStreamer(g)


def compose_seq(left: Streamer, right: Streamer) -> SeqStreamer:
    return SeqStreamer(left, right)


def compose_par(a: Streamer, b: Streamer) -> ParStreamer:
    return ParStreamer(a, b)


@dataclass
class StreamRun:
    inputs: list[Fraction]
    outputs: list[Fraction] = field(default_factory=list)
    buffers: list[int] = field(default_factory=list)

    @property
    def max_buffer(self) -> int:
        return max(self.buffers, default=0)


def run(s: Streamer, z: Iterable[RatLike]) -> StreamRun:
    """Reset ``s`` and feed it ``z``; records outputs and the buffer after each step."""
    s.reset()
    out = StreamRun(inputs=[to_rat(v) for v in z])
    for v in out.inputs:
        out.outputs.append(s.step(v))
        out.buffers.append(s.buffer_size)
    return out


def dense_outputs(a: Sequence[Fraction] | Series, z: Sequence[Fraction]) -> list[Fraction]:
    """Reference ``T[a] z`` by direct summation."""
    return [sum((a[t - j] * z[j] for j in range(t + 1)), Fraction(0)) for t in range(len(z))]
