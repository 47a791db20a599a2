from fractions import Fraction as F
from itertools import islice

import pytest

from gfstream.continual import (
    Mechanism,
    NoiseExhausted,
    counter,
    mechanism_run,
    mechanism_step,
    rational_noise,
)
from gfstream.ratgf import expand, pade
from gfstream.series import catalog
from gfstream.streamkit import dense_outputs, dense_streamer, rational_streamer

Z = [1, 2, 3, -1, F(1, 2), 0, 4]


def test_zero_noise_is_counting():
    m = Mechanism(rational_streamer(pade(catalog("g_half", 5), 3)), [0] * 3)
    assert [mechanism_step(m, v) for v in [1, 2, 3]] == [1, 3, 6]


def test_pure_noise_matches_dense():
    g = pade(catalog("g_half", 5), 3)
    y = [F(1, 3), -2, 5, F(7, 4), 0, 1]
    m = Mechanism(rational_streamer(g), y)
    out = [m.step(0) for _ in y]
    assert out == dense_outputs(expand(g, len(y)), y)


def test_noise_equals_input_doubles():
    m = Mechanism(dense_streamer(catalog("g_one", 10)), Z)
    out = [m.step(v) for v in Z]
    assert out == [2 * s for s in dense_outputs([1] * len(Z), Z)]


def test_recorded_noise_runs_out():
    m = Mechanism(counter(), [1])
    m.step(0)
    with pytest.raises(NoiseExhausted):
        m.step(0)


def test_buffer_is_counter_plus_shaper():
    m = Mechanism(rational_streamer(pade(catalog("g_half", 5), 3)), rational_noise(1))
    sizes = []
    for _ in range(6):
        m.step(1)
        sizes.append(m.buffer_size)
    assert sizes == [2, 3, 4, 4, 4, 4]


def test_degree_one_error():
    r = mechanism_run(3, 1, seed=5, z=[0, 0, 0])
    assert r.coeff_errors[2] == F(1, 8)
    assert r.coeff_error == F(1, 8)


@pytest.mark.parametrize("d", [1, 2, 4])
def test_zero_noise_any_degree(d):
    r = mechanism_run(len(Z), d, z=Z, noise=[0] * len(Z))
    assert r.outputs == dense_outputs([1] * len(Z), Z)


@pytest.mark.parametrize("d", [1, 3, 5])
def test_buffer_report(d):
    assert mechanism_run(12, d, seed=2).max_buffer == d + 1


def test_short_run_buffer():
    assert mechanism_run(2, 5, seed=2).max_buffer == 3


def test_seed_determinism():
    a = mechanism_run(20, 3, seed=123, z=Z + [0] * 13)
    b = mechanism_run(20, 3, seed=123, z=Z + [0] * 13)
    c = mechanism_run(20, 3, seed=124, z=Z + [0] * 13)
    assert a.outputs == b.outputs and a.noise == b.noise
    assert a.noise != c.noise


def test_bilinear():
    y1 = list(islice(rational_noise(7), 8))
    y2 = list(islice(rational_noise(8), 8))
    z1, z2 = [1, 0, 2, 3, -1, 0, 1, 1], [0, 5, -2, F(1, 3), 0, 0, 2, 1]
    run = lambda z, y: mechanism_run(8, 2, z=z, noise=y).outputs
    zero = [0] * 8
    # linear in y with z fixed at zero, and in z with y fixed at zero
    assert run(zero, [a + 2 * b for a, b in zip(y1, y2)]) == [
        a + 2 * b for a, b in zip(run(zero, y1), run(zero, y2))]
    assert run([a - b for a, b in zip(z1, z2)], zero) == [
        a - b for a, b in zip(run(z1, zero), run(z2, zero))]
    # superposition of the two parts
    assert run(z1, y1) == [a + b for a, b in zip(run(z1, zero), run(zero, y1))]


def test_seed_range():
    with pytest.raises(ValueError):
        next(rational_noise(-1))
    with pytest.raises(ValueError):
        next(rational_noise(2**64))


def test_length_mismatch():
    with pytest.raises(ValueError):
        mechanism_run(3, 1, z=[1, 2])
    with pytest.raises(ValueError):
        mechanism_run(3, 0)
