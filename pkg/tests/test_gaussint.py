import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from gausscf.gaussint import (
    GaussianInt, conj, divides, is_gaussian_prime, is_prime, mod_pi, round_complex, two_squares,
)

G = GaussianInt
PIS = [G(2, 1), G(3, 2), G(5, 4)]

small = st.integers(-50, 50)
gints = st.builds(G, small, small)


@pytest.mark.parametrize("g, expected", [(G(2, 1), G(2, -1)), (G(0, 0), G(0, 0)), (G(3, -2), G(3, 2))])
def test_conj(g, expected):
    assert conj(g) == expected


def test_components_must_be_integers():
    with pytest.raises(TypeError):
        G(1.5, 0)
    assert G(np.int64(3), np.int32(-1)) == G(3, -1)


def test_norm_zero_only_at_origin():
    assert G(0, 0).norm() == 0
    assert all(G(a, b).norm() > 0 for a in range(-3, 4) for b in range(-3, 4) if (a, b) != (0, 0))


@pytest.mark.parametrize("z, expected", [
    (0.8 - 0.4j, G(1, 0)),
    (0.5 + 0.5j, G(1, 1)),
    (-1.6 + 2.49j, G(-2, 2)),
    (-0.5 - 0.5j, G(0, 0)),
])
def test_round_complex(z, expected):
    assert round_complex(z) == expected


@pytest.mark.parametrize("z", [complex(math.nan, 0), complex(0, math.inf)])
def test_round_complex_rejects_nonfinite(z):
    with pytest.raises(ValueError):
        round_complex(z)


def test_round_complex_is_nearest():
    rng = np.random.default_rng(11)
    zs = rng.uniform(-20, 20, size=(100_000, 2))
    offsets = [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if dx or dy]
    for zr, zi in zs:
        g = round_complex(complex(zr, zi))
        d0 = (g.re - zr) ** 2 + (g.im - zi) ** 2
        for dx, dy in offsets:
            assert (g.re + dx - zr) ** 2 + (g.im + dy - zi) ** 2 >= d0


@pytest.mark.parametrize("g, pi, expected", [
    (G(3, 2), G(2, 1), G(-1, 0)),
    (G(0, 0), G(2, 1), G(0, 0)),
    (G(0, 0), G(5, 4), G(0, 0)),
    (G(2, 0), G(2, 1), G(0, -1)),
])
def test_mod_pi_examples(g, pi, expected):
    assert mod_pi(g, pi) == expected
    assert divides(pi, g - expected)


def test_mod_pi_zero_modulus():
    with pytest.raises(ZeroDivisionError):
        mod_pi(G(1, 1), G(0, 0))


@pytest.mark.parametrize("pi", PIS)
def test_mod_pi_grid(pi):
    reps = set()
    for a in range(-50, 51):
        for b in range(-50, 51):
            g = G(a, b)
            r = mod_pi(g, pi)
            assert mod_pi(r, pi) == r
            assert divides(pi, g - r)
            reps.add(r)
    # a complete residue system has exactly norm(pi) classes
    assert len(reps) == pi.norm()


@pytest.mark.parametrize("pi", PIS)
@given(g1=gints, g2=gints)
def test_mod_pi_ring_compatibility(pi, g1, g2):
    r1, r2 = mod_pi(g1, pi), mod_pi(g2, pi)
    assert mod_pi(g1 + g2, pi) == mod_pi(r1 + r2, pi)
    assert mod_pi(g1 * g2, pi) == mod_pi(r1 * r2, pi)


@pytest.mark.parametrize("p, expected", [(5, G(2, 1)), (13, G(3, 2)), (41, G(5, 4))])
def test_two_squares_table(p, expected):
    assert two_squares(p) == expected


def test_two_squares_all_small_primes():
    for p in range(5, 10_000, 4):
        if not is_prime(p):
            continue
        # oracle: every (a, b) pair with a > b > 0 summing to p
        pairs = {(a, b) for a in range(1, math.isqrt(p) + 1) for b in range(1, a)
                 if a * a + b * b == p}
        pi = two_squares(p)
        assert pi.norm() == p
        assert (pi.re, pi.im) in pairs


@pytest.mark.parametrize("p", [2, 3, 7, 9, 21, 1, 0, -5])
def test_two_squares_rejects(p):
    with pytest.raises(ValueError):
        two_squares(p)


@pytest.mark.parametrize("g, expected", [
    (G(2, 1), True), (G(3, 0), True), (G(2, 0), False), (G(0, -7), True),
    (G(1, 1), True), (G(5, 0), False), (G(1, 0), False), (G(0, 0), False), (G(3, 3), False),
])
def test_is_gaussian_prime(g, expected):
    assert is_gaussian_prime(g) is expected


def test_two_is_composite():
    # 2 = -i * (1+i)^2
    assert G(0, -1) * G(1, 1) * G(1, 1) == G(2, 0)
