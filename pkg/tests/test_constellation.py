import math
from fractions import Fraction

import numpy as np
import pytest

from gausscf.constellation import build_system, encode, nearest_message, sigma_for_snr
from gausscf.gaussint import GaussianInt as G, mod_pi


def test_p5_codebook():
    sys = build_system(5)
    assert sys.codebook == (G(0), G(1), G(0, -1), G(0, 1), G(-1))
    assert sys.avg_energy == Fraction(4, 5)


@pytest.mark.parametrize("p", [5, 13, 41])
def test_codebook_invariants(p):
    sys = build_system(p)
    assert len(set(sys.codebook)) == p
    assert sys.codebook[0] == G(0)
    assert all(mod_pi(x, sys.pi) == x for x in sys.codebook)
    assert sys.avg_energy == Fraction(sum(x.norm() for x in sys.codebook), p)
    assert sys.avg_energy > 0
    assert list(sys.code_re) == [x.re for x in sys.codebook]
    assert list(sys.code_im) == [x.im for x in sys.codebook]


@pytest.mark.parametrize("p", [7, 9, 2, 3, 15])
def test_rejects_inadmissible(p):
    with pytest.raises(ValueError, match="1 mod 4"):
        build_system(p)


@pytest.mark.parametrize("w, expected", [(0, G(0)), (2, G(0, -1)), (3, G(0, 1))])
def test_encode(w, expected):
    assert encode(w, build_system(5)) == expected


@pytest.mark.parametrize("p", [5, 13, 41])
def test_noiseless_nearest_decision(p):
    sys = build_system(p)
    for w in range(p):
        assert nearest_message(complex(encode(w, sys)), sys) == w


def test_sigma_for_snr():
    sys = build_system(5)
    assert sigma_for_snr(0, sys) ** 2 == pytest.approx(0.8, rel=1e-15)
    assert sigma_for_snr(10, sys) ** 2 == pytest.approx(0.08, rel=1e-15)
    assert sigma_for_snr(math.inf, sys) == 0.0
    snrs = np.linspace(-10, 60, 200)
    sig = [sigma_for_snr(s, sys) for s in snrs]
    assert all(a > b for a, b in zip(sig, sig[1:]))
