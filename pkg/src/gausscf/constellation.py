"""Residue-class signal constellations indexed by field elements."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .ffield import IsoParams, phi
from .gaussint import GaussianInt, two_squares


@dataclass(frozen=True)
class ResidueSystem:
    """The constellation ``Z[i]/(pi)`` for a prime field F_p.

    ``codebook[a]`` is the transmitted point for message ``a``. The integer
    arrays ``code_re``/``code_im`` mirror the codebook for vectorized use.
    """

    params: IsoParams
    codebook: tuple[GaussianInt, ...]
    avg_energy: Fraction
    code_re: np.ndarray = field(repr=False, compare=False)
    code_im: np.ndarray = field(repr=False, compare=False)

    @property
    def p(self) -> int:
        return self.params.p

    @property
    def pi(self) -> GaussianInt:
        return self.params.pi


def _check_admissible(p) -> None:
    # two_squares raises the diagnostic; this only adds the context
    try:
        two_squares(p)
    except ValueError as exc:
        raise ValueError(f"invalid field order {p!r}: field orders must be primes congruent to 1 mod 4") from exc


@lru_cache(maxsize=None)
def build_system(p: int) -> ResidueSystem:
    _check_admissible(p)
    params = IsoParams.from_pi(two_squares(p))
    codebook = tuple(phi(a, params) for a in range(p))
    if len(set(codebook)) != p:
        raise AssertionError(f"codebook for p={p} is not injective")
    energy = Fraction(sum(x.norm() for x in codebook), p)
    re = np.array([x.re for x in codebook], dtype=np.int64)
    im = np.array([x.im for x in codebook], dtype=np.int64)
    re.flags.writeable = False
    im.flags.writeable = False
    return ResidueSystem(params, codebook, energy, re, im)


def encode(w: int, sys: ResidueSystem) -> GaussianInt:
    return sys.codebook[w]


def nearest_message(z: complex, sys: ResidueSystem) -> int:
    """Minimum-distance decision over the codebook (single-user detection)."""
    d = (sys.code_re - z.real) ** 2 + (sys.code_im - z.imag) ** 2
    return int(np.argmin(d))


def sigma_for_snr(snr_db: float, sys: ResidueSystem) -> float:
    """Noise scale ``sigma`` with ``avg_energy / sigma**2 = 10**(snr_db/10)``.

    ``sigma**2`` is the total variance of the complex noise.
    """
    if math.isnan(snr_db):
        raise ValueError("SNR must not be NaN")
    if snr_db == math.inf:
        return 0.0
    return math.sqrt(float(sys.avg_energy) / 10 ** (snr_db / 10))
