"""Compute-and-forward link: sources -> relay -> destination.

Two execution paths share the same maps. The scalar path (``run_block`` and
friends) works on :class:`GaussianInt` objects and keeps a full trace of one
decoding block. The batch path (``simulate_blocks``) runs many blocks at
once on integer numpy arrays and only returns error indicators; it is what
the Monte Carlo sweeps use.

Gains are redrawn for every one of the L linear combinations collected in a
block, otherwise the coefficient matrix would have rank one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .constellation import ResidueSystem, encode
from .ffield import IsoParams, RankFailure, mat_inv, mat_vec, phi_inv, batch_solve
from .gaussint import GaussianInt, mod_pi, round_complex


@dataclass(frozen=True)
class ChannelUse:
    gains: tuple[GaussianInt, ...]
    noise: complex
    received: complex


@dataclass(frozen=True)
class LinearCombination:
    coeffs: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class Decoded:
    messages: tuple[int, ...]


Outcome = Union[Decoded, RankFailure]


@dataclass(frozen=True)
class BlockTrace:
    """Everything that happened in one block of L channel uses."""

    messages: tuple[int, ...]
    uses: tuple[ChannelUse, ...]
    combinations: tuple[LinearCombination, ...]  # ground truth per use
    relay_estimates: tuple[int, ...]
    outcome: Outcome

    @property
    def matrix(self) -> list[list[int]]:
        return [list(c.coeffs) for c in self.combinations]

    @property
    def relay_errors(self) -> list[bool]:
        return [est != c.value for est, c in zip(self.relay_estimates, self.combinations)]

    @property
    def rank_failure(self) -> bool:
        return isinstance(self.outcome, RankFailure)

    @property
    def block_error(self) -> bool:
        return self.rank_failure or self.outcome.messages != self.messages


# -- random streams --------------------------------------------------------------


def block_stream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the unit of work identified by ``key``.

    The stream depends only on ``(seed, key)``, never on scheduling.
    """
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(int(k) for k in key)))


def complex_noise(rng: np.random.Generator, sigma: float, size=None) -> tuple:
    """Circularly-symmetric complex Gaussian with total variance ``sigma**2``.

    Returned as ``(real, imag)``, each with variance ``sigma**2 / 2``.
    """
    if sigma < 0:
        raise ValueError("sigma must be non-negative")
    z = rng.standard_normal(size=(2,) if size is None else (2, *np.atleast_1d(size)))
    z *= sigma / math.sqrt(2)
    return z[0], z[1]


# -- scalar path -----------------------------------------------------------------


def sample_gains(rng: np.random.Generator, sys: ResidueSystem, L: int) -> list[GaussianInt]:
    """Draw L gains uniformly from the p constellation points (zero included)."""
    return [sys.codebook[i] for i in rng.integers(0, sys.p, size=L)]


def transmit(x: Sequence[GaussianInt], h: Sequence[GaussianInt], sigma: float,
             rng: np.random.Generator | None = None) -> ChannelUse:
    """Superpose ``sum(h_l * x_l)`` and add CN(0, sigma^2) noise."""
    if len(x) != len(h):
        raise ValueError(f"{len(x)} symbols but {len(h)} gains")
    lattice = sum((hl * xl for hl, xl in zip(h, x)), GaussianInt(0))
    if sigma > 0:
        z = complex(*complex_noise(rng, sigma))
    elif sigma == 0:
        z = 0j
    else:
        raise ValueError("sigma must be non-negative")
    return ChannelUse(tuple(h), z, complex(lattice) + z)


def coefficients(h: Sequence[GaussianInt], sys: ResidueSystem) -> list[int]:
    """Field coefficient induced by each gain: ``phi_inv(mod_pi(h))``."""
    return [phi_inv(mod_pi(hl, sys.pi), sys.params) for hl in h]


def true_combination(a: Sequence[int], w: Sequence[int], p: int) -> int:
    if len(a) != len(w):
        raise ValueError(f"{len(a)} coefficients but {len(w)} messages")
    return sum(int(al) * int(wl) for al, wl in zip(a, w)) % p


def relay_decode(y: complex, sys: ResidueSystem) -> int:
    """Lattice ML decision, reduction mod pi, then back to F_p."""
    return phi_inv(mod_pi(round_complex(y), sys.pi), sys.params)


def destination_decode(A: Sequence[Sequence[int]], v_hat: Sequence[int], p: int) -> Outcome:
    inv = mat_inv(A, p)
    if isinstance(inv, RankFailure):
        return inv
    return Decoded(tuple(mat_vec(inv, v_hat, p)))


def run_block(rng: np.random.Generator, sys: ResidueSystem, L: int, sigma: float) -> BlockTrace:
    p = sys.p
    w = tuple(int(m) for m in rng.integers(0, p, size=L))
    x = [encode(m, sys) for m in w]
    uses, combos, estimates = [], [], []
    for _ in range(L):
        h = sample_gains(rng, sys, L)
        use = transmit(x, h, sigma, rng)
        a = tuple(coefficients(h, sys))
        uses.append(use)
        combos.append(LinearCombination(a, true_combination(a, w, p)))
        estimates.append(relay_decode(use.received, sys))
    outcome = destination_decode([c.coeffs for c in combos], estimates, p)
    return BlockTrace(w, tuple(uses), tuple(combos), tuple(estimates), outcome)


# -- batch path --------------------------------------------------------------------


def mod_pi_array(re: np.ndarray, im: np.ndarray, pi: GaussianInt) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`mod_pi` on integer arrays, exact."""
    a, b, n = pi.re, pi.im, pi.norm()
    nr = re * a + im * b
    ni = im * a - re * b
    qr = (2 * nr + n) // (2 * n)
    qi = (2 * ni + n) // (2 * n)
    return re - (qr * a - qi * b), im - (qr * b + qi * a)


def phi_inv_array(re: np.ndarray, im: np.ndarray, params: IsoParams) -> np.ndarray:
    c1, c2 = params.idempotent_pi, params.idempotent_conj
    xr = re * c1.re - im * c1.im + re * c2.re + im * c2.im
    xi = re * c1.im + im * c1.re + re * c2.im - im * c2.re
    if np.any(xi % params.p):
        raise ValueError("input contains points that do not reduce to rational residues")
    return xr % params.p


def relay_decode_array(y_re: np.ndarray, y_im: np.ndarray, sys: ResidueSystem) -> np.ndarray:
    lr = np.floor(y_re + 0.5).astype(np.int64)
    li = np.floor(y_im + 0.5).astype(np.int64)
    return phi_inv_array(*mod_pi_array(lr, li, sys.pi), sys.params)


@dataclass(frozen=True)
class BatchOutcome:
    """Error indicators for n blocks of L uses each."""

    relay_errors: np.ndarray  # (n, L) bool
    full_rank: np.ndarray  # (n,) bool
    dest_errors: np.ndarray  # (n,) bool

    @property
    def blocks(self) -> int:
        return len(self.full_rank)


def decode_batch(sys: ResidueSystem, w: np.ndarray, h_re: np.ndarray, h_im: np.ndarray,
                 z_re: np.ndarray, z_im: np.ndarray) -> BatchOutcome:
    """Run the relay and destination decoders on pre-drawn randomness.

    ``w`` has shape (n, L); gains ``h_*`` have shape (n, L, L) indexed
    ``[block, use, user]``; noise ``z_*`` has shape (n, L).
    """
    p = sys.p
    w = np.asarray(w, dtype=np.int64)
    x_re, x_im = sys.code_re[w], sys.code_im[w]
    y_re = np.einsum("ntl,nl->nt", h_re, x_re) - np.einsum("ntl,nl->nt", h_im, x_im) + z_re
    y_im = np.einsum("ntl,nl->nt", h_re, x_im) + np.einsum("ntl,nl->nt", h_im, x_re) + z_im
    v_hat = relay_decode_array(y_re, y_im, sys)
    A = phi_inv_array(*mod_pi_array(h_re, h_im, sys.pi), sys.params)
    v = np.einsum("ntl,nl->nt", A, w) % p
    w_hat, full_rank = batch_solve(A, v_hat, p)
    dest_errors = ~full_rank | np.any(w_hat != w, axis=1)
    return BatchOutcome(v_hat != v, full_rank, dest_errors)


def simulate_blocks(rng: np.random.Generator, sys: ResidueSystem, L: int, sigma: float, n: int) -> BatchOutcome:
    p = sys.p
    w = rng.integers(0, p, size=(n, L))
    g = rng.integers(0, p, size=(n, L, L))
    z_re, z_im = complex_noise(rng, sigma, (n, L))
    return decode_batch(sys, w, sys.code_re[g], sys.code_im[g], z_re, z_im)
