"""Compute-and-forward relaying over Gaussian-integer residue-class constellations."""

from .analysis import BoundReport, rank_failure_prob, relay_error_exact, relay_error_paper, union_bound
from .cflink import BlockTrace, Decoded, run_block, simulate_blocks
from .constellation import ResidueSystem, build_system, encode, sigma_for_snr
from .ffield import FieldScalar, IsoParams, RankFailure, bezout_pair, mat_inv, mat_rank, phi, phi_inv
from .gaussint import GaussianInt, conj, is_gaussian_prime, mod_pi, round_complex, two_squares

__version__ = "0.1.0"
