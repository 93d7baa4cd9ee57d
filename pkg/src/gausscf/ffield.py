"""Prime-field arithmetic and the isomorphism between F_p and Z[i]/(pi).

For a Gaussian prime ``pi`` with ``norm(pi) = p``, a Bezout pair ``(u, v)``
with ``u*pi + v*conj(pi) = 1`` gives the CRT idempotents ``v*conj(pi)``
(1 mod pi, 0 mod conj(pi)) and ``u*pi`` (0 mod pi, 1 mod conj(pi)). These
drive the inverse map back to F_p.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .gaussint import GaussianInt, ONE, UNITS, is_prime, mod_pi, round_quotient


class FieldOrderMismatch(ValueError):
    pass


@total_ordering
@dataclass(frozen=True, slots=True)
class FieldScalar:
    """An element of F_p stored as its canonical representative in ``[0, p)``."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            raise ValueError(f"{self.value} is outside [0, {self.p})")

    def _check(self, other: "FieldScalar") -> None:
        if not isinstance(other, FieldScalar):
            raise TypeError(f"expected FieldScalar, got {type(other).__name__}")
        if other.p != self.p:
            raise FieldOrderMismatch(f"cannot combine elements of F_{self.p} and F_{other.p}")

    def __add__(self, other):
        return ff_add(self, other)

    def __sub__(self, other):
        return ff_sub(self, other)

    def __mul__(self, other):
        return ff_mul(self, other)

    def __neg__(self):
        return ff_neg(self)

    def __lt__(self, other):
        self._check(other)
        return self.value < other.value

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


def ff_add(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    a._check(b)
    return FieldScalar((a.value + b.value) % a.p, a.p)


def ff_sub(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    a._check(b)
    return FieldScalar((a.value - b.value) % a.p, a.p)


def ff_mul(a: FieldScalar, b: FieldScalar) -> FieldScalar:
    a._check(b)
    return FieldScalar(a.value * b.value % a.p, a.p)


def ff_neg(a: FieldScalar) -> FieldScalar:
    return FieldScalar(-a.value % a.p, a.p)


def inv_mod(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    r0, r1 = a % p, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise ZeroDivisionError(f"{a} has no inverse modulo {p}")
    return s0 % p


def ff_inv(a: FieldScalar) -> FieldScalar:
    if a.value == 0:
        raise ZeroDivisionError("zero has no multiplicative inverse")
    return FieldScalar(inv_mod(a.value, a.p), a.p)


# -- isomorphism ---------------------------------------------------------------


def gaussian_xgcd(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` a gcd of a and b."""
    r0, r1 = a, b
    s0, s1 = ONE, GaussianInt(0)
    t0, t1 = GaussianInt(0), ONE
    while r1:
        q = round_quotient(r0, r1)
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def bezout_pair(pi: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Find ``(u, v)`` with ``u*pi + v*conj(pi) = 1``.

    Only defined for split primes, i.e. ``norm(pi)`` a rational prime
    congruent to 1 mod 4; otherwise pi and its conjugate share a factor.
    """
    pi = GaussianInt.coerce(pi)
    n = pi.norm()
    if not (is_prime(n) and n % 4 == 1):
        raise ValueError(f"{pi} is not a Gaussian prime over a rational prime = 1 mod 4 (norm {n})")
    g, s, t = gaussian_xgcd(pi, pi.conj())
    if g not in UNITS:
        raise ValueError(f"gcd of {pi} and its conjugate is {g}, not a unit")
    # g * conj(g) = 1 for a unit
    ginv = g.conj()
    u, v = s * ginv, t * ginv
    assert u * pi + v * pi.conj() == ONE
    return u, v


@dataclass(frozen=True)
class IsoParams:
    """Parameters of the isomorphism F_p <-> Z[i]/(pi)."""

    p: int
    pi: GaussianInt
    u: GaussianInt
    v: GaussianInt

    def __post_init__(self):
        if self.pi.norm() != self.p:
            raise ValueError(f"norm({self.pi}) = {self.pi.norm()} != {self.p}")
        if self.u * self.pi + self.v * self.pi.conj() != ONE:
            raise ValueError(f"({self.u}, {self.v}) is not a Bezout pair for {self.pi}")

    @classmethod
    def from_pi(cls, pi: GaussianInt) -> "IsoParams":
        u, v = bezout_pair(pi)
        return cls(pi.norm(), pi, u, v)

    @property
    def idempotent_pi(self) -> GaussianInt:
        """``v*conj(pi)``: congruent to 1 mod pi and 0 mod conj(pi)."""
        return self.v * self.pi.conj()

    @property
    def idempotent_conj(self) -> GaussianInt:
        """``u*pi``: congruent to 0 mod pi and 1 mod conj(pi)."""
        return self.u * self.pi


def phi(a: int, params: IsoParams) -> GaussianInt:
    """Map ``a`` in F_p to its representative ``a - [a*conj(pi)/p]*pi``."""
    a = int(a)
    if not 0 <= a < params.p:
        raise ValueError(f"{a} is outside [0, {params.p})")
    return mod_pi(GaussianInt(a), params.pi)


def phi_inv(xi: GaussianInt, params: IsoParams) -> int:
    """Map a residue representative back to F_p.

    Evaluates ``xi*(v*conj(pi)) + conj(xi)*(u*pi)``, which is congruent to
    the field element modulo ``p`` in Z[i]; its imaginary part is therefore a
    multiple of ``p``.
    """
    xi = GaussianInt.coerce(xi)
    x = xi * params.idempotent_pi + xi.conj() * params.idempotent_conj
    if x.im % params.p:
        raise ValueError(f"{xi} does not reduce to a rational residue modulo {params.p}")
    return x.re % params.p


# -- matrices over F_p -----------------------------------------------------------


@dataclass(frozen=True)
class RankFailure:
    """Outcome of inverting a singular matrix; carries the rank found."""

    rank: int


def _check_matrix(M, p: int) -> list[list[int]]:
    rows = [[int(x) % p for x in row] for row in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def mat_rank(M, p: int) -> int:
    """Rank over F_p by row reduction."""
    rows = _check_matrix(M, p)
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = inv_mod(rows[rank][col], p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def mat_inv(M, p: int) -> list[list[int]] | RankFailure:
    """Gauss-Jordan inverse over F_p, or :class:`RankFailure` if singular."""
    rows = _check_matrix(M, p)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    aug = [row + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            return RankFailure(mat_rank(rows, p))
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = inv_mod(aug[col][col], p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def mat_vec(M, x, p: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) % p for row in M]


def mat_mul(A, B, p: int) -> list[list[int]]:
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) % p for col in cols] for row in A]


def inverse_table(p: int) -> np.ndarray:
    """Lookup table of multiplicative inverses mod p (entry 0 maps to 0)."""
    table = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        table[a] = pow(a, p - 2, p)
    return table


def batch_solve(A: np.ndarray, b: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Solve ``A[k] @ x[k] = b[k]`` over F_p for a stack of square systems.

    Returns ``(x, full_rank)``. Rows of ``x`` where ``full_rank`` is False
    are meaningless.
    """
    A = np.asarray(A, dtype=np.int64) % p
    b = np.asarray(b, dtype=np.int64) % p
    n, L, _ = A.shape
    M = np.concatenate([A, b[:, :, None]], axis=2)
    inv = inverse_table(p)
    ok = np.ones(n, dtype=bool)
    idx = np.arange(n)
    for c in range(L):
        nonzero = M[:, c:, c] != 0
        ok &= nonzero.any(axis=1)
        piv = c + nonzero.argmax(axis=1)
        row_c = M[idx, c].copy()
        M[idx, c] = M[idx, piv]
        M[idx, piv] = row_c
        M[:, c] = M[:, c] * inv[M[:, c, c]][:, None] % p
        f = M[:, :, c].copy()
        f[:, c] = 0
        M = (M - f[:, :, None] * M[:, c][:, None, :]) % p
    return M[:, :, L], ok
