"""Exact arithmetic on the Gaussian integers Z[i].

Residue reduction modulo a Gaussian integer is done with exact integer
arithmetic; floating point only enters through :func:`round_complex`, which
quantizes a received complex sample onto the integer lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral


@dataclass(frozen=True, slots=True)
class GaussianInt:
    """A Gaussian integer ``re + im*i`` with exact integer components."""

    re: int
    im: int = 0

    def __post_init__(self):
        if type(self.re) is int and type(self.im) is int:
            return
        if not isinstance(self.re, Integral) or not isinstance(self.im, Integral):
            raise TypeError(f"Gaussian integer components must be integers, got {self.re!r}, {self.im!r}")
        # normalize numpy integer scalars to Python ints
        object.__setattr__(self, "re", int(self.re))
        object.__setattr__(self, "im", int(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianInt":
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, Integral):
            return cls(int(value), 0)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def __add__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        try:
            o = GaussianInt.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re or self.im)

    def __complex__(self):
        return complex(self.re, self.im)

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def conj(g: GaussianInt) -> GaussianInt:
    return GaussianInt.coerce(g).conj()


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


def round_complex(z: complex) -> GaussianInt:
    """Nearest Gaussian integer to ``z``.

    Components are rounded independently, ties going up (``floor(x + 0.5)``).
    Since the Voronoi cell of Z[i] is the unit square this is the exact
    minimum-distance lattice point.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"cannot round non-finite sample {z!r}")
    return GaussianInt(_round_half_up(z.real), _round_half_up(z.imag))


def _div_round(num: int, den: int) -> int:
    # floor(num/den + 1/2) for den > 0, exact
    return (2 * num + den) // (2 * den)


def round_quotient(g: GaussianInt, d: GaussianInt) -> GaussianInt:
    """``[g / d]`` computed exactly as ``[g * conj(d) / norm(d)]``."""
    n = d.norm()
    if n == 0:
        raise ZeroDivisionError("division by the zero Gaussian integer")
    num = g * d.conj()
    return GaussianInt(_div_round(num.re, n), _div_round(num.im, n))


def mod_pi(g: GaussianInt, pi: GaussianInt) -> GaussianInt:
    """Reduce ``g`` to its representative modulo ``pi``.

    Returns ``g - [g * pi^* / (pi * pi^*)] * pi``. The interior division is
    exact rational arithmetic, so boundary points are assigned consistently.
    """
    g = GaussianInt.coerce(g)
    pi = GaussianInt.coerce(pi)
    if not pi:
        raise ZeroDivisionError("modulus must be a nonzero Gaussian integer")
    return g - round_quotient(g, pi) * pi


def divides(d: GaussianInt, g: GaussianInt) -> bool:
    """True if ``d`` divides ``g`` in Z[i]."""
    d = GaussianInt.coerce(d)
    g = GaussianInt.coerce(g)
    if not d:
        return not g
    num = g * d.conj()
    n = d.norm()
    return num.re % n == 0 and num.im % n == 0


def is_prime(n: int) -> bool:
    """Rational primality by trial division; the moduli here are tiny."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % k for k in range(3, math.isqrt(n) + 1, 2))


def two_squares(p: int) -> GaussianInt:
    """Split a prime ``p = 1 (mod 4)`` as ``a^2 + b^2`` with ``a > b > 0``.

    >>> two_squares(13)
    GaussianInt(re=3, im=2)
    """
    if not isinstance(p, Integral) or not is_prime(p) or p % 4 != 1:
        raise ValueError(f"{p!r} is not a rational prime congruent to 1 mod 4")
    for b in range(1, math.isqrt(p) + 1):
        a2 = p - b * b
        a = math.isqrt(a2)
        if a * a == a2 and a > b:
            return GaussianInt(a, b)
    raise AssertionError(f"no two-squares decomposition found for prime {p}")  # unreachable by Fermat


def is_gaussian_prime(g: GaussianInt) -> bool:
    """Classify ``g`` as a Gaussian prime (up to unit multiples).

    Either the norm is a rational prime, or ``g`` is a unit times a rational
    prime ``q = 3 (mod 4)``.
    """
    g = GaussianInt.coerce(g)
    if is_prime(g.norm()):
        return True
    if g.re == 0 or g.im == 0:
        q = abs(g.re + g.im)
        return is_prime(q) and q % 4 == 3
    return False
