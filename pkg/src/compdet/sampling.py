"""Deterministic random sampling for the numeric verification mode.

The generator is SplitMix64, chosen because it is tiny, portable, and fully
specified by three multiply-xorshift constants, so the same seed gives the
same evaluation points on every platform and Python version.

Evaluation points are squares of random rationals.  Squares keep every
half-integer power rational (the orthogonal and symplectic denominators take
square roots of the variables), and the admissibility checks reject the
degenerate configurations that would zero a denominator: repeated values,
values in {0, 1, -1}, and pairs multiplying to 1.
"""

from fractions import Fraction

from .errors import ParameterError

MASK64 = (1 << 64) - 1
MAX_RETRIES = 32


class SplitMix64:
    """SplitMix64 pseudo-random generator over 64-bit state."""

    __slots__ = ("_state",)

    def __init__(self, seed):
        self._state = seed & MASK64

    def next_u64(self):
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def next_below(self, bound):
        """Uniform-ish integer in [0, bound); bound must be positive."""
        if bound <= 0:
            raise ParameterError("bound must be positive")
        return self.next_u64() % bound


def square_rational(rng, bits=32):
    """Square of a random rational u/v with u, v in [1, 2**bits]."""
    top = 1 << bits
    u = rng.next_below(top) + 1
    v = rng.next_below(top) + 1
    r = Fraction(u, v)
    return r * r


def point_is_admissible(values):
    """True when all values are distinct, avoid {0, 1, -1}, and no pair
    multiplies to 1."""
    seen = set()
    for x in values:
        if x in (0, 1, -1) or x in seen:
            return False
        seen.add(x)
    n = len(values)
    for i in range(n):
        for j in range(i + 1, n):
            if values[i] * values[j] == 1:
                return False
    return True


def sample_point(num_vars, rng, retries=MAX_RETRIES):
    """Admissible tuple of num_vars squared rationals."""
    for _ in range(retries):
        values = tuple(square_rational(rng) for _ in range(num_vars))
        if point_is_admissible(values):
            return values
    raise ParameterError(f"no admissible point after {retries} attempts")


def qt_is_admissible(q, t):
    """True for parameters strictly between 0 and 1 with q != t."""
    return 0 < q < 1 and 0 < t < 1 and q != t


def sample_qt(rng, retries=MAX_RETRIES):
    """Admissible (q, t) pair of 16-bit rationals strictly inside (0, 1)."""
    for _ in range(retries):
        pair = []
        for _ in range(2):
            den = rng.next_below((1 << 16) - 1) + 2
            num = rng.next_below(den - 1) + 1
            pair.append(Fraction(num, den))
        q, t = pair
        if qt_is_admissible(q, t):
            return q, t
    raise ParameterError(f"no admissible (q, t) after {retries} attempts")
