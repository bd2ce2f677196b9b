"""Exact discrete Pochhammer symbol and its Stirling coefficient machinery.

The product r(x, y, n) = x (x+y) ... (x+(n-1)y) expands as
sum_k r_{n,k} x^k y^(n-k) with r_{n,k} the unsigned Stirling numbers of the
first kind; the signed numbers s_{n,k} = (-1)^(n-k) r_{n,k} and the second
kind S_{n,k} invert each other.  A brute-force lattice-point oracle and the
ordered-simplex closed forms keep every identity independently checkable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "StirlingTriangle",
    "AnaloguePair",
    "pochhammer_discrete",
    "stirling_triangle",
    "stirling_lattice_oracle",
    "simplex_volume",
    "simplex_moment",
    "power_sum_pair",
    "geometric_sum_pair",
]

STIRLING_MAX_N = 64
LATTICE_ORACLE_MAX_N = 9

TRIANGLE_KINDS = ("first_unsigned", "first_signed", "second")


def pochhammer_discrete(x, y, n: int):
    """r(x, y, n) = prod_{l=0}^{n-1} (x + l*y); exact for exact inputs.

    Works uniformly on int, Fraction and float operands; r(x, y, 0) = 1.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    result = x**0  # multiplicative identity of the operand type
    for l in range(n):
        result = result * (x + l * y)
    return result


@dataclass(frozen=True)
class StirlingTriangle:
    """Lower-triangular table of exact Stirling coefficients."""

    kind: str
    max_n: int
    rows: tuple[tuple[int, ...], ...]

    def value(self, n: int, k: int) -> int:
        """Entry (n, k); zero outside the triangle."""
        if n < 0 or n > self.max_n:
            raise IndexError(f"n={n} outside triangle of max_n={self.max_n}")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


def stirling_triangle(kind: str, max_n: int) -> StirlingTriangle:
    """Build a Stirling triangle up to row max_n by the standard recurrences.

    first_unsigned:  r_{n+1,k} = r_{n,k-1} + n r_{n,k}
    second:          S_{n+1,k} = S_{n,k-1} + k S_{n,k}
    """
    if kind not in TRIANGLE_KINDS:
        raise ValueError(f"unknown triangle kind {kind!r}")
    if not 0 <= max_n <= STIRLING_MAX_N:
        raise ValueError(f"max_n must lie in [0, {STIRLING_MAX_N}], got {max_n}")
    rows = [(1,)]
    for n in range(max_n):
        prev = rows[-1]
        row = [0] * (n + 2)
        for k in range(n + 2):
            from_lower = prev[k - 1] if k >= 1 else 0
            inside = prev[k] if k <= n else 0
            if kind == "second":
                row[k] = from_lower + k * inside
            else:
                row[k] = from_lower + n * inside
        rows.append(tuple(row))
    if kind == "first_signed":
        rows = [
            tuple((-1) ** (n - k) * v for k, v in enumerate(row))
            for n, row in enumerate(rows)
        ]
    return StirlingTriangle(kind, max_n, tuple(rows))


def stirling_lattice_oracle(n: int, k: int) -> int:
    """r_{n,k} as a sum of lattice products over strictly increasing tuples.

    Enumerates all 0 <= s_1 < ... < s_{n-k} <= n-1 and sums the products
    s_1 ... s_{n-k}.  Exponential cost, hence the small-n guard.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if n > LATTICE_ORACLE_MAX_N:
        raise ValueError(f"lattice oracle limited to n <= {LATTICE_ORACLE_MAX_N}")
    total = 0
    for chosen in combinations(range(n), n - k):
        prod = 1
        for s in chosen:
            prod *= s
        total += prod
    return total


def simplex_volume(x, k: int):
    """vol of the ordered simplex 0 <= s_1 <= ... <= s_k <= x, i.e. x^k / k!."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    # Fraction / int stays exact; int / int falls through to float.
    return x**k / math.factorial(k)


def simplex_moment(x, k: int):
    """Integral of s_1 ... s_k over the ordered simplex with top x.

    Closed form x^(2k) / (2^k k!) = (2k-1)!! x^(2k) / (2k)!.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return x ** (2 * k) / (2**k * math.factorial(k))


@dataclass(frozen=True)
class AnaloguePair:
    """A discrete sum next to its continuous (integral) analogue."""

    discrete: object
    continuous: float

    @property
    def ratio(self) -> float:
        return float(self.discrete) / self.continuous


def power_sum_pair(n: int, k: int) -> AnaloguePair:
    """S_k(n) = 1^k + ... + n^k next to the integral analogue n^(k+1)/(k+1)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    discrete = sum(l**k for l in range(1, n + 1))
    continuous = float(n) ** (k + 1) / (k + 1)
    return AnaloguePair(discrete, continuous)


def geometric_sum_pair(x: float, y: float) -> AnaloguePair:
    """Geometric sum (x^(y+1)-1)/(x-1) next to its integral analogue (x^y-1)/ln x.

    At integer y the discrete side is 1 + x + ... + x^y.  The analogue has a
    removable singularity at x = 1 (limit value y); that point is rejected.
    """
    if x <= 0:
        raise ValueError(f"x must be > 0, got {x}")
    if x == 1.0:
        raise ValueError("x = 1 is the removable singularity; the limit value is y")
    discrete = (x ** (y + 1) - 1.0) / (x - 1.0)
    continuous = (x**y - 1.0) / math.log(x)
    return AnaloguePair(discrete, continuous)
