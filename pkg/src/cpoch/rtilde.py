"""First continuous analogue of the Pochhammer symbol.

The discrete coefficients r_{n,k} (lattice-point sums over an ordered
simplex) are replaced by the simplex moment integrals

    rt_{n,k} = (n-1)^(2(n-k)) / (2^(n-k) (n-k)!),

giving the homogeneous polynomial rt(x, y, n) = sum_k rt_{n,k} x^k y^(n-k)
with closed form x^n e_{n-1}(y (n-1)^2 / 2x) and a smooth extension in the
order variable through the regularized incomplete gamma.  The signed
companions st_{n,k} = (-1)^(n-k) rt_{n,k} invert to exact rational
analogues St_{n,k} of the second-kind Stirling numbers, whose values are
signed differences of groupoid cardinalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import LOG_FLOAT_MAX, LogScaled, SeriesEval
from .gammafns import e_partial_sum, log_e_partial
from .quadrature import gauss_hermite

__all__ = [
    "RTildeTriangle",
    "GroupoidCardinalities",
    "rtilde_coefficient",
    "rtilde_triangle",
    "stilde_mobius_oracle",
    "groupoid_cardinalities",
    "rtilde_poly",
    "rtilde_closed",
    "rtilde_ext",
    "rtilde_series_lower",
    "rtilde_series_upper",
    "cosh_truncated",
    "gaussian_expectation",
]

RTILDE_MAX_N = 48
MOBIUS_ORACLE_MAX_N = 12
COMPOSITION_BUDGET = 18  # groupoid sums enumerate 2^(n-k-1) compositions

_EPS = 2.220446049250313e-16
_MAX_TERMS = 4000


def rtilde_coefficient(n: int, k: int) -> Fraction:
    """Exact coefficient rt_{n,k} = (n-1)^(2(n-k)) / (2^(n-k) (n-k)!)."""
    if n < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    if k > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)  # rt_{0,0}
    if k == 0:
        return Fraction(0)
    m = n - k
    return Fraction((n - 1) ** (2 * m), 2**m * math.factorial(m))


@dataclass(frozen=True)
class RTildeTriangle:
    """Exact triangles rt, st = (-1)^(n-k) rt, and the inverse triangle St."""

    max_n: int
    r_rows: tuple[tuple[Fraction, ...], ...]
    s_rows: tuple[tuple[Fraction, ...], ...]
    S_rows: tuple[tuple[Fraction, ...], ...]

    def r(self, n: int, k: int) -> Fraction:
        return self.r_rows[n][k] if 0 <= k <= n else Fraction(0)

    def s(self, n: int, k: int) -> Fraction:
        return self.s_rows[n][k] if 0 <= k <= n else Fraction(0)

    def S(self, n: int, k: int) -> Fraction:
        return self.S_rows[n][k] if 0 <= k <= n else Fraction(0)


def rtilde_triangle(max_n: int) -> RTildeTriangle:
    """Build the exact rt/st/St triangles up to row max_n.

    St is obtained by exact forward substitution against the unit lower
    triangular st matrix: St_{n,n} = 1 and for n > k
    St_{n,k} = -sum_{k<=l<n} st_{n,l} St_{l,k}.
    """
    if not 0 <= max_n <= RTILDE_MAX_N:
        raise ValueError(f"max_n must lie in [0, {RTILDE_MAX_N}], got {max_n}")
    r_rows = tuple(
        tuple(rtilde_coefficient(n, k) for k in range(n + 1)) for n in range(max_n + 1)
    )
    s_rows = tuple(
        tuple((-1) ** (n - k) * v for k, v in enumerate(row))
        for n, row in enumerate(r_rows)
    )
    S_rows: list[tuple[Fraction, ...]] = []
    for n in range(max_n + 1):
        row = [Fraction(0)] * (n + 1)
        row[n] = Fraction(1)
        for k in range(n - 1, -1, -1):
            row[k] = -sum(
                (s_rows[n][l] * S_rows[l][k] for l in range(k, n)), Fraction(0)
            )
        # row[0]: St_{n,0} = 0 for n >= 1 because st_{l,0} = 0 there.
        S_rows.append(tuple(row))
    return RTildeTriangle(max_n, r_rows, s_rows, tuple(S_rows))


def stilde_mobius_oracle(n: int, k: int) -> Fraction:
    """St_{n,k} by the alternating chain sum (Moebius inversion), exactly.

    Sums (-1)^l st_{i_l,i_{l-1}} ... st_{i_1,i_0} over all chains
    k = i_0 < i_1 < ... < i_l = n; the 2^(n-k-1) interior subsets bound the
    budget.  St_{n,n} = 1 by the empty-chain convention.
    """
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got n={n}, k={k}")
    if n > MOBIUS_ORACLE_MAX_N:
        raise ValueError(f"chain oracle limited to n <= {MOBIUS_ORACLE_MAX_N}")
    if k == n:
        return Fraction(1)

    def stilde(i: int, j: int) -> Fraction:
        return (-1) ** (i - j) * rtilde_coefficient(i, j)

    interior = list(range(k + 1, n))
    total = Fraction(0)
    for mask in range(1 << len(interior)):
        chain = [k] + [p for b, p in enumerate(interior) if (mask >> b) & 1] + [n]
        l = len(chain) - 1
        prod = Fraction(1)
        for a, b in zip(chain, chain[1:]):
            prod *= stilde(b, a)
        total += (-1) ** l * prod
    return total


@dataclass(frozen=True)
class GroupoidCardinalities:
    """|G|, |G^e| and |G^o| for one (n, k) cell; all exact rationals."""

    g: Fraction
    g_even: Fraction
    g_odd: Fraction


def groupoid_cardinalities(n: int, k: int) -> GroupoidCardinalities:
    """Cardinalities of the weighted-map groupoids behind rt and St.

    |G_{n,k}| has the closed form of rt_{n,k}; the even/odd refinements sum
    multinomially weighted composition terms of n - k:

        sum over (a_1..a_l) of binom(n-k; a_1..a_l)
            prod_i (a_1+...+a_i+k-1)^(2 a_i) / (2^(n-k) (n-k)!)

    restricted to even (respectively odd) part counts l.
    """
    if not 0 < k <= n:
        raise ValueError(f"need 0 < k <= n, got n={n}, k={k}")
    m = n - k
    if m > COMPOSITION_BUDGET:
        raise ValueError(f"composition enumeration limited to n - k <= {COMPOSITION_BUDGET}")
    g = rtilde_coefficient(n, k)
    if m == 0:
        # no compositions of 0 with l >= 1 positive parts
        return GroupoidCardinalities(g, Fraction(0), Fraction(0))
    denom = 2**m * math.factorial(m)
    even = 0
    odd = 0
    m_fact = math.factorial(m)
    for mask in range(1 << (m - 1)):
        parts = []
        current = 1
        for gap in range(m - 1):
            if (mask >> gap) & 1:
                parts.append(current)
                current = 1
            else:
                current += 1
        parts.append(current)
        multinomial = m_fact
        weight = 1
        prefix = k - 1
        for a in parts:
            multinomial //= math.factorial(a)
            prefix += a
            weight *= prefix ** (2 * a)
        term = multinomial * weight
        if len(parts) % 2 == 0:
            even += term
        else:
            odd += term
    return GroupoidCardinalities(g, Fraction(even, denom), Fraction(odd, denom))


def _promote(log_value: float, sign: int, log_scaled: bool) -> float | LogScaled:
    if log_scaled or log_value > LOG_FLOAT_MAX - 1.0:
        return LogScaled(sign, log_value)
    return sign * math.exp(log_value)


def rtilde_poly(x: float, y: float, n: int, log_scaled: bool = False) -> float | LogScaled:
    """Evaluate the coefficient polynomial sum_k rt_{n,k} x^k y^(n-k)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if not log_scaled:
        total = 0.0
        for k in range(n + 1):
            coeff = rtilde_coefficient(n, k)
            if coeff:
                total += float(coeff) * x**k * y ** (n - k)
        return total
    acc = LogScaled(0, float("-inf"))
    lx = LogScaled.from_float(x)
    ly = LogScaled.from_float(y)
    for k in range(n + 1):
        coeff = rtilde_coefficient(n, k)
        if not coeff:
            continue
        c = LogScaled(1, math.log(coeff.numerator) - math.log(coeff.denominator))
        term = c
        if k:
            term = term * LogScaled(lx.sign**k, k * lx.log_magnitude)
        if n - k:
            term = term * LogScaled(ly.sign ** (n - k), (n - k) * ly.log_magnitude)
        acc = acc + term
    return acc


def rtilde_closed(x: float, y: float, n: int, log_scaled: bool = False) -> float | LogScaled:
    """Closed form x^n e_{n-1}(y (n-1)^2 / 2x) of the coefficient polynomial."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if x == 0:
        raise ValueError("x = 0 requires the polynomial form")
    w = y * (n - 1) ** 2 / (2.0 * x)
    if not log_scaled:
        return x**n * e_partial_sum(n, w)
    if x < 0 or w < 0:
        raise ValueError("log-scaled output requires x > 0 and y >= 0")
    log_value = n * math.log(x) + _log_e_partial_sum(n, w)
    return LogScaled(1, log_value)


def _log_e_partial_sum(n: int, w: float) -> float:
    """ln e_{n-1}(w) for w >= 0 by log-sum-exp over the n terms."""
    if w == 0.0:
        return 0.0
    logs = []
    log_term = 0.0
    logs.append(log_term)
    lw = math.log(w)
    for k in range(1, n):
        log_term += lw - math.log(k)
        logs.append(log_term)
    peak = max(logs)
    return peak + math.log(math.fsum(math.exp(v - peak) for v in logs))


def rtilde_ext(x: float, y: float, z: float, log_scaled: bool = False) -> float | LogScaled:
    """Smooth extension x^z e^w Gamma(z, w)/Gamma(z) with w = y (z-1)^2 / 2x.

    Always evaluated through the incomplete-gamma route, so that at integer
    z it provides a path independent of the closed-form sum.
    """
    if x <= 0:
        raise ValueError(f"rtilde_ext requires x > 0, got {x}")
    if y < 0:
        raise ValueError(f"rtilde_ext requires y >= 0, got {y}")
    if z <= 0:
        raise ValueError(f"rtilde_ext requires z > 0, got {z}")
    w = y * (z - 1.0) ** 2 / (2.0 * x)
    log_value = z * math.log(x) + log_e_partial(z, w)
    return _promote(log_value, 1, log_scaled)


def rtilde_series_lower(x: float, y: float, z: float, tol: float = 1e-9) -> SeriesEval:
    """Extension via the alternating lower-incomplete-gamma series.

    x^z e^w (1 - w^z/Gamma(z) * sum_k (-w)^k / ((z+k) k!)), with w as in
    rtilde_ext.  The alternating sum cancels heavily for large w, so the
    converged flag accounts for the round-off floor as well as truncation.
    """
    if x <= 0 or y < 0 or z <= 0:
        raise ValueError("requires x > 0, y >= 0, z > 0")
    w = y * (z - 1.0) ** 2 / (2.0 * x)
    xz = x**z
    if w == 0.0:
        return SeriesEval(xz, 0, 0.0, True)
    if w > 200.0:
        return SeriesEval(float("nan"), 0, float("inf"), False)
    u = 1.0  # (-w)^k / k!
    total = 1.0 / z
    peak = abs(total)
    terms = 0
    for terms in range(1, _MAX_TERMS + 1):
        u *= -w / terms
        term = u / (z + terms)
        total += term
        peak = max(peak, abs(term))
        if abs(u) <= 1e-18 * max(1.0, abs(total)) and terms > w:
            break
    scale = math.exp(z * math.log(w) - math.lgamma(z))
    value = xz * math.exp(w) * (1.0 - scale * total)
    trunc = abs(u) * scale * math.exp(w) * xz
    floor = _EPS * (peak * scale + 1.0) * math.exp(w) * xz
    tail = trunc + floor
    return SeriesEval(value, terms, tail, tail <= tol * max(1.0, abs(value)))


def rtilde_series_upper(x: float, y: float, z: float, tol: float = 1e-9) -> SeriesEval:
    """Extension via the reciprocal-gamma series.

    x^z e^w - x^z w^z sum_k w^k / Gamma(z+k+1); positive terms, but the
    leading difference cancels as e^w outgrows the result for large w.
    """
    if x <= 0 or y < 0 or z <= 0:
        raise ValueError("requires x > 0, y >= 0, z > 0")
    w = y * (z - 1.0) ** 2 / (2.0 * x)
    xz = x**z
    if w == 0.0:
        return SeriesEval(xz, 0, 0.0, True)
    if w > 700.0 or z * math.log(w) > 700.0:
        return SeriesEval(float("nan"), 0, float("inf"), False)
    term = math.exp(-math.lgamma(z + 1.0))
    total = term
    terms = 0
    for terms in range(1, _MAX_TERMS + 1):
        term *= w / (z + terms)
        total += term
        if term <= 1e-18 * total and z + terms > w:
            break
    wz = math.exp(z * math.log(w))
    value = xz * (math.exp(w) - wz * total)
    trunc = xz * wz * term * 2.0
    floor = _EPS * xz * math.exp(w) * 2.0
    tail = trunc + floor
    return SeriesEval(value, terms, tail, tail <= tol * max(1.0, abs(value)))


def cosh_truncated(n: int, u: float) -> float:
    """Truncated even exponential sum_{k<=n} u^(2k) / (2k)!."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    term = 1.0
    total = 1.0
    u2 = u * u
    for k in range(1, n + 1):
        term *= u2 / ((2 * k - 1) * (2 * k))
        total += term
    return total


def gaussian_expectation(y: float, n: int, nodes: int | None = None) -> float:
    """E[2cosh_{2(n-1)}((n-1) sqrt(y) X)] for standard normal X.

    Equals the closed form e_{n-1}(y (n-1)^2 / 2); the integrand is a
    polynomial of degree 2(n-1), so any rule with nodes >= n is exact.
    """
    if y <= 0:
        raise ValueError(f"y must be > 0, got {y}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if nodes is None:
        nodes = max(n, 20)
    if nodes < n:
        raise ValueError(f"need nodes >= n for exactness, got nodes={nodes} < n={n}")
    scale = (n - 1) * math.sqrt(y)
    return gauss_hermite(lambda t: cosh_truncated(n - 1, scale * t), nodes)
