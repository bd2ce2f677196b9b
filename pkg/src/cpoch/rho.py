"""Second continuous analogue of the Pochhammer symbol.

Here the coefficient sum over lattice points is replaced outright by an
integral over the interval:

    rho(x, y, z) = x^z E(y (z-1)^2 / 2x, z - 1),
    E(x, z)      = integral_0^z x^t / Gamma(t+1) dt,
    nu(x)        = integral_0^infinity x^t / Gamma(t+1) dt,

with nu an instance of the classical mu-function
mu(x, beta, alpha) = integral_0^inf x^(alpha+t) t^beta /
(Gamma(alpha+t+1) Gamma(beta+1)) dt.

E has two independent evaluations: the power series
E(x, z) = sum_{n>=1} c_{n-1}(x) z^n / n built from the reciprocal-gamma
coefficients (recentred on unit subintervals past z = 3), and adaptive
quadrature of the integrand.  nu and mu add certified Stirling-type tail
bounds on top of the quadrature.

Recentring detail: on [t0, t0+1] with integer t0 the integrand factors
through the gamma functional equation as

    x^(t0+u) / Gamma(t0+u+1) = x^t0 [sum_n c_n(x) u^n] / ((u+1)...(u+t0)),

so every series argument stays inside [0, 1].  (Taylor-shifting the
coefficient table instead is exact in theory but numerically dead in
binary64: the shifted-coefficient sums carry terms of size ~exp(pi t0 / 2)
that must cancel to reach tiny targets.)
"""

from __future__ import annotations

import math

import numpy as np

from .core import LOG_FLOAT_MAX, ConvergenceError, LogScaled, SeriesEval
from .quadrature import QuadratureError, QuadratureRequest, integrate_adaptive
from .recip_gamma import CoeffTable, c_table, weighted_series_coeffs

__all__ = [
    "e_integrand",
    "E_series",
    "E_quadrature",
    "nu",
    "nu_cutoff",
    "mu_function",
    "rho",
    "E_deriv_z",
]

#: Series window used for single-centre evaluation; beyond it the series is
#: recentred on unit subintervals through the gamma functional equation.
DIRECT_SERIES_LIMIT = 3.0

_E_TABLE_ORDER = 110
_SEGMENT_RULE_NODES = 24  # Gauss-Legendre per unit subinterval
_EPS = 2.220446049250313e-16


def e_integrand(x: float, t: float) -> float:
    """x^t / Gamma(t+1) for x > 0, t >= 0."""
    return math.exp(t * math.log(x) - math.lgamma(t + 1.0)) if x != 1.0 else math.exp(
        -math.lgamma(t + 1.0)
    )


def _segment_rule() -> tuple[tuple[float, ...], tuple[float, ...]]:
    nodes, weights = np.polynomial.legendre.leggauss(_SEGMENT_RULE_NODES)
    return tuple(map(float, nodes)), tuple(map(float, weights))


_SEGMENT_NODES, _SEGMENT_WEIGHTS = None, None


def _horner(coeffs: tuple[float, ...], u: float) -> float:
    value = 0.0
    for c in reversed(coeffs):
        value = value * u + c
    return value


def E_series(x: float, z: float, tol: float = 1e-10) -> SeriesEval:
    """E(x, z) by the coefficient series sum_{n>=1} c_{n-1}(x) z^n / n.

    Single-centre for z <= 3; past that, unit subintervals [t0, t0+1] are
    integrated with the recentred representation
    x^t0 series(u) / ((u+1)...(u+t0)), whose series argument u stays in
    [0, 1].  Agrees with E_quadrature to ~1e-13 relative over the tested
    domain (x <= 50, z <= 30).
    """
    global _SEGMENT_NODES, _SEGMENT_WEIGHTS
    if x <= 0:
        raise ValueError(f"E_series requires x > 0, got {x}")
    if z < 0:
        raise ValueError(f"E_series requires z >= 0, got {z}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if z == 0.0:
        return SeriesEval(0.0, 0, 0.0, True)
    coeffs = weighted_series_coeffs(x, c_table(_E_TABLE_ORDER)).coefficients
    head = min(z, DIRECT_SERIES_LIMIT)
    total = 0.0
    peak = 0.0
    terms = len(coeffs)
    power = head
    for n, c in enumerate(coeffs):
        term = c * power / (n + 1)
        total += term
        peak = max(peak, abs(term))
        power *= head
    trunc = abs(coeffs[-1]) * head ** len(coeffs) * 2.0
    floor = _EPS * peak * 8.0
    if z > DIRECT_SERIES_LIMIT:
        if _SEGMENT_NODES is None:
            _SEGMENT_NODES, _SEGMENT_WEIGHTS = _segment_rule()
        t0 = 3
        while t0 < z:
            length = min(1.0, z - t0)
            half = 0.5 * length
            segment = 0.0
            for node, weight in zip(_SEGMENT_NODES, _SEGMENT_WEIGHTS):
                u = half * (node + 1.0)
                denom = 1.0
                for j in range(1, t0 + 1):
                    denom *= u + j
                segment += weight * _horner(coeffs, u) / denom
            seg_value = x**t0 * segment * half
            total += seg_value
            floor += _EPS * (abs(seg_value) + 1.0) * 8.0
            terms += _SEGMENT_RULE_NODES * len(coeffs)
            t0 += 1
    tail = trunc + floor
    converged = tail <= tol * max(1.0, abs(total))
    return SeriesEval(total, terms, tail, converged)


def E_quadrature(x: float, z: float, tol: float = 1e-10) -> float:
    """E(x, z) by adaptive quadrature of the integrand; the series oracle's
    independent counterpart."""
    if x <= 0:
        raise ValueError(f"E_quadrature requires x > 0, got {x}")
    if z < 0:
        raise ValueError(f"E_quadrature requires z >= 0, got {z}")
    if z == 0.0:
        return 0.0
    value, _ = integrate_adaptive(
        QuadratureRequest(lambda t: e_integrand(x, t), 0.0, z, tolerance=tol)
    )
    return value


def nu_cutoff(x: float, tol: float) -> float:
    """Cutoff Z with a certified tail bound integral_Z^inf x^t/Gamma(t+1) <= tol/2.

    Gamma(t+1) >= (t/e)^t for t >= 1, so the integrand is below (e x / t)^t,
    which is below e^-t once t >= e^2 x; the remaining exponential tail
    integrates to e^-Z.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return max(30.0, math.e**2 * x, -math.log(tol / 2.0) + 1.0)


def nu(x: float, tol: float = 1e-10) -> float:
    """nu(x) = integral_0^inf x^t / Gamma(t+1) dt with certified tail < tol."""
    if x <= 0:
        raise ValueError(f"nu requires x > 0, got {x}")
    cutoff = nu_cutoff(x, tol)
    try:
        return E_quadrature(x, cutoff, tol / 2.0)
    except QuadratureError as exc:
        raise ConvergenceError(f"nu({x}) quadrature failed: {exc}") from exc


def mu_function(x: float, beta: float = 0.0, alpha: float = 0.0, tol: float = 1e-10) -> float:
    """mu(x, beta, alpha): the classical three-parameter transcendent.

    Quadrature over [0, Z] with Z chosen so that the Stirling-type bound
    x^alpha (e x / t)^t t^beta / Gamma(beta+1) certifies a tail below
    tol/2; mu(x, 0, 0) = nu(x).
    """
    if x <= 0:
        raise ValueError(f"mu_function requires x > 0, got {x}")
    if beta < 0 or alpha < 0:
        raise ValueError("beta and alpha must be >= 0")
    if tol <= 0:
        raise ValueError("tol must be positive")
    log_gamma_beta = math.lgamma(beta + 1.0)
    cutoff = max(30.0, math.e**2 * x, 2.0 * beta + 10.0)
    # integrand <= x^alpha t^beta e^-t / Gamma(beta+1) past e^2 x; for
    # Z >= 2 beta the factor t^beta e^-t/2 is decreasing, so the tail is
    # below 2 x^alpha Z^beta e^-Z / Gamma(beta+1).
    def tail_bound(zc: float) -> float:
        return math.exp(
            alpha * math.log(x) + beta * math.log(zc) - zc - log_gamma_beta + math.log(2.0)
        )

    while tail_bound(cutoff) > tol / 2.0:
        cutoff += 10.0
        if cutoff > 10_000.0:
            raise ConvergenceError("mu_function could not certify a tail cutoff")

    def integrand(t: float) -> float:
        if t == 0.0:
            return 0.0 if beta > 0 else math.exp(alpha * math.log(x) - math.lgamma(alpha + 1.0) - log_gamma_beta)
        return math.exp(
            (alpha + t) * math.log(x)
            + beta * math.log(t)
            - math.lgamma(alpha + t + 1.0)
            - log_gamma_beta
        )

    try:
        value, _ = integrate_adaptive(
            QuadratureRequest(integrand, 0.0, cutoff, tolerance=tol / 2.0)
        )
    except QuadratureError as exc:
        raise ConvergenceError(f"mu({x}, {beta}, {alpha}) quadrature failed: {exc}") from exc
    return value


def rho(
    x: float,
    y: float,
    z: float,
    tol: float = 1e-10,
    method: str = "series",
    log_scaled: bool = False,
) -> float | LogScaled:
    """rho(x, y, z) = x^z E(y (z-1)^2 / 2x, z - 1).

    Defined for z > 1; the boundary value rho(x, y, 1) = 0 is accepted by
    continuity.  ``method`` selects the E evaluation: "series" (the
    coefficient machinery, smooth in the parameters) or "quadrature" (the
    independent oracle).
    """
    if x <= 0:
        raise ValueError(f"rho requires x > 0, got {x}")
    if y <= 0:
        raise ValueError(f"rho requires y > 0, got {y}")
    if z < 1:
        raise ValueError(f"rho requires z >= 1, got {z}")
    if z == 1.0:
        return LogScaled(0, float("-inf")) if log_scaled else 0.0
    w = y * (z - 1.0) ** 2 / (2.0 * x)
    if method == "quadrature":
        e_value = E_quadrature(w, z - 1.0, tol)
    elif method == "series":
        result = E_series(w, z - 1.0, tol)
        if not result.converged:
            raise ConvergenceError(
                f"E series did not certify tol={tol} at (x={w}, z={z - 1.0}); "
                f"tail estimate {result.tail_estimate:.3g}"
            )
        e_value = result.value
    else:
        raise ValueError(f"unknown method {method!r}")
    log_value = z * math.log(x) + math.log(e_value)
    if log_scaled or log_value > LOG_FLOAT_MAX - 1.0:
        return LogScaled(1, log_value)
    return x**z * e_value


def E_deriv_z(x: float, z: float, k: int = 1, table: CoeffTable | None = None) -> float:
    """k-th z-derivative of E by the termwise-differentiated series.

    d^k E / dz^k = sum_n (n+1)^(rising k-1) c_{n+k-1}(x) z^n; at k = 1 this
    is the integrand x^z / Gamma(z+1).  Restricted to the validated window
    z <= 3 and k in {1, 2, 3}.
    """
    if x <= 0:
        raise ValueError(f"E_deriv_z requires x > 0, got {x}")
    if not 0.0 <= z <= DIRECT_SERIES_LIMIT:
        raise ValueError(f"z must lie in [0, {DIRECT_SERIES_LIMIT}], got {z}")
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    if table is None:
        table = weighted_series_coeffs(x, c_table(_E_TABLE_ORDER))
    coeffs = table.coefficients
    total = 0.0
    power = 1.0
    for n in range(len(coeffs) - k + 1):
        rising = 1.0
        for j in range(k - 1):
            rising *= n + 1 + j
        total += rising * coeffs[n + k - 1] * power
        power *= z
    return total
