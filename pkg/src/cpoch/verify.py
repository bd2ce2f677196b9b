"""Property-suite runner behind the ``verify`` CLI subcommand.

Each suite re-checks the identities, recursions, bounds and asymptotic
trends of one module against independent oracles (brute-force enumeration,
quadrature, finite differences, exact rational arithmetic).  Results come
back as a structured report: one residual per case, pass/fail per case,
process-level success only if everything passed.

Two upper-bound families are checked in both the published orientation and
a sign-corrected one: the envelope bounds built on "Gamma(t+1) >= e^(gamma
t)".  That inequality is false on 0 < t < ~2.97 (Gamma(1.5) = 0.886 <
e^(gamma/2) = 1.335); the true bound with gamma negated,
Gamma(t+1) >= e^(-gamma t), follows from convexity of ln Gamma(t+1) +
gamma t at its double zero t = 0.  The ``*_as_stated`` cases therefore
fail at small arguments by design, and the ``*_sign_corrected`` companions
pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .core import EULER_GAMMA
from .discrete import (
    pochhammer_discrete,
    power_sum_pair,
    geometric_sum_pair,
    simplex_moment,
    simplex_volume,
    stirling_lattice_oracle,
    stirling_triangle,
)
from .gammafns import (
    e_partial_gamma,
    e_partial_sum,
    gamma,
    gamma_minimum,
    log_e_partial,
    pochhammer_continuous,
    regularized_q,
)
from .quadrature import integrate_simplex
from .recip_gamma import c_composition_oracle, c_of_x, c_table, recip_gamma_series
from .rho import E_deriv_z, E_quadrature, E_series, mu_function, nu, rho
from .rtilde import (
    gaussian_expectation,
    groupoid_cardinalities,
    rtilde_closed,
    rtilde_ext,
    rtilde_series_lower,
    rtilde_series_upper,
    rtilde_poly,
    rtilde_triangle,
    stilde_mobius_oracle,
)

__all__ = ["CaseResult", "VerificationReport", "SUITE_NAMES", "run_suite"]

SUITE_NAMES = ("kernel", "recip", "discrete", "analogue1", "analogue2")

_FD_STEP = 1e-6
_FD_TOL = 1e-5


@dataclass(frozen=True)
class CaseResult:
    suite: str
    case_id: str
    inputs: dict
    expected: str
    actual: str
    residual: float
    passed: bool


@dataclass
class VerificationReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def counts(self) -> tuple[int, int]:
        good = sum(1 for c in self.cases if c.passed)
        return good, len(self.cases)


class _Collector:
    def __init__(self, suite: str, tol_scale: float):
        self.suite = suite
        self.tol_scale = tol_scale
        self.cases: list[CaseResult] = []

    def close(self, case_id, inputs, expected, actual, tol):
        """Residual |expected - actual| scaled by max(1, |expected|)."""
        resid = abs(expected - actual) / max(1.0, abs(expected))
        self.add(case_id, inputs, f"{expected:.17g}", f"{actual:.17g}", resid, tol)

    def exact(self, case_id, inputs, expected, actual):
        ok = expected == actual
        self.cases.append(
            CaseResult(
                self.suite, case_id, inputs, str(expected), str(actual),
                0.0 if ok else float("inf"), ok,
            )
        )

    def add(self, case_id, inputs, expected, actual, residual, tol):
        limit = tol * self.tol_scale
        self.cases.append(
            CaseResult(
                self.suite, case_id, inputs, str(expected), str(actual),
                residual, residual <= limit,
            )
        )

    def holds(self, case_id, inputs, ok, detail=""):
        self.cases.append(
            CaseResult(
                self.suite, case_id, inputs, "holds", detail or str(ok),
                0.0 if ok else float("inf"), bool(ok),
            )
        )


def _central_diff(f, x, h=_FD_STEP):
    return (f(x + h) - f(x - h)) / (2.0 * h)


# ----------------------------------------------------------------- kernel


def _suite_kernel(tol_scale: float) -> list[CaseResult]:
    col = _Collector("kernel", tol_scale)

    for z in (0.1, 0.5, 1.7, 10.3, 50.5):
        col.close("gamma_recurrence", {"z": z}, z * gamma(z), gamma(z + 1.0), 1e-12)

    z_grid = (0.5, 1.0, 2.0, 5.0, 20.0)
    x_grid = (0.0, 0.5, 1.0, 3.0, 10.0, 30.0)
    monotone_x = all(
        regularized_q(z, a).value >= regularized_q(z, b).value - 1e-13
        for z in z_grid
        for a, b in zip(x_grid, x_grid[1:])
    )
    col.holds("q_nonincreasing_in_x", {"z": z_grid, "x": x_grid}, monotone_x)
    monotone_z = all(
        regularized_q(za, x).value <= regularized_q(zb, x).value + 1e-13
        for x in x_grid
        for za, zb in zip(z_grid, z_grid[1:])
    )
    col.holds("q_nondecreasing_in_z", {"z": z_grid, "x": x_grid}, monotone_z)

    worst = 0.0
    for n in range(1, 31):
        for x in (0.1, 1.0, 5.0, 20.0, 40.0):
            a = e_partial_sum(n, x)
            b = e_partial_gamma(float(n), x)
            worst = max(worst, abs(a - b) / abs(a))
    col.add("e_partial_two_paths", {"n": "1..30", "x": "(0, 40]"},
            "0", f"{worst:.3e}", worst, 1e-10)

    z = 100.0
    stirling_main = 0.5 * math.log(2 * math.pi) - z + (z - 0.5) * math.log(z)
    dev = abs(math.lgamma(z) - stirling_main)
    col.add("stirling_asymptotic", {"z": z}, "0", f"{dev:.3e}", dev, math.log(1.01))

    devs = []
    x, y = 2.0, 1.0
    for z in (50.0, 100.0, 200.0):
        a = x / y
        log_r = z * math.log(y) + math.lgamma(a + z) - math.lgamma(a)
        log_asym = (
            0.5 * math.log(2 * math.pi) - math.lgamma(a)
            + z * math.log(y) - z + (z + a - 0.5) * math.log(z)
        )
        devs.append(abs(log_r - log_asym))
    col.holds("pochhammer_asymptote_trend", {"x": x, "y": y, "z": (50, 100, 200)},
              devs[0] > devs[1] > devs[2], f"log devs {devs}")

    return col.cases


# ------------------------------------------------------------------ recip


def _suite_recip(tol_scale: float) -> list[CaseResult]:
    col = _Collector("recip", tol_scale)
    table = c_table(80)

    worst = max(abs(c_composition_oracle(n) - table[n]) for n in range(1, 16))
    col.add("c_recursion_vs_compositions", {"n": "1..15"},
            "0", f"{worst:.3e}", worst, 1e-10)

    worst = 0.0
    for t in (-0.5, -0.25, 0.0, 0.3, 1.0, 1.7, 2.5, 3.0):
        err = abs(recip_gamma_series(t, table).value - 1.0 / math.gamma(t + 1.0))
        worst = max(worst, err)
    col.add("series_vs_gamma", {"t": "8-point grid", "N": 80},
            "0", f"{worst:.3e}", worst, 1e-12)

    col.holds("c80_decay", {"n": 80}, abs(table[80]) < 1e-12, f"|c_80| = {abs(table[80]):.3e}")

    x = 2.0
    worst = 0.0
    for k in (1, 2):
        for t in (0.2, 1.1):
            series = E_deriv_z(x, t, k + 1)  # k-th derivative of the integrand
            if k == 1:
                fd = _central_diff(lambda s: x**s / math.gamma(s + 1.0), t)
            else:
                # second differences need a coarser step: rounding grows as eps/h^2
                h = 1e-4
                fd = (
                    x ** (t + h) / math.gamma(t + h + 1.0)
                    - 2.0 * x**t / math.gamma(t + 1.0)
                    + x ** (t - h) / math.gamma(t - h + 1.0)
                ) / h**2
            worst = max(worst, abs(series - fd) / max(1.0, abs(series)))
    col.add("weighted_derivative_series", {"x": x, "k": (1, 2), "t": (0.2, 1.1)},
            "0", f"{worst:.3e}", worst, 1e-6)

    h = 1e-5
    fd = (c_of_x(3, 2.0 + h, table) - c_of_x(3, 2.0 - h, table)) / (2.0 * h)
    target = c_of_x(2, 2.0, table) / 2.0
    col.add("coefficient_x_derivative", {"n": 3, "x": 2.0},
            f"{target:.12e}", f"{fd:.12e}", abs(fd - target), 1e-7)

    return col.cases


# --------------------------------------------------------------- discrete


def _suite_discrete(tol_scale: float) -> list[CaseResult]:
    col = _Collector("discrete", tol_scale)
    first = stirling_triangle("first_unsigned", 12)
    second = stirling_triangle("second", 12)

    ok = all(
        first.value(n, k) == stirling_lattice_oracle(n, k)
        for n in range(10)
        for k in range(n + 1)
    )
    col.holds("triangle_vs_lattice_oracle", {"n": "0..9"}, ok)

    ok = all(sum(first.row(n)) == math.factorial(n) for n in range(11))
    col.holds("row_sums_factorial", {"n": "0..10"}, ok)

    ok = all(
        sum(first.value(n, k) * 2 ** (n - k) for k in range(n + 1))
        == pochhammer_discrete(1, 2, n)
        for n in range(13)
    )
    col.holds("double_factorial_rows", {"n": "0..12"}, ok)

    ok = True
    for n in range(11):
        for x in range(-3, 4):
            xf = Fraction(x)
            rhs = sum(
                second.value(n, k) * pochhammer_discrete(xf, Fraction(-1), k)
                for k in range(n + 1)
            )
            if rhs != xf**n:
                ok = False
    col.holds("powers_from_falling_factorials", {"n": "0..10", "x": "-3..3"}, ok)

    ok = all(
        simplex_moment(Fraction(p, q), k)
        == pochhammer_discrete(1, 2, k) * Fraction(p, q) ** (2 * k) / math.factorial(2 * k)
        for p, q in ((1, 2), (3, 1), (7, 5))
        for k in range(8)
    )
    col.holds("moment_double_factorial_form", {"k": "0..7"}, ok)

    ok = all(
        pochhammer_discrete(n, -1, n) == math.factorial(n) for n in range(16)
    )
    col.holds("falling_factorial_is_factorial", {"n": "0..15"}, ok)

    worst = 0.0
    for k in range(6):
        for x in (0.5, 1.0, 2.0):
            vol = integrate_simplex(k, x, moment=False)
            mom = integrate_simplex(k, x, moment=True)
            worst = max(worst, abs(vol - simplex_volume(x, k)) / max(1.0, simplex_volume(x, k)))
            worst = max(worst, abs(mom - simplex_moment(x, k)) / max(1.0, simplex_moment(x, k)))
    col.add("simplex_quadrature_vs_closed_forms", {"k": "0..5", "x": (0.5, 1, 2)},
            "0", f"{worst:.3e}", worst, 1e-7)

    ratio = power_sum_pair(10_000, 2).ratio
    col.add("power_sum_ratio_limit", {"n": 10_000, "k": 2},
            "1", f"{ratio:.8f}", abs(ratio - 1.0), 2e-4)

    # The ratio decays only like 1/ln(x), so the 0.01 mark needs x ~ e^100.
    ratios = [
        geometric_sum_pair(x, 2.0).continuous / geometric_sum_pair(x, 2.0).discrete
        for x in (1e2, 1e6, 1e50)
    ]
    col.holds("geometric_ratio_decreasing", {"x": "1e2,1e6,1e50", "y": 2},
              ratios[0] > ratios[1] > ratios[2], f"ratios {[f'{r:.3e}' for r in ratios]}")
    col.add("geometric_ratio_limit", {"x": 1e50, "y": 2},
            "0", f"{ratios[2]:.3e}", ratios[2], 0.01)

    return col.cases


# -------------------------------------------------------------- analogue1


def _suite_analogue1(tol_scale: float) -> list[CaseResult]:
    col = _Collector("analogue1", tol_scale)
    grid = (0.5, 1.0, 2.0)

    worst = 0.0
    for n in range(2, 13):
        for x in grid:
            for y in grid:
                lhs = rtilde_closed(x, y, n + 1)
                rhs = x * rtilde_closed(x, n**2 / (n - 1) ** 2 * y, n) + n ** (2 * n) * x * y**n / (
                    2**n * math.factorial(n)
                )
                worst = max(worst, abs(lhs - rhs) / abs(lhs))
    col.add("order_recursion", {"n": "2..12", "x,y": grid}, "0", f"{worst:.3e}", worst, 1e-10)

    worst = 0.0
    for n in range(3, 9):
        for x in grid:
            for y in grid:
                shrunk = (n - 1) ** 2 / (n - 2) ** 2 * y
                fd_x = _central_diff(lambda s: rtilde_closed(s, y, n), x)
                rhs = n * rtilde_closed(x, y, n) - (n - 1) ** 2 * y / 2.0 * rtilde_closed(x, shrunk, n - 1)
                worst = max(worst, abs(x * fd_x - rhs) / max(1.0, abs(rhs)))
                fd_y = _central_diff(lambda s: rtilde_closed(x, s, n), y)
                rhs_y = (n - 1) ** 2 / 2.0 * rtilde_closed(x, shrunk, n - 1)
                worst = max(worst, abs(fd_y - rhs_y) / max(1.0, abs(rhs_y)))
    col.add("scale_derivative_identities", {"n": "3..8", "x,y": grid},
            "0", f"{worst:.3e}", worst, _FD_TOL)

    worst = 0.0
    for y in (0.5, 1.0, 2.0):
        worst = max(worst, abs(e_partial_sum(60, y) - math.exp(y)))
    col.add("reduced_limit_to_exp", {"n": 60, "y": (0.5, 1, 2)},
            "0", f"{worst:.3e}", worst, 1e-12)

    def log_dev_seq(kind):
        devs = []
        if kind == "a":  # fixed y, z -> infinity
            y = 15.0
            for z in (20.0, 40.0, 80.0):
                lhs = math.exp(y) * regularized_q(z, y).value
                rhs = math.exp(y) - math.exp(z * math.log(y) - math.lgamma(z + 1.0))
                devs.append(abs(math.log(lhs) - math.log(rhs)))
        elif kind == "b":  # fixed z, y -> infinity
            z = 6.0
            for y in (50.0, 100.0, 200.0):
                lhs = log_e_partial(z, y)
                rhs = (z - 1.0) * math.log(y) - math.lgamma(z)
                devs.append(abs(lhs - rhs))
        elif kind == "c":
            x = 12.0
            for z in (20.0, 40.0, 80.0):
                lhs = math.exp(x) * regularized_q(z, x).value
                rhs = math.exp(x) - math.exp(z * math.log(x) - math.lgamma(z + 1.0))
                devs.append(abs(math.log(lhs) - math.log(rhs)))
        elif kind == "d":
            z = 6.0
            for x in (50.0, 100.0, 200.0):
                lhs = (1.0 - z) * math.log(x) + log_e_partial(z, x)
                rhs = -math.lgamma(z)
                devs.append(abs(lhs - rhs))
        else:  # "e": along the diagonal
            for z in (20.0, 40.0, 80.0):
                lhs = math.log(regularized_q(z, z).value)
                devs.append(abs(lhs - math.log(0.5)))
        return devs

    for kind in "abcde":
        devs = log_dev_seq(kind)
        col.holds(f"asymptote_trend_{kind}", {"points": 3},
                  devs[0] > devs[1] >= devs[2], f"log devs {[f'{d:.3e}' for d in devs]}")

    tri = rtilde_triangle(12)
    ok = all(
        sum(tri.s_rows[n][l] * tri.S_rows[l][k] for l in range(k, n + 1))
        == (1 if n == k else 0)
        for n in range(13)
        for k in range(n + 1)
    )
    col.holds("exact_inversion", {"n": "0..12"}, ok)

    ok = all(
        stilde_mobius_oracle(n, k) == tri.S(n, k)
        for n in range(1, 13)
        for k in range(1, n + 1)
    )
    col.holds("mobius_chain_oracle", {"n": "1..12"}, ok)

    ok = True
    for n in range(1, 11):
        for k in range(1, n + 1):
            cards = groupoid_cardinalities(n, k)
            if cards.g != tri.r(n, k):
                ok = False
            if n > k and (-1) ** (n - k) * (cards.g_even - cards.g_odd) != tri.S(n, k):
                ok = False
    col.holds("groupoid_identity", {"n": "1..10"}, ok)

    ok = True
    for n in range(2, 11):
        for k in range(1, n):
            m = n - k
            cards = groupoid_cardinalities(n, k)
            bound = Fraction((n - 1) ** (2 * m) * power_sum_pair(m, m).discrete,
                             2**m * math.factorial(m))
            if cards.g_even + cards.g_odd > bound:
                ok = False
    col.holds("composition_sum_bound", {"n": "2..10"}, ok)

    worst = 0.0
    for n in range(1, 13):
        for x in (0.5, 1.0, 2.0):
            for y in (0.5, 1.0, 2.0):
                closed = rtilde_closed(x, y, n)
                poly = rtilde_poly(x, y, n)
                ext = rtilde_ext(x, y, float(n))
                worst = max(worst, abs(poly - closed) / abs(closed))
                worst = max(worst, abs(ext - closed) / abs(closed))
    col.add("extension_consistency", {"n": "1..12", "x,y": grid},
            "0", f"{worst:.3e}", worst, 1e-10)

    worst = 0.0
    compared = 0
    for n in range(1, 13):
        for x in (0.5, 1.0, 2.0):
            for y in (0.5, 1.0, 2.0):
                lo = rtilde_series_lower(x, y, float(n), tol=1e-9)
                hi = rtilde_series_upper(x, y, float(n), tol=1e-9)
                if lo.converged and hi.converged:
                    compared += 1
                    worst = max(worst, abs(lo.value - hi.value) / max(1.0, abs(hi.value)))
    col.add("series_forms_mutual", {"compared": compared},
            "0", f"{worst:.3e}", worst, 1e-9)
    col.holds("series_forms_region_nonempty", {"compared": compared}, compared >= 10)

    worst = 0.0
    for n in range(1, 11):
        for y in (0.3, 1.0, 2.5):
            expected = rtilde_closed(1.0, y, n)
            got = gaussian_expectation(y, n)
            worst = max(worst, abs(got - expected) / abs(expected))
    col.add("gaussian_expectation", {"n": "1..10", "y": (0.3, 1, 2.5)},
            "0", f"{worst:.3e}", worst, 1e-9)

    ok = True
    for x in (0.7, 1.0, 2.5, 4.0):
        for y in (0.25, 1.0, 3.0):
            for z in (1.3, 2.0, 4.7, 9.5):
                w = y * (z - 1.0) ** 2 / (2.0 * x)
                if rtilde_ext(x, y, z) > x**z * math.exp(w) * (1.0 + 1e-12):
                    ok = False
    col.holds("upper_envelope", {"grid": "4x3x4"}, ok)

    x, y, z = 2.0, 3.0, 2.5
    a = rtilde_ext(x, y, z)
    b = y**z * rtilde_ext(x / y, 1.0, z)
    col.add("scaling_identity", {"x": x, "y": y, "z": z},
            f"{a:.15e}", f"{b:.15e}", abs(a - b) / abs(a), 1e-11)

    return col.cases


# -------------------------------------------------------------- analogue2


def _e_gamma() -> float:
    return math.exp(EULER_GAMMA)


def _suite_analogue2(tol_scale: float) -> list[CaseResult]:
    col = _Collector("analogue2", tol_scale)
    eg = _e_gamma()
    _, m_min = gamma_minimum()
    slack = (1.0 - m_min) / m_min

    worst = 0.0
    for x in (0.3, 1.0, eg, 4.0):
        for z in (0.5, 2.0, 5.0, 10.0):
            s = E_series(x, z, 1e-10)
            q = E_quadrature(x, z, 1e-12)
            worst = max(worst, abs(s.value - q) / abs(q))
    col.add("series_vs_quadrature", {"x": "4-point", "z": "4-point"},
            "0", f"{worst:.3e}", worst, 1e-8)

    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        for y in (0.5, 1.0, 2.0):
            for z in (1.5, 2.5, 4.0):
                r0 = rho(x, y, z, 1e-12)
                dx = _central_diff(lambda s: rho(s, y, z, 1e-12), x)
                dy = _central_diff(lambda s: rho(x, s, z, 1e-12), y)
                resid = abs(x * dx + y * dy - z * r0) / max(1.0, abs(z * r0))
                worst = max(worst, resid)
    col.add("euler_identity", {"x,y": "{0.5,1,2}", "z": "{1.5,2.5,4}"},
            "0", f"{worst:.3e}", worst, _FD_TOL)

    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        for y in (0.5, 1.0, 2.0):
            for z in (1.5, 2.5, 4.0):
                w = y * (z - 1.0) ** 2 / (2.0 * x)
                zz = z - 1.0
                series = 0.0
                coeffs = _weighted(w)
                power = zz**2
                for n in range(2, len(coeffs) + 2):
                    series += coeffs[n - 2] * power / n
                    power *= zz
                series *= x**z
                fd = y * _central_diff(lambda s: rho(x, s, z, 1e-12), y)
                worst = max(worst, abs(fd - series) / max(1.0, abs(series)))
    col.add("y_derivative_series", {"grid": "3x3x3"}, "0", f"{worst:.3e}", worst, _FD_TOL)

    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        for y in (0.5, 1.0, 2.0):
            for z in (1.5, 2.5, 4.0):
                w = y * (z - 1.0) ** 2 / (2.0 * x)
                coeffs = _weighted(w)
                tail = 0.0
                power = 1.0
                for n in range(len(coeffs)):
                    tail += coeffs[n] * power
                    power *= z - 1.0
                dy = _central_diff(lambda s: rho(x, s, z, 1e-12), y)
                rhs = math.log(x) * rho(x, y, z, 1e-12) + 2.0 * y / (z - 1.0) * dy + x**z * tail
                dz = _central_diff(lambda s: rho(x, y, s, 1e-12), z)
                worst = max(worst, abs(dz - rhs) / max(1.0, abs(rhs)))
    col.add("z_derivative_identity", {"grid": "3x3x3"}, "0", f"{worst:.3e}", worst, _FD_TOL)

    # Envelope bounds built on Gamma(t+1) >= e^(gamma t): published orientation
    # (fails at small z; the inequality is false below t ~ 2.97) and the
    # convexity-backed orientation Gamma(t+1) >= e^(-gamma t) (holds).
    ok_stated = True
    detail = []
    for z in (0.5, 1.0, 2.0, 5.0):
        val = E_series(eg, z, 1e-10).value
        if val > z:
            ok_stated = False
            detail.append(f"E(e^g,{z})={val:.4f}>{z}")
    col.holds("linear_envelope_as_stated", {"z": (0.5, 1, 2, 5)}, ok_stated, "; ".join(detail) or "holds")
    ok_fixed = all(E_series(math.exp(-EULER_GAMMA), z, 1e-10).value <= z for z in (0.5, 1.0, 2.0, 5.0))
    col.holds("linear_envelope_sign_corrected", {"z": (0.5, 1, 2, 5)}, ok_fixed)

    ok_stated = True
    detail = []
    for z in (2.0, 3.0, 5.0, 10.0):
        lhs = rho(math.exp(-EULER_GAMMA), 2.0 / (z - 1.0) ** 2, z, 1e-12)
        if lhs > (z - 1.0) * math.exp(-EULER_GAMMA * z):
            ok_stated = False
            detail.append(f"z={z}")
    col.holds("rho_envelope_as_stated", {"z": (2, 3, 5, 10)}, ok_stated, "; ".join(detail) or "holds")
    ok_fixed = all(
        rho(eg, 2.0 / (z - 1.0) ** 2, z, 1e-12) <= (z - 1.0) * math.exp(EULER_GAMMA * z) * (1 + 1e-12)
        for z in (2.0, 3.0, 5.0, 10.0)
    )
    col.holds("rho_envelope_sign_corrected", {"z": (2, 3, 5, 10)}, ok_fixed)

    ok_stated = True
    detail = []
    for x in (0.5, 2.0, math.e, 5.0):
        for z in (2.0, 3.0, 5.0, 10.0):
            lhs = rho(x, 2.0 / (z - 1.0) ** 2, z, 1e-12)
            bound = (x**z - x * math.exp(EULER_GAMMA * (1.0 - z))) / (math.log(x) + EULER_GAMMA)
            if lhs > bound:
                ok_stated = False
                detail.append(f"(x={x:.3g},z={z:g})")
    col.holds("rho_ratio_envelope_as_stated", {"x": "4-pt", "z": "4-pt"},
              ok_stated, "; ".join(detail) or "holds")
    ok_fixed = True
    for x in (0.5, 2.0, math.e, 5.0):
        for z in (2.0, 3.0, 5.0, 10.0):
            lhs = rho(x, 2.0 / (z - 1.0) ** 2, z, 1e-12)
            bound = (x**z - x * math.exp(EULER_GAMMA * (z - 1.0))) / (math.log(x) - EULER_GAMMA)
            if lhs > bound * (1 + 1e-12):
                ok_fixed = False
    col.holds("rho_ratio_envelope_sign_corrected", {"x": "4-pt", "z": "4-pt"}, ok_fixed)

    ok = True
    for x in (0.3, 0.9, 1.0, 1.5, 4.0):
        for z in (2.2, 3.7, 6.5):
            e_val = E_quadrature(x, z, 1e-12)
            fl, ce = math.floor(z), math.ceil(z)
            if x >= 1.0:
                lower = (e_partial_sum(fl + 1, x) - 1.0) / x
                upper = x * (e_partial_sum(ce, x) + slack)
            else:
                lower = e_partial_sum(fl + 1, x) - 1.0
                upper = e_partial_sum(ce, x) + slack
            if not lower <= e_val * (1 + 1e-12) or not e_val <= upper * (1 + 1e-12):
                ok = False
    col.holds("sandwich_bounds", {"x": "5-pt", "z": "3-pt"}, ok)

    ok = True
    for y, is_big in ((2.0, True), (0.5, False)):
        e_val = E_quadrature(y, 39.0, 1e-12)
        if is_big:
            lo, hi = (math.exp(y) - 1.0) / y, y * (math.exp(y) + slack)
        else:
            lo, hi = math.exp(y) - 1.0, math.exp(y) + slack
        if not lo <= e_val <= hi:
            ok = False
    col.holds("limit_bounds", {"n": 40, "y": (0.5, 2)}, ok)

    ok = True
    for n in range(3, 13):
        for x in (1.0, 2.0):
            for y in (0.5, 1.0, 2.0):
                if (n - 1) ** 2 * y >= 2.0 * x >= 2.0:
                    lhs = x * rho(x, y, float(n), 1e-12)
                    rhs = n**2 * y * rtilde_closed(x, y, n)
                    if lhs > rhs * (1 + 1e-12):
                        ok = False
    col.holds("cross_bound_rho_rtilde", {"n": "3..12"}, ok)

    ok = True
    for n in (10, 20, 40):
        for y in (1.0, 2.0):
            log_rho_reduced = math.log(E_quadrature(y, n - 1.0, 1e-12))
            # rho((n-1)^2, 2y, n) <= 10 n^(2n), compared in log space
            if log_rho_reduced + 2 * n * math.log(n - 1.0) > math.log(10.0) + 2 * n * math.log(n):
                ok = False
        e_big = E_quadrature(float(n), n - 1.0, 1e-10)
        if math.log(e_big) > math.log(10.0) + math.log(n) + n:
            ok = False
    col.holds("asymptotic_envelopes", {"n": (10, 20, 40), "constant": 10}, ok)

    ok = True
    s_grid = (0.1, 0.5, 1.0, 2.0)
    for s in s_grid:
        vals = [E_quadrature(math.exp(-s), z, 1e-12) for z in (1.0, 2.0, 4.0, 8.0)]
        if any(b < a - 1e-13 for a, b in zip(vals, vals[1:])):
            ok = False
    nus = [nu(math.exp(-s), 1e-11) for s in s_grid]
    if any(b >= a for a, b in zip(nus, nus[1:])):
        ok = False
    col.holds("laplace_monotonicity", {"s": s_grid}, ok)

    col.close("integrand_derivative", {"x": 1.3, "z": 0.8},
              1.3**0.8 / math.gamma(1.8), E_deriv_z(1.3, 0.8, 1), 1e-9)
    fd = _central_diff(lambda s: E_deriv_z(2.0, s, 1), 1.5)
    col.close("second_derivative_fd", {"x": 2.0, "z": 1.5}, fd, E_deriv_z(2.0, 1.5, 2), 1e-6)

    nu1 = nu(1.0, 1e-10)
    col.close("mu_reduces_to_nu", {"x": 1.0}, nu1, mu_function(1.0, 0.0, 0.0, 1e-10), 1e-8)
    col.close("mu_is_tail_of_nu", {"x": 1.5, "z": 2.0},
              nu(1.5, 1e-11) - E_quadrature(1.5, 2.0, 1e-11),
              mu_function(1.5, 0.0, 2.0, 1e-10), 1e-8)
    a = mu_function(1.0, 1.0, 0.0, 1e-10)
    b = _mu_with_extra_cutoff(1.0, 1.0, 0.0, 1e-10, extra=10.0)
    col.close("mu_cutoff_consistency", {"x": 1.0, "beta": 1.0}, a, b, 1e-9)

    v2 = nu(2.0, 1e-10)
    col.holds("nu_lower_bound", {"x": 2.0}, v2 >= (math.e**2 - 1.0) / 2.0, f"nu(2) = {v2:.6f}")
    v = nu(0.5, 1e-10)
    ok = math.exp(0.5) - 1.0 <= v <= math.exp(0.5) + slack
    col.holds("nu_bracket", {"x": 0.5}, ok, f"nu(0.5) = {v:.6f}")

    return col.cases


def _weighted(x: float):
    from .recip_gamma import weighted_series_coeffs

    return weighted_series_coeffs(x, c_table(110)).coefficients


def _mu_with_extra_cutoff(x, beta, alpha, tol, extra):
    """mu with the certified cutoff pushed out; self-consistency oracle."""
    from .quadrature import QuadratureRequest, integrate_adaptive

    base = max(30.0, math.e**2 * x, 2.0 * beta + 10.0) + extra
    log_gamma_beta = math.lgamma(beta + 1.0)

    def integrand(t):
        if t == 0.0:
            return 0.0 if beta > 0 else math.exp(alpha * math.log(x) - math.lgamma(alpha + 1.0))
        return math.exp(
            (alpha + t) * math.log(x) + beta * math.log(t)
            - math.lgamma(alpha + t + 1.0) - log_gamma_beta
        )

    value, _ = integrate_adaptive(QuadratureRequest(integrand, 0.0, base, tolerance=tol / 2.0))
    return value


_SUITES = {
    "kernel": _suite_kernel,
    "recip": _suite_recip,
    "discrete": _suite_discrete,
    "analogue1": _suite_analogue1,
    "analogue2": _suite_analogue2,
}


def run_suite(name: str, tol_scale: float = 1.0) -> VerificationReport:
    """Run one property suite (or 'all'); deterministic case ordering."""
    if tol_scale <= 0:
        raise ValueError("tol_scale must be positive")
    if name == "all":
        report = VerificationReport("all")
        for suite in SUITE_NAMES:
            report.cases.extend(_SUITES[suite](tol_scale))
        return report
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return VerificationReport(name, _SUITES[name](tol_scale))
