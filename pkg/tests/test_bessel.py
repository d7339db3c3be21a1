import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from sigeom import (
    EULER_GAMMA,
    BesselKind,
    DomainError,
    NonConvergenceError,
    PrecisionLossWarning,
    SeriesConfig,
    bessel_i0,
    bessel_j,
    bessel_j0,
    bessel_k0,
    bessel_y0,
    gamma,
    harmonic,
    jp_pair_solution,
    modified_pair_solution,
    ode_residual,
    pochhammer,
)
from sigeom.bessel import i0_jet, j0_jet, jp_jet, k0_jet, y0_jet

# step for finite-difference residual checks; large arguments need the
# x-proportional cap to keep the log-singular functions resolved near 0
def _fd_step(x):
    return min(8e-3, x / 80.0)


# ----------------------------------------------------------------------
# gamma / pochhammer / harmonic


def test_gamma_small_integers():
    assert gamma(5.0) == pytest.approx(24.0, rel=1e-13)
    assert gamma(1.0) == pytest.approx(1.0, rel=1e-13)
    for n in range(2, 15):
        assert gamma(float(n)) == pytest.approx(math.factorial(n - 1), rel=1e-12)


def _gamma_quadrature(x):
    # the integrand has an integrable singularity q^(x-1) at 0 for x < 1;
    # hand that factor to the algebraic-weight rule and integrate the rest
    if x < 1.0:
        head, _ = quad(lambda q: math.exp(-q), 0.0, 1.0,
                       weight="alg", wvar=(x - 1.0, 0.0), epsabs=0.0, epsrel=1e-13)
        tail, _ = quad(lambda q: math.exp(-q) * q ** (x - 1.0), 1.0, math.inf,
                       epsabs=0.0, epsrel=1e-13, limit=300)
        return head + tail
    val, _ = quad(lambda q: math.exp(-q) * q ** (x - 1.0), 0.0, math.inf,
                  epsabs=0.0, epsrel=1e-13, limit=300)
    return val


@pytest.mark.parametrize("x", [0.5, 0.25, 1.5, 3.7, 10.3, 20.0, 37.5, 50.0])
def test_gamma_against_quadrature(x):
    assert gamma(x) == pytest.approx(_gamma_quadrature(x), rel=1e-12)


def test_gamma_half():
    assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)


def test_gamma_reflection_negative():
    # Gamma(-0.5) = -2 sqrt(pi)
    assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-12)


def test_gamma_poles():
    for x in (0.0, -1.0, -7.0):
        with pytest.raises(DomainError):
            gamma(x)


@given(st.floats(min_value=0.1, max_value=48.0, allow_nan=False))
@settings(max_examples=200)
def test_gamma_recurrence(x):
    assert gamma(x + 1.0) == pytest.approx(x * gamma(x), rel=1e-12)


def test_pochhammer_examples():
    assert pochhammer(2.7, 0) == 1.0
    assert pochhammer(-3.1, 0) == 1.0
    assert pochhammer(3.0, 2) == 12.0
    assert pochhammer(1.5, 3) == pytest.approx(13.125, rel=1e-14)


@given(st.floats(min_value=0.1, max_value=20.0), st.integers(min_value=0, max_value=10))
@settings(max_examples=200)
def test_pochhammer_gamma_ratio(k, n):
    assert pochhammer(k, n) == pytest.approx(gamma(k + n) / gamma(k), rel=1e-10)


def test_harmonic_examples():
    assert harmonic(0) == 0.0
    assert harmonic(1) == 1.0
    assert harmonic(4) == pytest.approx(25.0 / 12.0, rel=1e-15)


def test_harmonic_euler_limit():
    n = 10**6
    assert abs(harmonic(n) - math.log(n) - EULER_GAMMA) < 1e-6


# ----------------------------------------------------------------------
# order-zero values against exact rational partial sums


def _j0_fraction(x_num, x_den, terms=40):
    # exact partial sum of sum (-1)^n (x/2)^(2n) / (n!)^2 for rational x
    q = Fraction(x_num, x_den) ** 2 / 4
    acc = Fraction(0)
    t = Fraction(1)
    for n in range(terms):
        acc += t
        t = -t * q / Fraction((n + 1) * (n + 1))
    return acc


def _i0_fraction(x_num, x_den, terms=40):
    q = Fraction(x_num, x_den) ** 2 / 4
    acc = Fraction(0)
    t = Fraction(1)
    for n in range(terms):
        acc += t
        t = t * q / Fraction((n + 1) * (n + 1))
    return acc


def test_j0_exact_oracle():
    assert bessel_j0(0.0) == 1.0
    assert bessel_j0(1.0) == pytest.approx(float(_j0_fraction(1, 1)), abs=5e-16)
    assert bessel_j0(1.0) == pytest.approx(0.7651976866, abs=1e-10)
    assert bessel_j0(2.5) == pytest.approx(float(_j0_fraction(5, 2)), abs=5e-16)


def test_i0_exact_oracle():
    assert bessel_i0(0.0) == 1.0
    assert bessel_i0(2.0) == pytest.approx(float(_i0_fraction(2, 1)), abs=1e-15)
    assert bessel_i0(2.0) == pytest.approx(2.2795853023, abs=1e-10)


@given(st.floats(min_value=0.0, max_value=10.0))
@settings(max_examples=100)
def test_i0_even_and_at_least_one(x):
    assert bessel_i0(-x) == bessel_i0(x)
    assert bessel_i0(x) >= 1.0


def test_i0_monotone():
    xs = [0.1 * k for k in range(101)]
    vals = [bessel_i0(x) for x in xs]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_j0_bounded_and_oscillating():
    xs = [0.05 * k for k in range(201)]
    vals = [bessel_j0(x) for x in xs]
    assert max(abs(v) for v in vals) <= 1.0
    assert min(vals) < -0.3  # it does go negative on [0, 10]


def test_j0_first_zero_by_bisection():
    lo, hi = 2.0, 3.0
    flo = bessel_j0(lo)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = bessel_j0(mid)
        if (flo > 0) == (fm > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    assert 0.5 * (lo + hi) == pytest.approx(2.404825558, abs=1e-7)
    assert abs(bessel_j0(2.4048255577)) < 1e-9


def test_truncation_monotonicity():
    loose = SeriesConfig(rel_tol=1e-8)
    tight = SeriesConfig(rel_tol=1e-14)
    for x in (0.5, 2.0, 5.0, 8.5, 10.0):
        assert abs(bessel_j0(x, loose) - bessel_j0(x, tight)) < 1e-7


def test_non_convergence_raises():
    with pytest.raises(NonConvergenceError):
        bessel_j0(10.0, SeriesConfig(rel_tol=1e-15, max_terms=3))


def test_series_config_validation():
    with pytest.raises(ValueError):
        SeriesConfig(rel_tol=2.0)
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=0)


# ----------------------------------------------------------------------
# y0 / k0


def test_y0_domain_and_limit():
    with pytest.raises(DomainError):
        bessel_y0(0.0)
    with pytest.raises(DomainError):
        bessel_y0(-1.0)
    assert bessel_y0(1e-8) < -10.0
    assert bessel_y0(1e-12) < bessel_y0(1e-8)


def test_k0_domain_and_limit():
    with pytest.raises(DomainError):
        bessel_k0(0.0)
    with pytest.raises(DomainError):
        bessel_k0(-0.5)
    assert bessel_k0(1e-8) > 10.0
    assert bessel_k0(1e-12) > bessel_k0(1e-8)


def _fd_derivative(fn, x):
    h = 1e-6 * max(1.0, abs(x))
    return (fn(x + h) - fn(x - h)) / (2.0 * h)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_wronskian_j0_y0(x):
    lhs = bessel_j0(x) * _fd_derivative(bessel_y0, x) - _fd_derivative(bessel_j0, x) * bessel_y0(x)
    assert lhs == pytest.approx(2.0 / (math.pi * x), abs=1e-8)


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_wronskian_i0_k0(x):
    lhs = bessel_i0(x) * _fd_derivative(bessel_k0, x) - _fd_derivative(bessel_i0, x) * bessel_k0(x)
    assert lhs == pytest.approx(-1.0 / x, abs=1e-8)


# ----------------------------------------------------------------------
# ODE residuals


def test_ode_residual_constant_function():
    kind = BesselKind()
    assert ode_residual(kind, lambda x: 1.0, 2.0, 1e-3) == pytest.approx(4.0, rel=1e-12)
    modified = BesselKind(modified=True)
    assert ode_residual(modified, lambda x: 1.0, 2.0, 1e-3) == pytest.approx(-4.0, rel=1e-12)


def test_ode_residual_j0_at_3():
    # the roundoff floor of a second difference is ~4 eps |y| / h^2, so the
    # step must stay coarse enough for the truncation-dominated regime
    r = ode_residual(BesselKind(), bessel_j0, 3.0, _fd_step(3.0))
    assert abs(r) < 1e-7


def test_ode_residual_i0_at_2():
    r = ode_residual(BesselKind(modified=True), bessel_i0, 2.0, _fd_step(2.0))
    assert abs(r) < 1e-7


def test_ode_residual_h_validation():
    with pytest.raises(DomainError):
        ode_residual(BesselKind(), bessel_j0, 1.0, 0.0)


def test_bessel_kind_validation():
    with pytest.raises(ValueError):
        BesselKind(p=-1.0)


# ----------------------------------------------------------------------
# non-integer orders


def test_bessel_j_domain_checks():
    with pytest.raises(DomainError):
        bessel_j(0.5, 1.0)  # 2p integer
    with pytest.raises(DomainError):
        bessel_j(0.0, 1.0)
    with pytest.raises(DomainError):
        bessel_j(0.25, -1.0)
    with pytest.raises(DomainError):
        bessel_j(-0.25, 0.0)


def test_bessel_j_at_zero_positive_order():
    assert bessel_j(0.25, 0.0) == 0.0


def test_bessel_j_diverges_near_zero_negative_order():
    assert bessel_j(-0.25, 1e-12) > 100.0
    assert bessel_j(-0.25, 1e-300) > bessel_j(-0.25, 1e-12)


@pytest.mark.parametrize("p", [0.25, -0.25, 1.3, -0.7])
@pytest.mark.parametrize("x", [0.4, 1.0, 3.3])
def test_bessel_j_ode_residual_series_derivatives(p, x):
    f0, f1, f2, _ = jp_jet(p, x)
    residual = x * x * f2 + x * f1 + (x * x - p * p) * f0
    assert abs(residual) < 1e-8


def test_bessel_j_precision_warning():
    with pytest.warns(PrecisionLossWarning):
        bessel_j(0.25, 31.0)


def test_jp_pair_solution_solves_ode():
    y = jp_pair_solution(0.25, 0.7, -0.3)
    x = 1.7
    r = ode_residual(BesselKind(p=0.25), y, x, _fd_step(x))
    assert abs(r) < 1e-7


def test_modified_pair_solution_solves_ode():
    y = modified_pair_solution(0.5, 2.0)
    x = 1.3
    r = ode_residual(BesselKind(modified=True), y, x, _fd_step(x))
    assert abs(r) < 1e-7


# ----------------------------------------------------------------------
# jets: consistency between term-wise derivatives and finite differences


@pytest.mark.parametrize(
    "jet,fn",
    [
        (j0_jet, bessel_j0),
        (i0_jet, bessel_i0),
        (y0_jet, bessel_y0),
        (k0_jet, bessel_k0),
    ],
)
def test_jets_match_finite_differences(jet, fn):
    for x in (0.4, 1.1, 2.7, 6.3):
        f0, f1, f2, f3 = jet(x)
        h = 1e-3 * max(1.0, x)
        fm2, fm1, fc, fp1, fp2 = (fn(x + k * h) for k in (-2, -1, 0, 1, 2))
        assert f0 == pytest.approx(fc, rel=1e-12, abs=1e-12)
        fd1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h)
        fd2 = (-fp2 + 16 * fp1 - 30 * fc + 16 * fm1 - fm2) / (12 * h * h)
        fd3 = (fp2 - 2 * fp1 + 2 * fm1 - fm2) / (2 * h * h * h)
        assert f1 == pytest.approx(fd1, rel=1e-8, abs=1e-8)
        assert f2 == pytest.approx(fd2, rel=1e-7, abs=1e-7)
        assert f3 == pytest.approx(fd3, rel=1e-4, abs=1e-4)
