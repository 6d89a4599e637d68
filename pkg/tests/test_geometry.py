import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfmle import (
    Cubic,
    DomainError,
    LimitCase,
    Region,
    asymptote_slope,
    asymptotic_prediction,
    classify_point,
    count_real_roots,
    cubic_coefficients,
    curve_delta_at,
    cusp_tangent_ray,
    cusps,
    discriminant,
    reduced_discriminant,
    reduced_discriminant_gradient,
    trace_curve,
)
from bfmle.geometry import delta_squared_cubic
from bfmle.summaries import SummaryStats, reduce_stats
from oracles import central_gradient


def test_value_on_axis():
    # At delta = 0 the polynomial collapses to -4(1+r)(r+gamma^2)^3.
    assert reduced_discriminant(1.0, 0.0, 1.0) == -64.0


def test_value_at_cusp_is_zero():
    assert reduced_discriminant(1.0, 2.0, 1.0) == 0.0


def test_value_in_three_root_region():
    assert reduced_discriminant(1.0, 4.0, 1.0) == 1728.0


def test_value_factors_at_unit_gamma_r():
    # At gamma = r = 1 the polynomial reduces to (delta^2 - 4)^3; check on a
    # sample of points (a polynomial identity holds iff enough samples agree).
    for delta in np.linspace(-5, 5, 21):
        lhs = reduced_discriminant(1.0, float(delta), 1.0)
        rhs = (delta * delta - 4.0) ** 3
        assert math.isclose(lhs, rhs, rel_tol=1e-12, abs_tol=1e-9)


@settings(max_examples=100, deadline=None)
@given(
    gamma=st.floats(min_value=1e-2, max_value=1e2),
    delta=st.floats(min_value=-1e2, max_value=1e2),
    r=st.floats(min_value=1e-2, max_value=1e2),
)
def test_evenness_in_delta(gamma, delta, r):
    assert reduced_discriminant(gamma, delta, r) == reduced_discriminant(gamma, -delta, r)


def test_negative_on_whole_gamma_axis():
    for r in (0.1, 0.5, 1.0, 2.0, 4.0, 10.0):
        for gamma in np.linspace(0.05, 20, 50):
            value = reduced_discriminant(float(gamma), 0.0, r)
            assert value < 0.0
            formula = -4.0 * (1.0 + r) * (r + gamma * gamma) ** 3
            assert math.isclose(value, formula, rel_tol=1e-12)


def test_gradient_vanishes_at_cusp():
    gx, gy = reduced_discriminant_gradient(1.0, 2.0, 1.0)
    assert abs(gx) <= 1e-10 and abs(gy) <= 1e-10


def test_gradient_on_axis():
    # d/ddelta vanishes by evenness; d/dgamma = -24*gamma*(1+r)*(r+gamma^2)^2.
    gx, gy = reduced_discriminant_gradient(1.0, 0.0, 1.0)
    assert gy == 0.0
    assert math.isclose(gx, -192.0, rel_tol=1e-14)
    fd = central_gradient(lambda p: reduced_discriminant(p[0], p[1], 1.0), [1.0, 0.0])
    assert math.isclose(gx, fd[0], rel_tol=1e-6, abs_tol=1e-4)


def test_gradient_matches_finite_differences_on_grid():
    for r in (0.5, 1.0, 4.0):
        for gamma in np.linspace(0.2, 5.0, 20):
            for delta in np.linspace(-6.0, 6.0, 20):
                ana = reduced_discriminant_gradient(float(gamma), float(delta), r)
                fd = central_gradient(
                    lambda p: reduced_discriminant(p[0], p[1], r), [float(gamma), float(delta)]
                )
                for a, f in zip(ana, fd):
                    assert math.isclose(a, f, rel_tol=1e-6, abs_tol=1e-3 * (1 + abs(a)))


def test_cusps_unit_ratio():
    cs = cusps(1.0)
    assert math.isclose(cs.gamma, 1.0, rel_tol=1e-15)
    assert math.isclose(cs.delta, 2.0, rel_tol=1e-15)
    assert len(cs.points) == 4
    assert (-cs.gamma, -cs.delta) in cs.points


def test_cusps_ratio_four():
    cs = cusps(4.0)
    assert math.isclose(cs.gamma, math.sqrt(27.0 / 2.0), rel_tol=1e-14)
    assert math.isclose(cs.delta, math.sqrt(25.0 / 2.0), rel_tol=1e-14)


def test_cusp_conditions_across_ratios():
    for r in (0.1, 0.5, 1.0, 2.0, 4.0, 10.0):
        cs = cusps(r)
        scale = max(1.0, cs.gamma, cs.delta, r) ** 6
        assert abs(reduced_discriminant(cs.gamma, cs.delta, r)) <= 1e-9 * scale
        gx, gy = reduced_discriminant_gradient(cs.gamma, cs.delta, r)
        assert math.hypot(gx, gy) <= 1e-9 * scale


def test_asymptote_slope_values():
    assert math.isclose(asymptote_slope(1.0), 2.0 * math.sqrt(2.0), rel_tol=1e-15)
    assert math.isclose(asymptote_slope(4.0), math.sqrt(5.0) / 2.0, rel_tol=1e-15)


def test_asymptote_kills_leading_form():
    for r in (0.5, 1.0, 4.0):
        slope = asymptote_slope(r)
        u = delta_squared_cubic(1.0, r)
        coeff_scale = max(abs(u.a3), abs(u.a2), abs(u.a1), abs(u.a0))
        gamma = 1e4
        value = reduced_discriminant(gamma, slope * gamma, r)
        assert abs(value) / gamma ** 6 <= 1e-3 * coeff_scale


def test_curve_delta_triple_contact():
    # At gamma = r = 1 the u-cubic is (u - 4)^3: one merged boundary value.
    assert curve_delta_at(1.0, 1.0) == (2.0,)


def test_curve_delta_single_branch():
    values = curve_delta_at(2.0, 1.0)
    assert len(values) == 1
    # Frozen from a bisection oracle on u^3 - 30u^2 + 57u - 1000.
    assert math.isclose(values[0], 5.405598727423484, rel_tol=1e-10)
    u = delta_squared_cubic(2.0, 1.0)
    assert (u.a3, u.a2, u.a1, u.a0) == (1.0, -30.0, 57.0, -1000.0)


def test_curve_delta_three_branches_near_ratio_four_cusp():
    # For r = 4 the one-root delta set is not an interval: just beyond the
    # cusp abscissa a vertical line crosses the boundary three times.
    gamma_c = cusps(4.0).gamma
    hits = [g for g in np.linspace(gamma_c, 1.08 * gamma_c, 50)
            if len(curve_delta_at(float(g), 4.0)) == 3]
    assert hits
    gamma = hits[0]
    d1, d2, d3 = curve_delta_at(gamma, 4.0)
    # Between the first two crossings the likelihood is multimodal, between
    # the second and third it is unimodal again.
    assert reduced_discriminant(gamma, 0.5 * (d1 + d2), 4.0) > 0.0
    assert reduced_discriminant(gamma, 0.5 * (d2 + d3), 4.0) < 0.0


def test_trace_curve_contains_cusp_and_lies_on_boundary():
    points = trace_curve(1.0, 0.5, 1.5, 3)
    assert any(math.isclose(g, 1.0) and math.isclose(d, 2.0) for g, d in points)
    assert any(math.isclose(g, 1.0) and math.isclose(d, -2.0) for g, d in points)
    for gamma, delta in points:
        scale = max(1.0, gamma, abs(delta), 1.0) ** 6
        assert abs(reduced_discriminant(gamma, delta, 1.0)) <= 1e-6 * scale


def test_trace_curve_ratio_four_branch_shape():
    # Some vertical line must meet the upper branch three times.
    points = trace_curve(4.0, 3.0, 4.2, 60)
    per_gamma = {}
    for gamma, delta in points:
        if delta > 0:
            per_gamma.setdefault(gamma, []).append(delta)
    assert max(len(v) for v in per_gamma.values()) == 3


def test_trace_curve_rejects_bad_grid():
    with pytest.raises(DomainError):
        trace_curve(1.0, 2.0, 1.0, 10)
    with pytest.raises(DomainError):
        trace_curve(1.0, 0.5, 1.5, 1)


def test_classify_examples():
    assert classify_point(1.0, 0.0, 1.0).region is Region.ONE_ROOT
    assert classify_point(1.0, 4.0, 1.0).region is Region.THREE_ROOTS
    assert classify_point(1.0, 2.0, 1.0).region is Region.BOUNDARY_CUSP
    boundary = curve_delta_at(2.0, 1.0)[0]
    assert classify_point(2.0, boundary, 1.0).region is Region.BOUNDARY_NONSINGULAR


def test_classification_agrees_with_root_count():
    gen = np.random.default_rng(42)
    checked = 0
    for _ in range(20000):
        n = int(gen.integers(2, 51))
        m = int(gen.integers(2, 51))
        s = SummaryStats(
            n=n, m=m,
            mean_x=float(gen.uniform(-5, 5)), mean_y=float(gen.uniform(-5, 5)),
            var_x=float(np.exp(gen.uniform(-2, 2))), var_y=float(np.exp(gen.uniform(-2, 2))),
        )
        red = reduce_stats(s)
        point = classify_point(red.gamma_hat, red.delta_hat, red.r)
        if point.region in (Region.BOUNDARY_NONSINGULAR, Region.BOUNDARY_CUSP):
            continue
        count = count_real_roots(cubic_coefficients(s))
        checked += 1
        expect = Region.THREE_ROOTS if count.value == "Three" else Region.ONE_ROOT
        assert point.region is expect
    assert checked > 19000


def discriminant_term_scale(c: Cubic) -> float:
    """Magnitude of the discriminant's monomials before cancellation."""
    return max(
        (c.a1 * c.a2) ** 2,
        abs(4.0 * c.a0 * c.a2 ** 3),
        abs(4.0 * c.a1 ** 3 * c.a3),
        abs(18.0 * c.a0 * c.a1 * c.a2 * c.a3),
        27.0 * (c.a0 * c.a3) ** 2,
    )


def test_factorization_identity_sample():
    # Both evaluation routes carry rounding at the scale of the discriminant
    # monomials, so the comparison scale must include it: near the boundary
    # the discriminant itself is arbitrarily smaller than its terms.
    gen = np.random.default_rng(314)
    for _ in range(20000):
        n = int(gen.integers(2, 51))
        m = int(gen.integers(2, 51))
        s = SummaryStats(
            n=n, m=m,
            mean_x=float(gen.uniform(-5, 5)), mean_y=float(gen.uniform(-5, 5)),
            var_x=float(np.exp(gen.uniform(-2, 2))), var_y=float(np.exp(gen.uniform(-2, 2))),
        )
        red = reduce_stats(s)
        cubic = cubic_coefficients(s)
        lhs = discriminant(cubic)
        rhs = s.var_y ** 3 * reduced_discriminant(red.gamma_hat, red.delta_hat, red.r)
        scale = max(abs(lhs), abs(rhs), 1e-6 * discriminant_term_scale(cubic))
        assert abs(lhs - rhs) <= 1e-8 * scale


def test_factorization_identity_exact_rational():
    # The identity holds exactly in rational arithmetic: with g2 = var_x/var_y
    # and d2 = (mean_x - mean_y)^2 / var_y, the discriminant of the
    # stationarity cubic equals var_y^3 * D evaluated through g2 and d2.
    from fractions import Fraction

    gen = np.random.default_rng(2718)
    for _ in range(200):
        n = int(gen.integers(2, 51))
        m = int(gen.integers(2, 51))
        r = Fraction(n, m)
        mx = Fraction(int(gen.integers(-500, 500)), 100)
        my = Fraction(int(gen.integers(-500, 500)), 100)
        vx = Fraction(int(gen.integers(1, 400)), 100)
        vy = Fraction(int(gen.integers(1, 400)), 100)

        a3 = 1 + r
        a2 = -(2 * mx + my) - r * (2 * my + mx)
        a1 = mx * mx + 2 * (1 + r) * mx * my + r * my * my + vx + r * vy
        a0 = -mx * mx * my - r * my * my * mx - vx * my - r * vy * mx
        disc = (a1 * a1 * a2 * a2 - 4 * a0 * a2 ** 3 - 4 * a1 ** 3 * a3
                + 18 * a0 * a1 * a2 * a3 - 27 * a0 * a0 * a3 * a3)

        g2 = vx / vy
        d2 = (mx - my) ** 2 / vy
        big_d = (
            d2 ** 3 * r ** 2
            - 2 * d2 ** 2 * (g2 * (2 + 2 * r - r ** 2) + (2 * r ** 3 + 2 * r ** 4 - r ** 2))
            - d2 * (g2 ** 2 * (8 + 8 * r - r ** 2) + (8 * r ** 4 + 8 * r ** 3 - r ** 2)
                    - 2 * g2 * (10 * r + 19 * r ** 2 + 10 * r ** 3))
            - 4 * (1 + r) * (r + g2) ** 3
        )
        assert disc == vy ** 3 * big_d


def test_eventual_positivity_beyond_root_bound():
    # Past the Cauchy bound of the u-cubic the leading term r^2 u^3 wins.
    for r in (0.5, 1.0, 4.0):
        for gamma in (0.3, 1.0, 3.0):
            u = delta_squared_cubic(gamma, r)
            u_bound = 1.0 + max(abs(u.a2), abs(u.a1), abs(u.a0)) / u.a3
            for factor in (1.01, 2.0, 10.0):
                delta = math.sqrt(u_bound * factor)
                assert reduced_discriminant(gamma, delta, r) > 0.0


def test_predictions():
    assert asymptotic_prediction(1.0, 0.0, 1.0).limit_prob_three_roots == 0.0
    assert asymptotic_prediction(1.0, 0.0, 1.0).case is LimitCase.INTERIOR_ONE
    assert asymptotic_prediction(1.0, 4.0, 1.0).limit_prob_three_roots == 1.0
    boundary = curve_delta_at(2.0, 1.0)[0]
    pred = asymptotic_prediction(2.0, boundary, 1.0)
    assert pred.limit_prob_three_roots == 0.5
    assert pred.case is LimitCase.CURVE_NONSINGULAR
    cusp = asymptotic_prediction(1.0, 2.0, 1.0)
    assert cusp.limit_prob_three_roots == 0.0
    assert cusp.case is LimitCase.CURVE_CUSP


def test_tangent_ray_directions():
    assert cusp_tangent_ray(1.0) == (0.0, 1.0)
    gx, gy = cusp_tangent_ray(4.0)
    assert math.isclose(gx, 3.0 / 6.0, rel_tol=1e-15)
    assert math.isclose(gy, math.sqrt(27.0) / 6.0, rel_tol=1e-15)
    assert cusp_tangent_ray(0.5)[0] < 0.0 < cusp_tangent_ray(0.5)[1]


def test_domain_errors():
    with pytest.raises(DomainError):
        reduced_discriminant(-1.0, 0.0, 1.0)
    with pytest.raises(DomainError):
        cusps(0.0)
    with pytest.raises(DomainError):
        asymptote_slope(-2.0)
