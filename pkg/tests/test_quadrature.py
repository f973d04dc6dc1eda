"""Quadrature layer: endpoint-singular integrals, principal values, rule
exactness, linearity/additivity properties, and the error contract."""

import math
import random

import pytest
from scipy.special import ellipk as ellipk_param

from hallint import quadrature as q
from hallint.errors import AccuracyError, DomainError, EvaluationError

from oracles import pv_midpoint

# frozen offline oracle (30 dps):
# P int_0^1 K(sqrt(t)) K(sqrt(0.6)) / (0.4 - t) dt
PV_KERNEL_AT_04 = -3.276441182122329927641013


class TestIntegrate:
    def test_constant(self):
        res = q.integrate(lambda t: 1.0, 0.0, 1.0)
        assert res.value == pytest.approx(1.0, abs=1e-14)

    def test_inverse_sqrt_left(self):
        res = q.integrate(
            lambda t: 1.0 / math.sqrt(t),
            0.0,
            1.0,
            q.EndpointBehavior.flags(left="inverse_sqrt"),
            tol=1e-12,
        )
        assert res.value == pytest.approx(2.0, abs=1e-12)

    def test_log_left(self):
        res = q.integrate(
            lambda t: math.log(1.0 / t),
            0.0,
            1.0,
            q.EndpointBehavior.flags(left="log"),
            tol=1e-12,
        )
        assert res.value == pytest.approx(1.0, abs=1e-12)

    def test_log_right_via_exact_complement(self):
        # integral_0^1 K(sqrt t) dt = 2, kernel written through the exact
        # complement so the log endpoint at t = 1 is sampled accurately
        res = q.integrate(
            lambda t: ellipk_param(t),
            0.0,
            1.0,
            q.EndpointBehavior.flags(right="log"),
            tol=1e-10,
        )
        assert res.value == pytest.approx(2.0, abs=1e-10)

    def test_oscillatory_smooth(self):
        res = q.integrate(lambda t: math.sin(10.0 * t), 0.0, math.pi, tol=1e-12)
        assert res.value == pytest.approx((1.0 - math.cos(10.0 * math.pi)) / 10.0, abs=1e-12)

    def test_error_estimate_covers_truth(self):
        res = q.integrate(lambda t: math.exp(t), 0.0, 1.0, tol=1e-11)
        truth = math.e - 1.0
        assert abs(res.value - truth) <= max(1e-11, res.abs_error_estimate)

    def test_result_invariants(self):
        res = q.integrate(lambda t: t * t, 0.0, 2.0)
        assert res.abs_error_estimate >= 0.0
        assert res.evaluations > 0

    @pytest.mark.parametrize(
        "a,b,tol",
        [(1.0, 0.0, 1e-10), (0.0, 0.0, 1e-10), (0.0, 1.0, 1e-15), (0.0, math.inf, 1e-10)],
    )
    def test_domain(self, a, b, tol):
        with pytest.raises(DomainError):
            q.integrate(lambda t: 1.0, a, b, tol=tol)

    def test_nonfinite_sample_reports_abscissa(self):
        def bad(t):
            return math.nan if 0.4 < t < 0.6 else 1.0

        with pytest.raises(EvaluationError) as err:
            q.integrate(bad, 0.0, 1.0)
        assert 0.4 < err.value.abscissa < 0.6

    def test_budget_exhaustion(self):
        with pytest.raises(AccuracyError):
            q.integrate(lambda t: math.sqrt(abs(t - 0.37)), 0.0, 1.0, tol=1e-13, budget=300)


class TestCauchyPV:
    def test_symmetric_pole_cancels(self):
        res = q.cauchy_pv(lambda t: 1.0, 0.0, 2.0, 1.0)
        assert res.value == pytest.approx(0.0, abs=1e-14)

    def test_linear_numerator(self):
        # P int_0^1 t/(1/2 - t) dt = -1
        res = q.cauchy_pv(lambda t: t, 0.0, 1.0, 0.5)
        assert res.value == pytest.approx(-1.0, abs=1e-13)

    def test_antisymmetry_window(self):
        for h in (0.1, 0.3):
            res = q.cauchy_pv(lambda t: 1.0, 0.5 - h, 0.5 + h, 0.5)
            assert abs(res.value) <= 1e-13

    def test_complete_integral_kernel_frozen_value(self):
        kfix = ellipk_param(0.6)

        def g(t):
            return ellipk_param(t) * kfix

        res = q.cauchy_pv(
            g, 0.0, 1.0, 0.4, q.EndpointBehavior.flags(right="log"), tol=1e-11
        )
        assert res.value == pytest.approx(PV_KERNEL_AT_04, abs=1e-10)

    def test_complete_integral_kernel_mesh_oracle(self):
        kfix = ellipk_param(0.6)

        def g(t):
            return ellipk_param(t) * kfix

        res = q.cauchy_pv(
            g, 0.0, 1.0, 0.4, q.EndpointBehavior.flags(right="log"), tol=1e-11
        )
        oracle = pv_midpoint(g, 0.0, 1.0, 0.4)
        assert res.value == pytest.approx(oracle, abs=1e-7)

    def test_pole_outside_rejected(self):
        with pytest.raises(DomainError):
            q.cauchy_pv(lambda t: 1.0, 0.0, 1.0, 1.5)

    def test_nonfinite_at_pole(self):
        with pytest.raises(EvaluationError):
            q.cauchy_pv(lambda t: math.inf, 0.0, 1.0, 0.5)


class TestProperties:
    def test_linearity_on_random_polynomials(self):
        rng = random.Random(20240811)
        tol = 1e-11
        for _ in range(5):
            cf = [rng.uniform(-2.0, 2.0) for _ in range(6)]
            cg = [rng.uniform(-2.0, 2.0) for _ in range(6)]
            a_w = rng.uniform(-3.0, 3.0)
            b_w = rng.uniform(-3.0, 3.0)

            def f(t, cf=cf):
                return sum(c * t**k for k, c in enumerate(cf))

            def g(t, cg=cg):
                return sum(c * t**k for k, c in enumerate(cg))

            combined = q.integrate(
                lambda t: a_w * f(t) + b_w * g(t), 0.0, 1.0, tol=tol
            ).value
            split = (
                a_w * q.integrate(f, 0.0, 1.0, tol=tol).value
                + b_w * q.integrate(g, 0.0, 1.0, tol=tol).value
            )
            assert abs(combined - split) <= 10.0 * tol

    def test_interval_additivity(self):
        tol = 1e-11
        f = lambda t: math.exp(-t) * math.cos(3.0 * t)
        whole = q.integrate(f, 0.0, 2.0, tol=tol).value
        parts = (
            q.integrate(f, 0.0, 0.7, tol=tol).value
            + q.integrate(f, 0.7, 2.0, tol=tol).value
        )
        assert abs(whole - parts) <= 10.0 * tol

    @pytest.mark.parametrize("n", [3, 5, 10, 21])
    def test_gauss_rule_exactness(self, n):
        rng = random.Random(n)
        coeffs = [rng.uniform(-1.0, 1.0) for _ in range(2 * n)]  # degree 2n-1

        def poly(t):
            return sum(c * t**k for k, c in enumerate(coeffs))

        exact = sum(
            c * (1.0 - (-1.0) ** (k + 1)) / (k + 1) for k, c in enumerate(coeffs)
        )
        assert q.gauss_panel(poly, -1.0, 1.0, n) == pytest.approx(exact, abs=5e-14)

    def test_gauss_rule_not_exact_beyond_degree(self):
        # degree 2n is outside the exactness class; the rule should miss
        n = 3
        val = q.gauss_panel(lambda t: t**6, -1.0, 1.0, n)
        assert abs(val - 2.0 / 7.0) > 1e-6


class TestBehaviorAndConfig:
    def test_flags_parser(self):
        b = q.EndpointBehavior.flags(left="log", right="inverse_sqrt")
        assert b.left is q.Endpoint.LOG
        assert b.right is q.Endpoint.INVERSE_SQRT
        assert b.left_singular and b.right_singular
        assert not q.EndpointBehavior().left_singular

    def test_flags_rejects_unknown(self):
        with pytest.raises(ValueError):
            q.EndpointBehavior.flags(left="cube_root")

    def test_quadresult_validation(self):
        with pytest.raises(DomainError):
            q.QuadResult(1.0, -1.0, 3)

    def test_budget_env_override(self, monkeypatch):
        monkeypatch.setenv("HALLINT_EVAL_BUDGET", "12345")
        assert q.default_budget() == 12345
        monkeypatch.setenv("HALLINT_EVAL_BUDGET", "junk")
        with pytest.raises(DomainError):
            q.default_budget()
        monkeypatch.setenv("HALLINT_EVAL_BUDGET", "-5")
        with pytest.raises(DomainError):
            q.default_budget()
        monkeypatch.delenv("HALLINT_EVAL_BUDGET")
        assert q.default_budget() == q.DEFAULT_BUDGET
