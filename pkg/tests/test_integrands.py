import math

import numpy as np
import pytest

from momqmc.integrands import (
    CLOSED_FORM_1D,
    KeisterIntegrand,
    keister_eval,
    keister_exact,
    reference_integrand,
)
from momqmc.special import inv_norm_cdf

# High-precision reference values (mpmath, 40 significant digits) for
# S_d = (2 pi^{d/2} / Gamma(d/2)) * integral_0^inf cos(r) exp(-r^2) r^{d-1} dr.
_EXACT_REFERENCE = {
    1: 1.3803884470431430,
    2: 1.8081864292636199,
    3: 2.1683091021654807,
    4: 2.1659293025745063,
    5: 1.1353239910124924,
    6: -2.3273037292979391,
    7: -11.056849079788181,
    8: -30.609075003558563,
    9: -71.633234280225081,
    10: -154.19388562221809,
    11: -315.57627684949514,
    12: -624.27708462201034,
}


class TestKeisterEval:
    def test_center_one_dim(self):
        assert abs(keister_eval([0.5]) - math.sqrt(math.pi)) <= 1e-15

    def test_center_two_dims(self):
        assert abs(keister_eval([0.5, 0.5]) - math.pi) <= 1e-15

    def test_off_center_against_oracle(self):
        # Independent arithmetic through the quantile value itself.
        z = inv_norm_cdf(0.975)
        expected = math.sqrt(math.pi) * math.cos(z / math.sqrt(2.0))
        assert abs(keister_eval([0.975]) - expected) <= 1e-13
        assert abs(expected - 0.3258494566063128) <= 1e-12

    @pytest.mark.parametrize("bad", [[0.0], [1.0], [0.5, 0.0]])
    def test_boundary_rejected(self, bad):
        with pytest.raises(ValueError):
            keister_eval(bad)

    def test_empty_point_rejected(self):
        with pytest.raises(ValueError):
            keister_eval([])

    def test_bounded_by_scale(self):
        rng = np.random.default_rng(3)
        for d in (1, 3, 8):
            bound = math.pi ** (0.5 * d)
            for _ in range(50):
                assert abs(keister_eval(rng.random(d))) <= bound + 1e-12

    def test_permutation_symmetry(self):
        rng = np.random.default_rng(4)
        for _ in range(25):
            u = rng.random(5)
            sigma = rng.permutation(5)
            assert keister_eval(u) == pytest.approx(keister_eval(u[sigma]), abs=1e-12)

    def test_reflection_symmetry(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            u = rng.random(4)
            assert keister_eval(u) == pytest.approx(keister_eval(1.0 - u), abs=1e-12)


class TestKeisterIntegrand:
    def test_vectorized_matches_scalar(self):
        rng = np.random.default_rng(6)
        pts = rng.random((100, 4))
        f = KeisterIntegrand(4)
        assert np.allclose(f.values(pts), [keister_eval(u) for u in pts],
                           rtol=1e-12, atol=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            KeisterIntegrand(3).values(np.zeros((4, 2)) + 0.5)

    def test_invalid_dimension(self):
        with pytest.raises(ValueError):
            KeisterIntegrand(0)


class TestKeisterExact:
    def test_one_dim_closed_form(self):
        res = keister_exact(1)
        assert res.method == "closed-form"
        assert res.value == CLOSED_FORM_1D
        assert abs(res.value - math.sqrt(math.pi) * math.exp(-0.25)) == 0.0

    @pytest.mark.parametrize("d", sorted(_EXACT_REFERENCE))
    def test_against_high_precision_reference(self, d):
        res = keister_exact(d)
        assert res.value == pytest.approx(_EXACT_REFERENCE[d], rel=1e-10)

    def test_method_tag_for_higher_dims(self):
        assert keister_exact(3).method == "radial-quadrature"

    @pytest.mark.parametrize("d", range(1, 13))
    def test_stable_under_tolerance_halving(self, d):
        a = keister_exact(d, tol=1e-12).value
        b = keister_exact(d, tol=5e-13).value
        assert abs(a - b) <= 1e-10

    @pytest.mark.parametrize("d", [0, 17, -2])
    def test_dimension_range(self, d):
        with pytest.raises(ValueError):
            keister_exact(d)

    def test_plain_monte_carlo_sanity(self):
        # End-to-end integrand/oracle consistency without QMC machinery.
        rng = np.random.default_rng(20240809)
        n = 1_000_000
        for d in (2, 3, 5, 8):
            f = KeisterIntegrand(d)
            vals = f.values(rng.random((n, d)))
            mean = float(np.mean(vals))
            se = float(np.std(vals) / math.sqrt(n))
            exact = keister_exact(d).value
            assert abs(mean - exact) <= 4.0 * se, (d, mean, exact, se)


class TestReferenceIntegrands:
    def test_constant(self):
        f = reference_integrand("constant", 5, constant=3.0)
        assert f.exact == 3.0
        assert np.all(f.values(np.full((7, 5), 0.2)) == 3.0)

    def test_sum_of_coordinates(self):
        f = reference_integrand("sum", 4)
        assert f.exact == 2.0
        pts = np.array([[0.1, 0.2, 0.3, 0.4]])
        assert f.values(pts)[0] == pytest.approx(1.0, abs=1e-15)

    def test_product_of_coordinates(self):
        f = reference_integrand("product", 3)
        assert f.exact == 0.125
        pts = np.array([[0.5, 0.5, 0.5]])
        assert f.values(pts)[0] == pytest.approx(0.125, abs=1e-15)

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            reference_integrand("cubic", 2)
