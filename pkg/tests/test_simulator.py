import dataclasses
import json
import math

import numpy as np
import pytest

from oracles import beta_vector, brute_t, q_matrix
from weightdecision.decider import Scheme, decide_fixed_m
from weightdecision.scalar import WeightPair, cheb_u, curve_arrays
from weightdecision.simulator import (
    BooleanOracle,
    ReflectionSet,
    StateVector,
    admissible_t,
    apply_oracle,
    apply_q,
    build_beta,
    cosine_matrix,
    final_state,
    final_state_closed_form,
    initial_state,
    iterate_q,
    nominal_t,
    r_matrix,
    rationalize,
    representative_pair,
    verify_scheme,
)
from weightdecision.zero_weight import zero_scheme


def random_oracle(rng, n, r):
    return BooleanOracle.from_ones(rng.choice(n, size=r, replace=False), n)


def flat(s: StateVector):
    return s.amplitudes.reshape(-1)


class TestBooleanOracle:
    def test_weight_and_xor(self):
        f = BooleanOracle((1, 1, 0, 0))
        g = BooleanOracle((0, 1, 1, 0))
        assert f.weight() == 0.5
        assert f.xor(g).truth_table == (1, 0, 1, 0)

    def test_rejects(self):
        with pytest.raises(ValueError):
            BooleanOracle((0, 2))
        with pytest.raises(ValueError):
            BooleanOracle(())
        with pytest.raises(ValueError):
            BooleanOracle((0, 1)).xor(BooleanOracle((0, 1, 1)))


class TestBeta:
    def test_mu_one(self):
        b = build_beta(1.0, 0, 1, 4)
        np.testing.assert_allclose(b.amplitudes[0, :, 1], 0.5)
        assert np.all(b.amplitudes[0, :, 0] == 0)

    def test_mu_zero(self):
        b = build_beta(0.0, 0, 1, 4)
        assert b.amplitudes[0, 0, 0] == 1.0
        assert np.count_nonzero(b.amplitudes) == 1

    def test_half(self):
        b = build_beta(0.5, 0, 1, 2)
        np.testing.assert_allclose(b.amplitudes[0, :, 1], [0.5, 0.5])
        assert b.amplitudes[0, 0, 0] == pytest.approx(1 / math.sqrt(2))
        assert b.norm() == pytest.approx(1.0, abs=1e-15)

    def test_matches_oracle_layout(self):
        np.testing.assert_allclose(flat(build_beta(0.3, 1, 2, 5)), beta_vector(0.3, 1, 2, 5))

    def test_index_error(self):
        with pytest.raises(IndexError):
            build_beta(0.5, 2, 2, 4)

    def test_orthonormal(self):
        refl = ReflectionSet.from_mus([0.2, 0.9, 0.5], 6)
        np.testing.assert_allclose(refl.gram(), np.eye(3), atol=1e-12)


class TestOracleAndQ:
    def test_zero_function_is_identity(self):
        s = build_beta(0.4, 0, 1, 5)
        assert np.array_equal(apply_oracle(BooleanOracle.zero(5), s).amplitudes, s.amplitudes)

    def test_all_ones(self):
        s = build_beta(1.0, 0, 1, 3)
        out = apply_oracle(BooleanOracle((1, 1, 1)), s)
        assert np.array_equal(out.amplitudes, -s.amplitudes)

    def test_involution(self):
        rng = np.random.default_rng(0)
        s = StateVector(rng.normal(size=(2, 6, 2)) + 1j * rng.normal(size=(2, 6, 2)))
        f = random_oracle(rng, 6, 4)
        assert np.array_equal(apply_oracle(f, apply_oracle(f, s)).amplitudes, s.amplitudes)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply_oracle(BooleanOracle((0, 1)), build_beta(0.5, 0, 1, 3))

    def test_q_fixes_beta_for_zero_function(self):
        refl = ReflectionSet.from_mus([0.3, 0.8], 4)
        out = apply_q(BooleanOracle.zero(4), refl, refl.betas[1])
        np.testing.assert_allclose(out.amplitudes, refl.betas[1].amplitudes, atol=1e-15)

    def test_q_against_dense_matrix(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            n, mus = int(rng.integers(1, 8)), list(rng.random(int(rng.integers(1, 3))))
            f = random_oracle(rng, n, int(rng.integers(0, n + 1)))
            refl = ReflectionSet.from_mus(mus, n)
            s = StateVector(rng.normal(size=(len(mus), n, 2)).astype(complex))
            expected = q_matrix(f.truth_table, mus) @ flat(s)
            np.testing.assert_allclose(flat(apply_q(f, refl, s)), expected, atol=1e-12)

    def test_unitary(self):
        rng = np.random.default_rng(4)
        refl = ReflectionSet.from_mus([0.25, 0.6], 7)
        f = random_oracle(rng, 7, 3)
        s = refl.betas[0]
        for _ in range(30):
            s = apply_q(f, refl, s)
            assert s.norm() == pytest.approx(1.0, abs=1e-12)


class TestCosineAndR:
    def test_diagonal_entries(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            n = int(rng.integers(2, 12))
            r = int(rng.integers(0, n + 1))
            mus = list(rng.random(2))
            c = cosine_matrix(random_oracle(rng, n, r), ReflectionSet.from_mus(mus, n))
            np.testing.assert_allclose(c, np.diag([1 - 2 * (r / n) * mu for mu in mus]), atol=1e-12)

    def test_recurrence(self):
        rng = np.random.default_rng(6)
        c = np.diag(rng.uniform(-1, 1, size=2))
        for m in range(0, 12):
            lhs = r_matrix(c, m + 2)
            rhs = 2 * c @ r_matrix(c, m + 1) - r_matrix(c, m)
            np.testing.assert_allclose(lhs, rhs, atol=1e-10)

    def test_r_is_sine_ratio(self):
        theta = np.array([0.3, 1.9])
        c = np.diag(np.cos(theta))
        for m in range(1, 10):
            np.testing.assert_allclose(np.diag(r_matrix(c, m)).real, np.sin(m * theta) / np.sin(theta), atol=1e-12)
            np.testing.assert_allclose(np.diag(r_matrix(c, m)).real, cheb_u(m - 1, np.cos(theta)), atol=1e-12)


class TestClosedForm:
    def test_m0(self):
        refl = ReflectionSet.from_mus([0.4], 3)
        out = final_state_closed_form(BooleanOracle((1, 0, 1)), refl, 0, 0)
        np.testing.assert_allclose(out.amplitudes, refl.betas[0].amplitudes, atol=1e-15)

    def test_m1_against_dense(self):
        f = BooleanOracle((1, 0, 1, 1))
        refl = ReflectionSet.from_mus([0.65, 0.2], 4)
        out = final_state_closed_form(f, refl, 1, 1)
        expected = q_matrix(f.truth_table, [0.65, 0.2]) @ beta_vector(0.2, 1, 2, 4)
        np.testing.assert_allclose(flat(out), expected, atol=1e-12)

    def test_m5_example(self):
        f = BooleanOracle.from_ones([1, 4, 6], 8)
        refl = ReflectionSet.from_mus([0.7], 8)
        a = final_state_closed_form(f, refl, 0, 5)
        b = iterate_q(f, refl, refl.betas[0], 5)
        np.testing.assert_allclose(a.amplitudes, b.amplitudes, atol=1e-10)


class TestInnerProductStructure:
    def test_linear_in_t(self):
        # <Phi_f|Phi_g> = sum_i c_i^2 (A_i - t B_i / (r + r')) for any mu_i, c_i
        rng = np.random.default_rng(8)
        for _ in range(25):
            n = int(rng.integers(3, 11))
            r, rp = (int(x) for x in rng.integers(1, n + 1, size=2))
            m = int(rng.integers(1, 7))
            mus = rng.random(2)
            c1 = float(rng.random())
            scheme = Scheme(m, mus[0], mus[1], c1, 1 - c1)
            a, b = curve_arrays(m, WeightPair(r / n, rp / n), mus)
            for t in admissible_t(r, rp, n):
                f, g = representative_pair(r, rp, n, t)
                ip = final_state(f, scheme).inner(final_state(g, scheme))
                expected = c1 * (a[0] - t * b[0] / (r + rp)) + (1 - c1) * (a[1] - t * b[1] / (r + rp))
                assert ip == pytest.approx(expected, abs=1e-10)

    def test_depends_only_on_t(self):
        rng = np.random.default_rng(9)
        scheme = Scheme(3, 0.37, 0.81, 0.4, 0.6)
        n, r, rp = 9, 4, 3
        refl, start = initial_state(scheme, n)
        for t in admissible_t(r, rp, n):
            f0, g0 = representative_pair(r, rp, n, t)
            ref = final_state(f0, scheme, refl, start).inner(final_state(g0, scheme, refl, start))
            hits = 0
            while hits < 20:
                f, g = random_oracle(rng, n, r), random_oracle(rng, n, rp)
                if f.xor(g).count != t:
                    continue
                hits += 1
                ip = final_state(f, scheme, refl, start).inner(final_state(g, scheme, refl, start))
                assert ip == pytest.approx(ref, abs=1e-10)


class TestTValues:
    @pytest.mark.parametrize("r,rp,n", [(19, 9, 20), (3, 2, 5), (4, 4, 6), (1, 0, 3), (5, 5, 5), (2, 6, 7)])
    def test_against_brute_force(self, r, rp, n):
        assert admissible_t(r, rp, n) == brute_t(r, rp, n)

    def test_example(self):
        assert admissible_t(19, 9, 20) == [10, 12]
        assert nominal_t(19, 9)[-1] == 28

    def test_representative_pairs(self):
        for t in admissible_t(7, 4, 9):
            f, g = representative_pair(7, 4, 9, t)
            assert (f.count, g.count, f.xor(g).count) == (7, 4, t)
        with pytest.raises(ValueError):
            representative_pair(7, 4, 9, 9)


class TestRationalize:
    def test_smallest(self):
        assert rationalize(0.95, 0.45) == (19, 9, 20)
        assert rationalize(0.5, 0.25) == (2, 1, 4)

    def test_irrational(self):
        with pytest.raises(ValueError):
            rationalize(1 / math.sqrt(2), 0.1)


class TestVerifyScheme:
    def test_deutsch_jozsa(self):
        report = verify_scheme(zero_scheme(0.5, 1), 1, 0, 2, mode="exhaustive")
        assert report.pairs_checked == 2
        assert report.max_abs_inner_product < 1e-12

    def test_zero_weight_example(self):
        report = verify_scheme(zero_scheme(0.3, 2), 3, 0, 10, mode="exhaustive")
        assert report.passed and report.max_abs_inner_product < 1e-9

    def test_pair_example(self):
        s = decide_fixed_m(2, WeightPair(0.95, 0.45))
        report = verify_scheme(s, 19, 9, 20)
        assert report.t_values == [10, 12] and report.nominal_t_truncated
        assert report.passed and report.max_abs_inner_product < 1e-8

    def test_negative_control(self):
        s = decide_fixed_m(2, WeightPair(0.95, 0.45))
        bad = dataclasses.replace(s, mu1=s.mu1 + 0.05)
        report = verify_scheme(bad, 19, 9, 20)
        assert not report.passed and report.max_abs_inner_product > 1e-3

    def test_exhaustive_small(self):
        s = decide_fixed_m(2, WeightPair(1.0, 0.25))
        report = verify_scheme(s, 4, 1, 4, mode="exhaustive")
        assert report.pairs_checked == 4 and report.passed

    def test_rationalisation_mismatch(self):
        s = decide_fixed_m(2, WeightPair(0.95, 0.45))
        with pytest.raises(ValueError):
            verify_scheme(s, 9, 19, 20)
        with pytest.raises(ValueError):
            verify_scheme(zero_scheme(0.5, 1), 1, 1, 2)

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            verify_scheme(zero_scheme(0.5, 1), 1, 0, 2, mode="sampled")

    def test_exhaustive_cap(self):
        s = Scheme(2, 0.1, 1.0, 0.5, 0.5)
        with pytest.raises(ValueError):
            verify_scheme(s, 10, 9, 20, mode="exhaustive")

    def test_json(self):
        s = decide_fixed_m(2, WeightPair(0.95, 0.45))
        data = json.loads(verify_scheme(s, 19, 9, 20).to_json())
        for key in ("mode", "N", "r", "r_prime", "m", "max_abs_inner_product", "violations"):
            assert key in data
        assert data["violations"] == []
        assert "PASS" in verify_scheme(s, 19, 9, 20).to_text()
