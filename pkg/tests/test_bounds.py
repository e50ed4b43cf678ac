from math import isqrt

import pytest

from kconn import (
    Regime,
    ceil_isqrt,
    classify,
    construction_admissible,
    lambda_of,
    tau_of,
    thresholds,
)


class TestIntegerSquareRoots:
    def test_ceil_isqrt(self):
        assert ceil_isqrt(0) == 0
        assert ceil_isqrt(1) == 1
        assert ceil_isqrt(2) == 2
        assert ceil_isqrt(15) == 4
        assert ceil_isqrt(16) == 4
        assert ceil_isqrt(17) == 5
        with pytest.raises(ValueError):
            ceil_isqrt(-1)

    def test_tau_examples(self):
        assert tau_of(8) == 4
        assert tau_of(10) == 5
        assert tau_of(1) == 1
        with pytest.raises(ValueError):
            tau_of(0)


class TestThresholds:
    def test_k3_lambda_uses_second_term(self):
        t = thresholds(3)
        assert t.lam == 5  # min(6, 5)

    def test_k8(self):
        t = thresholds(8)
        assert t.tau == 4
        assert t.lam == 8
        assert t.n_counterexample == 29
        assert t.n_guaranteed == 32
        assert t.n_conjectured_strict == 30
        assert t.n_no_guarantee_max == 28

    def test_k1(self):
        t = thresholds(1)
        assert t.lam == 4
        assert t.n_guaranteed == 1

    def test_lambda_exception_set_is_3_5_7(self):
        exceptions = [
            k for k in range(1, 10_001) if lambda_of(k) != isqrt(4 * k - 2) + 3
        ]
        assert exceptions == [3, 5, 7]

    def test_quadratic_margin_positive(self):
        for k in range(1, 10_001):
            lam = lambda_of(k)
            assert 4 * k - lam * lam + 6 * lam - 11 > 0

    def test_4k_minus_2_never_square(self):
        for k in range(1, 10_001):
            assert isqrt(4 * k - 2) ** 2 != 4 * k - 2

    def test_gap_between_counterexample_and_guarantee(self):
        # inline arithmetic to keep a million iterations quick
        for k in range(1, 1_000_001):
            tau = ceil_isqrt(2 * k - 1)
            if 2 * tau > k:
                continue
            lam = min(isqrt(4 * k - 2) + 3, k // 2 + 4)
            assert 5 * k - 2 * tau - 3 < 5 * k - lam

    def test_gap_matches_thresholds_fields(self):
        for k in (8, 10, 50, 1234, 99991):
            t = thresholds(k)
            if construction_admissible(k):
                assert t.n_counterexample < t.n_guaranteed


class TestClassify:
    @pytest.mark.parametrize(
        "n,k,regime",
        [
            (28, 8, Regime.NO_GUARANTEE),
            (29, 8, Regime.COUNTEREXAMPLE_EXISTS),
            (30, 8, Regime.OPEN),
            (32, 8, Regime.GUARANTEED),
            (37, 10, Regime.COUNTEREXAMPLE_EXISTS),
            (40, 10, Regime.CONJECTURED_GUARANTEED),
            (41, 10, Regime.GUARANTEED),
        ],
    )
    def test_golden_regimes(self, n, k, regime):
        assert classify(n, k).regime is regime

    def test_total_and_deterministic(self):
        for k in range(1, 40):
            for n in range(1, 6 * k + 10):
                first = classify(n, k)
                assert classify(n, k) == first
                assert isinstance(first.regime, Regime)
                assert first.citation

    def test_inadmissible_counterexample_order_is_not_claimed(self):
        # k=5 has tau=3 > 2.5: the coloring is not constructible, so the
        # order 5k-2*tau-3 = 16 must not be reported as a counterexample
        report = classify(16, 5)
        assert report.regime in (Regime.NO_GUARANTEE, Regime.OPEN)
        assert "inadmissible" in report.citation

    def test_proved_beats_constructible_in_chain_order(self):
        # the decision chain puts the proved guarantee first; for every
        # admissible k they never overlap anyway
        for k in range(1, 2000):
            t = thresholds(k)
            if construction_admissible(k):
                assert classify(t.n_counterexample, k).regime is (
                    Regime.COUNTEREXAMPLE_EXISTS
                )

    def test_errors(self):
        with pytest.raises(ValueError):
            classify(0, 3)
        with pytest.raises(ValueError):
            classify(3, 0)
