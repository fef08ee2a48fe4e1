"""Single-family fits, scoring and the auto-train ranking."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from curfit import (
    AllFamiliesFailedError,
    ConstantLabelError,
    DataSplit,
    FamilyConfig,
    FittedModel,
    ModelFamily,
    SingularSystemError,
    SplitView,
    auto_train,
    fit_model,
    predict,
    predict_many,
    r_squared,
    sinusoidal_params,
)

from conftest import make_dataset, splat


def fit(family, x, y, order=2, names=None):
    return fit_model(FamilyConfig(family, order), x, y, names)


def view(x, y, names=None, label="y"):
    x = np.asarray(x, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    if names is None:
        names = tuple(f"x{i + 1}" for i in range(x.shape[1]))
    return SplitView(x, np.asarray(y, dtype=np.float64), tuple(names), label)


def manual_split(train_view, test_view):
    return DataSplit(train_view, test_view, test_percent=0.0, seed=0)


class TestFitModel:
    def test_simple_recovers_line(self):
        x = np.linspace(0.0, 9.0, 40)
        model = fit(ModelFamily.SIMPLE, x, 2.0 + 3.0 * x)
        np.testing.assert_allclose(model.coefficients, [2.0, 3.0], atol=1e-9)

    def test_multiple_recovers_plane(self):
        r = np.random.default_rng(7)
        x = r.uniform(-5, 5, size=(60, 2))
        y = 15.0 + 9.0 * x[:, 0] - 6.0 * x[:, 1]
        model = fit(ModelFamily.MULTIPLE, x, y)
        np.testing.assert_allclose(model.coefficients, [15.0, 9.0, -6.0], atol=1e-9)

    def test_polynomial_recovers_quadratic(self):
        x = np.linspace(0.5, 6.0, 50)
        model = fit(ModelFamily.POLYNOMIAL, x, 3.0 + 4.0 * x + 8.0 * x**2)
        np.testing.assert_allclose(model.coefficients, [3.0, 4.0, 8.0], atol=1e-8)

    def test_logarithmic_recovers(self):
        r = np.random.default_rng(8)
        x = r.uniform(0.5, 20.0, size=(80, 2))
        y = -1.57 + 4.4 * np.log(x[:, 0]) + 3.6 * np.log(x[:, 1])
        model = fit(ModelFamily.LOGARITHMIC, x, y)
        np.testing.assert_allclose(model.coefficients, [-1.57, 4.4, 3.6], atol=1e-9)

    def test_exponential_recovers(self):
        r = np.random.default_rng(9)
        x = r.uniform(0.0, 3.0, size=(80, 2))
        y = 2.0 + 3.0 * np.exp(x[:, 0]) + 8.0 * np.exp(x[:, 1])
        model = fit(ModelFamily.EXPONENTIAL, x, y)
        np.testing.assert_allclose(model.coefficients, [2.0, 3.0, 8.0], atol=1e-9)

    def test_sinusoidal_recovers(self):
        x = np.linspace(0.0, 4.0 * math.pi, 64)
        y = 3.0 + 4.0 * np.sin(x + 5.0)
        model = fit(ModelFamily.SINUSOIDAL, x, y)
        # y = 3 + 4 cos5 sin x + 4 sin5 cos x
        expected = [3.0, 4.0 * math.cos(5.0), 4.0 * math.sin(5.0)]
        np.testing.assert_allclose(model.coefficients, expected, atol=1e-9)

    def test_single_feature_families_bind_first_feature(self):
        x = np.column_stack([np.linspace(1, 5, 30), np.zeros(30)])
        model = fit(ModelFamily.SIMPLE, x, 2 + 3 * x[:, 0], names=("a", "b"))
        assert model.bound_features == ("a",)

    def test_multi_feature_families_bind_all(self):
        x = np.random.default_rng(1).uniform(1, 2, size=(30, 2))
        model = fit(ModelFamily.MULTIPLE, x, x.sum(axis=1), names=("a", "b"))
        assert model.bound_features == ("a", "b")

    def test_insufficient_data_is_singular(self):
        with pytest.raises(SingularSystemError):
            fit(ModelFamily.POLYNOMIAL, np.array([1.0, 2.0]), np.array([1.0, 2.0]))

    def test_constant_feature_is_singular(self):
        x = np.full(20, 3.0)
        with pytest.raises(SingularSystemError):
            fit(ModelFamily.SIMPLE, x, np.arange(20.0))


class TestPredict:
    # [TRIVIAL] spot values
    def test_simple_intercept(self):
        model = FittedModel(FamilyConfig(ModelFamily.SIMPLE), np.array([2.0, 3.0]), ("x",))
        assert predict(model, [0.0]) == 2.0

    def test_polynomial_at_two(self):
        model = FittedModel(
            FamilyConfig(ModelFamily.POLYNOMIAL, 2), np.array([3.0, 4.0, 8.0]), ("x",)
        )
        assert predict(model, [2.0]) == 43.0

    def test_sinusoidal_at_zero(self):
        model = FittedModel(
            FamilyConfig(ModelFamily.SINUSOIDAL), np.array([3.0, 1.5, 0.25]), ("x",)
        )
        assert predict(model, [0.0]) == pytest.approx(3.25, abs=1e-15)

    def test_predict_many_matches_predict(self):
        model = FittedModel(FamilyConfig(ModelFamily.SIMPLE), np.array([1.0, 2.0]), ("x",))
        xs = np.array([[0.0], [1.0], [2.5]])
        np.testing.assert_array_equal(
            predict_many(model, xs), [predict(model, row) for row in xs]
        )


class TestRSquared:
    def test_perfect_fit(self):
        y = np.array([1.0, 2.0, 3.0])
        assert r_squared(y, y).r2 == 1.0

    def test_mean_predictor_scores_zero(self):
        y = np.array([1.0, 2.0, 3.0])
        report = r_squared(np.full(3, y.mean()), y)
        assert report.r2 == 0.0

    def test_worse_than_mean_is_negative(self):
        # [DERIVED] y=[1,2,3], yhat=[1,2,5]: s_t=2, s_r=4, r2=-1
        report = r_squared(np.array([1.0, 2.0, 5.0]), np.array([1.0, 2.0, 3.0]))
        assert report.s_t == 2.0
        assert report.s_r == 4.0
        assert report.r2 == -1.0

    def test_constant_label_imperfect_fit(self):
        with pytest.raises(ConstantLabelError):
            r_squared(np.array([1.0, 2.0]), np.array([5.0, 5.0]))

    def test_constant_label_perfect_fit(self):
        report = r_squared(np.array([5.0, 5.0]), np.array([5.0, 5.0]))
        assert report.r2 == 1.0

    def test_near_perfect_clamps_to_exactly_one(self):
        y = np.array([10.0, 20.0, 30.0])
        yhat = y + 1e-9
        report = r_squared(yhat, y)
        assert report.r2 == 1.0

    def test_small_genuine_residual_not_clamped(self):
        y = np.array([0.0, 1.0])
        report = r_squared(np.array([0.0, 0.9]), y)
        assert report.r2 < 1.0


class TestSinusoidalParams:
    def test_three_four_five(self):
        # [DERIVED] 3-4-5 triangle
        p = sinusoidal_params(3.0, 3.0, 4.0)
        assert p.c1 == 5.0
        assert p.theta == pytest.approx(math.atan2(4.0, 3.0))

    def test_pure_sine_axis(self):
        p = sinusoidal_params(0.0, 1.0, 0.0)
        assert (p.c1, p.theta) == (1.0, 0.0)

    def test_pure_cosine_axis(self):
        p = sinusoidal_params(0.0, 0.0, 1.0)
        assert p.c1 == 1.0
        assert p.theta == pytest.approx(math.pi / 2)

    def test_zero_amplitude_flagged(self):
        p = sinusoidal_params(7.0, 0.0, 0.0)
        assert p.zero_amplitude
        assert (p.c1, p.theta) == (0.0, 0.0)

    def test_phase_lands_in_half_open_interval(self):
        p = sinusoidal_params(0.0, -1.0, 0.0)
        assert p.theta == pytest.approx(math.pi)
        assert -math.pi < p.theta <= math.pi

    @settings(max_examples=100, deadline=None)
    @given(
        c1=st.floats(min_value=1e-6, max_value=1e6),
        theta=st.floats(min_value=-math.pi + 1e-9, max_value=math.pi),
    )
    def test_round_trip(self, c1, theta):
        a1 = c1 * math.cos(theta)
        a2 = c1 * math.sin(theta)
        p = sinusoidal_params(0.0, a1, a2)
        assert p.c1 == pytest.approx(c1, rel=1e-12)
        # wrap-around at ±pi makes the angle itself discontinuous; compare
        # on the circle instead
        delta = (p.theta - theta + math.pi) % (2 * math.pi) - math.pi
        assert abs(delta) < 1e-9 * max(1.0, abs(theta))


class TestAutoTrain:
    def _linear_dataset(self, n=60):
        x = np.linspace(0.5, 10.0, n)
        return make_dataset(["x", "y"], np.column_stack([x, 2.0 + 3.0 * x]))

    def test_noiseless_line_ranks_simple_first(self):
        ranked = auto_train(splat(self._linear_dataset()))
        assert ranked.best.family is ModelFamily.SIMPLE
        assert ranked.best.train.r2 == 1.0

    def test_all_six_families_attempted(self):
        ranked = auto_train(splat(self._linear_dataset()))
        assert {e.family for e in ranked.entries} == set(ModelFamily)
        assert len(ranked.entries) == 6

    def test_ranking_soundness(self):
        r = np.random.default_rng(5)
        x = r.uniform(0.5, 8.0, size=100)
        y = 1.0 + 0.5 * x + r.normal(0, 2.0, size=100)
        ranked = auto_train(splat(make_dataset(["x", "y"], np.column_stack([x, y]))))
        successes = [e for e in ranked.entries if e.succeeded]
        assert successes[0] is ranked.best
        for entry in successes:
            assert ranked.best.train.r2 >= entry.train.r2
        # failures, if any, sit behind every success
        tail = ranked.entries[len(successes):]
        assert all(not e.succeeded for e in tail)

    def test_tie_breaks_by_family_precedence(self):
        # single feature: simple and multiple produce the identical basis,
        # so their scores tie exactly and declaration order must win
        ranked = auto_train(splat(self._linear_dataset()))
        families = [e.family for e in ranked.entries if e.train is not None and e.train.r2 == 1.0]
        assert families.index(ModelFamily.SIMPLE) < families.index(ModelFamily.MULTIPLE)

    def test_domain_failure_demoted_with_note(self):
        x = np.linspace(0.0, 5.0, 50)  # zero breaks the log family
        ds = make_dataset(["x", "y"], np.column_stack([x, 1.0 + 2.0 * x]))
        ranked = auto_train(splat(ds))
        log_entry = next(e for e in ranked.entries if e.family is ModelFamily.LOGARITHMIC)
        assert not log_entry.succeeded
        assert "logarithmic" in log_entry.error or ">" in log_entry.error
        assert sum(e.succeeded for e in ranked.entries) == 5

    def test_row_order_invariance(self):
        r = np.random.default_rng(11)
        x = r.uniform(0.5, 5.0, size=(80, 1))
        y = 4.0 + 2.5 * x[:, 0] + r.normal(0, 0.1, size=80)
        a = fit(ModelFamily.SIMPLE, x, y)
        perm = r.permutation(80)
        b = fit(ModelFamily.SIMPLE, x[perm], y[perm])
        np.testing.assert_allclose(a.coefficients, b.coefficients, atol=1e-9)

    def test_polynomial_nesting(self):
        r = np.random.default_rng(12)
        x = r.uniform(0.0, 3.0, size=(60, 1))
        y = np.sin(x[:, 0] * 2.0) + r.normal(0, 0.2, size=60)
        previous = -np.inf
        for order in range(1, 7):
            model = fit(ModelFamily.POLYNOMIAL, x, y, order=order)
            score = r_squared(predict_many(model, x), y)
            assert score.r2 >= previous - 1e-12
            previous = score.r2

    def test_all_families_failed(self):
        ds = make_dataset(["x", "y"], [[1.0, 2.0]])  # one row: every fit singular
        with pytest.raises(AllFamiliesFailedError) as err:
            auto_train(splat(ds, test_percent=0.0))
        assert set(err.value.notes) == {f.value for f in ModelFamily}

    def test_test_scoring_failure_keeps_entry_with_note(self):
        x_train = np.linspace(1.0, 10.0, 50)
        split = manual_split(
            view(x_train, 1.0 + 2.0 * np.log(x_train), names=("x",)),
            view(np.array([0.0]), np.array([1.0]), names=("x",)),
        )
        ranked = auto_train(split)
        log_entry = next(e for e in ranked.entries if e.family is ModelFamily.LOGARITHMIC)
        assert log_entry.succeeded
        assert log_entry.test is None
        assert "test scoring failed" in log_entry.error

    def test_empty_test_view_yields_no_test_score(self):
        ranked = auto_train(splat(self._linear_dataset(), test_percent=0.0))
        assert ranked.best.test is None
        assert ranked.best.error is None

    def test_negative_test_r2_allowed(self):
        # model extrapolates badly onto the held-out rows
        split = manual_split(
            view(np.array([1.0, 2.0, 3.0, 4.0]), np.array([1.0, 2.0, 3.0, 4.0])),
            view(np.array([10.0, 11.0]), np.array([-50.0, -60.0])),
        )
        ranked = auto_train(split)
        simple = next(e for e in ranked.entries if e.family is ModelFamily.SIMPLE)
        assert simple.test is not None
        assert simple.test.r2 < 0.0


class TestExactRecoveryInvariant:
    """Noiseless data from each family refits to the same coefficients."""

    CASES = [
        (ModelFamily.SIMPLE, [2.0, 3.0]),
        (ModelFamily.MULTIPLE, [1.0, -2.0, 0.5]),
        (ModelFamily.POLYNOMIAL, [3.0, 4.0, 8.0]),
        (ModelFamily.LOGARITHMIC, [-1.57, 4.4, 3.6]),
        (ModelFamily.EXPONENTIAL, [2.0, 3.0, 8.0]),
        (ModelFamily.SINUSOIDAL, [3.0, 2.0, -1.5]),
    ]

    @pytest.mark.parametrize("family,coeffs", CASES, ids=[f.value for f, _ in CASES])
    def test_refit_recovers(self, family, coeffs, rng):
        from curfit import design_matrix

        k = len(coeffs)
        c = 1 if k == 2 or family in (ModelFamily.POLYNOMIAL, ModelFamily.SINUSOIDAL) else k - 1
        x = rng.uniform(0.5, 3.0, size=(max(60, 3 * k), c))
        cfg = FamilyConfig(family, 2)
        y = design_matrix(cfg, x) @ np.asarray(coeffs)
        model = fit_model(cfg, x, y)
        np.testing.assert_allclose(model.coefficients, coeffs, atol=1e-6)
        score = r_squared(predict_many(model, x), y)
        assert score.r2 >= 1.0 - 1e-9

    def test_residual_orthogonality(self, rng):
        from curfit import design_matrix

        x = rng.uniform(0.5, 5.0, size=(120, 2))
        y = 1.0 + 2.0 * x[:, 0] - 3.0 * x[:, 1] + rng.normal(0, 1.0, size=120)
        for family in (ModelFamily.MULTIPLE, ModelFamily.LOGARITHMIC, ModelFamily.EXPONENTIAL):
            cfg = FamilyConfig(family, 2)
            model = fit_model(cfg, x, y)
            residual = predict_many(model, x) - y
            gram = design_matrix(cfg, x).T @ residual
            bound = 1e-6 * max(1.0, float(np.max(np.abs(y))))
            assert float(np.max(np.abs(gram))) <= bound
