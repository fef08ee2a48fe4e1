"""Fitting one family, scoring with R², and the fit-everything AutoTrain.

``auto_train`` attempts all six families on the training view, scores each on
train (and test, when present), and returns them best-first by training R².
A family whose basis blows up on the data (log of a zero, exp overflow, rank
deficiency) never aborts the run: it is demoted to the tail with its error
recorded, mirroring how a user would want a batch tool to behave.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import DataSplit
from .errors import (
    AllFamiliesFailedError,
    ConstantLabelError,
    CurfitError,
    DimensionMismatchError,
    SingularSystemError,
)
from .models import (
    FAMILY_PRECEDENCE,
    SINGLE_FEATURE_FAMILIES,
    FamilyConfig,
    ModelFamily,
    design_matrix,
)
from .solver import accumulate_normal_equations, solve_system

# s_r at or below this fraction of max(1, s_t) counts as a perfect fit.
PERFECT_FIT_REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class FittedModel:
    """A family config plus its solved coefficients, intercept first."""

    config: FamilyConfig
    coefficients: np.ndarray
    bound_features: tuple[str, ...]


@dataclass(frozen=True)
class ScoreReport:
    """Total sum of squares, residual sum of squares and R² on one split."""

    s_t: float
    s_r: float
    r2: float


@dataclass(frozen=True)
class SinusoidalParams:
    """Mean level, amplitude and phase recovered from linear coefficients."""

    a0: float
    c1: float
    theta: float
    zero_amplitude: bool = False


@dataclass(frozen=True, eq=False)
class RankedEntry:
    """One attempted family: either a scored model or a failure note."""

    family: ModelFamily
    model: FittedModel | None
    train: ScoreReport | None
    test: ScoreReport | None
    error: str | None

    @property
    def succeeded(self) -> bool:
        return self.model is not None


@dataclass(frozen=True, eq=False)
class RankedModels:
    """All attempted families, successes sorted best-first by training R²."""

    entries: tuple[RankedEntry, ...]

    @property
    def best(self) -> RankedEntry:
        return self.entries[0]


def _default_names(count: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(count))


def fit_model(
    cfg: FamilyConfig,
    train_x,
    train_y,
    feature_names: tuple[str, ...] | None = None,
) -> FittedModel:
    """Fit one family by solving its normal equations on the training data.

    ``feature_names`` label the columns of ``train_x``; single-variable
    families record only the first, since that is the one they consume.
    """
    x = np.asarray(train_x, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    y = np.asarray(train_y, dtype=np.float64)
    if x.shape[0] != y.shape[0] or x.shape[0] < 1:
        raise DimensionMismatchError(
            f"features {x.shape} incompatible with labels {y.shape}"
        )
    names = feature_names if feature_names is not None else _default_names(x.shape[1])
    if cfg.family in SINGLE_FEATURE_FAMILIES:
        bound = (names[0],)
    else:
        bound = tuple(names)

    basis = design_matrix(cfg, x)
    try:
        coefficients = solve_system(accumulate_normal_equations(basis, y))
    except SingularSystemError as exc:
        raise SingularSystemError(
            "insufficient or degenerate data points for this model family"
        ) from exc
    return FittedModel(cfg, coefficients.a, bound)


def predict_many(model: FittedModel, features) -> np.ndarray:
    """Predict labels for an (n, c) feature matrix."""
    x = np.asarray(features, dtype=np.float64)
    if x.ndim == 1:
        x = x.reshape(-1, 1)
    return design_matrix(model.config, x) @ model.coefficients


def predict(model: FittedModel, row) -> float:
    """Predict the label for a single feature row."""
    return float(predict_many(model, np.atleast_2d(row))[0])


def r_squared(predictions, labels) -> ScoreReport:
    """Coefficient of determination (s_t - s_r) / s_t.

    A residual sum at or below ``PERFECT_FIT_REL_TOL * max(1, s_t)`` reports
    exactly 1.0.  Held-out data may legitimately score negative.

    Raises:
        ConstantLabelError: s_t == 0 with an imperfect fit (R² undefined).
    """
    yhat = np.asarray(predictions, dtype=np.float64)
    y = np.asarray(labels, dtype=np.float64)
    if yhat.shape != y.shape or y.size == 0:
        raise DimensionMismatchError(
            f"predictions {yhat.shape} incompatible with labels {y.shape}"
        )
    s_t = float(np.sum((y - y.mean()) ** 2))
    s_r = float(np.sum((y - yhat) ** 2))
    if s_r <= PERFECT_FIT_REL_TOL * max(1.0, s_t):
        return ScoreReport(s_t, s_r, 1.0)
    if s_t == 0.0:
        raise ConstantLabelError(
            "labels are constant and the fit is imperfect; R² is undefined"
        )
    return ScoreReport(s_t, s_r, 1.0 - s_r / s_t)


def sinusoidal_params(a0: float, a1: float, a2: float) -> SinusoidalParams:
    """Recover amplitude and phase from the linear sin/cos coefficients.

    c1 = sqrt(a1² + a2²) and theta = atan2(a2, a1), normalized to (-pi, pi].
    A zero (a1, a2) pair has no defined phase; it is returned as c1 = 0,
    theta = 0 with ``zero_amplitude`` set.
    """
    if a1 == 0.0 and a2 == 0.0:
        return SinusoidalParams(a0, 0.0, 0.0, zero_amplitude=True)
    c1 = math.hypot(a1, a2)
    theta = math.atan2(a2, a1)
    if theta <= -math.pi:
        theta = math.pi
    return SinusoidalParams(a0, c1, theta)


def _score_test(model: FittedModel, split: DataSplit) -> tuple[ScoreReport | None, str | None]:
    if split.test.n_rows == 0:
        return None, None
    try:
        test_pred = predict_many(model, split.test.features)
        return r_squared(test_pred, split.test.labels), None
    except CurfitError as exc:
        return None, f"test scoring failed: {exc}"


def auto_train(split: DataSplit, order: int = 2) -> RankedModels:
    """Fit all six families and rank them by descending training R².

    Ties resolve by the fixed family precedence (declaration order of
    :class:`ModelFamily`).  Families that error are kept at the tail with
    the error text, one entry per attempted family.

    Raises:
        AllFamiliesFailedError: not a single family produced a fit.
    """
    successes: list[RankedEntry] = []
    failures: list[RankedEntry] = []
    for family in ModelFamily:
        cfg = FamilyConfig(family, order)
        try:
            model = fit_model(
                cfg, split.train.features, split.train.labels, split.train.feature_names
            )
            train_pred = predict_many(model, split.train.features)
            train_score = r_squared(train_pred, split.train.labels)
            test_score, note = _score_test(model, split)
            successes.append(RankedEntry(family, model, train_score, test_score, note))
        except CurfitError as exc:
            failures.append(RankedEntry(family, None, None, None, str(exc)))

    if not successes:
        raise AllFamiliesFailedError(
            {entry.family.value: entry.error or "failed" for entry in failures}
        )
    successes.sort(key=lambda e: (-e.train.r2, FAMILY_PRECEDENCE[e.family]))
    return RankedModels(tuple(successes + failures))
