"""Human-readable equations, the JSON result document, and plot series.

Equations render coefficients to exactly three decimal places with signs
folded into the operators ("− 5.842·x2", never "+ -5.842·x2"); the document
always carries the full-precision coefficients alongside the display string.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .dataset import SplitView
from .errors import CurfitError
from .fitting import (
    FittedModel,
    RankedModels,
    predict,
    sinusoidal_params,
)
from .models import ModelFamily

SCHEMA_VERSION = 1
CURVE_POINTS = 200

_MINUS = "−"
_DOT = "·"
_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _fmt(value: float) -> str:
    return f"{value:.3f}".replace("-", _MINUS)


def _join_terms(intercept: float, pairs: list[tuple[float, str]]) -> str:
    parts = [_fmt(intercept)]
    for coefficient, symbol in pairs:
        sign = f" {_MINUS} " if coefficient < 0 else " + "
        parts.append(f"{sign}{_fmt(abs(coefficient))}{_DOT}{symbol}")
    return "y = " + "".join(parts)


def _power_symbol(k: int) -> str:
    return "x" if k == 1 else "x" + str(k).translate(_SUPERSCRIPTS)


def format_equation(model: FittedModel) -> str:
    """Render a fitted model in its family's canonical display form."""
    family = model.config.family
    a = model.coefficients
    if family is ModelFamily.SIMPLE:
        return _join_terms(a[0], [(a[1], "x")])
    if family is ModelFamily.MULTIPLE:
        pairs = [(a[j], f"x{j}") for j in range(1, len(a))]
        return _join_terms(a[0], pairs)
    if family is ModelFamily.POLYNOMIAL:
        pairs = [(a[k], _power_symbol(k)) for k in range(1, len(a))]
        return _join_terms(a[0], pairs)
    if family is ModelFamily.LOGARITHMIC:
        pairs = [(a[j], f"ln(x{j})") for j in range(1, len(a))]
        return _join_terms(a[0], pairs)
    if family is ModelFamily.EXPONENTIAL:
        pairs = [(a[j], f"e^(x{j})") for j in range(1, len(a))]
        return _join_terms(a[0], pairs)
    # sinusoidal: report the recovered amplitude/phase form
    params = sinusoidal_params(float(a[0]), float(a[1]), float(a[2]))
    inner_sign = _MINUS if params.theta < 0 else "+"
    inner = f"x {inner_sign} {_fmt(abs(params.theta))}"
    return f"y = {_fmt(params.a0)} + {_fmt(params.c1)}{_DOT}sin({inner})"


@dataclass(frozen=True, eq=False)
class PlotSeries:
    """Scatter of the data plus the model curve over the feature range."""

    scatter: np.ndarray  # (n, 2) observed (x, y)
    curve: np.ndarray  # (m, 2) sampled (x, yhat), m <= CURVE_POINTS
    feature_name: str
    label_name: str
    degenerate: bool = False

    def payload(self) -> "PlotPayload":
        return PlotPayload(
            scatter=tuple((float(p[0]), float(p[1])) for p in self.scatter),
            curve=tuple((float(p[0]), float(p[1])) for p in self.curve),
            feature_name=self.feature_name,
            label_name=self.label_name,
            degenerate=self.degenerate,
        )


@dataclass(frozen=True)
class PlotPayload:
    """Serialization-friendly form of a PlotSeries."""

    scatter: tuple[tuple[float, float], ...]
    curve: tuple[tuple[float, float], ...]
    feature_name: str
    label_name: str
    degenerate: bool = False


def plot_series(model: FittedModel, view: SplitView) -> PlotSeries:
    """Data scatter plus a CURVE_POINTS-point fitted curve.

    The curve varies the model's bound first feature across its observed
    range; any other features are frozen at their means over ``view``.
    Grid points whose prediction errors or is non-finite are skipped.
    """
    if view.n_rows == 0:
        raise ValueError("cannot plot an empty view")
    if view.feature_names[0] != model.bound_features[0]:
        raise ValueError(
            f"view columns start with {view.feature_names[0]!r}, "
            f"model is bound to {model.bound_features[0]!r}"
        )
    x = view.features[:, 0]
    scatter = np.column_stack([x, view.labels])
    x_min, x_max = float(x.min()), float(x.max())
    degenerate = x_min == x_max
    grid = np.linspace(x_min, x_max, CURVE_POINTS)
    means = view.features.mean(axis=0)

    points = []
    row = means.copy()
    for gx in grid:
        row[0] = gx
        try:
            yhat = predict(model, row)
        except CurfitError:
            continue
        if np.isfinite(yhat):
            points.append((gx, yhat))
    curve = np.array(points, dtype=np.float64).reshape(-1, 2)
    return PlotSeries(scatter, curve, view.feature_names[0], view.label_name, degenerate)


@dataclass(frozen=True)
class SinusoidalForm:
    """Recovered sinusoidal parameters attached to a sinusoidal entry."""

    a0: float
    c1: float
    theta: float


@dataclass(frozen=True)
class ModelReport:
    """One document entry: a scored model or a recorded failure."""

    family: str
    equation: str | None
    coefficients: tuple[float, ...] | None
    bound_features: tuple[str, ...] | None
    train_r2: float | None
    test_r2: float | None
    error: str | None
    sinusoidal: SinusoidalForm | None = None


@dataclass(frozen=True)
class ResultDocument:
    """The machine-readable training result; round-trips through JSON."""

    dataset_name: str
    rows: int
    dropped_rows: int
    features: tuple[str, ...]
    label: str
    test_percent: float
    seed: int
    models: tuple[ModelReport, ...]
    plot: tuple[tuple[str, PlotPayload], ...] | None = None

    def to_dict(self) -> dict:
        doc = {
            "curfit_schema": SCHEMA_VERSION,
            "dataset": {
                "name": self.dataset_name,
                "rows": self.rows,
                "dropped_rows": self.dropped_rows,
            },
            "selection": {"features": list(self.features), "label": self.label},
            "split": {"test_percent": self.test_percent, "seed": self.seed},
            "models": [_model_to_dict(entry) for entry in self.models],
        }
        if self.plot is not None:
            doc["plot"] = {
                family: {
                    "scatter": [list(p) for p in payload.scatter],
                    "curve": [list(p) for p in payload.curve],
                    "feature": payload.feature_name,
                    "label": payload.label_name,
                    "degenerate": payload.degenerate,
                }
                for family, payload in self.plot
            }
        return doc

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=indent)

    @classmethod
    def from_dict(cls, doc: dict) -> "ResultDocument":
        if doc.get("curfit_schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {doc.get('curfit_schema')!r}")
        plot = None
        if "plot" in doc:
            plot = tuple(
                (
                    family,
                    PlotPayload(
                        scatter=tuple(tuple(p) for p in series["scatter"]),
                        curve=tuple(tuple(p) for p in series["curve"]),
                        feature_name=series["feature"],
                        label_name=series["label"],
                        degenerate=series["degenerate"],
                    ),
                )
                for family, series in doc["plot"].items()
            )
        return cls(
            dataset_name=doc["dataset"]["name"],
            rows=doc["dataset"]["rows"],
            dropped_rows=doc["dataset"]["dropped_rows"],
            features=tuple(doc["selection"]["features"]),
            label=doc["selection"]["label"],
            test_percent=doc["split"]["test_percent"],
            seed=doc["split"]["seed"],
            models=tuple(_model_from_dict(entry) for entry in doc["models"]),
            plot=plot,
        )

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        return cls.from_dict(json.loads(text))


def _model_to_dict(entry: ModelReport) -> dict:
    out = {
        "family": entry.family,
        "equation": entry.equation,
        "coefficients": list(entry.coefficients) if entry.coefficients is not None else None,
        "bound_features": list(entry.bound_features) if entry.bound_features is not None else None,
        "train_r2": entry.train_r2,
        "test_r2": entry.test_r2,
        "error": entry.error,
    }
    if entry.sinusoidal is not None:
        out["sinusoidal"] = {
            "a0": entry.sinusoidal.a0,
            "c1": entry.sinusoidal.c1,
            "theta": entry.sinusoidal.theta,
        }
    return out


def _model_from_dict(entry: dict) -> ModelReport:
    sinusoidal = None
    if "sinusoidal" in entry:
        s = entry["sinusoidal"]
        sinusoidal = SinusoidalForm(s["a0"], s["c1"], s["theta"])
    return ModelReport(
        family=entry["family"],
        equation=entry["equation"],
        coefficients=tuple(entry["coefficients"]) if entry["coefficients"] is not None else None,
        bound_features=tuple(entry["bound_features"]) if entry["bound_features"] is not None else None,
        train_r2=entry["train_r2"],
        test_r2=entry["test_r2"],
        error=entry["error"],
        sinusoidal=sinusoidal,
    )


def build_result_document(
    ranked: RankedModels,
    *,
    dataset_name: str,
    rows: int,
    dropped_rows: int,
    feature_names: tuple[str, ...],
    label_name: str,
    test_percent: float,
    seed: int,
    plot: dict[str, PlotPayload] | None = None,
) -> ResultDocument:
    """Assemble the serializable document in ranked order."""
    reports = []
    for entry in ranked.entries:
        if entry.succeeded:
            model = entry.model
            sinusoidal = None
            if model.config.family is ModelFamily.SINUSOIDAL:
                p = sinusoidal_params(*(float(v) for v in model.coefficients))
                sinusoidal = SinusoidalForm(p.a0, p.c1, p.theta)
            reports.append(
                ModelReport(
                    family=entry.family.value,
                    equation=format_equation(model),
                    coefficients=tuple(float(v) for v in model.coefficients),
                    bound_features=model.bound_features,
                    train_r2=entry.train.r2,
                    test_r2=entry.test.r2 if entry.test is not None else None,
                    error=entry.error,
                    sinusoidal=sinusoidal,
                )
            )
        else:
            reports.append(
                ModelReport(
                    family=entry.family.value,
                    equation=None,
                    coefficients=None,
                    bound_features=None,
                    train_r2=None,
                    test_r2=None,
                    error=entry.error,
                )
            )
    return ResultDocument(
        dataset_name=dataset_name,
        rows=rows,
        dropped_rows=dropped_rows,
        features=tuple(feature_names),
        label=label_name,
        test_percent=float(test_percent),
        seed=int(seed),
        models=tuple(reports),
        plot=tuple(sorted(plot.items())) if plot is not None else None,
    )
