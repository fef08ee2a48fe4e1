"""curfit: automated least-squares curve fitting over six model families.

Typical library use::

    from curfit import parse_csv, select_columns, split_dataset, auto_train

    ds = parse_csv(open("data.csv", "rb").read())
    sel = select_columns(ds, ["x1", "x2"], "y")
    split = split_dataset(ds, sel, test_percent=10, seed=42)
    ranked = auto_train(split)
    print(ranked.best.family.value, ranked.best.train.r2)
"""

from . import errors
from .errors import (
    AllFamiliesFailedError,
    BasisOverflowError,
    ConstantLabelError,
    CsvError,
    CurfitError,
    DimensionMismatchError,
    DomainError,
    DuplicateFeatureError,
    DuplicateHeaderError,
    EmptyInputError,
    EmptyTrainError,
    LabelInFeaturesError,
    RaggedRowError,
    SelectionError,
    SingularSystemError,
    UnknownColumnError,
)
from .dataset import (
    ColumnSelection,
    Dataset,
    DataSplit,
    SplitView,
    parse_csv,
    select_columns,
    split_dataset,
)
from .fitting import (
    FittedModel,
    RankedEntry,
    RankedModels,
    ScoreReport,
    SinusoidalParams,
    auto_train,
    fit_model,
    predict,
    predict_many,
    r_squared,
    sinusoidal_params,
)
from .models import (
    FamilyConfig,
    ModelFamily,
    basis_dimension,
    design_matrix,
    expand_basis,
)
from .report import (
    ModelReport,
    PlotPayload,
    PlotSeries,
    ResultDocument,
    build_result_document,
    format_equation,
    plot_series,
)
from .solver import (
    Coefficients,
    NormalSystem,
    accumulate_normal_equations,
    solve_system,
)

__version__ = "0.1.0"

__all__ = [
    "AllFamiliesFailedError",
    "BasisOverflowError",
    "ColumnSelection",
    "Coefficients",
    "ConstantLabelError",
    "CsvError",
    "CurfitError",
    "DataSplit",
    "Dataset",
    "DimensionMismatchError",
    "DomainError",
    "DuplicateFeatureError",
    "DuplicateHeaderError",
    "EmptyInputError",
    "EmptyTrainError",
    "FamilyConfig",
    "LabelInFeaturesError",
    "RaggedRowError",
    "SelectionError",
    "SingularSystemError",
    "UnknownColumnError",
    "FittedModel",
    "ModelFamily",
    "ModelReport",
    "NormalSystem",
    "PlotPayload",
    "PlotSeries",
    "RankedEntry",
    "RankedModels",
    "ResultDocument",
    "ScoreReport",
    "SinusoidalParams",
    "SplitView",
    "accumulate_normal_equations",
    "auto_train",
    "basis_dimension",
    "build_result_document",
    "design_matrix",
    "errors",
    "expand_basis",
    "fit_model",
    "format_equation",
    "parse_csv",
    "plot_series",
    "predict",
    "predict_many",
    "r_squared",
    "select_columns",
    "sinusoidal_params",
    "solve_system",
    "split_dataset",
]
