"""CSV ingestion, column selection and the seeded train/test split.

The parser is deliberately strict: it accepts plain comma-separated numeric
tables (first row = header) and nothing fancier.  Rows with unparseable or
empty cells (for example the ``?`` markers common in public datasets) are
dropped and counted; a row whose field count disagrees with the header aborts
the whole file, since silent misalignment would corrupt every column after it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CsvError,
    DuplicateFeatureError,
    DuplicateHeaderError,
    EmptyInputError,
    EmptyTrainError,
    LabelInFeaturesError,
    RaggedRowError,
    SelectionError,
    UnknownColumnError,
)


@dataclass(frozen=True, eq=False)
class Dataset:
    """A validated numeric table: unique named columns, all values finite."""

    column_names: tuple[str, ...]
    rows: np.ndarray  # (n, c) float64
    dropped_row_count: int = 0

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    @property
    def c(self) -> int:
        return self.rows.shape[1]


@dataclass(frozen=True)
class ColumnSelection:
    """Index-resolved feature columns plus the single label column."""

    feature_indices: tuple[int, ...]
    label_index: int


@dataclass(frozen=True, eq=False)
class SplitView:
    """One side of a split: the selected feature matrix and label vector."""

    features: np.ndarray  # (m, f) float64
    labels: np.ndarray  # (m,) float64
    feature_names: tuple[str, ...]
    label_name: str

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]


@dataclass(frozen=True, eq=False)
class DataSplit:
    """Seeded train/test partition of the selected columns of a dataset."""

    train: SplitView
    test: SplitView
    test_percent: float
    seed: int


def parse_csv(data: bytes | str) -> Dataset:
    """Parse CSV bytes (or text) into a :class:`Dataset`.

    First record is the header.  Cells are split on plain commas; quoting is
    not supported, so a quoted field containing a comma shows up as a field
    count mismatch and rejects the file.  Data rows where any cell fails to
    parse to a finite float are dropped and counted in ``dropped_row_count``.

    Raises:
        EmptyInputError: no header, or zero data rows survive.
        DuplicateHeaderError: repeated column name.
        RaggedRowError: a row's field count differs from the header's.
        CsvError: undecodable input or blank column name.
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise CsvError(f"input is not valid UTF-8: {exc}") from exc
    else:
        text = data.lstrip("﻿")

    lines = [(i + 1, line) for i, line in enumerate(text.splitlines())]
    lines = [(num, line) for num, line in lines if line.strip() != ""]
    if not lines:
        raise EmptyInputError("no header row")

    _, header_line = lines[0]
    names = [cell.strip() for cell in header_line.split(",")]
    if any(name == "" for name in names):
        raise CsvError("blank column name in header")
    seen: set[str] = set()
    for name in names:
        if name in seen:
            raise DuplicateHeaderError(f"duplicate column name: {name!r}")
        seen.add(name)
    c = len(names)

    kept: list[list[float]] = []
    dropped = 0
    for line_number, line in lines[1:]:
        cells = line.split(",")
        if len(cells) != c:
            raise RaggedRowError(line_number, expected=c, got=len(cells))
        values = []
        ok = True
        for cell in cells:
            cell = cell.strip()
            if cell == "":
                ok = False
                break
            try:
                value = float(cell)
            except ValueError:
                ok = False
                break
            if not math.isfinite(value):
                ok = False
                break
            values.append(value)
        if ok:
            kept.append(values)
        else:
            dropped += 1

    if not kept:
        if dropped:
            raise EmptyInputError(
                f"no data rows survived parsing ({dropped} dropped)"
            )
        raise EmptyInputError("no data rows")

    rows = np.array(kept, dtype=np.float64)
    return Dataset(tuple(names), rows, dropped_row_count=dropped)


def select_columns(
    ds: Dataset, names_features: list[str] | tuple[str, ...], name_label: str
) -> ColumnSelection:
    """Resolve feature/label names to column indices, preserving order.

    Raises:
        UnknownColumnError: a name is not in the dataset.
        DuplicateFeatureError: a feature is listed twice.
        LabelInFeaturesError: the label also appears among the features.
    """
    if not names_features:
        raise SelectionError("no feature columns selected")
    index = {name: i for i, name in enumerate(ds.column_names)}
    feature_indices = []
    for name in names_features:
        if name not in index:
            raise UnknownColumnError(name)
        feature_indices.append(index[name])
    if len(set(feature_indices)) != len(feature_indices):
        raise DuplicateFeatureError(
            f"duplicate feature column in {list(names_features)}"
        )
    if name_label not in index:
        raise UnknownColumnError(name_label)
    label_index = index[name_label]
    if label_index in feature_indices:
        raise LabelInFeaturesError(
            f"label column {name_label!r} is also listed as a feature"
        )
    return ColumnSelection(tuple(feature_indices), label_index)


def _view(ds: Dataset, sel: ColumnSelection, row_indices: np.ndarray) -> SplitView:
    features = ds.rows[np.ix_(row_indices, sel.feature_indices)].copy()
    labels = ds.rows[row_indices, sel.label_index].copy()
    names = tuple(ds.column_names[i] for i in sel.feature_indices)
    return SplitView(features, labels, names, ds.column_names[sel.label_index])


def split_dataset(
    ds: Dataset,
    sel: ColumnSelection,
    test_percent: float = 10.0,
    seed: int = 42,
) -> DataSplit:
    """Shuffle rows with a seeded generator and split off the test share.

    The test row count is round-half-up of ``n * test_percent / 100``; the
    first rows of the shuffled order form the test set.  Identical inputs
    always produce the identical split.

    Raises:
        ValueError: ``test_percent`` outside [0, 100).
        EmptyTrainError: the split would leave zero training rows.
    """
    if not 0.0 <= test_percent < 100.0:
        raise ValueError(f"test_percent must be in [0, 100), got {test_percent}")
    n = ds.n
    test_count = int(math.floor(n * test_percent / 100.0 + 0.5))
    if n - test_count < 1:
        raise EmptyTrainError(
            f"test share of {test_percent}% leaves no training rows (n={n})"
        )
    perm = np.random.default_rng(seed).permutation(n)
    test_idx = np.sort(perm[:test_count])
    train_idx = np.sort(perm[test_count:])
    return DataSplit(
        train=_view(ds, sel, train_idx),
        test=_view(ds, sel, test_idx),
        test_percent=float(test_percent),
        seed=int(seed),
    )
