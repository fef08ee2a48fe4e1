import numpy as np
import pytest

from curfit import ColumnSelection, Dataset, split_dataset


def make_csv(header, rows):
    """Assemble CSV bytes from a header list and an iterable of row lists."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(v) for v in row))
    return ("\n".join(lines) + "\n").encode()


def make_dataset(columns, matrix, dropped=0):
    return Dataset(tuple(columns), np.asarray(matrix, dtype=np.float64), dropped)


def splat(dataset, features=None, label=None, test_percent=10.0, seed=42):
    """Split a dataset with feature columns defaulting to all but the last."""
    names = dataset.column_names
    if features is None:
        features = names[:-1]
    if label is None:
        label = names[-1]
    index = {name: i for i, name in enumerate(names)}
    sel = ColumnSelection(tuple(index[f] for f in features), index[label])
    return split_dataset(dataset, sel, test_percent, seed)


@pytest.fixture
def rng():
    return np.random.default_rng(20260826)
