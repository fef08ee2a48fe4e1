"""Normal-equation assembly and the pivoted Gaussian elimination solve.

The coefficient vector that minimizes the sum of squared residuals solves
``Z a = y`` where ``Z[p][q] = sum_i z_p(x_i) z_q(x_i)`` and
``y[p] = sum_i z_p(x_i) y_i``.  Both symmetric halves of ``Z`` are filled
from one shared sum, so symmetry holds exactly, not merely to tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BasisOverflowError, DimensionMismatchError, SingularSystemError

# Pivot below this fraction of its column's pre-elimination maximum is
# treated as rank deficiency rather than rounding noise.
SINGULAR_REL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class NormalSystem:
    """Symmetric normal matrix plus its right-hand side."""

    z: np.ndarray  # (k, k)
    y: np.ndarray  # (k,)

    @property
    def k(self) -> int:
        return self.y.shape[0]


@dataclass(frozen=True, eq=False)
class Coefficients:
    """Solved coefficient vector a0..a_{k-1}, intercept first."""

    a: np.ndarray

    def __len__(self) -> int:
        return self.a.shape[0]


def accumulate_normal_equations(basis_rows, labels) -> NormalSystem:
    """Build the normal system from basis-expanded rows and labels.

    Raises:
        DimensionMismatchError: row/label counts disagree or input empty.
        BasisOverflowError: a sum overflows to a non-finite value.
    """
    b = np.asarray(basis_rows, dtype=np.float64)
    y_in = np.asarray(labels, dtype=np.float64)
    if b.ndim != 2 or y_in.ndim != 1 or b.shape[0] != y_in.shape[0]:
        raise DimensionMismatchError(
            f"basis rows {b.shape} incompatible with labels {y_in.shape}"
        )
    if b.shape[0] < 1:
        raise DimensionMismatchError("need at least one data point")

    k = b.shape[1]
    z = np.empty((k, k))
    y = np.empty(k)
    for p in range(k):
        y[p] = np.dot(b[:, p], y_in)
        for q in range(p, k):
            s = np.dot(b[:, p], b[:, q])
            z[p, q] = s
            z[q, p] = s
    if not (np.all(np.isfinite(z)) and np.all(np.isfinite(y))):
        raise BasisOverflowError("normal-equation sums overflowed")
    return NormalSystem(z, y)


def solve_system(system: NormalSystem) -> Coefficients:
    """Solve ``Z a = y`` by Gaussian elimination with partial pivoting.

    Raises:
        SingularSystemError: a pivot falls below ``SINGULAR_REL_TOL`` times
            the largest pre-elimination magnitude of its column, which
            signals rank deficiency (too few data points or collinear
            basis columns).
    """
    a = np.array(system.z, dtype=np.float64, copy=True)
    b = np.array(system.y, dtype=np.float64, copy=True)
    k = system.k
    column_scale = np.max(np.abs(a), axis=0)

    for j in range(k):
        pivot_row = j + int(np.argmax(np.abs(a[j:, j])))
        pivot = a[pivot_row, j]
        if abs(pivot) <= SINGULAR_REL_TOL * column_scale[j]:
            raise SingularSystemError(
                f"pivot {pivot:.3e} in column {j} signals a rank-deficient system"
            )
        if pivot_row != j:
            a[[j, pivot_row]] = a[[pivot_row, j]]
            b[[j, pivot_row]] = b[[pivot_row, j]]
        factors = a[j + 1 :, j] / a[j, j]
        a[j + 1 :, j:] -= np.outer(factors, a[j, j:])
        b[j + 1 :] -= factors * b[j]

    x = np.empty(k)
    for j in range(k - 1, -1, -1):
        x[j] = (b[j] - np.dot(a[j, j + 1 :], x[j + 1 :])) / a[j, j]
    return Coefficients(x)
