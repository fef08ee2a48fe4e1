"""The six model families and their basis-function expansions.

Every family is linear in its coefficients once the inputs pass through the
family's basis functions: a row of features maps to a vector
``[1, z1, ..., zk]`` whose leading entry is the intercept basis.  Families
that are inherently single-variable (simple, polynomial, sinusoidal) bind the
first selected feature; the remaining families use every selected feature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import BasisOverflowError, DomainError

MAX_POLY_ORDER = 10


class ModelFamily(Enum):
    """Closed enumeration of supported families; values are the wire tokens.

    Declaration order doubles as the tie-breaking precedence when two
    families reach the same score.
    """

    SIMPLE = "simple"
    MULTIPLE = "multiple"
    POLYNOMIAL = "polynomial"
    LOGARITHMIC = "logarithmic"
    EXPONENTIAL = "exponential"
    SINUSOIDAL = "sinusoidal"


FAMILY_PRECEDENCE = {family: rank for rank, family in enumerate(ModelFamily)}

SINGLE_FEATURE_FAMILIES = frozenset(
    {ModelFamily.SIMPLE, ModelFamily.POLYNOMIAL, ModelFamily.SINUSOIDAL}
)


@dataclass(frozen=True)
class FamilyConfig:
    """A family plus the polynomial order m (ignored by other families)."""

    family: ModelFamily
    order: int = 2

    def __post_init__(self):
        if not 1 <= self.order <= MAX_POLY_ORDER:
            raise ValueError(
                f"polynomial order must be in [1, {MAX_POLY_ORDER}], got {self.order}"
            )


def basis_dimension(cfg: FamilyConfig, feature_count: int) -> int:
    """Number of basis functions, intercept included."""
    if feature_count < 1:
        raise ValueError("feature_count must be >= 1")
    family = cfg.family
    if family is ModelFamily.SIMPLE:
        return 2
    if family is ModelFamily.POLYNOMIAL:
        return cfg.order + 1
    if family is ModelFamily.SINUSOIDAL:
        return 3
    # multiple / logarithmic / exponential: one term per feature
    return feature_count + 1


def design_matrix(cfg: FamilyConfig, features: np.ndarray) -> np.ndarray:
    """Expand an (n, c) feature matrix into the (n, k) basis matrix.

    Raises:
        DomainError: logarithmic family applied to a value <= 0.
        BasisOverflowError: any basis value is non-finite (exp overflow,
            huge polynomial powers).
    """
    x = np.asarray(features, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] < 1:
        raise ValueError("features must be a 2-D matrix with >= 1 column")
    n = x.shape[0]
    ones = np.ones((n, 1))
    family = cfg.family

    if family is ModelFamily.SIMPLE:
        z = np.hstack([ones, x[:, :1]])
    elif family is ModelFamily.MULTIPLE:
        z = np.hstack([ones, x])
    elif family is ModelFamily.POLYNOMIAL:
        with np.errstate(over="ignore"):
            powers = [x[:, :1] ** k for k in range(1, cfg.order + 1)]
        z = np.hstack([ones] + powers)
    elif family is ModelFamily.LOGARITHMIC:
        if np.any(x <= 0.0):
            raise DomainError(
                "logarithmic basis requires every feature value > 0"
            )
        z = np.hstack([ones, np.log(x)])
    elif family is ModelFamily.EXPONENTIAL:
        with np.errstate(over="ignore"):
            z = np.hstack([ones, np.exp(x)])
    elif family is ModelFamily.SINUSOIDAL:
        z = np.hstack([ones, np.sin(x[:, :1]), np.cos(x[:, :1])])
    else:  # pragma: no cover - closed enum
        raise ValueError(f"unhandled family {family}")

    if not np.all(np.isfinite(z)):
        raise BasisOverflowError(
            f"{family.value} basis produced a non-finite value"
        )
    return z


def expand_basis(cfg: FamilyConfig, row) -> np.ndarray:
    """Expand a single feature row to its basis vector [1, z1, ..., zk]."""
    row = np.asarray(row, dtype=np.float64).reshape(1, -1)
    return design_matrix(cfg, row)[0]
