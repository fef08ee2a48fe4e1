"""Exception hierarchy for the curfit package.

Every error raised by the library derives from :class:`CurfitError`, so callers
can catch one base class at API boundaries (CLI, HTTP service).
"""


class CurfitError(Exception):
    """Base class for all curfit errors."""


# --- CSV parsing ---------------------------------------------------------


class CsvError(CurfitError):
    """Base class for CSV parsing failures."""


class EmptyInputError(CsvError):
    """No header row, or no data row survived parsing."""


class DuplicateHeaderError(CsvError):
    """Two header cells carry the same column name."""


class RaggedRowError(CsvError):
    """A data row has a different field count than the header."""

    def __init__(self, line_number: int, expected: int, got: int):
        self.line_number = line_number
        self.expected = expected
        self.got = got
        super().__init__(
            f"line {line_number}: expected {expected} fields, got {got}"
        )


# --- column selection ----------------------------------------------------


class SelectionError(CurfitError):
    """Base class for feature/label selection failures."""


class UnknownColumnError(SelectionError):
    """A requested column name does not exist in the dataset."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown column: {name!r}")


class LabelInFeaturesError(SelectionError):
    """The label column also appears in the feature list."""


class DuplicateFeatureError(SelectionError):
    """The same column is listed twice among the features."""


# --- splitting -----------------------------------------------------------


class EmptyTrainError(CurfitError):
    """The requested split leaves zero training rows."""


# --- basis expansion -----------------------------------------------------


class DomainError(CurfitError):
    """A basis function was evaluated outside its domain (log of x <= 0)."""


class BasisOverflowError(CurfitError):
    """Basis expansion or accumulation produced a non-finite value."""


# --- solving -------------------------------------------------------------


class DimensionMismatchError(CurfitError):
    """Row counts or vector lengths disagree."""


class SingularSystemError(CurfitError):
    """The normal matrix is rank deficient; no unique coefficient vector."""


# --- scoring / training --------------------------------------------------


class ConstantLabelError(CurfitError):
    """All labels are identical and the fit is imperfect, so R² is undefined."""


class AllFamiliesFailedError(CurfitError):
    """Every model family errored during automatic training."""

    def __init__(self, notes: dict[str, str]):
        self.notes = dict(notes)
        detail = "; ".join(f"{fam}: {msg}" for fam, msg in self.notes.items())
        super().__init__(f"all model families failed ({detail})")
