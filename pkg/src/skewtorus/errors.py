"""Typed errors shared across the package."""


class SkewTorusError(Exception):
    """Base class for package-specific errors."""


class DimensionMismatch(SkewTorusError, ValueError):
    """Operands live on tori of different dimensions."""


class NonTorsionTranslation(SkewTorusError):
    """A torsion-point operation was given a map whose translation has
    free-generator content; the image of a torsion point would then not
    be torsion."""


class BudgetExhausted(SkewTorusError):
    """A search ran out of budget before finding an object whose existence
    is guaranteed; never a statement of nonexistence."""


class BudgetExceeded(SkewTorusError):
    """An exhaustive enumeration would exceed the configured point budget."""


class NotInvariant(SkewTorusError):
    """The coset is not carried to itself by the map."""


class NotAutomorphism(SkewTorusError, ValueError):
    """The operation requires the exponent matrix to be unimodular."""


class UnsupportedShape(SkewTorusError, ValueError):
    """Prime-ideal shape outside the supported enumeration."""


class InvalidShapeForLaurent(SkewTorusError, ValueError):
    """t is invertible in the skew Laurent ring, so no prime contains it."""


class UnsupportedScalarModel(SkewTorusError):
    """A translation relation cannot be decided in the declared
    generator model."""


class InvalidCoset(SkewTorusError, ValueError):
    """Character/target data does not describe a single torsion coset."""


class ConsistencyError(SkewTorusError):
    """Two independently computed answers disagree.  Always a bug."""


class ParseError(SkewTorusError):
    """Problem file is malformed.  Carries location information when
    available."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line = line
        self.column = column
        self.path = path
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path:
            where = f" (at {path})"
        super().__init__(message + where)
