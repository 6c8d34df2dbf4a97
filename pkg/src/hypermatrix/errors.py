"""Exception hierarchy shared by every hypermatrix module."""


class HypermatrixError(Exception):
    """Base class for all library errors."""


class ShapeError(HypermatrixError, ValueError):
    """A shape has a non-positive dimension or the wrong nesting."""


class DimensionError(HypermatrixError, ValueError):
    """Operand shapes are incompatible for the requested operation."""


class LabelError(HypermatrixError, ValueError):
    """A labeled generator would produce ambiguous atom names."""


class UnsupportedScalarError(HypermatrixError, TypeError):
    """The operation is not defined for the scalar type at hand."""


class DomainError(HypermatrixError, ValueError):
    """A real parameter lies outside the supported domain."""


class PermutationError(HypermatrixError, ValueError):
    """A list is not a permutation, or not an involution where one is needed."""


class OddOrderError(HypermatrixError, ValueError):
    """Composition orders must be odd."""


class SingularSliceError(HypermatrixError, ValueError):
    """A slice matrix needed by the pseudo-inverse-pair solver is singular."""

    def __init__(self, m, p):
        super().__init__(f"slice matrix for (m={m}, p={p}) is singular")
        self.m = m
        self.p = p


class UnknownVariableError(HypermatrixError, KeyError):
    """A constraint references an unknown that is not in the unknowns list."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class MissingBindingError(HypermatrixError, KeyError):
    """An atom has no numeric value during evaluation."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(HypermatrixError, ValueError):
    """Malformed expression text."""
