"""Exception types shared across the package."""


class MalformedFaceError(ValueError):
    """A face has repeated vertices, negative labels, or non-integers."""


class AbsentFaceError(ValueError):
    """An operation referenced a face that is not in the complex."""


class BadEdgeOrderError(ValueError):
    """An edge order is not a permutation of the original edge set."""


class ShapeError(ValueError):
    """A vector or weight sequence has the wrong length for the operation."""


class NotReciprocalError(ValueError):
    """An h-vector is not palindromic where palindromy is required."""


class DivisibilityError(ValueError):
    """Odd-degree h-polynomial is not divisible by (1 + t)."""


class RangeGuardError(ValueError):
    """A parameter is outside the supported range, or a size guard tripped."""


class NormalizationError(ValueError):
    """A leading entry does not have its required normalized value."""


class LinkConditionError(ValueError):
    """The link condition fails; carries one violating edge."""

    def __init__(self, edge, message=None):
        self.edge = tuple(edge)
        super().__init__(message or f"link condition fails at edge {self.edge}")
