"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller-supplied data violates a documented precondition."""


class PseudomanifoldError(InputError):
    """Complex fails the pseudomanifold conditions required by the operation."""


class MatchingError(ValueError):
    """Discrete gradient data is inconsistent (cycle found or pairing broken)."""
