"""Exception types shared across the package."""


class KnotlabError(Exception):
    """Base class for all knotlab errors."""


class MalformedDiagram(KnotlabError):
    """PD data fails validation (arc multiplicity, orientability, ...)."""


class CrossingBudgetExceeded(KnotlabError):
    """A state-sum or cabling request exceeds the crossing cap."""


class PrecisionError(KnotlabError):
    """A numeric result cannot be certified to the requested accuracy."""


class RamificationError(KnotlabError):
    """Branch continuation hit (or came too close to) a ramification point."""


class UnderdeterminedSystem(KnotlabError):
    """Recursion search has too few data points for the requested ansatz."""


class HeldOutFailure(KnotlabError):
    """A discovered recursion failed re-verification on a held-out index."""

    def __init__(self, index: int):
        super().__init__(f"candidate operator fails at held-out index N={index}")
        self.index = index


class UnknownKnot(KnotlabError):
    """Requested knot name is absent from the table."""
