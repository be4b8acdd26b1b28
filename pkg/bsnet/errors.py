from typing import Optional


class BsnetError(Exception):
    """Base class for every error raised by bsnet."""


class DimensionError(BsnetError, ValueError):
    """Dimension outside the supported range 3..9."""


class PermutationError(BsnetError, ValueError):
    """Malformed label string or permutation argument."""


class TerminalError(BsnetError, ValueError):
    """Terminal set is not three distinct vertices of the graph."""


class InfeasibleError(BsnetError):
    """A disjoint-path search could not reach the requested count."""

    def __init__(self, message: str, found: int = 0, cut: Optional[frozenset] = None):
        super().__init__(message)
        self.found = found
        self.cut = cut if cut is not None else frozenset()


class ConstructionError(BsnetError):
    """A case builder hit a configuration its guards reject."""


class FallbackExhaustedError(BsnetError):
    def __init__(self, message: str, fingerprint: str = ""):
        super().__init__(f"{message} [{fingerprint}]" if fingerprint else message)
        self.fingerprint = fingerprint


class OracleBudgetError(BsnetError):
    def __init__(self, message: str, best: int = 0):
        super().__init__(message)
        self.best = best


class WitnessFormatError(BsnetError, ValueError):
    """Witness file does not follow the witness JSON schema."""
