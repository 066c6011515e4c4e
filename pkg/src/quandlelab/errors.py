"""Exception types shared across the package."""


class QuandleLabError(Exception):
    """Base class for all library-specific errors."""


class NotPrimeError(QuandleLabError, ValueError):
    pass


class ReducibleModulusError(QuandleLabError, ValueError):
    pass


class NotPrimitiveError(QuandleLabError, ValueError):
    pass


class ZeroArgumentError(QuandleLabError, ZeroDivisionError):
    """A nonzero field element was required (log of zero, inverse of zero)."""


class InvalidParamsError(QuandleLabError, ValueError):
    pass


class MalformedTableError(QuandleLabError, ValueError):
    pass


class GroupAxiomError(QuandleLabError, ValueError):
    """A Cayley table passed as a group fails the group axioms."""


class OrderTooSmallError(QuandleLabError, ValueError):
    pass


class ClosureBudgetError(QuandleLabError, RuntimeError):
    """Closure of a generating set exceeded the element cap."""


class SearchBudgetError(QuandleLabError, RuntimeError):
    pass


class WordSyntaxError(QuandleLabError, ValueError):
    """Bad presentation word; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RelationViolationError(QuandleLabError, ValueError):
    """A defining relation of the presented quandle fails; names the relation."""

    def __init__(self, relation: str, detail: str = ""):
        msg = f"relation violated: {relation}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
        self.relation = relation


class NotBijectiveError(QuandleLabError, ValueError):
    pass


class NotHomomorphismError(QuandleLabError, ValueError):
    """Matrices fail the conjugation law; carries the violating pairs."""

    def __init__(self, violations):
        self.violations = list(violations)
        worst = max(r for _, _, r in self.violations)
        super().__init__(
            f"{len(self.violations)} pair(s) violate the conjugation law "
            f"(worst residual {worst:.3e})"
        )


class SingularMatrixError(QuandleLabError, ValueError):
    pass


class GroupNotFiniteError(QuandleLabError, RuntimeError):
    """Matrix closure exceeded the cap; the image group is treated as infinite."""


class ToleranceFailureError(QuandleLabError, RuntimeError):
    """Eigenvalue clusters too close to separate at the working tolerance."""


class VerificationFailureError(QuandleLabError, RuntimeError):
    """A numerically extracted witness failed its own verification."""


class IllConditionedError(QuandleLabError, RuntimeError):
    pass


class NotInvolutionError(QuandleLabError, RuntimeError):
    """The map k -> log(1 - alpha^k) failed the involution check."""
