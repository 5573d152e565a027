"""Exception hierarchy shared by every prok module."""


class ProkError(Exception):
    """Base class for all library errors."""


class BudgetExceeded(ProkError):
    """A bounded computation ran out of its step budget.

    Raised instead of returning a truncated answer.
    """


class RingMismatch(ProkError):
    pass


class UnsupportedRing(ProkError):
    pass


class InvalidHom(ProkError):
    pass


class NotInIdeal(ProkError):
    pass


class MissingData(ProkError):
    """Required auxiliary data (module generators, presentations) was not supplied."""


class Unrealizable(ProkError):
    """A module has no finite realization over its base ring."""


class ExcisionRejected(ProkError):
    """An excision axiom failed; ``axiom`` names it and ``witness`` is a certificate."""

    def __init__(self, axiom, witness, message=None):
        self.axiom = axiom
        self.witness = witness
        super().__init__(message or f"{axiom}: witness {witness}")


class BoundExhausted(ProkError):
    pass
