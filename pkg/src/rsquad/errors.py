"""Exception types shared across the package."""


class FalsificationError(AssertionError):
    """A computed value contradicts an identity the library relies on.

    Raised when two independent routes disagree.  Carries the offending
    function and number of variables so the CLI can report them.
    """

    def __init__(self, message: str, *, q=None, n=None):
        super().__init__(message)
        self.q = q
        self.n = n

    def __str__(self):
        where = []
        if self.q is not None:
            where.append(f"q={self.q}")
        if self.n is not None:
            where.append(f"n={self.n}")
        base = super().__str__()
        return f"{base} [{', '.join(where)}]" if where else base


class ShapeViolationError(FalsificationError):
    """Balance witnesses do not have the shape predicted for the term-count parity."""


class NoRecurrenceError(ValueError):
    """Too few terms to certify any linear recurrence."""


class InconsistentDataError(ValueError):
    """The data admit no integer linear recurrence (or a backward step is not integral)."""
