"""Exception hierarchy shared by all sylvshift modules."""


class SylvError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SylvError):
    """Malformed word or tree text."""


class RankError(SylvError):
    """A symbol exceeds the fixed rank, or ranks of operands disagree."""


class NotStandardError(SylvError):
    """An operation defined only for standard words/trees got a non-standard input."""


class LocatorError(SylvError):
    """A node locator does not resolve inside the tree it addresses."""


class CapExceededError(SylvError):
    """An enumeration grew past its configured cap."""

    def __init__(self, what: str, cap: int):
        super().__init__(f"{what} exceeded cap of {cap}")
        self.cap = cap


class BudgetExceededError(SylvError):
    """A closure search visited more states than its budget allows."""

    def __init__(self, budget: int):
        super().__init__(f"rewrite search exceeded budget of {budget} visited words")
        self.budget = budget


class DisconnectedError(SylvError):
    """A graph operation requiring connectivity met a disconnected graph."""

    def __init__(self, parts):
        super().__init__(f"graph is disconnected ({len(parts)} parts)")
        self.parts = parts


class InternalError(SylvError):
    """A structural fact the path construction relies on failed to hold.

    This signals a bug in the library (or an input violating a checked
    precondition), never an expected runtime condition.
    """
