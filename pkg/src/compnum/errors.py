"""Exception types shared across the package."""


class GraphError(ValueError):
    """A graph operation was called with arguments violating its contract."""


class ParseError(GraphError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAHoleError(GraphError):
    pass


class NotChordalError(GraphError):
    pass


class StructuralViolation(Exception):
    """A structural clause that should hold for the input was found false.

    ``clause`` names the failing check so callers can report it or fall back
    to the exact solver.
    """

    def __init__(self, clause, detail=""):
        self.clause = clause
        self.detail = detail
        super().__init__(f"{clause}: {detail}" if detail else clause)


class BudgetExhausted(Exception):
    """The exact search ran out of nodes before deciding feasibility."""
