"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ``ParseError`` -> 2,
``ContractError``/``IntegrityError`` -> 3.
"""


class BfvdError(Exception):
    pass


class ParseError(BfvdError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractError(BfvdError, ValueError):
    """A caller violated an operation's precondition."""


class UnsupportedParameterError(ContractError):
    pass


class IntegrityError(BfvdError, RuntimeError):
    """An internal self-check failed (unsound witness, missing table entry, ...)."""


class BudgetExhausted(BfvdError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"budget exhausted (cap {budget})")
