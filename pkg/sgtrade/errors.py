"""
Exception hierarchy for sgtrade.

Every error raised by the library derives from ``SgTradeError``. Concrete
classes also subclass the nearest builtin, so ``except ValueError`` keeps
working for callers that do not know about this module.
"""

from __future__ import annotations


class SgTradeError(Exception):
    """Base class for all sgtrade errors."""


class InvalidCoalitionError(SgTradeError, ValueError):
    """A coalition names a player outside ``[0, n)``."""


class GameFormatError(SgTradeError, ValueError):
    """A game or instance document is malformed or violates its invariants."""


class DimacsError(SgTradeError, ValueError):
    """Malformed DIMACS CNF input, or a formula the reductions cannot use."""


class PreconditionError(SgTradeError, ValueError):
    """A decider was called outside its contract (wrong coalition type, representation or j)."""


class ConfigError(SgTradeError, ValueError):
    """Bad configuration value, e.g. a non-numeric ``SG_BUDGET``."""


class BudgetExceededError(SgTradeError, RuntimeError):
    """
    An exhaustive search would exceed (or has exceeded) its budget.

    This is never a negative answer: callers must not read it as "no".
    """

    def __init__(self, what: str, needed: int, budget: int) -> None:
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what}: needs {needed} steps, budget is {budget}")


class GeneratorSelfCheckError(SgTradeError, RuntimeError):
    """A reduction generator produced an instance that failed its own verification."""

    def __init__(self, findings: list[str]) -> None:
        self.findings = list(findings)
        super().__init__("generator self-check failed: " + "; ".join(self.findings))
