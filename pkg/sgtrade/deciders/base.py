"""
Abstract base class for trade deciders.

Each decider covers some (representation, β) cells of the trade problem
and must be interchangeable behind ``TradeDispatcher``. Implementations
live in:
  sgtrade/deciders/polynomial.py   — pair scans for the six polynomial cells
  sgtrade/deciders/exact.py        — exact solvers for (LM, L) and (Wm, W)
  sgtrade/deciders/enumeration.py  — fixed-j multiset enumeration
"""

from __future__ import annotations

import abc

from sgtrade.game import Classification, RepKind
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import TradeAnswer, TradeQuery

Cell = tuple[RepKind, Classification]


class TradeDecider(abc.ABC):
    """
    Decides trade queries for the cells it lists.

    Conformance requirements:
    - MUST return a witness with every yes answer, and the application it
      forms MUST pass ``verify``
    - MUST raise ``BudgetExceededError`` rather than answer no when a
      search runs out of budget
    """

    def __init__(self, settings: Settings | None = None) -> None:
        self.settings = get_settings(settings)

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Short method name reported in answers, e.g. 'pair_scan'."""
        ...

    @property
    @abc.abstractmethod
    def cells(self) -> frozenset[Cell]:
        """(representation, β) cells this decider accepts."""
        ...

    def supports(self, query: TradeQuery) -> bool:
        """Default: the listed cells, j = 2 only."""
        return query.cell in self.cells and query.j == 2

    @abc.abstractmethod
    def decide(self, query: TradeQuery) -> TradeAnswer:
        ...

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
