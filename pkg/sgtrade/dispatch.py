"""
TradeDispatcher — routes a trade query to the decider for its cell.

Routing for j = 2 follows the complexity table: the six polynomial cells go
to the pair scans, (LM, L) to Set Splitting and (Wm, W) to the symmetric
difference search. Any other j goes to the multiset enumeration.
"""

from __future__ import annotations

from collections.abc import Sequence

import structlog

from sgtrade.deciders import (
    EnumerationDecider,
    PairScanDecider,
    SetSplittingDecider,
    SymmetricDifferenceDecider,
    TradeDecider,
)
from sgtrade.errors import PreconditionError
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import TradeAnswer, TradeQuery, complexity, verify

logger = structlog.get_logger("sgtrade.dispatch")


class TradeDispatcher:
    """
    Holds one instance of each decider and picks the first that supports a
    query.

    Usage::

        from sgtrade import Classification, Coalition, TradeDispatcher, TradeQuery
        from sgtrade.families import example_game

        query = TradeQuery(
            example_game(), Classification.LOSING, (Coalition.of(0, 1), Coalition.of(2, 3))
        )
        answer = TradeDispatcher().dispatch(query)
        answer.witness    # ({0, 2}, {1, 3})
    """

    def __init__(
        self,
        settings: Settings | None = None,
        deciders: Sequence[TradeDecider] | None = None,
    ) -> None:
        self.settings = get_settings(settings)
        if deciders is None:
            deciders = (
                PairScanDecider(self.settings),
                SetSplittingDecider(self.settings),
                SymmetricDifferenceDecider(self.settings),
                EnumerationDecider(self.settings),
            )
        self.deciders = tuple(deciders)

    def route(self, query: TradeQuery) -> TradeDecider:
        for decider in self.deciders:
            if decider.supports(query):
                return decider
        kind, beta = query.cell
        raise PreconditionError(f"no decider handles cell ({kind.value}, {beta.tag}) with j = {query.j}")

    def dispatch(self, query: TradeQuery) -> TradeAnswer:
        decider = self.route(query)
        kind, beta = query.cell
        log = logger.bind(cell=f"{kind.value}/{beta.tag}", j=query.j)
        log.info(
            "route_selected", method=decider.name, complexity=complexity(kind, beta).value
        )
        answer = decider.decide(query)
        if answer.decision and (answer.application is None or not verify(query.rep, answer.application)):
            log.error("witness_rejected", method=answer.method, witness=answer.witness)
            raise RuntimeError(f"{answer.method} returned a witness that does not verify")
        log.info("decided", decision=answer.decision, method=answer.method)
        return answer


def dispatch(query: TradeQuery, settings: Settings | None = None) -> TradeAnswer:
    """Decide ``query`` with a default dispatcher."""
    return TradeDispatcher(settings).dispatch(query)
