"""
Exact solvers for the two NP-complete 2-trade cells.

(LM, L)  translated to Set Splitting over U = S_1 ∪ S_2 and solved by
         backtracking; a splitting (U_1, U_2) gives the winning pair
         U_1 ∪ (S_1 ∩ S_2), U_2 ∪ (S_1 ∩ S_2).
(Wm, W)  any losing pair with the right multiplicities holds S_1 ∩ S_2 in
         both sets and splits D = S_1 △ S_2 between them, so all 2^|D|
         splits of D are tried.
"""

from __future__ import annotations

import structlog

from sgtrade.deciders.base import Cell, TradeDecider
from sgtrade.errors import BudgetExceededError, PreconditionError
from sgtrade.game import Classification, Coalition, GameRep, RepKind
from sgtrade.reductions import build_set_splitting, solve_set_splitting
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import TradeAnswer, TradeQuery, given_pair

logger = structlog.get_logger("sgtrade.deciders.exact")


def _require(rep: GameRep, kind: RepKind, beta: Classification, *given: Coalition) -> None:
    if rep.kind is not kind:
        raise PreconditionError(f"expected a {kind.value} representation, got {rep.kind.value}")
    for s in given:
        found = rep.classify(s)
        if found is not beta:
            raise PreconditionError(f"given coalition {s!r} is {found.value}, expected {beta.value}")


def decide_LM_L_exact(
    rep: GameRep, s1: Coalition, s2: Coalition, settings: Settings | None = None
) -> TradeAnswer:
    """
    2-trade from two losing coalitions of an LM game, via Set Splitting.

    Raises:
        PreconditionError: ``rep`` is not LM or a given coalition wins.
        BudgetExceededError: |S_1 ∪ S_2| is above ``settings.split_cap``.
    """
    _require(rep, RepKind.LM, Classification.LOSING, s1, s2)
    inst = build_set_splitting(rep.coalitions, s1, s2)
    logger.debug(
        "set_splitting_built", universe=len(inst.universe), family=len(inst.family), k=inst.k
    )
    split = solve_set_splitting(inst, settings)
    if split is None:
        return TradeAnswer.no("set_splitting")
    common = s1 & s2
    u1, u2 = split
    return TradeAnswer.yes(
        "set_splitting", (s1, s2), (u1 | common, u2 | common), Classification.LOSING
    )


def decide_Wm_W_exact(
    rep: GameRep, s1: Coalition, s2: Coalition, settings: Settings | None = None
) -> TradeAnswer:
    """
    2-trade from two winning coalitions of a Wm game, by trying every
    split of the symmetric difference. Splits are tried in ascending
    bit order of the part that goes to the first set.

    Raises:
        PreconditionError: ``rep`` is not Wm or a given coalition loses.
        BudgetExceededError: |S_1 △ S_2| is above ``settings.split_cap``.
    """
    settings = get_settings(settings)
    _require(rep, RepKind.WM, Classification.WINNING, s1, s2)
    common, diff = (s1 & s2).bits, (s1 ^ s2).bits
    width = diff.bit_count()
    if width > settings.split_cap:
        raise BudgetExceededError("symmetric difference search", 1 << width, 1 << settings.split_cap)
    if rep.wins(common):
        # Both sets contain the common part
        return TradeAnswer.no("symmetric_difference")
    part = 0
    while True:
        s3, s4 = common | part, common | (diff & ~part)
        if not rep.wins(s3) and not rep.wins(s4):
            witness = (Coalition(s3), Coalition(s4))
            return TradeAnswer.yes("symmetric_difference", (s1, s2), witness, Classification.WINNING)
        if part == diff:
            break
        # Next submask of diff in ascending order
        part = (part - diff) & diff
    return TradeAnswer.no("symmetric_difference")


class SetSplittingDecider(TradeDecider):
    @property
    def name(self) -> str:
        return "set_splitting"

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset({(RepKind.LM, Classification.LOSING)})

    def decide(self, query: TradeQuery) -> TradeAnswer:
        s1, s2 = given_pair(query)
        return decide_LM_L_exact(query.rep, s1, s2, self.settings)


class SymmetricDifferenceDecider(TradeDecider):
    @property
    def name(self) -> str:
        return "symmetric_difference"

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset({(RepKind.WM, Classification.WINNING)})

    def decide(self, query: TradeQuery) -> TradeAnswer:
        s1, s2 = given_pair(query)
        return decide_Wm_W_exact(query.rep, s1, s2, self.settings)
