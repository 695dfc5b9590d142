"""
Fixed-j trade decisions by multiset enumeration.

The game is taken as (N, W) or (N, L). Winning candidates are the W list
(or Wm computed from the L list); losing candidates are the maximal
losing coalitions. Searches run over nondecreasing index sequences, so
each multiset is seen once and repetitions are allowed.

  given losing side   pick j winning candidates whose multiplicities stay
                      at or below the given ones, then pad
  given winning side  pick j maximal losing coalitions whose
                      multiplicities reach the given ones, then strip
  no given side       for every j-multiset of maximal losing coalitions,
                      run the first search against it

Every search node is charged to ``settings.enumeration_budget``.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Callable, Sequence

import structlog

from sgtrade.convert import expand, lm_from_w, maximal_elements, wm_from_l
from sgtrade.deciders.base import Cell, TradeDecider
from sgtrade.errors import BudgetExceededError, PreconditionError
from sgtrade.game import Classification, Coalition, GameRep, RepKind, iter_bits
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import (
    TradeAnswer,
    TradeApplication,
    TradeQuery,
    counts_of,
    pad_to,
    strip_to,
)

logger = structlog.get_logger("sgtrade.deciders.enumeration")

METHOD = "j_enumeration"


class SearchMeter:
    """Counts search nodes and raises once ``budget`` is passed."""

    def __init__(self, what: str, budget: int) -> None:
        self.what = what
        self.budget = budget
        self.explored = 0

    def tick(self) -> None:
        self.explored += 1
        if self.explored > self.budget:
            logger.warning("budget_exceeded", what=self.what, explored=self.explored, budget=self.budget)
            raise BudgetExceededError(self.what, self.explored, self.budget)


def find_dominated(
    cands: Sequence[int], capacity: Sequence[int], j: int, tick: Callable[[], None]
) -> list[int] | None:
    """
    First j-multiset of ``cands`` (sorted bit patterns) in which player p
    occurs at most ``capacity[p]`` times.
    """
    cap = list(capacity)
    chosen: list[int] = []
    start_mask = sum(1 << p for p, c in enumerate(cap) if c > 0)

    def go(start: int, left: int, avail: int) -> bool:
        if left == 0:
            return True
        for idx in range(start, len(cands)):
            c = cands[idx]
            if c & ~avail:
                continue
            tick()
            narrowed = avail
            for p in iter_bits(c):
                cap[p] -= 1
                if cap[p] == 0:
                    narrowed &= ~(1 << p)
            chosen.append(c)
            if go(idx, left - 1, narrowed):
                return True
            chosen.pop()
            for p in iter_bits(c):
                cap[p] += 1
        return False

    return chosen if go(0, j, start_mask) else None


def find_dominating(
    cands: Sequence[int], need: Sequence[int], j: int, tick: Callable[[], None]
) -> list[int] | None:
    """
    First j-multiset of ``cands`` (sorted bit patterns) in which player p
    occurs at least ``need[p]`` times.
    """
    want = list(need)
    if any(w > j for w in want):
        return None
    chosen: list[int] = []

    def go(start: int, left: int) -> bool:
        if left == 0:
            return True
        # Players needed in every remaining pick
        must = sum(1 << p for p, w in enumerate(want) if w == left)
        for idx in range(start, len(cands)):
            c = cands[idx]
            if must & ~c:
                continue
            tick()
            for p in iter_bits(c):
                want[p] -= 1
            chosen.append(c)
            if all(w < left for w in want) and go(idx, left - 1):
                return True
            chosen.pop()
            for p in iter_bits(c):
                want[p] += 1
        return False

    return chosen if go(0, j) else None


def _explicit(rep: GameRep, settings: Settings) -> GameRep:
    if rep.kind.is_explicit:
        return rep
    logger.debug("expanding_representation", kind=rep.kind.value, n=rep.n)
    return expand(rep, settings)


def _winning_candidates(rep: GameRep) -> list[int]:
    if rep.kind is RepKind.W:
        return sorted(s.bits for s in rep.coalitions)
    return [s.bits for s in wm_from_l(rep.n, rep.coalitions)]


def _losing_candidates(rep: GameRep) -> list[int]:
    if rep.kind is RepKind.W:
        return [s.bits for s in lm_from_w(rep.n, rep.coalitions)]
    return [s.bits for s in maximal_elements(rep.coalitions)]


def _infer_beta(rep: GameRep, given: Sequence[Coalition]) -> Classification:
    beta = rep.classify(given[0])
    for s in given[1:]:
        if rep.classify(s) is not beta:
            raise PreconditionError("given coalitions mix winning and losing ones")
    return beta


def decide_j_trade(
    rep: GameRep,
    j: int,
    given: Sequence[Coalition] | None = None,
    beta: Classification | None = None,
    settings: Settings | None = None,
) -> TradeAnswer:
    """
    Decide the j-trade question for any representation.

    With ``given`` (j coalitions of type ``beta``; ``beta`` is inferred when
    omitted) only the opposite side is searched. Without it the answer is
    yes iff the game is j-trade, and the application returned has maximal
    losing coalitions on its losing side. Wm and LM inputs are expanded to
    explicit lists first, so they are bounded by ``settings.oracle_cap``.

    Raises:
        PreconditionError: j < 1, ``given`` has a size other than j, or a
            given coalition is not of type ``beta``.
        BudgetExceededError: the search visits more than
            ``settings.enumeration_budget`` nodes.
    """
    settings = get_settings(settings)
    if j < 1:
        raise PreconditionError(f"j must be at least 1, got {j}")
    rep = _explicit(rep, settings)
    meter = SearchMeter("j-trade enumeration", settings.enumeration_budget)
    log = logger.bind(j=j, kind=rep.kind.value, n=rep.n)

    if given is not None:
        given = tuple(given)
        if len(given) != j:
            raise PreconditionError(f"expected {j} given coalitions, got {len(given)}")
        if beta is None:
            beta = _infer_beta(rep, given)
        TradeQuery(rep, beta, given)
        target = counts_of((s.bits for s in given), rep.n)
        if beta is Classification.LOSING:
            picked = find_dominated(_winning_candidates(rep), target, j, meter.tick)
            witness = None if picked is None else pad_to(picked, target)
        else:
            picked = find_dominating(_losing_candidates(rep), target, j, meter.tick)
            witness = None if picked is None else strip_to(picked, target, rep.n)
        log.debug("given_side_search", beta=beta.value, explored=meter.explored)
        if witness is None:
            return TradeAnswer.no(METHOD)
        return TradeAnswer.yes(METHOD, given, [Coalition(b) for b in witness], beta)

    losing = _losing_candidates(rep)
    outer = math.comb(len(losing) + j - 1, j)
    if outer > settings.enumeration_budget:
        log.warning("budget_exceeded", what="losing multisets", needed=outer)
        raise BudgetExceededError("losing multisets", outer, settings.enumeration_budget)
    winning = _winning_candidates(rep)
    for side in itertools.combinations_with_replacement(losing, j):
        meter.tick()
        target = counts_of(side, rep.n)
        picked = find_dominated(winning, target, j, meter.tick)
        if picked is not None:
            log.debug("game_level_search", explored=meter.explored)
            application = TradeApplication.from_sides(
                [Coalition(b) for b in pad_to(picked, target)], [Coalition(b) for b in side]
            )
            return TradeAnswer.found(METHOD, application)
    log.debug("game_level_search", explored=meter.explored)
    return TradeAnswer.no(METHOD)


def is_j_trade(rep: GameRep, j: int, settings: Settings | None = None) -> TradeAnswer:
    """Yes iff ``rep`` admits a j-trade application."""
    return decide_j_trade(rep, j, settings=settings)


class EnumerationDecider(TradeDecider):
    """Any representation and β, for j other than 2."""

    @property
    def name(self) -> str:
        return METHOD

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(itertools.product(RepKind, Classification))

    def supports(self, query: TradeQuery) -> bool:
        return query.j != 2

    def decide(self, query: TradeQuery) -> TradeAnswer:
        return decide_j_trade(query.rep, query.j, query.given, query.beta, self.settings)
