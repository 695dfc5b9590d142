"""
Pair scans for the six polynomial 2-trade cells.

β = L (given two losing coalitions, find two winning ones):
  W   scan pairs of the W list for exact multiplicity equality
  Wm  scan pairs of minimal winning coalitions that fit under the given
      multiplicities, then pad the missing players back in
  L   compute Wm with ``wm_from_l`` and run the Wm scan

β = W is the mirror image: L scans the L list, LM scans maximal losing
pairs that cover the given multiplicities and strips the surplus, W goes
through ``lm_from_w``.

Pairs are unordered and may repeat a coalition; the first pair in
ascending bit-pattern order wins.
"""

from __future__ import annotations

from collections.abc import Iterable

from sgtrade.convert import lm_from_w, wm_from_l
from sgtrade.deciders.base import Cell, TradeDecider
from sgtrade.errors import PreconditionError
from sgtrade.game import Classification, Coalition, GameRep, RepKind
from sgtrade.trade import (
    TradeAnswer,
    TradeQuery,
    counts_of,
    given_pair,
    pad_to,
    strip_to,
)


def _require(rep: GameRep, beta: Classification, *given: Coalition) -> None:
    for s in given:
        found = rep.classify(s)
        if found is not beta:
            raise PreconditionError(f"given coalition {s!r} is {found.value}, expected {beta.value}")


def _exact_pair(listed: Iterable[Coalition], s1: Coalition, s2: Coalition) -> tuple[int, int] | None:
    """First pair from a complete list with the same multiplicities as (s1, s2)."""
    cands = sorted(s.bits for s in listed)
    index = {bits: i for i, bits in enumerate(cands)}
    common, union, diff = s1.bits & s2.bits, s1.bits | s2.bits, s1.bits ^ s2.bits
    for i, c in enumerate(cands):
        if c & ~union or common & ~c:
            continue
        # The partner is forced: the common part plus whatever c left out
        partner = common | diff & ~c
        k = index.get(partner)
        if k is not None and k >= i:
            return c, partner
    return None


def _dominated_pair(listed: Iterable[Coalition], s1: Coalition, s2: Coalition) -> tuple[int, int] | None:
    """First pair whose multiplicities stay at or below those of (s1, s2)."""
    common, union = s1.bits & s2.bits, s1.bits | s2.bits
    cands = sorted(s.bits for s in listed if s.bits & ~union == 0)
    for i, c in enumerate(cands):
        for d in cands[i:]:
            if c & d & ~common == 0:
                return c, d
    return None


def _dominating_pair(listed: Iterable[Coalition], s1: Coalition, s2: Coalition) -> tuple[int, int] | None:
    """First pair whose multiplicities reach at least those of (s1, s2)."""
    common, union = s1.bits & s2.bits, s1.bits | s2.bits
    cands = sorted(s.bits for s in listed if common & ~s.bits == 0)
    for i, c in enumerate(cands):
        for d in cands[i:]:
            if union & ~(c | d) == 0:
                return c, d
    return None


def decide_beta_L(rep: GameRep, s1: Coalition, s2: Coalition) -> TradeAnswer:
    """
    2-trade from two losing coalitions, for a game given by W, Wm or L.

    Raises:
        PreconditionError: a given coalition wins, or ``rep`` is LM.
    """
    _require(rep, Classification.LOSING, s1, s2)
    method = f"pair_scan/{rep.kind.value}"
    if rep.kind is RepKind.W:
        pair = _exact_pair(rep.coalitions, s1, s2)
    elif rep.kind is RepKind.WM or rep.kind is RepKind.L:
        minimal = rep.coalitions if rep.kind is RepKind.WM else wm_from_l(rep.n, rep.coalitions)
        pair = _dominated_pair(minimal, s1, s2)
        if pair is not None:
            padded = pad_to(pair, counts_of((s1.bits, s2.bits), rep.n))
            pair = (padded[0], padded[1])
    else:
        raise PreconditionError("the β = L pair scan takes W, Wm or L; use the exact solver for LM")
    if pair is None:
        return TradeAnswer.no(method)
    witness = (Coalition(pair[0]), Coalition(pair[1]))
    return TradeAnswer.yes(method, (s1, s2), witness, Classification.LOSING)


def decide_beta_W(rep: GameRep, s1: Coalition, s2: Coalition) -> TradeAnswer:
    """
    2-trade from two winning coalitions, for a game given by L, LM or W.

    Raises:
        PreconditionError: a given coalition loses, or ``rep`` is Wm.
    """
    _require(rep, Classification.WINNING, s1, s2)
    method = f"pair_scan/{rep.kind.value}"
    if rep.kind is RepKind.L:
        pair = _exact_pair(rep.coalitions, s1, s2)
    elif rep.kind is RepKind.LM or rep.kind is RepKind.W:
        maximal = rep.coalitions if rep.kind is RepKind.LM else lm_from_w(rep.n, rep.coalitions)
        pair = _dominating_pair(maximal, s1, s2)
        if pair is not None:
            stripped = strip_to(pair, counts_of((s1.bits, s2.bits), rep.n), rep.n)
            pair = (stripped[0], stripped[1])
    else:
        raise PreconditionError("the β = W pair scan takes L, LM or W; use the exact solver for Wm")
    if pair is None:
        return TradeAnswer.no(method)
    witness = (Coalition(pair[0]), Coalition(pair[1]))
    return TradeAnswer.yes(method, (s1, s2), witness, Classification.WINNING)


class PairScanDecider(TradeDecider):
    """The polynomial cells of the 2-trade table."""

    @property
    def name(self) -> str:
        return "pair_scan"

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(
            {
                (RepKind.W, Classification.LOSING),
                (RepKind.WM, Classification.LOSING),
                (RepKind.L, Classification.LOSING),
                (RepKind.L, Classification.WINNING),
                (RepKind.LM, Classification.WINNING),
                (RepKind.W, Classification.WINNING),
            }
        )

    def decide(self, query: TradeQuery) -> TradeAnswer:
        s1, s2 = given_pair(query)
        if query.beta is Classification.LOSING:
            return decide_beta_L(query.rep, s1, s2)
        return decide_beta_W(query.rep, s1, s2)
