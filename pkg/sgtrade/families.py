"""
Named game families used by examples, tests and the conformance suites.
"""

from __future__ import annotations

from sgtrade.errors import PreconditionError
from sgtrade.game import Coalition, GameRep, RepKind
from sgtrade.trade import TradeApplication


def example_game() -> GameRep:
    """Four players, minimal winning coalitions {0, 2} and {1, 3}."""
    return GameRep.of(4, RepKind.WM, [[0, 2], [1, 3]])


def example_application() -> TradeApplication:
    """The 2-trade of ``example_game``: {0,2} + {1,3} against {0,1} + {2,3}."""
    return TradeApplication.from_sides(
        (Coalition.of(0, 2), Coalition.of(1, 3)),
        (Coalition.of(0, 1), Coalition.of(2, 3)),
    )


def chain_game(j: int) -> GameRep:
    """
    2j players paired off: the minimal winning coalitions are {2i, 2i+1}
    for i < j.
    """
    if j < 1:
        raise PreconditionError(f"chain games need j >= 1, got {j}")
    return GameRep(2 * j, RepKind.WM, tuple(Coalition.of(2 * i, 2 * i + 1) for i in range(j)))


def chain_application(j: int) -> TradeApplication:
    """
    The pairs {2i, 2i+1} against the shifted pairs {2i+1, 2i+2 mod 2j}.

    For j = 1 the shifted pair is the winning {0, 1} again, so j >= 2.
    """
    if j < 2:
        raise PreconditionError(f"the chain application needs j >= 2, got {j}")
    n = 2 * j
    winning = [Coalition.of(2 * i, 2 * i + 1) for i in range(j)]
    losing = [Coalition.of(2 * i + 1, (2 * i + 2) % n) for i in range(j)]
    return TradeApplication.from_sides(winning, losing)
