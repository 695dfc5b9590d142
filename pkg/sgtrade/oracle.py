"""
Exhaustive ground truth for tests and the ``oracle`` CLI command.

``brute_force_trade`` classifies every coalition of the game and searches
multisets of coalitions directly, so it relies on nothing but ``classify``.
``random_game`` and ``random_corpus`` build seeded test games.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator, Sequence

import numpy as np
import structlog

from sgtrade.convert import minimal_elements
from sgtrade.deciders.enumeration import SearchMeter
from sgtrade.errors import PreconditionError
from sgtrade.game import (
    Classification,
    Coalition,
    GameRep,
    RepKind,
    enumerate_coalitions,
    iter_bits,
)
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import TradeApplication, TradeQuery, counts_of, verify

logger = structlog.get_logger("sgtrade.oracle")

__all__ = [
    "brute_force_trade",
    "enumerate_coalitions",
    "random_corpus",
    "random_game",
]

MAX_RANDOM_PLAYERS = 16


def _exact_side(
    cands: Sequence[int], target: Sequence[int], j: int, tick: Callable[[], None]
) -> list[int] | None:
    """
    First j-multiset of ``cands`` (sorted bit patterns) with exactly the
    multiplicities ``target``. The last member is forced by the others and
    is looked up rather than searched.
    """
    index = {bits: i for i, bits in enumerate(cands)}
    rem = list(target)
    if any(r > j for r in rem):
        return None
    chosen: list[int] = []

    def go(start: int, left: int) -> bool:
        if left == 1:
            if any(r > 1 for r in rem):
                return False
            last = sum(1 << p for p, r in enumerate(rem) if r == 1)
            tick()
            k = index.get(last)
            if k is None or k < start:
                return False
            chosen.append(last)
            return True
        avail = sum(1 << p for p, r in enumerate(rem) if r > 0)
        for idx in range(start, len(cands)):
            c = cands[idx]
            if c & ~avail:
                continue
            tick()
            for p in iter_bits(c):
                rem[p] -= 1
            chosen.append(c)
            if all(r < left for r in rem) and go(idx, left - 1):
                return True
            chosen.pop()
            for p in iter_bits(c):
                rem[p] += 1
        return False

    return chosen if go(0, j) else None


def brute_force_trade(
    rep: GameRep,
    j: int,
    given: Sequence[Coalition] | None = None,
    beta: Classification | None = None,
    settings: Settings | None = None,
) -> TradeApplication | None:
    """
    A j-trade application of ``rep`` found by direct search, or None.

    With ``given`` the given side is fixed (``beta`` defaults to the type of
    the first given coalition) and the opposite side is searched among all
    coalitions of the complementary type. Without it, losing j-multisets are
    tried in lexicographic order against all winning coalitions.

    Raises:
        PreconditionError: j < 1 or ``given`` does not fit the query.
        BudgetExceededError: n is above ``settings.oracle_cap`` or the
            search visits more than ``settings.oracle_budget`` nodes.
    """
    settings = get_settings(settings)
    if j < 1:
        raise PreconditionError(f"j must be at least 1, got {j}")
    winning: list[int] = []
    losing: list[int] = []
    for s in enumerate_coalitions(rep.n, settings):
        (winning if rep.wins(s.bits) else losing).append(s.bits)
    meter = SearchMeter("exhaustive trade search", settings.oracle_budget)

    if given is not None:
        given = tuple(given)
        if len(given) != j:
            raise PreconditionError(f"expected {j} given coalitions, got {len(given)}")
        if beta is None:
            beta = rep.classify(given[0])
        TradeQuery(rep, beta, given)
        target = counts_of((s.bits for s in given), rep.n)
        opposite = winning if beta is Classification.LOSING else losing
        picked = _exact_side(opposite, target, j, meter.tick)
        if picked is None:
            return None
        found = [Coalition(b) for b in picked]
        if beta is Classification.LOSING:
            application = TradeApplication.from_sides(found, given)
        else:
            application = TradeApplication.from_sides(given, found)
    else:
        application = None
        for side in itertools.combinations_with_replacement(losing, j):
            meter.tick()
            picked = _exact_side(winning, counts_of(side, rep.n), j, meter.tick)
            if picked is not None:
                application = TradeApplication.from_sides(
                    [Coalition(b) for b in picked], [Coalition(b) for b in side]
                )
                break
        if application is None:
            return None

    if not verify(rep, application):
        raise RuntimeError(f"exhaustive search produced an invalid application {application!r}")
    logger.debug("oracle_found", j=j, n=rep.n, explored=meter.explored)
    return application


def random_game(n: int, seed: int, density: float = 0.3) -> GameRep:
    """
    A random valid game as a Wm list, deterministic in ``seed``.

    Between 1 and n seed coalitions are drawn, each holding every player
    with probability ``1 - density``; an empty draw is replaced by a random
    singleton. The result is the ⊆-minimal seeds, so higher density means
    smaller minimal winning coalitions.

    Raises:
        PreconditionError: n outside 1..16 or density outside [0, 1].
    """
    if not 1 <= n <= MAX_RANDOM_PLAYERS:
        raise PreconditionError(f"random games need 1 <= n <= {MAX_RANDOM_PLAYERS}, got {n}")
    if not 0.0 <= density <= 1.0:
        raise PreconditionError(f"density must lie in [0, 1], got {density}")
    rng = np.random.default_rng(seed)
    count = int(rng.integers(1, n + 1))
    seeds: list[Coalition] = []
    for _ in range(count):
        members = np.flatnonzero(rng.random(n) < 1.0 - density)
        if members.size == 0:
            members = np.array([rng.integers(n)])
        seeds.append(Coalition.from_players(int(p) for p in members))
    return GameRep(n, RepKind.WM, tuple(minimal_elements(seeds)))


def random_corpus(count: int, n_max: int, seed: int) -> Iterator[GameRep]:
    """``count`` random games with 1 <= n <= ``n_max``, deterministic in ``seed``."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, n_max + 1))
        density = float(rng.uniform(0.1, 0.9))
        yield random_game(n, int(rng.integers(2**32)), density)
