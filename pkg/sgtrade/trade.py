"""
Trade applications, trade queries and their answers.

A j-trade application is a tuple of 2j coalitions with an index set I of
size j such that exactly the I-indexed coalitions win and every player
occurs equally often inside and outside I. Indices are 0-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from sgtrade.errors import PreconditionError
from sgtrade.game import (
    Classification,
    Coalition,
    GameRep,
    RepKind,
    iter_bits,
    multiplicities,
)


@dataclass(frozen=True)
class TradeApplication:
    """
    ``coalitions`` S_0..S_{2j-1} with ``winners`` the index set I.

    Nothing here is checked against a game; use ``verify`` for that.
    """

    j: int
    coalitions: tuple[Coalition, ...]
    winners: frozenset[int]

    def __post_init__(self) -> None:
        if self.j < 1:
            raise ValueError(f"j must be at least 1, got {self.j}")
        object.__setattr__(self, "coalitions", tuple(self.coalitions))
        object.__setattr__(self, "winners", frozenset(self.winners))

    @classmethod
    def from_sides(
        cls, winning: Sequence[Coalition], losing: Sequence[Coalition]
    ) -> TradeApplication:
        """Winning side first, so I = {0, …, j-1}."""
        if len(winning) != len(losing):
            raise ValueError(f"sides differ in size: {len(winning)} vs {len(losing)}")
        return cls(len(winning), tuple(winning) + tuple(losing), frozenset(range(len(winning))))

    @property
    def winning_side(self) -> tuple[Coalition, ...]:
        return tuple(s for i, s in enumerate(self.coalitions) if i in self.winners)

    @property
    def losing_side(self) -> tuple[Coalition, ...]:
        return tuple(s for i, s in enumerate(self.coalitions) if i not in self.winners)


def verify(rep: GameRep, ta: TradeApplication) -> bool:
    """
    True iff ``ta`` is a trade application of ``rep``:

      1. |I| = j (and there are exactly 2j coalitions),
      2. S_i wins iff i ∈ I,
      3. every player has the same multiplicity on both sides.
    """
    size = 2 * ta.j
    if len(ta.coalitions) != size or len(ta.winners) != ta.j:
        return False
    if any(not 0 <= i < size for i in ta.winners):
        return False
    for i, s in enumerate(ta.coalitions):
        if (rep.classify(s) is Classification.WINNING) != (i in ta.winners):
            return False
    return multiplicities(ta.winning_side, rep.n) == multiplicities(ta.losing_side, rep.n)


# ─────────────────────────────────────────────────────────────────────────────
# Queries and answers
# ─────────────────────────────────────────────────────────────────────────────


class Complexity(str, Enum):
    POLYNOMIAL = "polynomial"
    NP_COMPLETE = "NP-complete"


# Complexity of the 2-trade problem per (representation, β) cell
COMPLEXITY_TABLE: dict[tuple[RepKind, Classification], Complexity] = {
    (RepKind.W, Classification.WINNING): Complexity.POLYNOMIAL,
    (RepKind.WM, Classification.WINNING): Complexity.NP_COMPLETE,
    (RepKind.L, Classification.WINNING): Complexity.POLYNOMIAL,
    (RepKind.LM, Classification.WINNING): Complexity.POLYNOMIAL,
    (RepKind.W, Classification.LOSING): Complexity.POLYNOMIAL,
    (RepKind.WM, Classification.LOSING): Complexity.POLYNOMIAL,
    (RepKind.L, Classification.LOSING): Complexity.POLYNOMIAL,
    (RepKind.LM, Classification.LOSING): Complexity.NP_COMPLETE,
}


def complexity(kind: RepKind | str, beta: Classification) -> Complexity:
    return COMPLEXITY_TABLE[(RepKind(kind), beta)]


@dataclass(frozen=True)
class TradeQuery:
    """
    Given coalitions S_1..S_j, all of type ``beta`` under ``rep``: can j
    coalitions of the opposite type complete a trade application?
    """

    rep: GameRep
    beta: Classification
    given: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "given", tuple(self.given))
        if not self.given:
            raise PreconditionError("a trade query needs at least one given coalition (j >= 1)")
        for s in self.given:
            found = self.rep.classify(s)
            if found is not self.beta:
                raise PreconditionError(
                    f"given coalition {s!r} is {found.value}, expected {self.beta.value}"
                )

    @property
    def j(self) -> int:
        return len(self.given)

    @property
    def cell(self) -> tuple[RepKind, Classification]:
        return (self.rep.kind, self.beta)


@dataclass(frozen=True)
class TradeAnswer:
    """
    Decision plus, on yes, the j coalitions completing the given ones and the
    full application they form.
    """

    decision: bool
    method: str
    witness: tuple[Coalition, ...] | None = None
    application: TradeApplication | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def no(cls, method: str) -> TradeAnswer:
        return cls(False, method)

    @classmethod
    def yes(
        cls,
        method: str,
        given: Sequence[Coalition],
        witness: Sequence[Coalition],
        beta: Classification,
    ) -> TradeAnswer:
        if beta is Classification.WINNING:
            application = TradeApplication.from_sides(given, witness)
        else:
            application = TradeApplication.from_sides(witness, given)
        return cls(True, method, tuple(witness), application)

    @classmethod
    def found(cls, method: str, application: TradeApplication) -> TradeAnswer:
        """A yes for a game-level question where no side was given."""
        return cls(True, method, application.winning_side, application)


def given_pair(query: TradeQuery) -> tuple[Coalition, Coalition]:
    if query.j != 2:
        raise PreconditionError(f"this decider handles j = 2 only, got j = {query.j}")
    return query.given[0], query.given[1]


# ─────────────────────────────────────────────────────────────────────────────
# Padding and stripping
# ─────────────────────────────────────────────────────────────────────────────


def pad_to(chosen: Iterable[int], target: Sequence[int]) -> list[int]:
    """
    Add players to ``chosen`` (bit patterns) until each player ``p`` occurs
    ``target[p]`` times. Players go in ascending id; a player missing ``d``
    times is added to the first ``d`` sets that lack it.
    """
    sets = list(chosen)
    for p, want in enumerate(target):
        bit = 1 << p
        deficit = want - sum(1 for s in sets if s & bit)
        for i, s in enumerate(sets):
            if deficit <= 0:
                break
            if not s & bit:
                sets[i] = s | bit
                deficit -= 1
        if deficit > 0:
            raise ValueError(f"player {p} cannot be padded to {want} occurrences")
    return sets


def strip_to(chosen: Iterable[int], target: Sequence[int], n: int) -> list[int]:
    """Mirror of ``pad_to``: remove surplus occurrences from the first sets holding them."""
    sets = list(chosen)
    for p in range(n):
        bit = 1 << p
        want = target[p] if p < len(target) else 0
        surplus = sum(1 for s in sets if s & bit) - want
        for i, s in enumerate(sets):
            if surplus <= 0:
                break
            if s & bit:
                sets[i] = s & ~bit
                surplus -= 1
        if surplus < 0:
            raise ValueError(f"player {p} occurs fewer than {want} times")
    return sets


def counts_of(bits: Iterable[int], n: int) -> list[int]:
    counts = [0] * n
    for s in bits:
        for p in iter_bits(s):
            counts[p] += 1
    return counts
