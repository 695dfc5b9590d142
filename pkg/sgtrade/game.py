"""
Simple games — players, coalitions, the four representations and classification.

A simple game on players ``N = {0, …, n-1}`` is given by one explicit family
of coalitions (``RepKind``):

  W   complete list of winning coalitions
  L   complete list of losing coalitions
  Wm  minimal winning coalitions (an antichain)
  LM  maximal losing coalitions (an antichain)

Players are 0-based everywhere; the literature numbers them 1..n.
Coalitions are bit vectors stored in a Python ``int`` (bit ``p`` set means
player ``p`` is a member).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from sgtrade.errors import BudgetExceededError, InvalidCoalitionError
from sgtrade.settings import Settings, get_settings

Player = int


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the set bit positions of ``bits`` in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, slots=True, order=True)
class Coalition:
    """
    A set of players, stored as a bit vector.

    Equality is set equality, iteration is in ascending player id and the
    natural ordering is by bit pattern (the deterministic output order used
    throughout sgtrade).

    Examples::

        Coalition.of(0, 2)             # {0, 2}
        Coalition.of(0, 2) | Coalition.of(1)
        list(Coalition(0b101))         # [0, 2]
    """

    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise InvalidCoalitionError(f"coalition bits must be non-negative, got {self.bits}")

    # ── Constructors ─────────────────────────────────────────────────────────

    @classmethod
    def of(cls, *players: Player) -> Coalition:
        return cls.from_players(players)

    @classmethod
    def from_players(cls, players: Iterable[Player]) -> Coalition:
        bits = 0
        for p in players:
            if p < 0:
                raise InvalidCoalitionError(f"player ids are non-negative, got {p}")
            bits |= 1 << p
        return cls(bits)

    @classmethod
    def full(cls, n: int) -> Coalition:
        """The grand coalition N = {0, …, n-1}."""
        return cls((1 << n) - 1)

    # ── Set protocol ─────────────────────────────────────────────────────────

    def __iter__(self) -> Iterator[Player]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, player: object) -> bool:
        return isinstance(player, int) and player >= 0 and bool(self.bits >> player & 1)

    def __or__(self, other: Coalition) -> Coalition:
        return Coalition(self.bits | other.bits)

    def __and__(self, other: Coalition) -> Coalition:
        return Coalition(self.bits & other.bits)

    def __sub__(self, other: Coalition) -> Coalition:
        return Coalition(self.bits & ~other.bits)

    def __xor__(self, other: Coalition) -> Coalition:
        return Coalition(self.bits ^ other.bits)

    def issubset(self, other: Coalition) -> bool:
        return self.bits & ~other.bits == 0

    def issuperset(self, other: Coalition) -> bool:
        return other.bits & ~self.bits == 0

    def fits(self, n: int) -> bool:
        """True if every member is a valid player of an ``n``-player game."""
        return self.bits >> n == 0

    def to_list(self) -> list[Player]:
        return list(self)

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


class RepKind(str, Enum):
    """Which family of coalitions a ``GameRep`` lists."""

    W = "W"
    L = "L"
    WM = "Wm"
    LM = "LM"

    @property
    def is_explicit(self) -> bool:
        """W and L list every coalition of their type."""
        return self in (RepKind.W, RepKind.L)

    @property
    def lists_winning(self) -> bool:
        return self in (RepKind.W, RepKind.WM)


class Classification(str, Enum):
    """Winning or losing; also used as the β type of a trade query."""

    WINNING = "Winning"
    LOSING = "Losing"

    @property
    def opposite(self) -> Classification:
        return Classification.LOSING if self is Classification.WINNING else Classification.WINNING

    @property
    def tag(self) -> str:
        """The short W/L tag used on the command line."""
        return "W" if self is Classification.WINNING else "L"

    @classmethod
    def from_tag(cls, tag: str) -> Classification:
        tags = {"W": cls.WINNING, "L": cls.LOSING}
        try:
            return tags[tag]
        except KeyError:
            raise ValueError(f"beta must be 'W' or 'L', got {tag!r}") from None


@dataclass(frozen=True)
class GameRep:
    """
    A simple game given as ``(N, X)`` with ``X`` one of W, L, Wm, LM.

    Construction only checks that coalitions fit the player range; the
    semantic invariants (antichain, ∅/N placement, monotonicity) are reported
    by ``validate_game``.

    Examples::

        # The 4-player game with minimal winning coalitions {0,2} and {1,3}
        game = GameRep.of(4, RepKind.WM, [[0, 2], [1, 3]])
        game.classify(Coalition.of(0, 1, 2))    # Classification.WINNING
    """

    n: int
    kind: RepKind
    coalitions: tuple[Coalition, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"player count must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "kind", RepKind(self.kind))
        object.__setattr__(self, "coalitions", tuple(self.coalitions))
        for s in self.coalitions:
            if not s.fits(self.n):
                raise InvalidCoalitionError(
                    f"coalition {s!r} has players outside [0, {self.n}) in a {self.kind.value} list"
                )

    @classmethod
    def of(cls, n: int, kind: RepKind | str, coalitions: Iterable[Iterable[Player]]) -> GameRep:
        """Build from plain player lists."""
        return cls(n, RepKind(kind), tuple(Coalition.from_players(c) for c in coalitions))

    @property
    def full(self) -> Coalition:
        return Coalition.full(self.n)

    @cached_property
    def members(self) -> frozenset[int]:
        """Bit patterns of the listed coalitions."""
        return frozenset(s.bits for s in self.coalitions)

    @cached_property
    def _bit_list(self) -> tuple[int, ...]:
        return tuple(s.bits for s in self.coalitions)

    def check(self, s: Coalition) -> None:
        if not s.fits(self.n):
            raise InvalidCoalitionError(
                f"coalition {s!r} names a player outside [0, {self.n})"
            )

    def wins(self, bits: int) -> bool:
        """Unchecked classification of a raw bit pattern (hot-loop path)."""
        kind = self.kind
        if kind is RepKind.W:
            return bits in self.members
        if kind is RepKind.L:
            return bits not in self.members
        if kind is RepKind.WM:
            return any(m & ~bits == 0 for m in self._bit_list)
        return not any(bits & ~m == 0 for m in self._bit_list)

    def classify(self, s: Coalition) -> Classification:
        self.check(s)
        return Classification.WINNING if self.wins(s.bits) else Classification.LOSING

    def __repr__(self) -> str:
        return f"GameRep(n={self.n}, kind={self.kind.value}, coalitions={list(self.coalitions)})"


def classify(rep: GameRep, s: Coalition) -> Classification:
    """
    Winning or losing under ``rep``.

    W/L lists are complete: membership decides. Wm: winning iff some minimal
    winning coalition is contained in ``s``. LM: losing iff ``s`` is contained
    in some maximal losing coalition.

    Raises:
        InvalidCoalitionError: ``s`` contains a player id ≥ n.
    """
    return rep.classify(s)


def multiplicity(coalitions: Iterable[Coalition], p: Player) -> int:
    """Number of coalitions in the list that contain player ``p``."""
    return sum(1 for s in coalitions if p in s)


def multiplicities(coalitions: Sequence[Coalition], n: int) -> tuple[int, ...]:
    """Per-player occurrence counts over ``coalitions``."""
    counts = [0] * n
    for s in coalitions:
        for p in s:
            counts[p] += 1
    return tuple(counts)


# ─────────────────────────────────────────────────────────────────────────────
# Validation
# ─────────────────────────────────────────────────────────────────────────────


class ViolationCode(str, Enum):
    DUPLICATE = "duplicate"
    NOT_ANTICHAIN = "non-antichain"
    EMPTY_WINNING = "empty-set-winning"
    FULL_NOT_WINNING = "grand-coalition-not-winning"
    FULL_LOSING = "grand-coalition-losing"
    EMPTY_NOT_LOSING = "empty-set-not-losing"
    NOT_MONOTONE = "not-monotone"


@dataclass(frozen=True)
class Violation:
    code: ViolationCode
    message: str
    coalitions: tuple[Coalition, ...] = ()


@dataclass
class ValidationReport:
    """Findings of ``validate_game``; empty ``violations`` means valid."""

    violations: list[Violation] = field(default_factory=list)
    monotonicity_checked: bool = False

    @property
    def valid(self) -> bool:
        return not self.violations

    def codes(self) -> set[ViolationCode]:
        return {v.code for v in self.violations}

    def add(self, code: ViolationCode, message: str, *coalitions: Coalition) -> None:
        self.violations.append(Violation(code, message, tuple(coalitions)))


def validate_game(rep: GameRep, settings: Settings | None = None) -> ValidationReport:
    """
    Check ``rep`` against the simple-game axioms (N wins, ∅ loses, monotone).

    Syntactic checks always run. For W and L lists the full monotonicity
    check runs only while ``n <= settings.oracle_cap``.
    """
    settings = get_settings(settings)
    report = ValidationReport()
    kind, full = rep.kind, rep.full

    seen: set[int] = set()
    for s in rep.coalitions:
        if s.bits in seen:
            report.add(ViolationCode.DUPLICATE, f"{s!r} is listed more than once", s)
        seen.add(s.bits)

    if kind in (RepKind.WM, RepKind.LM):
        distinct = sorted(set(rep.coalitions))
        for i, a in enumerate(distinct):
            for b in distinct[i + 1 :]:
                if a.issubset(b) or b.issubset(a):
                    small, big = (a, b) if a.issubset(b) else (b, a)
                    report.add(
                        ViolationCode.NOT_ANTICHAIN, f"{small!r} is contained in {big!r}", small, big
                    )

    empty = Coalition()
    if kind is RepKind.W:
        if empty.bits in seen:
            report.add(ViolationCode.EMPTY_WINNING, "the empty coalition is listed as winning")
        if full.bits not in seen:
            report.add(ViolationCode.FULL_NOT_WINNING, "the grand coalition is not listed as winning")
    elif kind is RepKind.WM:
        if empty.bits in seen:
            report.add(ViolationCode.EMPTY_WINNING, "the empty coalition is listed as minimal winning")
        if not seen:
            report.add(ViolationCode.FULL_NOT_WINNING, "no minimal winning coalition, so N loses")
    elif kind is RepKind.L:
        if full.bits in seen:
            report.add(ViolationCode.FULL_LOSING, "the grand coalition is listed as losing")
        if empty.bits not in seen:
            report.add(ViolationCode.EMPTY_NOT_LOSING, "the empty coalition is not listed as losing")
    else:
        if full.bits in seen:
            report.add(ViolationCode.FULL_LOSING, "the grand coalition is listed as maximal losing")
        if not seen:
            report.add(ViolationCode.EMPTY_NOT_LOSING, "no maximal losing coalition, so ∅ wins")

    if kind.is_explicit and rep.n <= settings.oracle_cap:
        report.monotonicity_checked = True
        _check_closure(rep, seen, report)
    return report


def _check_closure(rep: GameRep, listed: set[int], report: ValidationReport) -> None:
    # W must be closed under adding a player, L under removing one.
    upward = rep.kind is RepKind.W
    for bits in sorted(listed):
        for p in range(rep.n):
            bit = 1 << p
            if upward and not bits & bit and bits | bit not in listed:
                report.add(
                    ViolationCode.NOT_MONOTONE,
                    f"{Coalition(bits)!r} wins but {Coalition(bits | bit)!r} is not listed",
                    Coalition(bits),
                    Coalition(bits | bit),
                )
            elif not upward and bits & bit and bits & ~bit not in listed:
                report.add(
                    ViolationCode.NOT_MONOTONE,
                    f"{Coalition(bits)!r} loses but {Coalition(bits & ~bit)!r} is not listed",
                    Coalition(bits),
                    Coalition(bits & ~bit),
                )


def enumerate_coalitions(n: int, settings: Settings | None = None) -> Iterator[Coalition]:
    """
    All ``2^n`` coalitions of an ``n``-player game, ascending by bit pattern.

    Raises:
        BudgetExceededError: ``n`` is above ``settings.oracle_cap``.
    """
    settings = get_settings(settings)
    if n > settings.oracle_cap:
        raise BudgetExceededError("coalition enumeration", 1 << n, 1 << settings.oracle_cap)
    return (Coalition(bits) for bits in range(1 << n))
