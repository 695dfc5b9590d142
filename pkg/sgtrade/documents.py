"""
JSON wire documents read and written by the CLI.

Every document is a pydantic model; field order is the output key order
and coalition lists are written sorted, so equal inputs give byte-equal
output. Parse failures surface as ``GameFormatError``.

Game file::

    {"n": 4, "kind": "Wm", "coalitions": [[0, 2], [1, 3]]}
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from typing import Any, Literal, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from sgtrade.errors import GameFormatError
from sgtrade.game import Classification, Coalition, GameRep, RepKind, ValidationReport
from sgtrade.reductions import SatGameInstance, SetSplittingInstance
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import COMPLEXITY_TABLE, TradeAnswer, TradeApplication, complexity

PlayerList = list[int]

_Doc = TypeVar("_Doc", bound=BaseModel)


def check_player_list(players: Sequence[int], what: str, limit: int | None = None) -> None:
    """Raise ValueError unless ``players`` is strictly ascending within [0, limit)."""
    if any(p < 0 for p in players):
        raise ValueError(f"{what} {list(players)} has a negative player id")
    if limit is not None and any(p >= limit for p in players):
        raise ValueError(f"{what} names a player outside [0, {limit})")
    if any(a >= b for a, b in zip(players, players[1:])):
        raise ValueError(f"{what} {list(players)} is not strictly ascending")


def to_lists(coalitions: Iterable[Coalition]) -> list[PlayerList]:
    return [s.to_list() for s in coalitions]


def from_lists(lists: Iterable[Sequence[int]]) -> tuple[Coalition, ...]:
    return tuple(Coalition.from_players(c) for c in lists)


class _Document(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    def dumps(self) -> str:
        return self.model_dump_json(indent=2) + "\n"


def parse_document(model: type[_Doc], text: str | bytes) -> _Doc:
    """Validate ``text`` as ``model``, turning pydantic errors into GameFormatError."""
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise GameFormatError(f"invalid {model.__name__}: {exc}") from exc


# ─────────────────────────────────────────────────────────────────────────────
# Games
# ─────────────────────────────────────────────────────────────────────────────


class GameDocument(_Document):
    n: int = Field(ge=0)
    kind: RepKind
    coalitions: list[PlayerList] = Field(default_factory=list)

    @field_validator("coalitions")
    @classmethod
    def _ascending(cls, value: list[PlayerList]) -> list[PlayerList]:
        for players in value:
            check_player_list(players, "coalition")
        return value

    @model_validator(mode="after")
    def _in_range(self) -> GameDocument:
        seen: set[tuple[int, ...]] = set()
        for players in self.coalitions:
            if players and players[-1] >= self.n:
                raise ValueError(f"coalition {players} names a player outside [0, {self.n})")
            key = tuple(players)
            if key in seen:
                raise ValueError(f"coalition {players} is listed more than once")
            seen.add(key)
        return self

    @classmethod
    def from_rep(cls, rep: GameRep) -> GameDocument:
        return cls(n=rep.n, kind=rep.kind, coalitions=to_lists(sorted(rep.coalitions)))

    def to_rep(self, settings: Settings | None = None) -> GameRep:
        settings = get_settings(settings)
        if self.n > settings.max_players:
            raise GameFormatError(
                f"games are limited to {settings.max_players} players, got n = {self.n}"
            )
        return GameRep(self.n, self.kind, from_lists(self.coalitions))


class SatInstanceDocument(_Document):
    game: GameDocument
    beta: Literal["W", "L"] = "L"
    given: list[PlayerList]
    names: dict[str, int]
    j: int = Field(ge=1)
    notes: list[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _given_count(self) -> SatInstanceDocument:
        if len(self.given) != self.j:
            raise ValueError(f"expected {self.j} given coalitions, got {len(self.given)}")
        for players in self.given:
            check_player_list(players, "given coalition", self.game.n)
        return self

    @classmethod
    def from_instance(cls, inst: SatGameInstance) -> SatInstanceDocument:
        return cls(
            game=GameDocument.from_rep(inst.rep),
            beta=inst.beta.tag,
            given=to_lists(inst.given),
            names=dict(sorted(inst.names.items(), key=lambda item: item[1])),
            j=inst.j,
            notes=list(inst.notes),
        )

    @property
    def classification(self) -> Classification:
        return Classification.from_tag(self.beta)

    def given_coalitions(self) -> tuple[Coalition, ...]:
        return from_lists(self.given)


def read_game_input(
    text: str | bytes, settings: Settings | None = None
) -> tuple[GameRep, SatInstanceDocument | None]:
    """
    A game file or a generated instance; the instance document is returned
    alongside so callers can pick up its given coalitions.
    """
    try:
        raw: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GameFormatError(f"not valid JSON: {exc}") from exc
    if isinstance(raw, dict) and "game" in raw:
        inst = parse_document(SatInstanceDocument, text)
        return inst.game.to_rep(settings), inst
    return parse_document(GameDocument, text).to_rep(settings), None


# ─────────────────────────────────────────────────────────────────────────────
# Set Splitting
# ─────────────────────────────────────────────────────────────────────────────


class SplitInstanceDocument(_Document):
    universe: PlayerList
    family: list[PlayerList]
    k: int | None = None

    @field_validator("universe")
    @classmethod
    def _universe_ascending(cls, value: PlayerList) -> PlayerList:
        check_player_list(value, "universe", Settings().max_players)
        return value

    @field_validator("family")
    @classmethod
    def _family_ascending(cls, value: list[PlayerList]) -> list[PlayerList]:
        for members in value:
            check_player_list(members, "family member", Settings().max_players)
        return value

    @classmethod
    def from_instance(cls, inst: SetSplittingInstance) -> SplitInstanceDocument:
        return cls(universe=inst.universe.to_list(), family=to_lists(inst.family), k=inst.k)

    def to_instance(self) -> SetSplittingInstance:
        k = len(self.family) if self.k is None else self.k
        return SetSplittingInstance(Coalition.from_players(self.universe), from_lists(self.family), k)


class SplitSolutionDocument(_Document):
    decision: bool
    u1: PlayerList | None = None
    u2: PlayerList | None = None


# ─────────────────────────────────────────────────────────────────────────────
# Answers and reports
# ─────────────────────────────────────────────────────────────────────────────


class ApplicationDocument(_Document):
    j: int
    coalitions: list[PlayerList]
    winners: list[int]

    @classmethod
    def from_application(cls, ta: TradeApplication) -> ApplicationDocument:
        return cls(j=ta.j, coalitions=to_lists(ta.coalitions), winners=sorted(ta.winners))


class AnswerDocument(_Document):
    decision: bool
    cell: str | None = None
    j: int
    method: str
    given: list[PlayerList] | None = None
    witness: list[PlayerList] | None = None
    application: ApplicationDocument | None = None
    complexity: str | None = None
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_answer(
        cls,
        rep: GameRep,
        j: int,
        answer: TradeAnswer,
        given: Sequence[Coalition] | None = None,
        beta: Classification | None = None,
    ) -> AnswerDocument:
        cell = cost = None
        if given is not None and beta is not None:
            cell = f"{rep.kind.value}/{beta.tag}"
            cost = complexity(rep.kind, beta).value
        return cls(
            decision=answer.decision,
            cell=cell,
            j=j,
            method=answer.method,
            given=None if given is None else to_lists(given),
            witness=None if answer.witness is None else to_lists(answer.witness),
            application=(
                None
                if answer.application is None
                else ApplicationDocument.from_application(answer.application)
            ),
            complexity=cost,
            notes=list(answer.notes),
        )


class ViolationDocument(_Document):
    code: str
    message: str
    coalitions: list[PlayerList] = Field(default_factory=list)


class ValidationDocument(_Document):
    valid: bool
    monotonicity_checked: bool = False
    violations: list[ViolationDocument] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: ValidationReport) -> ValidationDocument:
        return cls(
            valid=report.valid,
            monotonicity_checked=report.monotonicity_checked,
            violations=[
                ViolationDocument(code=v.code.value, message=v.message, coalitions=to_lists(v.coalitions))
                for v in report.violations
            ],
        )


class ErrorDocument(_Document):
    error: str
    message: str
    details: list[str] = Field(default_factory=list)


class CellDocument(_Document):
    kind: str
    beta: str
    complexity: str


class TableDocument(_Document):
    """The 2-trade complexity table, one entry per (representation, β) cell."""

    cells: list[CellDocument]

    @classmethod
    def build(cls) -> TableDocument:
        return cls(
            cells=[
                CellDocument(kind=kind.value, beta=beta.tag, complexity=cost.value)
                for (kind, beta), cost in COMPLEXITY_TABLE.items()
            ]
        )
