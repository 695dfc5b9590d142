"""
Hardness instances and the Set Splitting translation.

SAT → game. For a CNF φ over variables x_1..x_n the game has one player
per literal plus two specials ``a`` and ``b``. A coalition Y wins iff

  (1) a ∈ Y and Y meets every clause, or
  (2) b ∈ Y and Y holds x_k or ¬x_k for every variable.

With S_1 = {a, b} and S_2 = X (all literals), the 2-trade question on the
maximal-losing representation is yes iff φ is satisfiable. The j-version
adds players c_{1,i}, c_{2,i} (i = 3..j) and a third winning condition:

  (3) {c_{1,i}, c_{2,i}} ⊆ Y for some i.

Player layout: x_k → 2(k-1), ¬x_k → 2(k-1)+1, then a, b, then
c_{1,3}, c_{2,3}, c_{1,4}, … in that order.

Set Splitting. For an LM game and losing S_1, S_2 the family
F = {(S_1 ∪ S_2) \\ L : L ∈ LM, S_1 ∩ S_2 ⊆ L} over U = S_1 ∪ S_2 is
all-split by some bipartition (U_1, U_2) iff a 2-trade exists, and then
U_i ∪ (S_1 ∩ S_2) are the winning coalitions.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

import structlog

from sgtrade.convert import dual_game, maximal_elements
from sgtrade.errors import (
    BudgetExceededError,
    DimacsError,
    GameFormatError,
    GeneratorSelfCheckError,
    PreconditionError,
)
from sgtrade.game import (
    Classification,
    Coalition,
    GameRep,
    RepKind,
    enumerate_coalitions,
    multiplicities,
)
from sgtrade.settings import Settings, get_settings
from sgtrade.trade import TradeApplication, verify

logger = structlog.get_logger("sgtrade.reductions")


# ─────────────────────────────────────────────────────────────────────────────
# CNF formulas
# ─────────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class CnfFormula:
    """
    A CNF formula; literals are signed 1-based variable indices.

    Clauses may not be empty and may not hold both x and ¬x.
    """

    num_vars: int
    clauses: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise DimacsError(f"variable count must be non-negative, got {self.num_vars}")
        normalized = []
        for idx, clause in enumerate(self.clauses, start=1):
            lits = tuple(dict.fromkeys(clause))
            if not lits:
                raise DimacsError(f"clause {idx} is empty")
            for lit in lits:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise DimacsError(
                        f"literal {lit} in clause {idx} is out of range 1..{self.num_vars}"
                    )
                if -lit in lits:
                    raise DimacsError(f"clause {idx} contains both {abs(lit)} and -{abs(lit)}")
            normalized.append(lits)
        object.__setattr__(self, "clauses", tuple(normalized))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """``assignment[k-1]`` is the value of x_k."""
        return all(
            any(assignment[abs(lit) - 1] == (lit > 0) for lit in clause) for clause in self.clauses
        )

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.num_clauses}"]
        lines += [" ".join(map(str, clause)) + " 0" for clause in self.clauses]
        return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """
    Parse DIMACS CNF: ``c`` comment lines, one ``p cnf V C`` header and
    0-terminated clauses (a clause may span lines). A ``%`` line ends input.
    """
    header: tuple[int, int] | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before the 'p cnf' header")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"line {lineno}: not a literal: {token!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > header[0]:
                raise DimacsError(f"line {lineno}: literal {lit} out of range 1..{header[0]}")
            else:
                current.append(lit)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("last clause is missing its 0 terminator")
    if len(clauses) != header[1]:
        raise DimacsError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def sat_brute_force(f: CnfFormula, settings: Settings | None = None) -> tuple[bool, ...] | None:
    """
    First satisfying assignment in truth-table order (x_1 is the lowest bit),
    or None.
    """
    settings = get_settings(settings)
    if f.num_vars > settings.sat_cap:
        raise BudgetExceededError("truth-table scan", 1 << f.num_vars, 1 << settings.sat_cap)
    masks = []
    for clause in f.clauses:
        pos = sum(1 << (lit - 1) for lit in clause if lit > 0)
        neg = sum(1 << (-lit - 1) for lit in clause if lit < 0)
        masks.append((pos, neg))
    everything = (1 << f.num_vars) - 1
    for value in range(1 << f.num_vars):
        if all(value & pos or ~value & everything & neg for pos, neg in masks):
            return tuple(bool(value >> k & 1) for k in range(f.num_vars))
    return None


# ─────────────────────────────────────────────────────────────────────────────
# SAT → game
# ─────────────────────────────────────────────────────────────────────────────


class SatLayout:
    """Player numbering and the winning predicate of the SAT game for ``(f, j)``."""

    def __init__(self, f: CnfFormula, j: int = 2) -> None:
        self.formula = f
        self.j = j
        nv = f.num_vars
        self.a = 2 * nv
        self.b = 2 * nv + 1
        self.n_players = 2 * nv + 2 + 2 * max(0, j - 2)
        self.literals = (1 << 2 * nv) - 1
        self.full = (1 << self.n_players) - 1
        self.clause_masks = tuple(
            sum(1 << self.literal_player(lit) for lit in clause) for clause in f.clauses
        )
        self.var_masks = tuple(0b11 << 2 * k for k in range(nv))

    def literal_player(self, lit: int) -> int:
        return 2 * (abs(lit) - 1) + (0 if lit > 0 else 1)

    def c(self, side: int, i: int) -> int:
        """Player c_{side,i} for side ∈ {1, 2}, i ∈ 3..j."""
        if not 3 <= i <= self.j or side not in (1, 2):
            raise IndexError(f"no player c_{side},{i} when j = {self.j}")
        return 2 * self.formula.num_vars + 2 + 2 * (i - 3) + (side - 1)

    @property
    def c_pairs(self) -> list[int]:
        return [1 << self.c(1, i) | 1 << self.c(2, i) for i in range(3, self.j + 1)]

    def names(self) -> dict[str, int]:
        names: dict[str, int] = {}
        for k in range(1, self.formula.num_vars + 1):
            names[f"x{k}"] = self.literal_player(k)
            names[f"~x{k}"] = self.literal_player(-k)
        names["a"] = self.a
        names["b"] = self.b
        for i in range(3, self.j + 1):
            names[f"c1_{i}"] = self.c(1, i)
            names[f"c2_{i}"] = self.c(2, i)
        return names

    def wins(self, y: int) -> bool:
        if y >> self.a & 1 and all(y & cm for cm in self.clause_masks):
            return True
        if y >> self.b & 1 and all(y & vm for vm in self.var_masks):
            return True
        return any(y & pair == pair for pair in self.c_pairs)

    def losing_candidates(self) -> list[int]:
        """
        Complements of minimal "witnesses" of the winning conditions: every
        losing coalition lies below one of these.
        """
        a, b = 1 << self.a, 1 << self.b
        base = [self.full & ~(a | b)]
        base += [self.full & ~(cm | b) for cm in self.clause_masks]
        base += [self.full & ~(a | vm) for vm in self.var_masks]
        base += [self.full & ~(cm | vm) for cm in self.clause_masks for vm in self.var_masks]
        # Losing also needs one player missing from every c-pair
        candidates = []
        for choice in itertools.product((1, 2), repeat=max(0, self.j - 2)):
            dropped = sum(1 << self.c(side, i) for side, i in zip(choice, range(3, self.j + 1)))
            candidates += [s & ~dropped for s in base]
        return candidates

    def winning_side(self, assignment: Sequence[bool]) -> list[int]:
        """S_{j+1} = {a} ∪ true literals, S_{j+2} = {b} ∪ the rest, then the c-pairs."""
        true_lits = sum(
            1 << self.literal_player(k + 1 if value else -(k + 1))
            for k, value in enumerate(assignment)
        )
        return [1 << self.a | true_lits, 1 << self.b | self.literals & ~true_lits] + self.c_pairs


@dataclass(frozen=True)
class SatGameInstance:
    """
    A generated hardness instance: the game, the given coalitions and their
    type, and the player names.
    """

    formula: CnfFormula
    j: int
    rep: GameRep
    given: tuple[Coalition, ...]
    beta: Classification
    names: dict[str, int]
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def n_players(self) -> int:
        return self.rep.n

    @property
    def lm(self) -> tuple[Coalition, ...]:
        if self.rep.kind is not RepKind.LM:
            raise AttributeError("only maximal-losing instances carry an lm list")
        return self.rep.coalitions


def _require_nonempty(f: CnfFormula) -> None:
    if f.num_vars < 1 or f.num_clauses < 1:
        raise DimacsError("the reduction needs at least one variable and one clause")


def game_from_cnf(f: CnfFormula) -> SatGameInstance:
    """The 2-trade instance (LM, β=L) with S_1 = {a, b} and S_2 = X."""
    _require_nonempty(f)
    layout = SatLayout(f, 2)
    lm = maximal_elements(Coalition(s) for s in layout.losing_candidates())
    rep = GameRep(layout.n_players, RepKind.LM, tuple(lm))
    given = (Coalition(1 << layout.a | 1 << layout.b), Coalition(layout.literals))
    for s in given:
        if rep.classify(s) is not Classification.LOSING:
            raise GeneratorSelfCheckError([f"given coalition {s!r} is not losing"])
    return SatGameInstance(f, 2, rep, given, Classification.LOSING, layout.names())


def game_from_cnf_dual(f: CnfFormula) -> SatGameInstance:
    """
    The symmetric (Wm, β=W) instance: the dual game of ``game_from_cnf(f)``
    with the complements of its given coalitions, which are winning there.
    """
    primal = game_from_cnf(f)
    rep = dual_game(primal.rep)
    given = tuple(rep.full - s for s in primal.given)
    return SatGameInstance(f, 2, rep, given, Classification.WINNING, primal.names)


def _losing_layout(layout: SatLayout) -> tuple[list[int], list[str]]:
    j, c = layout.j, layout.c
    a, b = 1 << layout.a, 1 << layout.b
    notes: list[str] = []
    given = [layout.literals]
    last = j if j % 2 == 0 else j - 1
    if j % 2 == 0:
        given.append(a | b)
    else:
        given.append(a | 1 << c(1, j))
    for i in range(3, last + 1):
        if i % 2 == 1:
            given.append(1 << c(1, i) | 1 << c(1, i + 1))
        else:
            given.append(1 << c(2, i - 1) | 1 << c(2, i))
    if j % 2 == 1:
        given.append(b | 1 << c(2, j))
        notes.append(f"{{b, c2_{j}}} is placed as the j-th losing coalition")
        if j >= 5:
            notes.append(
                f"the c2 chain runs over i in 4..{j - 1}; stopping at {j - 2} would leave "
                f"c2_{j - 2} and c2_{j - 1} unmatched"
            )
            logger.warning("odd_chain_extended", j=j)
    return given, notes


def game_from_cnf_j(
    f: CnfFormula, j: int, settings: Settings | None = None
) -> SatGameInstance:
    """
    The j-trade instance (LM, β=L). j = 2 delegates to ``game_from_cnf``.

    The generator verifies its output and raises ``GeneratorSelfCheckError``
    when a given coalition is not losing, a constructed winning coalition is
    not winning, the 2j coalitions are unbalanced, or (at small scale) the LM
    list disagrees with the winning predicate.
    """
    if j < 2:
        raise PreconditionError(f"the SAT reduction needs j >= 2, got {j}")
    if j == 2:
        return game_from_cnf(f)
    settings = get_settings(settings)
    _require_nonempty(f)
    layout = SatLayout(f, j)
    lm = maximal_elements(Coalition(s) for s in layout.losing_candidates())
    rep = GameRep(layout.n_players, RepKind.LM, tuple(lm))
    given_bits, notes = _losing_layout(layout)
    given = tuple(Coalition(s) for s in given_bits)

    findings = _self_check(layout, rep, given, settings)
    if findings:
        logger.error("generator_self_check_failed", j=j, findings=findings)
        raise GeneratorSelfCheckError(findings)
    return SatGameInstance(f, j, rep, given, Classification.LOSING, layout.names(), tuple(notes))


def _self_check(
    layout: SatLayout, rep: GameRep, given: tuple[Coalition, ...], settings: Settings
) -> list[str]:
    findings: list[str] = []
    if len(given) != layout.j:
        findings.append(f"{len(given)} losing coalitions generated, expected {layout.j}")
    for idx, s in enumerate(given, start=1):
        if rep.wins(s.bits):
            findings.append(f"losing coalition S_{idx} = {s!r} wins")

    assignment = sat_brute_force(layout.formula, settings)
    # Multiplicities do not depend on the assignment, so an unsatisfiable
    # formula is balanced-checked with the all-true split.
    split = assignment if assignment is not None else (True,) * layout.formula.num_vars
    winning = [Coalition(s) for s in layout.winning_side(split)]
    # S_{j+1} and S_{j+2} only win when the split satisfies the formula
    checked = winning if assignment is not None else winning[2:]
    for idx, s in enumerate(checked, start=layout.j + 1 + len(winning) - len(checked)):
        if not rep.wins(s.bits):
            findings.append(f"winning coalition S_{idx} = {s!r} loses")
    ta = TradeApplication.from_sides(winning, given)
    if multiplicities(ta.winning_side, rep.n) != multiplicities(ta.losing_side, rep.n):
        findings.append("player multiplicities differ between the two sides")
    elif assignment is not None and not findings and not verify(rep, ta):
        findings.append("the constructed application does not verify")

    if layout.n_players <= settings.self_check_cap:
        for s in enumerate_coalitions(layout.n_players, settings):
            if rep.wins(s.bits) != layout.wins(s.bits):
                findings.append(f"LM list and winning predicate disagree on {s!r}")
                break
    return findings


# ─────────────────────────────────────────────────────────────────────────────
# Set Splitting
# ─────────────────────────────────────────────────────────────────────────────


@dataclass(frozen=True)
class SetSplittingInstance:
    """Family ``family`` over ``universe``; at least ``k`` members must be split."""

    universe: Coalition
    family: tuple[Coalition, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", tuple(self.family))
        for z in self.family:
            if not z.issubset(self.universe):
                raise GameFormatError(f"family member {z!r} is not inside the universe")
        if not 0 <= self.k <= len(self.family):
            raise GameFormatError(f"k must lie in 0..{len(self.family)}, got {self.k}")

    def splits(self, u1: Coalition, z: Coalition) -> bool:
        return bool(z.bits & u1.bits) and bool(z.bits & ~u1.bits)


def _is_losing(lm: Sequence[Coalition], s: Coalition) -> bool:
    return any(s.issubset(member) for member in lm)


def build_set_splitting(
    lm: Sequence[Coalition], s1: Coalition, s2: Coalition
) -> SetSplittingInstance:
    """
    U = S_1 ∪ S_2, F = {U \\ L_i : S_1 ∩ S_2 ⊆ L_i}, k = |F|.

    Raises:
        PreconditionError: S_1 or S_2 is not losing under ``lm``.
    """
    for s in (s1, s2):
        if not _is_losing(lm, s):
            raise PreconditionError(f"{s!r} is not losing under the given LM list")
    universe, common = s1 | s2, s1 & s2
    family = tuple(universe - member for member in lm if common.issubset(member))
    return SetSplittingInstance(universe, family, len(family))


def solve_set_splitting(
    inst: SetSplittingInstance, settings: Settings | None = None
) -> tuple[Coalition, Coalition] | None:
    """
    First bipartition (U_1, U_2) in search order splitting at least ``k``
    members, or None. The lowest element of U always goes to U_1; elements
    are placed in ascending order, U_1 tried first, and a branch dies as soon
    as more than |F| - k members are fully placed on one side.
    """
    settings = get_settings(settings)
    elements = list(inst.universe)
    if len(elements) > settings.split_cap:
        raise BudgetExceededError(
            "set splitting search", 1 << max(0, len(elements) - 1), 1 << (settings.split_cap - 1)
        )
    allowed_dead = len(inst.family) - inst.k
    # Members become decidable once their highest element is placed
    closing: dict[int, list[int]] = {p: [] for p in elements}
    dead_from_start = 0
    for z in inst.family:
        if z.bits:
            closing[z.bits.bit_length() - 1].append(z.bits)
        else:
            dead_from_start += 1
    if dead_from_start > allowed_dead:
        return None
    if not elements:
        return Coalition(), Coalition()

    def place(idx: int, side1: int, dead: int) -> int | None:
        if idx == len(elements):
            return side1
        p = elements[idx]
        options = (True,) if idx == 0 else (True, False)
        for in_first in options:
            s1 = side1 | 1 << p if in_first else side1
            now_dead = dead + sum(1 for z in closing[p] if not (z & s1 and z & ~s1))
            if now_dead > allowed_dead:
                continue
            found = place(idx + 1, s1, now_dead)
            if found is not None:
                return found
        return None

    side1 = place(0, 0, dead_from_start)
    if side1 is None:
        return None
    return Coalition(side1), inst.universe - Coalition(side1)
