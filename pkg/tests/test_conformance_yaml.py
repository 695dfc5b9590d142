"""
tests/test_conformance_yaml.py — Validate the conformance YAML suites and run
every test case in them against the library.
"""

import pathlib

import pytest
import yaml

from sgtrade import errors
from sgtrade.convert import convert
from sgtrade.deciders import decide_j_trade, is_j_trade
from sgtrade.dispatch import TradeDispatcher
from sgtrade.documents import GameDocument, from_lists
from sgtrade.families import example_game
from sgtrade.game import Classification, RepKind
from sgtrade.oracle import brute_force_trade
from sgtrade.reductions import game_from_cnf_dual, game_from_cnf_j, parse_dimacs
from sgtrade.trade import COMPLEXITY_TABLE, TradeQuery, verify

CONFORMANCE_DIR = pathlib.Path(__file__).parent.parent / "conformance" / "tests"

SUITES = {
    "trade_queries.yaml": ("TQ", 10),
    "complexity_table.yaml": ("CT", 8),
    "game_level.yaml": ("JT", 6),
    "reductions.yaml": ("RD", 9),
}


def load_yaml(name: str) -> dict:
    return yaml.safe_load((CONFORMANCE_DIR / name).read_text())


def cases(name: str) -> list:
    return [pytest.param(t, id=t["id"]) for t in load_yaml(name)["tests"]]


def game_of(raw: dict):
    return GameDocument.model_validate(raw).to_rep()


def error_class(name: str) -> type:
    return getattr(errors, name)


# ── Suite layout ─────────────────────────────────────────────────────────────

class TestSuiteLayout:
    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_required_keys(self, name):
        suite = load_yaml(name)
        assert suite["suite"] == name.removesuffix(".yaml")
        assert "version" in suite and "description" in suite
        for t in suite["tests"]:
            assert "id" in t
            assert "description" in t
            assert t["level"] in {"MUST", "SHOULD", "MAY"}

    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_ids_are_consecutive(self, name):
        prefix, count = SUITES[name]
        ids = [t["id"] for t in load_yaml(name)["tests"]]
        assert ids == [f"{prefix}-{i:03d}" for i in range(1, count + 1)]


# ── trade_queries.yaml ───────────────────────────────────────────────────────

class TestTradeQueries:
    @pytest.mark.parametrize("case", cases("trade_queries.yaml"))
    def test_case(self, case):
        rep = game_of(case["game"])
        beta = Classification.from_tag(case["beta"])
        given = from_lists(case["given"])
        expect = case["expect"]
        if "error" in expect:
            with pytest.raises(error_class(expect["error"])):
                TradeDispatcher().dispatch(TradeQuery(rep, beta, given))
            return
        answer = TradeDispatcher().dispatch(TradeQuery(rep, beta, given))
        assert answer.decision == expect["decision"]
        if "method" in expect:
            assert answer.method == expect["method"]
        if "witness" in expect:
            assert [s.to_list() for s in answer.witness] == expect["witness"]
        if answer.decision:
            assert verify(rep, answer.application)
        assert (brute_force_trade(rep, len(given), given, beta) is not None) == expect["decision"]


# ── complexity_table.yaml ────────────────────────────────────────────────────

class TestComplexityTable:
    @pytest.fixture(scope="class")
    def suite(self):
        return load_yaml("complexity_table.yaml")

    def test_covers_every_cell(self, suite):
        cells = {(t["cell"]["kind"], t["cell"]["beta"]) for t in suite["tests"]}
        assert len(cells) == len(COMPLEXITY_TABLE) == 8

    @pytest.mark.parametrize("case", cases("complexity_table.yaml"))
    def test_case(self, case):
        cell = case["cell"]
        kind, beta = RepKind(cell["kind"]), Classification.from_tag(cell["beta"])
        assert COMPLEXITY_TABLE[(kind, beta)].value == cell["complexity"]

    @pytest.mark.parametrize("case", cases("complexity_table.yaml"))
    def test_routing(self, case):
        cell = case["cell"]
        beta = Classification.from_tag(cell["beta"])
        rep = convert(example_game(), cell["kind"])
        given = from_lists([[0, 2], [1, 3]] if beta is Classification.WINNING else [[0, 1], [2, 3]])
        decider = TradeDispatcher().route(TradeQuery(rep, beta, given))
        assert decider.name == cell["decider"]


# ── game_level.yaml ──────────────────────────────────────────────────────────

class TestGameLevel:
    @pytest.mark.parametrize("case", cases("game_level.yaml"))
    def test_case(self, case):
        rep = game_of(case["game"])
        answer = is_j_trade(rep, case["j"])
        assert answer.decision == case["expect"]["decision"]
        if answer.decision:
            assert verify(rep, answer.application)
        assert (brute_force_trade(rep, case["j"]) is not None) == answer.decision


# ── reductions.yaml ──────────────────────────────────────────────────────────

class TestReductions:
    @pytest.fixture(scope="class")
    def formulas(self):
        return load_yaml("reductions.yaml")["formulas"]

    @pytest.mark.parametrize("case", cases("reductions.yaml"))
    def test_case(self, case, formulas):
        f = parse_dimacs(formulas[case["formula"]])
        expect = case["expect"]
        if "error" in expect:
            with pytest.raises(error_class(expect["error"])):
                game_from_cnf_j(f, case["j"])
            return
        inst = game_from_cnf_dual(f) if case.get("dual") else game_from_cnf_j(f, case["j"])
        if inst.j == 2:
            answer = TradeDispatcher().dispatch(TradeQuery(inst.rep, inst.beta, inst.given))
        else:
            answer = decide_j_trade(inst.rep, inst.j, inst.given, inst.beta)
        assert answer.decision == expect["decision"]
