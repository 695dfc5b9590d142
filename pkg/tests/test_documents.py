"""
tests/test_documents.py — JSON documents for games, instances and answers
"""

import json

import pytest

from sgtrade.deciders import is_j_trade
from sgtrade.dispatch import dispatch
from sgtrade.documents import (
    AnswerDocument,
    GameDocument,
    SatInstanceDocument,
    SplitInstanceDocument,
    TableDocument,
    ValidationDocument,
    check_player_list,
    parse_document,
    read_game_input,
)
from sgtrade.errors import GameFormatError
from sgtrade.families import example_game
from sgtrade.game import Classification, Coalition, GameRep, RepKind, validate_game
from sgtrade.reductions import CnfFormula, game_from_cnf_j
from sgtrade.settings import Settings
from sgtrade.trade import TradeQuery

EXAMPLE_JSON = '{"n": 4, "kind": "Wm", "coalitions": [[0, 2], [1, 3]]}'


# ── Games ────────────────────────────────────────────────────────────────────

class TestCheckPlayerList:
    def test_accepts_ascending(self):
        check_player_list([0, 2, 5], "coalition", 6)

    @pytest.mark.parametrize("players", [[2, 0, 0], [1, 1], [-1], [0, 6]])
    def test_rejects(self, players):
        with pytest.raises(ValueError):
            check_player_list(players, "coalition", 6)

    def test_no_limit(self):
        check_player_list([0, 10**20], "coalition")


class TestGameDocument:
    def test_parse(self):
        doc = parse_document(GameDocument, EXAMPLE_JSON)
        assert doc.to_rep() == example_game()

    def test_from_rep_sorts(self):
        rep = GameRep.of(4, RepKind.WM, [[1, 3], [0, 2]])
        assert GameDocument.from_rep(rep).coalitions == [[0, 2], [1, 3]]

    def test_dumps_key_order(self):
        text = GameDocument.from_rep(example_game()).dumps()
        assert list(json.loads(text)) == ["n", "kind", "coalitions"]
        assert text.endswith("\n")

    @pytest.mark.parametrize(
        "text",
        [
            '{"n": 4, "kind": "Wm", "coalitions": [[2, 0]]}',
            '{"n": 4, "kind": "Wm", "coalitions": [[0, 4]]}',
            '{"n": 4, "kind": "Wm", "coalitions": [[0, 2], [0, 2]]}',
            '{"n": 4, "kind": "Wm", "coalitions": [[-1, 2]]}',
            '{"n": 4, "kind": "Wx", "coalitions": []}',
            '{"n": -1, "kind": "W", "coalitions": []}',
            '{"n": 4, "kind": "Wm", "coalitions": [], "extra": 1}',
            '{"n": 4, "kind": "Wm", "coalitions": [[1, 1]]}',
        ],
    )
    def test_invalid(self, text):
        with pytest.raises(GameFormatError):
            parse_document(GameDocument, text)

    def test_player_limit(self):
        doc = GameDocument(n=10, kind=RepKind.W, coalitions=[])
        with pytest.raises(GameFormatError):
            doc.to_rep(Settings(max_players=8, oracle_cap=8))


class TestReadGameInput:
    def test_plain_game(self):
        rep, inst = read_game_input(EXAMPLE_JSON)
        assert rep == example_game()
        assert inst is None

    def test_instance(self):
        generated = game_from_cnf_j(CnfFormula(1, ((1,),)), 3)
        text = SatInstanceDocument.from_instance(generated).dumps()
        rep, inst = read_game_input(text)
        assert (rep.n, rep.kind) == (generated.rep.n, generated.rep.kind)
        assert set(rep.coalitions) == set(generated.rep.coalitions)
        assert inst.j == 3
        assert inst.classification is Classification.LOSING
        assert inst.given_coalitions() == generated.given
        assert inst.names["a"] == 2
        assert inst.notes

    def test_not_json(self):
        with pytest.raises(GameFormatError):
            read_game_input("{n: 4")

    def test_instance_given_count(self):
        bad = {"game": json.loads(EXAMPLE_JSON), "given": [[0, 1]], "names": {}, "j": 2}
        with pytest.raises(GameFormatError):
            read_game_input(json.dumps(bad))

    def test_instance_given_outside_game(self):
        bad = {"game": json.loads(EXAMPLE_JSON), "given": [[0, 1], [2, 10**20]], "names": {}, "j": 2}
        with pytest.raises(GameFormatError, match="outside"):
            read_game_input(json.dumps(bad))


# ── Set Splitting ────────────────────────────────────────────────────────────

class TestSplitInstanceDocument:
    def test_k_defaults_to_family_size(self):
        doc = parse_document(SplitInstanceDocument, '{"universe": [0, 1, 2], "family": [[0, 1], [1, 2]]}')
        assert doc.to_instance().k == 2

    def test_member_outside_universe(self):
        doc = parse_document(SplitInstanceDocument, '{"universe": [0, 1], "family": [[0, 2]]}')
        with pytest.raises(GameFormatError):
            doc.to_instance()

    def test_unsorted_universe(self):
        with pytest.raises(GameFormatError):
            parse_document(SplitInstanceDocument, '{"universe": [1, 0], "family": []}')

    def test_ids_bounded_by_max_players(self):
        limit = Settings().max_players
        with pytest.raises(GameFormatError, match="outside"):
            parse_document(SplitInstanceDocument, json.dumps({"universe": [limit], "family": []}))
        with pytest.raises(GameFormatError, match="outside"):
            parse_document(SplitInstanceDocument, json.dumps({"universe": [0], "family": [[10**20]]}))


# ── Answers and reports ──────────────────────────────────────────────────────

class TestAnswerDocument:
    def test_given_query(self):
        given = (Coalition.of(0, 1), Coalition.of(2, 3))
        answer = dispatch(TradeQuery(example_game(), Classification.LOSING, given))
        doc = AnswerDocument.from_answer(example_game(), 2, answer, given, Classification.LOSING)
        assert doc.decision
        assert doc.cell == "Wm/L"
        assert doc.complexity == "polynomial"
        assert doc.method == "pair_scan/Wm"
        assert doc.witness == [[0, 2], [1, 3]]
        assert doc.application.winners == [0, 1]

    def test_game_level_has_no_cell(self):
        doc = AnswerDocument.from_answer(example_game(), 2, is_j_trade(example_game(), 2))
        assert doc.cell is None and doc.complexity is None
        assert doc.application.j == 2


class TestReports:
    def test_validation_document(self):
        rep = GameRep.of(3, RepKind.WM, [[0], [0, 1]])
        doc = ValidationDocument.from_report(validate_game(rep))
        assert not doc.valid
        assert doc.violations[0].code == "non-antichain"
        assert doc.violations[0].coalitions == [[0], [0, 1]]

    def test_table(self):
        cells = {(cell.kind, cell.beta): cell.complexity for cell in TableDocument.build().cells}
        assert len(cells) == 8
        assert cells[("Wm", "W")] == "NP-complete"
        assert cells[("LM", "L")] == "NP-complete"
        assert cells[("W", "L")] == "polynomial"
