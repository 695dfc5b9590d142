"""
tests/test_dispatch.py — routing and decider/oracle agreement across all cells
"""

import pytest

from conftest import all_forms, given_pairs
from sgtrade.deciders import TradeDecider
from sgtrade.dispatch import TradeDispatcher, dispatch
from sgtrade.errors import PreconditionError
from sgtrade.families import example_game
from sgtrade.game import Classification, Coalition, GameRep, RepKind
from sgtrade.oracle import brute_force_trade
from sgtrade.trade import TradeAnswer, TradeQuery, verify

W, L = Classification.WINNING, Classification.LOSING


def query(rep, beta, *given):
    return TradeQuery(rep, beta, tuple(Coalition.from_players(g) for g in given))


def check_against_oracle(rep, cap):
    forms = all_forms(rep)
    dispatcher = TradeDispatcher()
    checked = 0
    for beta in (W, L):
        for s1, s2 in given_pairs(rep, beta, cap=cap):
            expected = brute_force_trade(rep, 2, (s1, s2), beta) is not None
            for form in forms.values():
                answer = dispatcher.dispatch(TradeQuery(form, beta, (s1, s2)))
                assert answer.decision == expected, (rep, form.kind, beta, s1, s2)
                if answer.decision:
                    assert verify(rep, answer.application)
                checked += 1
    return checked


# ── Routing ──────────────────────────────────────────────────────────────────

class TestRouting:
    @pytest.fixture
    def forms(self):
        return all_forms(example_game())

    def test_lm_l_goes_to_set_splitting(self, forms):
        q = query(forms[RepKind.LM], L, [0, 1], [2, 3])
        assert TradeDispatcher().route(q).name == "set_splitting"

    def test_wm_w_goes_to_symmetric_difference(self, forms):
        q = query(forms[RepKind.WM], W, [0, 2], [1, 3])
        assert TradeDispatcher().route(q).name == "symmetric_difference"

    def test_w_w_goes_to_pair_scan(self, forms):
        q = query(forms[RepKind.W], W, [0, 2], [1, 3])
        assert TradeDispatcher().route(q).name == "pair_scan"

    def test_polynomial_cells(self, forms):
        dispatcher = TradeDispatcher()
        for kind in (RepKind.W, RepKind.WM, RepKind.L):
            assert dispatcher.route(query(forms[kind], L, [0, 1], [2, 3])).name == "pair_scan"
        for kind in (RepKind.L, RepKind.LM, RepKind.W):
            assert dispatcher.route(query(forms[kind], W, [0, 2], [1, 3])).name == "pair_scan"

    def test_other_j_goes_to_enumeration(self, forms):
        q = query(forms[RepKind.LM], L, [0, 1], [2, 3], [0, 3])
        assert TradeDispatcher().route(q).name == "j_enumeration"

    def test_no_decider(self):
        q = query(example_game(), L, [0, 1], [2, 3])
        with pytest.raises(PreconditionError):
            TradeDispatcher(deciders=[]).route(q)


# ── Answers ──────────────────────────────────────────────────────────────────

class TestDispatch:
    def test_example_wm_l(self):
        answer = dispatch(query(example_game(), L, [0, 1], [2, 3]))
        assert answer.decision
        assert verify(example_game(), answer.application)

    def test_example_lm_l(self):
        rep = GameRep.of(4, RepKind.LM, [[0, 1], [1, 2], [0, 3], [2, 3]])
        answer = dispatch(query(rep, L, [0, 1], [2, 3]))
        assert answer.method == "set_splitting"
        assert verify(rep, answer.application)

    def test_one_trade_is_no(self):
        assert not dispatch(query(example_game(), L, [0, 1])).decision

    def test_rejects_unsound_witness(self):
        class Liar(TradeDecider):
            name = "liar"
            cells = frozenset({(RepKind.WM, L)})

            def decide(self, q):
                return TradeAnswer.yes("liar", q.given, q.given, L)

        dispatcher = TradeDispatcher(deciders=[Liar()])
        with pytest.raises(RuntimeError):
            dispatcher.dispatch(query(example_game(), L, [0, 1], [2, 3]))


# ── Oracle agreement ─────────────────────────────────────────────────────────

class TestOracleAgreement:
    def test_small_corpus(self, small_corpus):
        total = sum(check_against_oracle(rep, cap=40) for rep in small_corpus)
        assert total > 0

    def test_exhaustive_pairs_on_four_players(self, small_corpus):
        for rep in small_corpus:
            if rep.n <= 4:
                check_against_oracle(rep, cap=None)

    @pytest.mark.slow
    def test_full_corpus(self, full_corpus):
        for rep in full_corpus:
            check_against_oracle(rep, cap=200)
