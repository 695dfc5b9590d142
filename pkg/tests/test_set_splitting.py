"""
tests/test_set_splitting.py — building and solving Set Splitting instances
"""

import pytest

from sgtrade.errors import BudgetExceededError, GameFormatError, PreconditionError
from sgtrade.game import Coalition
from sgtrade.reductions import SetSplittingInstance, build_set_splitting, solve_set_splitting
from sgtrade.settings import Settings


def c(*players):
    return Coalition.of(*players)


EXAMPLE_LM = [c(0, 1), c(1, 2), c(0, 3), c(2, 3)]


def splits_enough(inst, u1, u2):
    assert u1 | u2 == inst.universe
    assert not (u1 & u2).bits
    return sum(inst.splits(u1, z) for z in inst.family) >= inst.k


# ── build_set_splitting ──────────────────────────────────────────────────────

class TestBuild:
    def test_example(self):
        inst = build_set_splitting(EXAMPLE_LM, c(0, 1), c(2, 3))
        assert inst.universe == c(0, 1, 2, 3)
        assert set(inst.family) == {c(2, 3), c(0, 3), c(1, 2), c(0, 1)}
        assert inst.k == 4

    def test_common_part_filters_family(self):
        lm = [c(0, 1, 4), c(2, 3, 4), c(0, 2)]
        inst = build_set_splitting(lm, c(0, 4), c(2, 4))
        # {0, 2} does not hold the common player 4
        assert set(inst.family) == {c(2), c(0)}
        assert inst.universe == c(0, 2, 4)

    def test_winning_given_rejected(self):
        with pytest.raises(PreconditionError):
            build_set_splitting(EXAMPLE_LM, c(0, 2), c(2, 3))


# ── solve_set_splitting ──────────────────────────────────────────────────────

class TestSolve:
    def test_example(self):
        inst = build_set_splitting(EXAMPLE_LM, c(0, 1), c(2, 3))
        assert solve_set_splitting(inst) == (c(0, 2), c(1, 3))

    def test_two_members(self):
        inst = SetSplittingInstance(c(0, 1, 2, 3), (c(2, 3), c(0, 1)), 2)
        u1, u2 = solve_set_splitting(inst)
        assert u1 == c(0, 2)
        assert splits_enough(inst, u1, u2)

    def test_empty_member_cannot_split(self):
        inst = SetSplittingInstance(c(0, 1), (Coalition(), c(0, 1)), 2)
        assert solve_set_splitting(inst) is None

    def test_singleton_member_cannot_split(self):
        inst = SetSplittingInstance(c(0, 1, 2), (c(1),), 1)
        assert solve_set_splitting(inst) is None

    def test_partial_k(self):
        inst = SetSplittingInstance(c(0, 1, 2), (c(1), c(0, 2)), 1)
        u1, u2 = solve_set_splitting(inst)
        assert splits_enough(inst, u1, u2)

    def test_triangle_unsplittable(self):
        inst = SetSplittingInstance(c(0, 1, 2), (c(0, 1), c(1, 2), c(0, 2)), 3)
        assert solve_set_splitting(inst) is None

    def test_empty_universe(self):
        inst = SetSplittingInstance(Coalition(), (), 0)
        assert solve_set_splitting(inst) == (Coalition(), Coalition())

    def test_cap(self):
        inst = SetSplittingInstance(Coalition.full(6), (c(0, 5),), 1)
        with pytest.raises(BudgetExceededError):
            solve_set_splitting(inst, Settings(split_cap=4))


class TestInstance:
    def test_member_outside_universe(self):
        with pytest.raises(GameFormatError):
            SetSplittingInstance(c(0, 1), (c(2),), 1)

    def test_k_out_of_range(self):
        with pytest.raises(GameFormatError):
            SetSplittingInstance(c(0, 1), (c(0, 1),), 2)

    def test_splits(self):
        inst = SetSplittingInstance(c(0, 1, 2), (c(0, 1),), 1)
        assert inst.splits(c(0), c(0, 1))
        assert not inst.splits(c(2), c(0, 1))
