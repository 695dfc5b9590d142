"""
tests/conftest.py — shared games and helpers
"""

import itertools

import pytest

from sgtrade.convert import convert
from sgtrade.game import Classification, Coalition, RepKind
from sgtrade.oracle import random_corpus
from sgtrade.settings import Settings


def all_coalitions(n):
    return [Coalition(bits) for bits in range(1 << n)]


def of_type(rep, beta):
    wanted = beta is Classification.WINNING
    return [s for s in all_coalitions(rep.n) if rep.wins(s.bits) == wanted]


def given_pairs(rep, beta, cap=None):
    """Unordered pairs (repetition allowed) of coalitions of type ``beta``."""
    pairs = list(itertools.combinations_with_replacement(of_type(rep, beta), 2))
    return pairs if cap is None else pairs[:cap]


def all_forms(rep):
    """The same game as W, L, Wm and LM, keyed by RepKind."""
    winning = convert(rep, RepKind.W)
    losing = convert(winning, RepKind.L)
    return {
        RepKind.W: winning,
        RepKind.L: losing,
        RepKind.WM: convert(winning, RepKind.WM),
        RepKind.LM: convert(losing, RepKind.LM),
    }


@pytest.fixture(scope="session")
def settings():
    return Settings()


@pytest.fixture(scope="session")
def small_corpus():
    return list(random_corpus(25, 5, seed=2024))


@pytest.fixture(scope="session")
def full_corpus():
    return list(random_corpus(500, 8, seed=7))
