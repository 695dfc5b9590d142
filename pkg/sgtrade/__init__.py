"""
sgtrade — trade problems for simple games.

Decides whether a simple game, given by its winning, losing, minimal
winning or maximal losing coalitions, admits a j-trade application, with
exact solvers for the hard cells, SAT and Set Splitting reductions and an
exhaustive oracle for cross-checking.
"""

from sgtrade._version import __version__
from sgtrade.convert import (
    convert,
    dual_game,
    expand,
    lm_from_w,
    maximal_elements,
    minimal_elements,
    wm_from_l,
)
from sgtrade.deciders import (
    decide_beta_L,
    decide_beta_W,
    decide_j_trade,
    decide_LM_L_exact,
    decide_Wm_W_exact,
    is_j_trade,
)
from sgtrade.dispatch import TradeDispatcher, dispatch
from sgtrade.errors import (
    BudgetExceededError,
    ConfigError,
    DimacsError,
    GameFormatError,
    GeneratorSelfCheckError,
    InvalidCoalitionError,
    PreconditionError,
    SgTradeError,
)
from sgtrade.game import (
    Classification,
    Coalition,
    GameRep,
    RepKind,
    classify,
    multiplicity,
    validate_game,
)
from sgtrade.settings import Settings
from sgtrade.trade import Complexity, TradeAnswer, TradeApplication, TradeQuery, complexity, verify

__all__ = [
    "__version__",
    "Coalition",
    "RepKind",
    "GameRep",
    "Classification",
    "classify",
    "multiplicity",
    "validate_game",
    "convert",
    "dual_game",
    "expand",
    "lm_from_w",
    "wm_from_l",
    "minimal_elements",
    "maximal_elements",
    "TradeApplication",
    "TradeQuery",
    "TradeAnswer",
    "Complexity",
    "complexity",
    "verify",
    "decide_beta_L",
    "decide_beta_W",
    "decide_LM_L_exact",
    "decide_Wm_W_exact",
    "decide_j_trade",
    "is_j_trade",
    "TradeDispatcher",
    "dispatch",
    "Settings",
    "SgTradeError",
    "InvalidCoalitionError",
    "GameFormatError",
    "DimacsError",
    "PreconditionError",
    "ConfigError",
    "BudgetExceededError",
    "GeneratorSelfCheckError",
]
