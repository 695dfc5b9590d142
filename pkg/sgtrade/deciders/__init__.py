# sgtrade/deciders/__init__.py
from sgtrade.deciders.base import Cell, TradeDecider
from sgtrade.deciders.enumeration import EnumerationDecider, decide_j_trade, is_j_trade
from sgtrade.deciders.exact import (
    SetSplittingDecider,
    SymmetricDifferenceDecider,
    decide_LM_L_exact,
    decide_Wm_W_exact,
)
from sgtrade.deciders.polynomial import PairScanDecider, decide_beta_L, decide_beta_W

__all__ = [
    "Cell",
    "TradeDecider",
    "PairScanDecider",
    "SetSplittingDecider",
    "SymmetricDifferenceDecider",
    "EnumerationDecider",
    "decide_beta_L",
    "decide_beta_W",
    "decide_LM_L_exact",
    "decide_Wm_W_exact",
    "decide_j_trade",
    "is_j_trade",
]
