"""
Engine configuration — caps and budgets for the exhaustive parts of sgtrade.

All solvers are exponential somewhere; these limits make them fail with a
``BudgetExceededError`` instead of running forever.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields, replace

from sgtrade.errors import ConfigError

# Environment variable that overrides both enumeration budgets
BUDGET_ENV = "SG_BUDGET"


@dataclass(frozen=True)
class Settings:
    """
    Limits shared by the deciders, the oracle and the reductions.

    Examples::

        from sgtrade.settings import Settings

        settings = Settings.from_env()          # honours SG_BUDGET
        quick = Settings().with_budget(10_000)  # small searches only
    """

    max_players: int = 64
    oracle_cap: int = 20            # 2^n enumeration limit
    enumeration_budget: int = 10**7  # decide_j_trade
    oracle_budget: int = 10**8       # brute_force_trade
    split_cap: int = 24             # |U| for set splitting
    sat_cap: int = 24               # truth-table variables
    self_check_cap: int = 16        # j-generator exhaustive cross-check

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                raise ConfigError(f"{f.name} must be a positive integer, got {value!r}")
        if self.oracle_cap > self.max_players:
            raise ConfigError(
                f"oracle_cap ({self.oracle_cap}) cannot exceed max_players ({self.max_players})"
            )

    # ── Convenience constructors ─────────────────────────────────────────────

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Settings:
        """Defaults, with ``SG_BUDGET`` applied to both enumeration budgets."""
        env = os.environ if environ is None else environ
        raw = env.get(BUDGET_ENV, "").strip()
        if not raw:
            return cls()
        try:
            budget = int(raw)
        except ValueError:
            raise ConfigError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
        return cls().with_budget(budget)

    def with_budget(self, budget: int) -> Settings:
        """Copy with both enumeration budgets replaced."""
        return replace(self, enumeration_budget=budget, oracle_budget=budget)


def get_settings(settings: Settings | None = None) -> Settings:
    """Return ``settings`` if given, else the environment-derived defaults."""
    return settings if settings is not None else Settings.from_env()
