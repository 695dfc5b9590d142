"""
Conversions among the four game representations.

W→Wm and L→LM are plain minimisation/maximisation. The cross conversions
L→Wm and W→LM use candidate generation over the explicit list:

  every minimal winning S has S \\ {p} losing for all p ∈ S, so
  S = L_i ∪ {p} for some listed losing L_i and p ∉ L_i.

Dually every maximal losing coalition is W_i \\ {p}. Both run in
O(n² · |list|) time. Wm ↔ LM has no polynomial route and is only reachable
through ``expand`` at oracle scale.

All outputs are sorted by ascending bit pattern.
"""

from __future__ import annotations

from collections.abc import Iterable

from sgtrade.game import (
    Coalition,
    GameRep,
    RepKind,
    enumerate_coalitions,
    iter_bits,
)
from sgtrade.settings import Settings


def minimal_elements(coalitions: Iterable[Coalition]) -> list[Coalition]:
    """The ⊆-minimal members of ``coalitions`` (duplicates collapse)."""
    by_size = sorted(set(coalitions), key=lambda s: (len(s), s.bits))
    kept: list[int] = []
    for s in by_size:
        if not any(k & ~s.bits == 0 for k in kept):
            kept.append(s.bits)
    return [Coalition(b) for b in sorted(kept)]


def maximal_elements(coalitions: Iterable[Coalition]) -> list[Coalition]:
    """The ⊆-maximal members of ``coalitions`` (duplicates collapse)."""
    by_size = sorted(set(coalitions), key=lambda s: (-len(s), s.bits))
    kept: list[int] = []
    for s in by_size:
        if not any(s.bits & ~k == 0 for k in kept):
            kept.append(s.bits)
    return [Coalition(b) for b in sorted(kept)]


def wm_from_l(n: int, losing: Iterable[Coalition]) -> list[Coalition]:
    """
    Minimal winning coalitions of the game whose complete losing list is ``losing``.

    Candidates are ``L_i ∪ {p}``; a candidate is kept when it is not losing
    and removing any single member makes it losing.
    """
    listed = {s.bits for s in losing}
    found: set[int] = set()
    for li in listed:
        for p in range(n):
            bit = 1 << p
            if li & bit:
                continue
            candidate = li | bit
            if candidate in listed or candidate in found:
                continue
            if all(candidate & ~(1 << q) in listed for q in iter_bits(candidate)):
                found.add(candidate)
    return [Coalition(b) for b in sorted(found)]


def lm_from_w(n: int, winning: Iterable[Coalition]) -> list[Coalition]:
    """
    Maximal losing coalitions of the game whose complete winning list is ``winning``.

    Candidates are ``W_i \\ {p}``; a candidate is kept when it is not winning
    and adding any single outside player makes it winning.
    """
    listed = {s.bits for s in winning}
    full = (1 << n) - 1
    found: set[int] = set()
    for wi in listed:
        for p in iter_bits(wi):
            candidate = wi & ~(1 << p)
            if candidate in listed or candidate in found:
                continue
            if all(candidate | 1 << q in listed for q in iter_bits(full & ~candidate)):
                found.add(candidate)
    return [Coalition(b) for b in sorted(found)]


def expand(rep: GameRep, settings: Settings | None = None) -> GameRep:
    """
    Explicit list for ``rep``: Wm→W, LM→L, W→L and L→W.

    Enumerates all 2^n coalitions, so ``rep.n`` must be within the oracle cap.
    """
    coalitions = list(enumerate_coalitions(rep.n, settings))
    if rep.kind is RepKind.WM:
        return GameRep(rep.n, RepKind.W, tuple(s for s in coalitions if rep.wins(s.bits)))
    if rep.kind is RepKind.LM:
        return GameRep(rep.n, RepKind.L, tuple(s for s in coalitions if not rep.wins(s.bits)))
    # W and L are complementary partitions of 2^N
    other = RepKind.L if rep.kind is RepKind.W else RepKind.W
    return GameRep(rep.n, other, tuple(s for s in coalitions if s.bits not in rep.members))


def convert(rep: GameRep, to: RepKind | str, settings: Settings | None = None) -> GameRep:
    """
    Any-to-any conversion. Routes that need Wm ↔ LM go through ``expand``
    and inherit its oracle cap.
    """
    to = RepKind(to)
    if rep.kind is to:
        return rep
    if rep.kind is RepKind.WM or rep.kind is RepKind.LM:
        return convert(expand(rep, settings), to, settings)
    if to is RepKind.L or to is RepKind.W:
        return expand(rep, settings)
    if rep.kind is RepKind.W:
        target = minimal_elements(rep.coalitions) if to is RepKind.WM else lm_from_w(
            rep.n, rep.coalitions
        )
    else:
        target = maximal_elements(rep.coalitions) if to is RepKind.LM else wm_from_l(
            rep.n, rep.coalitions
        )
    return GameRep(rep.n, to, tuple(target))


_DUAL_KIND = {
    RepKind.W: RepKind.L,
    RepKind.L: RepKind.W,
    RepKind.WM: RepKind.LM,
    RepKind.LM: RepKind.WM,
}


def dual_game(rep: GameRep) -> GameRep:
    """
    The dual game: S wins in the dual iff N \\ S loses in ``rep``.

    Complementing every listed coalition maps W→L, L→W, Wm→LM and LM→Wm.
    Applying it twice gives back ``rep``.
    """
    full = rep.full
    dual = sorted(full - s for s in rep.coalitions)
    return GameRep(rep.n, _DUAL_KIND[rep.kind], tuple(dual))
