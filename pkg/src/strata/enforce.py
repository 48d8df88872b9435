"""Enforcement cost: how many attack edits make a set of arguments accepted.

The edit universe is every ordered pair over the existing argument set
(self-loops included): an edit toggles that pair, removing the attack when
present and adding it otherwise. No new arguments can be introduced. The
search deepens iteratively over the edit count, trying candidate edit sets
in lexicographic order, so the reported cost is minimal and the witness is
the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import ArgumentSetMismatchError, BudgetExceededError, UnknownArgumentError
from .framework import ArgumentationFramework, Semantics, grounded, labelings
from .ranks import is_finite
from .stratified import DEFAULT_LIMIT, stratified_labelings

Edit = tuple[str, str]


@dataclass(frozen=True)
class EnforcementResult:
    """Minimal edit count to acceptance, or unresolved within the budget.

    ``value`` is None when no edit set within ``budget`` works; a bounded
    search cannot tell "impossible" from "not found yet", so no infinite
    value is ever reported. ``witness_edits`` is present exactly for
    resolved results and has ``value`` many pairs (empty for value 0).
    """

    value: int | None
    budget: int
    witness_edits: frozenset[Edit] | None

    def __post_init__(self) -> None:
        if (self.value is None) != (self.witness_edits is None):
            raise ValueError("witness edits must be present exactly for resolved results")
        if self.value is not None and len(self.witness_edits) != self.value:
            raise ValueError("witness edit count must equal the reported value")

    @property
    def resolved(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        if not self.resolved:
            return f"unknown beyond budget {self.budget}"
        if self.value == 0:
            return "0 (already accepted)"
        edits = ", ".join(f"{s}->{t}" for s, t in sorted(self.witness_edits))
        return f"{self.value} (toggle {edits})"


def attack_distance(af1: ArgumentationFramework, af2: ArgumentationFramework) -> int:
    """Size of the symmetric difference of the attack relations."""
    if af1.arguments != af2.arguments:
        raise ArgumentSetMismatchError("frameworks do not share an argument set")
    return len(af1.attacks ^ af2.attacks)


def _accepted(af: ArgumentationFramework, semantics: Semantics, targets: frozenset[str]) -> bool:
    """True iff the target set is inside the in-set of some labeling."""
    if semantics is Semantics.GROUNDED:
        return targets <= grounded(af).in_set
    return any(targets <= labeling.in_set for labeling in labelings(af, semantics))


def characteristic(
    af: ArgumentationFramework,
    semantics: Semantics,
    targets: Iterable[str],
    budget: int,
) -> EnforcementResult:
    """Minimal number of attack toggles after which ``targets`` is accepted.

    Returns 0 with an empty witness when the set is already accepted.
    Deepening stops at ``budget``; an unresolved result means every edit
    set of size up to the budget fails.
    """
    wanted = frozenset(targets)
    for a in wanted:
        if a not in af.arguments:
            raise UnknownArgumentError(f"unknown argument {a!r}")
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    if _accepted(af, semantics, wanted):
        return EnforcementResult(0, budget, frozenset())
    args = sorted(af.arguments)
    pairs = [(s, t) for s in args for t in args]
    for k in range(1, budget + 1):
        for combo in combinations(pairs, k):
            edited = ArgumentationFramework(af.arguments, af.attacks ^ frozenset(combo))
            if _accepted(edited, semantics, wanted):
                return EnforcementResult(k, budget, frozenset(combo))
    return EnforcementResult(None, budget, None)


def conjecture_scan(
    af: ArgumentationFramework,
    semantics: Semantics,
    budget: int,
    *,
    limit: int = DEFAULT_LIMIT,
) -> list[tuple[str, str]]:
    """Pairs where a cheaper-to-enforce argument fails to rank strictly lower.

    Reports every ordered pair (a, b) whose enforcement costs resolve
    within the budget with cost(a) < cost(b), while some stratified
    labeling ranks both at finite values with rank(a) >= rank(b) — i.e.
    the cheaper argument is at least as controversial. Raises
    :class:`BudgetExceededError` when two or more per-argument costs stay
    unresolved, since those costs cannot be ordered against each other.
    """
    costs = {
        a: characteristic(af, semantics, (a,), budget).value for a in sorted(af.arguments)
    }
    unresolved = [a for a, v in costs.items() if v is None]
    if len(unresolved) > 1:
        raise BudgetExceededError(
            "budget too small to order enforcement costs of " + ", ".join(sorted(unresolved))
        )
    rankings = stratified_labelings(af, semantics, limit=limit)
    pairs = []
    for a in sorted(af.arguments):
        for b in sorted(af.arguments):
            if a == b or costs[a] is None or costs[b] is None:
                continue
            if costs[a] >= costs[b]:
                continue
            if any(
                is_finite(s[a]) and is_finite(s[b]) and s[a] >= s[b] for s in rankings
            ):
                pairs.append((a, b))
    return pairs
