"""Stratified labelings: graded controversiality ranks for arguments.

A stratified labeling under semantics sigma peels a framework layer by
layer: pick a sigma-labeling of the current subframework, give its in-set
the current rank, and recurse on the rest; when a labeling with an empty
in-set is picked, everything left gets rank infinity. Rank 0 therefore
marks uncontroversially accepted arguments, larger ranks increasingly
controversial ones, and infinity arguments the peeling can never accept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import BudgetExceededError, LabelingMismatchError, NotStratifiedError
from .framework import ArgumentationFramework, Labeling, Semantics, grounded, labelings
from .ranks import INF, Rank, is_finite, rank_str

# Ceiling on distinct stratified labelings produced by one enumeration.
DEFAULT_LIMIT = 100_000


class StratifiedLabeling(Mapping):
    """Total map from arguments to extended ranks (naturals plus infinity)."""

    __slots__ = ("_items", "_map")

    def __init__(self, ranks: Mapping[str, Rank]):
        self._items = tuple(sorted(ranks.items()))
        self._map = dict(self._items)

    def __getitem__(self, argument: str) -> Rank:
        return self._map[argument]

    def __iter__(self):
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return hash(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, StratifiedLabeling):
            return self._items == other._items
        if isinstance(other, Mapping):
            return dict(self._map) == dict(other)
        return NotImplemented

    @property
    def arguments(self) -> frozenset[str]:
        return frozenset(self._map)

    @property
    def is_finite(self) -> bool:
        """True when no argument is ranked infinity."""
        return all(is_finite(r) for r in self._map.values())

    def rank_vector(self, order: Iterable[str] | None = None) -> tuple[Rank, ...]:
        """Ranks as a tuple, by sorted argument name unless an order is given."""
        if order is None:
            return tuple(r for _, r in self._items)
        return tuple(self._map[a] for a in order)

    def stratum(self, rank: Rank) -> frozenset[str]:
        return frozenset(a for a, r in self._items if r == rank)

    def compose(self, mapping: Mapping[str, str]) -> "StratifiedLabeling":
        """Rank map on renamed arguments (the rank of phi(a) is the rank of a)."""
        return StratifiedLabeling({mapping[a]: r for a, r in self._items})

    def __str__(self) -> str:
        return " ".join(f"{a}:{rank_str(r)}" for a, r in self._items)

    def __repr__(self) -> str:
        return f"StratifiedLabeling({dict(self._items)!r})"


def stratified_labelings(
    af: ArgumentationFramework,
    semantics: Semantics,
    *,
    limit: int = DEFAULT_LIMIT,
) -> list[StratifiedLabeling]:
    """All stratified labelings of ``af`` under ``semantics``.

    The recursion branches over every labeling of the current subframework;
    distinct derivations yielding the same rank map are deduplicated, and
    subframework results are memoized on the remaining argument set. If the
    subframework at some stage has no labeling at all (possible for stable
    semantics), that branch is abandoned; an empty result means no
    stratified labeling exists. The result is sorted lexicographically by
    rank vector over sorted argument names. Raises
    :class:`BudgetExceededError` when more than ``limit`` distinct rank
    maps arise at any stage rather than returning a truncated set.
    """
    cache: dict[frozenset[str], list[tuple[tuple[str, Rank], ...]]] = {}

    def solve(remaining: frozenset[str]) -> list[tuple[tuple[str, Rank], ...]]:
        if remaining in cache:
            return cache[remaining]
        results: set[tuple[tuple[str, Rank], ...]] = set()
        if not remaining:
            results.add(())
        else:
            sub = af.restrict(remaining)
            for labeling in labelings(sub, semantics):
                in_set = labeling.in_set
                if not in_set:
                    results.add(tuple(sorted((a, INF) for a in remaining)))
                    continue
                for suffix in solve(remaining - in_set):
                    combined: dict[str, Rank] = {a: 0 for a in in_set}
                    combined.update({a: r + 1 for a, r in suffix})
                    results.add(tuple(sorted(combined.items())))
                if len(results) > limit:
                    raise BudgetExceededError(
                        f"more than {limit} stratified labelings; raise the limit to enumerate them"
                    )
        ordered = sorted(results, key=lambda items: tuple(r for _, r in items))
        cache[remaining] = ordered
        return ordered

    return [StratifiedLabeling(dict(items)) for items in solve(af.arguments)]


def grounded_stratified(af: ArgumentationFramework) -> StratifiedLabeling:
    """The unique grounded-stratified labeling, by direct peeling.

    Each stage takes the grounded labeling of what is left; since that
    labeling is unique, so is the result.
    """
    ranks: dict[str, Rank] = {}
    remaining = af.arguments
    level = 0
    while remaining:
        in_set = grounded(af.restrict(remaining)).in_set
        if not in_set:
            ranks.update({a: INF for a in remaining})
            break
        ranks.update({a: level for a in in_set})
        remaining -= in_set
        level += 1
    return StratifiedLabeling(ranks)


@dataclass(frozen=True)
class Characterization:
    """Nested-chain form of a stratified labeling.

    ``chain`` holds A_0 ⊇ A_1 ⊇ ... ⊇ A_k where A_i collects the arguments
    ranked at least i (infinity included); ``infinite_stratum`` is the set
    ranked infinity. ``labeling_vector[i]`` is a labeling of the
    subframework on A_i whose in-set is exactly the rank-i stratum, and
    ``final_labeling`` is a labeling with empty in-set on the infinite
    stratum's subframework.
    """

    chain: tuple[frozenset[str], ...]
    infinite_stratum: frozenset[str]
    labeling_vector: tuple[Labeling, ...]
    final_labeling: Labeling

    @property
    def depth(self) -> int:
        """Largest finite rank k, or -1 when every argument is infinite."""
        return len(self.chain) - 1


def characterize(
    af: ArgumentationFramework,
    semantics: Semantics,
    stratified: StratifiedLabeling,
) -> Characterization:
    """Nested-chain characterization of a stratified labeling.

    The witnessing labelings are searched per stratum (first in enumeration
    order); :class:`NotStratifiedError` is raised when some stratum has no
    witness, i.e. when the rank map is not a stratified labeling of ``af``
    under ``semantics`` at all.
    """
    if stratified.arguments != af.arguments:
        raise LabelingMismatchError("rank map is not total over the framework's arguments")
    finite_ranks = sorted({r for r in stratified.values() if is_finite(r)})
    if finite_ranks != list(range(len(finite_ranks))):
        raise NotStratifiedError(f"finite ranks {finite_ranks} are not consecutive from 0")
    depth = len(finite_ranks) - 1
    infinite = stratified.stratum(INF)
    chain = tuple(
        frozenset(a for a, r in stratified.items() if r >= i) for i in range(depth + 1)
    )

    def witness(sub_args: frozenset[str], wanted_in: frozenset[str]) -> Labeling:
        for labeling in labelings(af.restrict(sub_args), semantics):
            if labeling.in_set == wanted_in:
                return labeling
        raise NotStratifiedError(
            f"no {semantics} labeling on {sorted(sub_args)} accepts exactly {sorted(wanted_in)}"
        )

    vector = []
    for i in range(depth + 1):
        stratum = stratified.stratum(i)
        if not stratum:
            raise NotStratifiedError(f"empty stratum at rank {i}")
        vector.append(witness(chain[i], stratum))
    final = witness(infinite, frozenset())
    return Characterization(chain, infinite, tuple(vector), final)


def reconstruct(characterization: Characterization) -> StratifiedLabeling:
    """Rank map defined by a characterization chain.

    Arguments in the infinite stratum get infinity; every other argument
    gets the largest chain index containing it.
    """
    ranks: dict[str, Rank] = {a: INF for a in characterization.infinite_stratum}
    for i, level in enumerate(characterization.chain):
        for a in level:
            if a not in characterization.infinite_stratum:
                ranks[a] = i
    return StratifiedLabeling(ranks)
