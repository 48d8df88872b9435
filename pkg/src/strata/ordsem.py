"""Ordinal semantics machinery: framework isomorphisms, weakly connected
components, and instance-wise checkers for ranking postulates.

The checkers test a universally quantified postulate on one concrete
framework: quantifiers over rankings run over the stratified labelings of
that framework, quantifiers over isomorphic copies run over seeded random
renamings. A report therefore certifies the instance, not the postulate.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .framework import ArgumentationFramework, Semantics
from .stratified import DEFAULT_LIMIT, StratifiedLabeling, stratified_labelings


class PropertyTag(enum.Enum):
    ABSTRACTION = "ab"
    IRRELEVANCE = "ir"
    VOID_PRECEDENCE = "vp"
    WEAK_VOID_PRECEDENCE = "wvp"
    DEFENSE_PRECEDENCE = "dp"
    QUALITY_PRECEDENCE = "qp"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PropertyWitness:
    """One violation: an argument pair and/or the ranking it occurs in."""

    pair: tuple[str, str] | None
    ranking: StratifiedLabeling | None
    note: str = ""

    def __str__(self) -> str:
        parts = []
        if self.pair is not None:
            parts.append(f"({self.pair[0]}, {self.pair[1]})")
        if self.ranking is not None:
            parts.append(f"[{self.ranking}]")
        if self.note:
            parts.append(self.note)
        return " ".join(parts)


@dataclass(frozen=True)
class PropertyReport:
    """Result of checking one postulate on one framework."""

    property: PropertyTag
    semantics: Semantics
    holds: bool
    witnesses: tuple[PropertyWitness, ...]

    def __post_init__(self) -> None:
        if self.holds != (not self.witnesses):
            raise ValueError("holds must coincide with an empty witness list")

    def witness_pairs(self) -> list[tuple[str, str]]:
        return sorted({w.pair for w in self.witnesses if w.pair is not None})

    def __str__(self) -> str:
        verdict = "holds" if self.holds else "fails"
        head = f"{self.property.value} under {self.semantics}: {verdict}"
        if self.holds:
            return head
        return head + "\n" + "\n".join(f"  witness {w}" for w in self.witnesses)


def is_isomorphism(
    af1: ArgumentationFramework,
    af2: ArgumentationFramework,
    mapping: Mapping[str, str],
) -> bool:
    """True iff the mapping is an attack-preserving bijection between the
    two frameworks. Non-bijective maps simply return False."""
    if set(mapping) != set(af1.arguments):
        return False
    image = set(mapping.values())
    if len(image) != len(mapping) or image != set(af2.arguments):
        return False
    return af2.attacks == frozenset((mapping[s], mapping[t]) for s, t in af1.attacks)


def weakly_connected_components(af: ArgumentationFramework) -> list[ArgumentationFramework]:
    """Maximal weakly connected subframeworks, sorted by smallest argument."""
    neighbours: dict[str, set[str]] = {a: set() for a in af.arguments}
    for s, t in af.attacks:
        neighbours[s].add(t)
        neighbours[t].add(s)
    seen: set[str] = set()
    components = []
    for start in sorted(af.arguments):
        if start in seen:
            continue
        stack = [start]
        component = set()
        while stack:
            node = stack.pop()
            if node in component:
                continue
            component.add(node)
            stack.extend(neighbours[node] - component)
        seen |= component
        components.append(af.restrict(component))
    return components


def _component_unions(af: ArgumentationFramework) -> list[ArgumentationFramework]:
    """Every nonempty union of weakly connected components."""
    components = weakly_connected_components(af)
    unions = []
    for size in range(1, len(components) + 1):
        for combo in combinations(components, size):
            args = frozenset().union(*(c.arguments for c in combo))
            unions.append(af.restrict(args))
    return unions


def check_property(
    af: ArgumentationFramework,
    semantics: Semantics,
    prop: PropertyTag,
    *,
    trials: int = 50,
    seed: int = 0,
    limit: int = DEFAULT_LIMIT,
) -> PropertyReport:
    """Check one ranking postulate instance-wise on ``af``.

    ``trials`` and ``seed`` only matter for the abstraction property, which
    is tested against that many uniformly drawn renamings of the argument
    set. The remaining properties quantify over every stratified labeling
    of ``af`` (and, for irrelevance, of every component union).
    """
    rankings = stratified_labelings(af, semantics, limit=limit)
    checker = {
        PropertyTag.ABSTRACTION: _check_abstraction,
        PropertyTag.IRRELEVANCE: _check_irrelevance,
        PropertyTag.VOID_PRECEDENCE: _check_void_precedence,
        PropertyTag.WEAK_VOID_PRECEDENCE: _check_weak_void_precedence,
        PropertyTag.DEFENSE_PRECEDENCE: _check_defense_precedence,
        PropertyTag.QUALITY_PRECEDENCE: _check_quality_precedence,
    }[prop]
    witnesses = checker(af, semantics, rankings, trials=trials, seed=seed, limit=limit)
    return PropertyReport(prop, semantics, not witnesses, tuple(witnesses))


def _check_abstraction(af, semantics, rankings, *, trials, seed, limit):
    """Renaming the framework must rename the ranking set and nothing else."""
    witnesses: list[PropertyWitness] = []
    args = sorted(af.arguments)
    rng = random.Random(seed)
    original = set(rankings)
    for trial in range(trials):
        permuted = rng.sample(args, len(args))
        mapping = dict(zip(args, permuted))
        image_af = af.rename(mapping)
        image_rankings = set(stratified_labelings(image_af, semantics, limit=limit))
        composed = {s.compose(mapping) for s in original}
        for orphan in sorted(composed - image_rankings, key=str):
            witnesses.append(
                PropertyWitness(None, orphan, f"trial {trial}: composed ranking missing from image")
            )
        for orphan in sorted(image_rankings - composed, key=str):
            witnesses.append(
                PropertyWitness(None, orphan, f"trial {trial}: image ranking not a composition")
            )
    return witnesses


def _check_irrelevance(af, semantics, rankings, *, trials, seed, limit):
    """Every ranking of a component union must be mirrored, up to the
    relational comparisons (i) equality and (ii) order, by some ranking of
    the full framework. Vacuous when the framework has no rankings."""
    if not rankings:
        return []
    witnesses: list[PropertyWitness] = []
    for union in _component_unions(af):
        union_args = sorted(union.arguments)
        for local in stratified_labelings(union, semantics, limit=limit):
            if any(_mirrors(local, full, union_args) for full in rankings):
                continue
            witnesses.append(
                PropertyWitness(
                    None,
                    local,
                    f"component union {{{', '.join(union_args)}}}: no matching global ranking",
                )
            )
    return witnesses


def _mirrors(local: StratifiedLabeling, full: StratifiedLabeling, args: list[str]) -> bool:
    for a, b in combinations(args, 2):
        if (local[a] == local[b]) != (full[a] == full[b]):
            return False
        if (local[a] <= local[b]) != (full[a] <= full[b]):
            return False
        if (local[b] <= local[a]) != (full[b] <= full[a]):
            return False
    return True


def _pairwise(af, rankings, predicate):
    """Witnesses of a per-pair postulate over all rankings and ordered pairs."""
    witnesses = []
    args = sorted(af.arguments)
    for ranking in rankings:
        for a in args:
            for b in args:
                if a != b and predicate(a, b, ranking):
                    witnesses.append(PropertyWitness((a, b), ranking))
    return witnesses


def _check_void_precedence(af, semantics, rankings, **_kw):
    """An unattacked argument must rank strictly below any attacked one."""

    def violates(a, b, ranking):
        return not af.attackers(a) and af.attackers(b) and not ranking[a] < ranking[b]

    return _pairwise(af, rankings, violates)


def _check_weak_void_precedence(af, semantics, rankings, **_kw):
    """An unattacked argument must rank at most as high as any other."""

    def violates(a, b, ranking):
        return not af.attackers(a) and not ranking[a] <= ranking[b]

    return _pairwise(af, rankings, violates)


def _check_defense_precedence(af, semantics, rankings, **_kw):
    """With equally many attackers, a defenderless argument must rank
    strictly below a defended one."""

    def violates(a, b, ranking):
        return (
            len(af.attackers(a)) == len(af.attackers(b))
            and not af.defenders(a)
            and af.defenders(b)
            and not ranking[a] < ranking[b]
        )

    return _pairwise(af, rankings, violates)


def _check_quality_precedence(af, semantics, rankings, **_kw):
    """If some attacker of b ranks strictly below every attacker of a,
    then a must rank strictly below b."""

    def violates(a, b, ranking):
        att_a = af.attackers(a)
        att_b = af.attackers(b)
        premise = any(all(ranking[c] < ranking[d] for d in att_a) for c in att_b)
        return premise and not ranking[a] < ranking[b]

    return _pairwise(af, rankings, violates)
