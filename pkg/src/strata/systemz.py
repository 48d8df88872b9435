"""Conditional knowledge bases, tolerance partitioning, and the ranking
function they induce, plus the world-level argumentation framework whose
grounded-stratified labeling reproduces that ranking.

The partition peels off, stage by stage, every conditional that some world
can verify without falsifying anything still unpeeled; a world's rank is
then 0 if it falsifies nothing, else one more than the highest stage it
falsifies. Worlds become arguments attacking every strictly less plausible
world, which turns plausibility layers into peeling layers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import InconsistentKnowledgeBaseError, StrataError
from .propositional import (
    And,
    Bottom,
    Conditional,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Status,
    Top,
    Var,
    World,
    conditional_status,
    evaluate,
    satisfies,
    validate_atom_name,
    worlds,
)
from .framework import ArgumentationFramework
from .ranks import INF, Rank, rank_str
from .stratified import StratifiedLabeling, grounded_stratified


def _formula_atoms_ordered(formula: Formula) -> Iterator[str]:
    """Atoms of a formula in left-to-right reading order."""
    match formula:
        case Top() | Bottom():
            return
        case Var(name):
            yield name
        case Not(operand):
            yield from _formula_atoms_ordered(operand)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            yield from _formula_atoms_ordered(l)
            yield from _formula_atoms_ordered(r)
        case _:
            raise TypeError(f"not a formula: {formula!r}")


def _appearance_atoms(conditionals: Iterable[Conditional]) -> tuple[str, ...]:
    """Atoms in first-appearance order, reading each rule premise first.

    Reading the premise before the claim matches how a rule is read aloud
    ("if p then b") and fixes the world-table ordering.
    """
    seen: dict[str, None] = {}
    for cond in conditionals:
        for atom in _formula_atoms_ordered(cond.premise):
            seen.setdefault(atom)
        for atom in _formula_atoms_ordered(cond.claim):
            seen.setdefault(atom)
    return tuple(seen)


@dataclass(frozen=True)
class KnowledgeBase:
    """Finite ordered set of pairwise distinct conditionals."""

    conditionals: tuple[Conditional, ...]
    atoms: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "conditionals", tuple(self.conditionals))
        if len(set(self.conditionals)) != len(self.conditionals):
            raise StrataError("knowledge base contains a duplicate conditional")
        if not self.atoms:
            object.__setattr__(self, "atoms", _appearance_atoms(self.conditionals))
        else:
            object.__setattr__(self, "atoms", tuple(self.atoms))
        for atom in self.atoms:
            validate_atom_name(atom)
        mentioned = set()
        for cond in self.conditionals:
            mentioned |= cond.atoms()
        if not mentioned <= set(self.atoms):
            raise StrataError("conditional mentions an atom outside the knowledge base")

    def worlds(self) -> list[World]:
        return worlds(self.atoms)

    def __str__(self) -> str:
        return "\n".join(str(c) for c in self.conditionals)


def satisfied_conditionals(kb: KnowledgeBase, world: World) -> list[Conditional]:
    """The conditionals of ``kb`` the world does not falsify, in base order."""
    return [c for c in kb.conditionals if satisfies(world, c)]


def tolerance_witness(kb: KnowledgeBase, conditional: Conditional) -> World | None:
    """First world (in enumeration order) verifying the conditional while
    satisfying every conditional of ``kb``; None when no such world exists."""
    atom_order = list(kb.atoms)
    for atom in _formula_atoms_ordered(conditional.premise):
        if atom not in atom_order:
            atom_order.append(atom)
    for atom in _formula_atoms_ordered(conditional.claim):
        if atom not in atom_order:
            atom_order.append(atom)
    for world in worlds(atom_order):
        if conditional_status(world, conditional) is Status.VERIFIES and all(
            satisfies(world, c) for c in kb.conditionals
        ):
            return world
    return None


@dataclass(frozen=True)
class ZPartition:
    """Ordered strata of a consistent knowledge base.

    Stratum 0 holds the conditionals tolerated by the whole base; each
    later stratum repeats the construction on what is left.
    """

    strata: tuple[tuple[Conditional, ...], ...]
    _index: dict[Conditional, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        index = {c: i for i, stratum in enumerate(self.strata) for c in stratum}
        object.__setattr__(self, "_index", index)

    def index_of(self, conditional: Conditional) -> int:
        """Stratum index of a conditional."""
        try:
            return self._index[conditional]
        except KeyError:
            raise StrataError(f"conditional {conditional} is not in the partition") from None

    def __len__(self) -> int:
        return len(self.strata)


def z_partition(kb: KnowledgeBase) -> ZPartition:
    """Tolerance partition of the knowledge base.

    Raises :class:`InconsistentKnowledgeBaseError` when some residual set
    tolerates none of its members, which is exactly the case where no
    ranking function accepts every conditional.
    """
    world_list = kb.worlds()
    # Bitmasks over the world list: which worlds verify / do not falsify.
    verify_mask: dict[Conditional, int] = {}
    satisfy_mask: dict[Conditional, int] = {}
    for cond in kb.conditionals:
        v = s = 0
        for i, world in enumerate(world_list):
            status = conditional_status(world, cond)
            if status is Status.VERIFIES:
                v |= 1 << i
            if status is not Status.FALSIFIES:
                s |= 1 << i
        verify_mask[cond] = v
        satisfy_mask[cond] = s

    strata: list[tuple[Conditional, ...]] = []
    remaining = list(kb.conditionals)
    while remaining:
        all_satisfied = -1
        for cond in remaining:
            all_satisfied &= satisfy_mask[cond]
        tolerated = [c for c in remaining if verify_mask[c] & all_satisfied]
        if not tolerated:
            raise InconsistentKnowledgeBaseError(
                "no ranking function accepts every conditional: "
                + ", ".join(str(c) for c in remaining)
            )
        strata.append(tuple(tolerated))
        remaining = [c for c in remaining if c not in tolerated]
    return ZPartition(tuple(strata))


class RankingFunction(Mapping):
    """Total map from worlds to extended ranks with a rank-0 world.

    Lower ranks mean more plausible worlds. Iteration preserves the world
    enumeration order the function was built with.
    """

    __slots__ = ("_worlds", "_ranks", "_map")

    def __init__(self, assignment: Mapping[World, Rank]):
        self._worlds = tuple(assignment)
        self._ranks = tuple(assignment[w] for w in self._worlds)
        self._map = dict(assignment)
        if self._worlds and 0 not in self._ranks:
            raise StrataError("ranking function has no world at rank 0")

    def __getitem__(self, world: World) -> Rank:
        return self._map[world]

    def __iter__(self):
        return iter(self._worlds)

    def __len__(self) -> int:
        return len(self._worlds)

    def of_formula(self, formula: Formula) -> Rank:
        """Minimum rank over the formula's models; infinity when it has none."""
        ranks = [r for w, r in self._map.items() if evaluate(w, formula)]
        return min(ranks) if ranks else INF

    def accepts(self, conditional: Conditional) -> bool:
        """Verifying worlds are strictly more plausible than falsifying ones."""
        yes = self.of_formula(And(conditional.claim, conditional.premise))
        no = self.of_formula(And(Not(conditional.claim), conditional.premise))
        return yes < no

    def __str__(self) -> str:
        return "\n".join(f"{w.name()}:{rank_str(r)}" for w, r in zip(self._worlds, self._ranks))


def z_ranking(kb: KnowledgeBase) -> RankingFunction:
    """The ranking induced by the tolerance partition.

    A world that satisfies the whole base ranks 0; any other world ranks
    one more than the highest stratum it falsifies.
    """
    partition = z_partition(kb)
    assignment: dict[World, Rank] = {}
    for world in kb.worlds():
        falsified = [
            partition.index_of(c)
            for c in kb.conditionals
            if not satisfies(world, c)
        ]
        assignment[world] = max(falsified) + 1 if falsified else 0
    return RankingFunction(assignment)


def induced_framework(kb: KnowledgeBase) -> ArgumentationFramework:
    """Framework whose arguments are worlds and whose attacks run from each
    strictly more plausible world to each strictly less plausible one.

    World ranks compare via the induced ranking; this also covers the
    base-satisfying worlds, whose set of falsified conditionals is empty.
    Arguments are named by the world's literal string (e.g. ``pb-f``).
    """
    kappa = z_ranking(kb)
    names = {world: world.name() for world in kappa}
    attacks = frozenset(
        (names[w1], names[w2])
        for w1 in kappa
        for w2 in kappa
        if kappa[w1] < kappa[w2]
    )
    return ArgumentationFramework(frozenset(names.values()), attacks)


@dataclass(frozen=True)
class BridgeReport:
    """Outcome of comparing the induced ranking with stratified peeling."""

    holds: bool
    mismatches: tuple[tuple[str, Rank, Rank], ...]  # (world name, ranking, stratified)
    world_ranks: tuple[tuple[str, Rank], ...]

    def __str__(self) -> str:
        if self.holds:
            return f"bridge holds on {len(self.world_ranks)} worlds"
        lines = [
            f"{name}: ranking {rank_str(kr)} != stratified {rank_str(sr)}"
            for name, kr, sr in self.mismatches
        ]
        return "bridge fails:\n" + "\n".join(lines)


def bridge_check(kb: KnowledgeBase) -> BridgeReport:
    """Check that grounded-stratified peeling of the induced framework
    assigns every world-argument exactly its ranking-function rank."""
    kappa = z_ranking(kb)
    af = induced_framework(kb)
    stratified: StratifiedLabeling = grounded_stratified(af)
    mismatches = []
    world_ranks = []
    for world in kappa:
        name = world.name()
        expected = kappa[world]
        actual = stratified[name]
        world_ranks.append((name, expected))
        if expected != actual:
            mismatches.append((name, expected, actual))
    return BridgeReport(not mismatches, tuple(mismatches), tuple(world_ranks))
