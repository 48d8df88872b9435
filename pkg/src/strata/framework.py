"""Argumentation frameworks and classical labeling semantics.

A framework is a finite directed attack graph over opaque string
identifiers. Labelings assign in/out/undec to every argument; the five
supported semantics (complete, grounded, preferred, stable, semi-stable)
are enumerated by backtracking over complete labelings and filtering.
All enumeration orders are deterministic: arguments sort lexicographically
and labels order in < out < undec.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import LabelingMismatchError, StrataError, UnknownArgumentError

Attack = tuple[str, str]


class Label(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"

    def __str__(self) -> str:
        return self.value


# Sort order for deterministic labeling sequences.
_LABEL_ORDER = {Label.IN: 0, Label.OUT: 1, Label.UNDEC: 2}


class Semantics(enum.Enum):
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"
    SEMI_STABLE = "semi-stable"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_string(cls, text: str) -> "Semantics":
        aliases = {
            "c": cls.COMPLETE,
            "gr": cls.GROUNDED,
            "p": cls.PREFERRED,
            "s": cls.STABLE,
            "ss": cls.SEMI_STABLE,
            "semi_stable": cls.SEMI_STABLE,
            "semistable": cls.SEMI_STABLE,
        }
        key = text.strip().lower()
        for sem in cls:
            if sem.value == key:
                return sem
        if key in aliases:
            return aliases[key]
        raise StrataError(f"unknown semantics {text!r}")


ALL_SEMANTICS = tuple(Semantics)


@dataclass(frozen=True)
class ArgumentationFramework:
    """Immutable attack graph: arguments plus ordered attack pairs."""

    arguments: frozenset[str]
    attacks: frozenset[Attack]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arguments", frozenset(self.arguments))
        object.__setattr__(self, "attacks", frozenset(self.attacks))
        for source, target in self.attacks:
            if source not in self.arguments or target not in self.arguments:
                raise UnknownArgumentError(
                    f"attack ({source},{target}) references an argument outside the framework"
                )

    @cached_property
    def _attackers(self) -> dict[str, frozenset[str]]:
        table: dict[str, set[str]] = {a: set() for a in self.arguments}
        for source, target in self.attacks:
            table[target].add(source)
        return {a: frozenset(s) for a, s in table.items()}

    def _check_member(self, argument: str) -> None:
        if argument not in self.arguments:
            raise UnknownArgumentError(f"unknown argument {argument!r}")

    def attackers(self, argument: str) -> frozenset[str]:
        """Arguments attacking the given one."""
        self._check_member(argument)
        return self._attackers[argument]

    def defenders(self, argument: str) -> frozenset[str]:
        """Arguments attacking some attacker of the given one."""
        self._check_member(argument)
        return frozenset(
            b for c in self._attackers[argument] for b in self._attackers[c]
        )

    def restrict(self, keep: Iterable[str]) -> "ArgumentationFramework":
        """Induced subframework on ``keep``."""
        kept = frozenset(keep)
        for a in kept:
            self._check_member(a)
        return ArgumentationFramework(
            kept,
            frozenset((s, t) for s, t in self.attacks if s in kept and t in kept),
        )

    def rename(self, mapping: Mapping[str, str]) -> "ArgumentationFramework":
        """Image framework under a total argument renaming."""
        return ArgumentationFramework(
            frozenset(mapping[a] for a in self.arguments),
            frozenset((mapping[s], mapping[t]) for s, t in self.attacks),
        )

    def __str__(self) -> str:
        args = ", ".join(sorted(self.arguments))
        atts = ", ".join(f"({s},{t})" for s, t in sorted(self.attacks))
        return f"AF({{{args}}}, {{{atts}}})"


class Labeling(Mapping):
    """Total map from arguments to in/out/undec."""

    __slots__ = ("_items", "_map")

    def __init__(self, assignment: Mapping[str, Label]):
        self._items = tuple(sorted(assignment.items()))
        self._map = dict(self._items)

    @classmethod
    def from_sets(
        cls,
        in_args: Iterable[str] = (),
        out_args: Iterable[str] = (),
        undec_args: Iterable[str] = (),
    ) -> "Labeling":
        assignment: dict[str, Label] = {}
        for args, label in ((in_args, Label.IN), (out_args, Label.OUT), (undec_args, Label.UNDEC)):
            for a in args:
                if a in assignment:
                    raise LabelingMismatchError(f"argument {a!r} labeled twice")
                assignment[a] = label
        return cls(assignment)

    def __getitem__(self, argument: str) -> Label:
        return self._map[argument]

    def __iter__(self):
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return hash(self._items)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Labeling):
            return self._items == other._items
        if isinstance(other, Mapping):
            return dict(self._map) == dict(other)
        return NotImplemented

    @property
    def in_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self._items if l is Label.IN)

    @property
    def out_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self._items if l is Label.OUT)

    @property
    def undec_set(self) -> frozenset[str]:
        return frozenset(a for a, l in self._items if l is Label.UNDEC)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(_LABEL_ORDER[l] for _, l in self._items)

    def __str__(self) -> str:
        return " ".join(f"{a}:{l.value}" for a, l in self._items)

    def __repr__(self) -> str:
        return f"Labeling({dict(self._items)!r})"


def _check_total(af: ArgumentationFramework, labeling: Labeling) -> None:
    if frozenset(labeling) != af.arguments:
        raise LabelingMismatchError("labeling is not total over the framework's arguments")


def is_admissible(af: ArgumentationFramework, labeling: Labeling) -> bool:
    """Out arguments have an in attacker; in arguments have only out attackers."""
    _check_total(af, labeling)
    for a in af.arguments:
        attackers = af.attackers(a)
        if labeling[a] is Label.OUT:
            if not any(labeling[b] is Label.IN for b in attackers):
                return False
        elif labeling[a] is Label.IN:
            if any(labeling[b] is not Label.OUT for b in attackers):
                return False
    return True


def is_complete(af: ArgumentationFramework, labeling: Labeling) -> bool:
    """Admissible, and every undec argument has no in attacker but some
    attacker that is not out."""
    if not is_admissible(af, labeling):
        return False
    for a in af.arguments:
        if labeling[a] is Label.UNDEC:
            attackers = af.attackers(a)
            if any(labeling[b] is Label.IN for b in attackers):
                return False
            if not any(labeling[b] is not Label.OUT for b in attackers):
                return False
    return True


def grounded(af: ArgumentationFramework) -> Labeling:
    """The unique complete labeling with minimal in-set.

    Fixpoint iteration: label in every argument whose attackers are all
    out, then label out everything with an in attacker; repeat until
    nothing changes. The remainder is undec.
    """
    status: dict[str, Label] = {}
    while True:
        newly_in = [
            a
            for a in af.arguments
            if a not in status
            and all(status.get(b) is Label.OUT for b in af.attackers(a))
        ]
        if not newly_in:
            break
        for a in newly_in:
            status[a] = Label.IN
        for a in af.arguments:
            if a not in status and any(status.get(b) is Label.IN for b in af.attackers(a)):
                status[a] = Label.OUT
    for a in af.arguments:
        status.setdefault(a, Label.UNDEC)
    return Labeling(status)


def _complete_labelings(af: ArgumentationFramework) -> list[Labeling]:
    """Backtracking enumeration of all complete labelings.

    The partial-assignment pruning below is sound (it never discards a
    completable prefix); full correctness rests on the final is_complete
    check at each leaf.
    """
    args = sorted(af.arguments)
    n = len(args)
    index = {a: i for i, a in enumerate(args)}
    attackers = [tuple(index[b] for b in af.attackers(a)) for a in args]
    targets: list[list[int]] = [[] for _ in args]
    for s, t in af.attacks:
        targets[index[s]].append(index[t])

    assignment: list[Label | None] = [None] * n
    found: list[Labeling] = []

    def consistent(i: int, label: Label) -> bool:
        atts = attackers[i]
        if label is Label.IN:
            if i in atts:
                return False
            # Attackers must all end up out; targets of an in argument too.
            if any(assignment[b] not in (Label.OUT, None) for b in atts):
                return False
            if any(assignment[t] not in (Label.OUT, None) for t in targets[i]):
                return False
        elif label is Label.OUT:
            # Some attacker must end up in; i itself (now out) cannot be it.
            may_be_in = any(
                b != i and assignment[b] in (Label.IN, None) for b in atts
            )
            if not may_be_in:
                return False
        else:  # UNDEC
            if any(assignment[b] is Label.IN for b in atts):
                return False
            # Some attacker must end up not-out; a self-attack qualifies.
            if i not in atts and all(assignment[b] is Label.OUT for b in atts):
                return False
            if any(assignment[t] is Label.IN for t in targets[i]):
                return False
        return True

    def backtrack(i: int) -> None:
        if i == n:
            candidate = Labeling({a: assignment[index[a]] for a in args})
            if is_complete(af, candidate):
                found.append(candidate)
            return
        for label in (Label.IN, Label.OUT, Label.UNDEC):
            if consistent(i, label):
                assignment[i] = label
                backtrack(i + 1)
                assignment[i] = None

    backtrack(0)
    return found


def _maximal(sets: list[frozenset[str]]) -> list[int]:
    """Indices whose set is not a strict subset of any other."""
    keep = []
    for i, s in enumerate(sets):
        if not any(s < t for j, t in enumerate(sets) if j != i):
            keep.append(i)
    return keep


def labelings(af: ArgumentationFramework, semantics: Semantics) -> list[Labeling]:
    """All labelings under the given semantics, deduplicated and sorted.

    Grounded always yields exactly one labeling; stable may yield none.
    Preferred and semi-stable are selected from the complete labelings by
    in-set maximality resp. undec-set minimality.
    """
    if semantics is Semantics.GROUNDED:
        return [grounded(af)]
    complete = _complete_labelings(af)
    if semantics is Semantics.COMPLETE:
        selected = complete
    elif semantics is Semantics.STABLE:
        selected = [l for l in complete if not l.undec_set]
    elif semantics is Semantics.PREFERRED:
        keep = _maximal([l.in_set for l in complete])
        selected = [complete[i] for i in keep]
    elif semantics is Semantics.SEMI_STABLE:
        # Minimal undec = maximal complement.
        universe = af.arguments
        keep = _maximal([universe - l.undec_set for l in complete])
        selected = [complete[i] for i in keep]
    else:
        raise StrataError(f"unknown semantics {semantics!r}")
    return sorted(set(selected), key=Labeling.sort_key)
