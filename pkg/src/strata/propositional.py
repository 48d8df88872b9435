"""Propositional core: atoms, formulas, worlds, and conditionals.

Formulas are immutable trees compared structurally; semantic questions go
through :func:`evaluate`. Worlds are total boolean assignments over an
ordered atom tuple, enumerated deterministically with the all-true world
first. Conditionals are defeasible rules ``(claim | premise)`` that a world
verifies, falsifies, or is neutral about.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import LimitExceededError, StrataError, UnknownAtomError

ATOM_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")

# Explicit world enumeration is exponential; documented ceiling.
MAX_WORLD_ATOMS = 20


def validate_atom_name(name: str) -> str:
    if not ATOM_NAME.match(name):
        raise StrataError(f"invalid atom name {name!r}: expected [a-z][a-z0-9_]*")
    return name


class Formula:
    """Base class for formula nodes; subclasses are frozen dataclasses."""

    __slots__ = ()

    def atoms(self) -> frozenset[str]:
        return formula_atoms(self)

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


def formula_atoms(formula: Formula) -> frozenset[str]:
    """Set of atom names occurring in the formula."""
    match formula:
        case Top() | Bottom():
            return frozenset()
        case Var(name):
            return frozenset((name,))
        case Not(operand):
            return formula_atoms(operand)
        case And(l, r) | Or(l, r) | Implies(l, r) | Iff(l, r):
            return formula_atoms(l) | formula_atoms(r)
    raise TypeError(f"not a formula: {formula!r}")


# Printer precedence; higher binds tighter. `->` is right-associative,
# the other binary connectives are left-associative.
_PREC_IFF, _PREC_IMPLIES, _PREC_OR, _PREC_AND, _PREC_NOT, _PREC_ATOM = 1, 2, 3, 4, 5, 6


def format_formula(formula: Formula) -> str:
    """Render a formula in parser syntax; reparsing yields an equal tree."""

    def render(f: Formula, min_prec: int) -> str:
        match f:
            case Top():
                text, prec = "T", _PREC_ATOM
            case Bottom():
                text, prec = "F", _PREC_ATOM
            case Var(name):
                text, prec = name, _PREC_ATOM
            case Not(operand):
                text, prec = "!" + render(operand, _PREC_NOT), _PREC_NOT
            case And(l, r):
                text = f"{render(l, _PREC_AND)} && {render(r, _PREC_AND + 1)}"
                prec = _PREC_AND
            case Or(l, r):
                text = f"{render(l, _PREC_OR)} || {render(r, _PREC_OR + 1)}"
                prec = _PREC_OR
            case Implies(l, r):
                text = f"{render(l, _PREC_IMPLIES + 1)} -> {render(r, _PREC_IMPLIES)}"
                prec = _PREC_IMPLIES
            case Iff(l, r):
                text = f"{render(l, _PREC_IFF)} <-> {render(r, _PREC_IFF + 1)}"
                prec = _PREC_IFF
            case _:
                raise TypeError(f"not a formula: {f!r}")
        return f"({text})" if prec < min_prec else text

    return render(formula, 0)


@dataclass(frozen=True)
class World:
    """A total truth assignment over an ordered atom tuple.

    The atom order is part of the value: it fixes the literal name (e.g.
    ``pb-f`` for p=true, b=true, f=false) and the enumeration position.
    """

    atoms: tuple[str, ...]
    values: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.atoms) != len(self.values):
            raise StrataError("world assignment is not total over its atoms")

    @cached_property
    def _position(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.atoms)}

    def truth(self, atom: str) -> bool:
        try:
            return self.values[self._position[atom]]
        except KeyError:
            raise UnknownAtomError(f"world has no atom {atom!r}") from None

    def name(self) -> str:
        """Literal string: atoms in order, false ones prefixed with ``-``."""
        return "".join(a if v else "-" + a for a, v in zip(self.atoms, self.values))

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(self.atoms, self.values))

    def __str__(self) -> str:
        return self.name()


def worlds(atoms: Iterable[str], *, limit: int = MAX_WORLD_ATOMS) -> list[World]:
    """All 2^n worlds over the given atoms, in a fixed order.

    The first atom is the most significant: the all-true world comes first,
    the all-false world last. Sets are sorted by name first; any other
    iterable is taken as the intended atom order (duplicates dropped).
    """
    if isinstance(atoms, (set, frozenset)):
        ordered = sorted(atoms)
    else:
        ordered = list(dict.fromkeys(atoms))
    for a in ordered:
        validate_atom_name(a)
    n = len(ordered)
    if n > limit:
        raise LimitExceededError(f"{n} atoms exceed the world enumeration limit of {limit}")
    order = tuple(ordered)
    result = []
    for code in range(2**n):
        values = tuple(not ((code >> (n - 1 - i)) & 1) for i in range(n))
        result.append(World(order, values))
    return result


def evaluate(world: World, formula: Formula) -> bool:
    """Truth of a formula in a world (standard truth-functional semantics)."""
    match formula:
        case Top():
            return True
        case Bottom():
            return False
        case Var(name):
            return world.truth(name)
        case Not(operand):
            return not evaluate(world, operand)
        case And(l, r):
            return evaluate(world, l) and evaluate(world, r)
        case Or(l, r):
            return evaluate(world, l) or evaluate(world, r)
        case Implies(l, r):
            return (not evaluate(world, l)) or evaluate(world, r)
        case Iff(l, r):
            return evaluate(world, l) == evaluate(world, r)
    raise TypeError(f"not a formula: {formula!r}")


@dataclass(frozen=True)
class Conditional:
    """Defeasible rule ``(claim | premise)``: premise normally implies claim."""

    claim: Formula
    premise: Formula = Top()

    def atoms(self) -> frozenset[str]:
        return self.claim.atoms() | self.premise.atoms()

    def __str__(self) -> str:
        if self.premise == Top():
            return f"({self.claim})"
        return f"({self.claim} | {self.premise})"


class Status(enum.Enum):
    """Three-way relation of a world to a conditional."""

    VERIFIES = "verifies"
    FALSIFIES = "falsifies"
    NEUTRAL = "neutral"


def conditional_status(world: World, conditional: Conditional) -> Status:
    """Exactly one of verifies / falsifies / neutral holds for each world.

    The world verifies when premise and claim are both true, falsifies when
    the premise is true but the claim is not, and is neutral when the
    premise is false.
    """
    if not evaluate(world, conditional.premise):
        return Status.NEUTRAL
    if evaluate(world, conditional.claim):
        return Status.VERIFIES
    return Status.FALSIFIES


def satisfies(world: World, conditional: Conditional) -> bool:
    """A world satisfies a conditional iff it does not falsify it."""
    return conditional_status(world, conditional) is not Status.FALSIFIES
