"""Text formats: APX and TGF framework files, conditional knowledge bases,
and DOT export.

APX holds ``arg(NAME).`` and ``att(A,B).`` statements, whitespace
insensitive, with ``%`` line comments. TGF lists node ids one per line, a
``#`` separator, then ``A B`` edge lines. A knowledge base holds one
conditional per line, ``( CLAIM | PREMISE )``, where the separating bar is
the unique single ``|`` at parenthesis depth 1; ``( CLAIM )`` abbreviates
a premise of T. Parsing and printing round-trip for all three.
"""

from __future__ import annotations

import re
from typing import Mapping

from .errors import (
    AmbiguousBarError,
    DuplicateArgumentError,
    ParseError,
    UndeclaredArgumentError,
)
from .framework import ArgumentationFramework
from .propositional import (
    And,
    Bottom,
    Conditional,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    Var,
)
from .ranks import INF, Rank, rank_str
from .systemz import KnowledgeBase

ARGUMENT_NAME = re.compile(r"[A-Za-z0-9_-]+\Z")


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


# ---------------------------------------------------------------------------
# Argumentation framework files
# ---------------------------------------------------------------------------

_APX_SKIP = re.compile(r"(?:\s+|%[^\n]*)+")
_APX_STMT = re.compile(
    r"(arg|att)\s*\(\s*([A-Za-z0-9_-]+)\s*(?:,\s*([A-Za-z0-9_-]+)\s*)?\)\s*\."
)


def _parse_apx(text: str) -> ArgumentationFramework:
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        skip = _APX_SKIP.match(text, pos)
        if skip:
            pos = skip.end()
        if pos >= len(text):
            break
        stmt = _APX_STMT.match(text, pos)
        if not stmt:
            line, col = _line_col(text, pos)
            raise ParseError("expected arg(NAME). or att(A,B). statement", line, col)
        kind, first, second = stmt.group(1), stmt.group(2), stmt.group(3)
        line, col = _line_col(text, pos)
        if kind == "arg":
            if second is not None:
                raise ParseError("arg() takes a single name", line, col)
            if first in arguments:
                raise DuplicateArgumentError(f"argument {first!r} declared twice", line, col)
            arguments.append(first)
        else:
            if second is None:
                raise ParseError("att() takes two names", line, col)
            for name in (first, second):
                if name not in arguments:
                    raise UndeclaredArgumentError(
                        f"attack references undeclared argument {name!r}", line, col
                    )
            attacks.append((first, second))
        pos = stmt.end()
    return ArgumentationFramework(frozenset(arguments), frozenset(attacks))


def _parse_tgf(text: str) -> ArgumentationFramework:
    arguments: list[str] = []
    attacks: list[tuple[str, str]] = []
    in_edges = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_edges:
                raise ParseError("second # separator", lineno, 1)
            in_edges = True
            continue
        if not in_edges:
            if not ARGUMENT_NAME.match(line):
                raise ParseError(f"invalid node id {line!r}", lineno, 1)
            if line in arguments:
                raise DuplicateArgumentError(f"argument {line!r} declared twice", lineno, 1)
            arguments.append(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError("edge line must be: SOURCE TARGET", lineno, 1)
            for name in parts:
                if name not in arguments:
                    raise UndeclaredArgumentError(
                        f"edge references undeclared argument {name!r}", lineno, 1
                    )
            attacks.append((parts[0], parts[1]))
    return ArgumentationFramework(frozenset(arguments), frozenset(attacks))


def parse_af(text: str, fmt: str = "apx") -> ArgumentationFramework:
    """Parse framework text in the named format (``apx`` or ``tgf``)."""
    if fmt == "apx":
        return _parse_apx(text)
    if fmt == "tgf":
        return _parse_tgf(text)
    raise ParseError(f"unknown framework format {fmt!r}")


def print_af(af: ArgumentationFramework, fmt: str = "apx") -> str:
    """Render a framework; parsing the result yields an equal framework."""
    args = sorted(af.arguments)
    attacks = sorted(af.attacks)
    if fmt == "apx":
        lines = [f"arg({a})." for a in args] + [f"att({s},{t})." for s, t in attacks]
    elif fmt == "tgf":
        lines = args + ["#"] + [f"{s} {t}" for s, t in attacks]
    else:
        raise ParseError(f"unknown framework format {fmt!r}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Propositional formulas and knowledge bases
# ---------------------------------------------------------------------------

_TOKENS = (
    ("<->", "IFF"),
    ("->", "IMPLIES"),
    ("||", "OR"),
    ("&&", "AND"),
    ("!", "NOT"),
    ("(", "LPAREN"),
    (")", "RPAREN"),
)
_ATOM_TOKEN = re.compile(r"[a-z][a-z0-9_]*")


def _tokenize(text: str, line: int, col_offset: int) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        for lexeme, kind in _TOKENS:
            if text.startswith(lexeme, pos):
                tokens.append((kind, lexeme, col_offset + pos))
                pos += len(lexeme)
                break
        else:
            if text[pos] in "TF" and not re.match(r"[A-Za-z0-9_]", text[pos + 1 : pos + 2] or " "):
                kind = "TOP" if text[pos] == "T" else "BOTTOM"
                tokens.append((kind, text[pos], col_offset + pos))
                pos += 1
                continue
            atom = _ATOM_TOKEN.match(text, pos)
            if atom:
                tokens.append(("ATOM", atom.group(), col_offset + pos))
                pos = atom.end()
                continue
            raise ParseError(f"unexpected character {text[pos]!r}", line, col_offset + pos)
    return tokens


class _FormulaParser:
    """Recursive descent over the token list.

    Precedence from loose to tight: <->, ->, ||, &&, !. The arrow is
    right-associative, the other binary connectives left-associative.
    """

    def __init__(self, tokens: list[tuple[str, str, int]], line: int):
        self.tokens = tokens
        self.line = line
        self.pos = 0

    def _peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _error(self, message: str) -> ParseError:
        col = self.tokens[self.pos][2] if self.pos < len(self.tokens) else (
            self.tokens[-1][2] + 1 if self.tokens else 1
        )
        return ParseError(message, self.line, col)

    def parse(self) -> Formula:
        formula = self._iff()
        if self.pos != len(self.tokens):
            raise self._error(f"unexpected token {self.tokens[self.pos][1]!r}")
        return formula

    def _iff(self) -> Formula:
        left = self._implies()
        while self._peek() == "IFF":
            self._advance()
            left = Iff(left, self._implies())
        return left

    def _implies(self) -> Formula:
        left = self._or()
        if self._peek() == "IMPLIES":
            self._advance()
            return Implies(left, self._implies())
        return left

    def _or(self) -> Formula:
        left = self._and()
        while self._peek() == "OR":
            self._advance()
            left = Or(left, self._and())
        return left

    def _and(self) -> Formula:
        left = self._unary()
        while self._peek() == "AND":
            self._advance()
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        kind = self._peek()
        if kind is None:
            raise self._error("unexpected end of formula")
        if kind == "NOT":
            self._advance()
            return Not(self._unary())
        if kind == "LPAREN":
            self._advance()
            inner = self._iff()
            if self._peek() != "RPAREN":
                raise self._error("expected )")
            self._advance()
            return inner
        if kind == "TOP":
            self._advance()
            return Top()
        if kind == "BOTTOM":
            self._advance()
            return Bottom()
        if kind == "ATOM":
            return Var(self._advance()[1])
        raise self._error(f"unexpected token {self.tokens[self.pos][1]!r}")


def parse_formula(text: str, line: int = 1, col_offset: int = 1) -> Formula:
    """Parse one propositional formula."""
    tokens = _tokenize(text, line, col_offset)
    if not tokens:
        raise ParseError("empty formula", line, col_offset)
    return _FormulaParser(tokens, line).parse()


def _split_conditional(body: str, line: int, col_offset: int) -> tuple[str, str | None]:
    """Split the inside of a conditional at its single separating bar."""
    bars = []
    depth = 1
    i = 0
    while i < len(body):
        char = body[i]
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == "|":
            if i + 1 < len(body) and body[i + 1] == "|":
                i += 2
                continue
            if depth == 1:
                bars.append(i)
        i += 1
    if not bars:
        return body, None
    if len(bars) > 1:
        raise AmbiguousBarError(
            "more than one separating bar in conditional", line, col_offset + bars[1]
        )
    return body[: bars[0]], body[bars[0] + 1 :]


def parse_conditional(text: str, line: int = 1) -> Conditional:
    """Parse one ``( CLAIM | PREMISE )`` line."""
    stripped = text.strip()
    pad = len(text) - len(text.lstrip())
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ParseError("conditional must be wrapped in parentheses", line, pad + 1)
    depth = 0
    for i, char in enumerate(stripped):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        if depth == 0 and i != len(stripped) - 1:
            raise ParseError("text after closing parenthesis", line, pad + i + 2)
    body = stripped[1:-1]
    claim_text, premise_text = _split_conditional(body, line, pad + 2)
    claim = parse_formula(claim_text, line, pad + 2)
    if premise_text is None:
        return Conditional(claim)
    premise = parse_formula(premise_text, line, pad + 2 + len(claim_text) + 1)
    return Conditional(claim, premise)


def parse_kb(text: str) -> KnowledgeBase:
    """Parse a knowledge base: one conditional per line, ``%`` comments."""
    conditionals = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        if not line.strip():
            continue
        conditionals.append(parse_conditional(line, lineno))
    return KnowledgeBase(tuple(conditionals))


def print_kb(kb: KnowledgeBase) -> str:
    """Render a knowledge base; parsing the result yields an equal base."""
    return "\n".join(str(c) for c in kb.conditionals) + "\n"


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------

_DOT_COLORS = (
    "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
    "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd",
)
_DOT_INF_COLOR = "#d9d9d9"


def to_dot(af: ArgumentationFramework, ranks: Mapping[str, Rank] | None = None) -> str:
    """DOT graph: one node per argument (annotated and colored by rank when
    given) and one directed edge per attack."""
    lines = ["digraph af {", "  node [shape=circle, style=filled, fillcolor=white];"]
    for a in sorted(af.arguments):
        if ranks is None:
            lines.append(f'  "{a}";')
        else:
            rank = ranks[a]
            color = _DOT_INF_COLOR if rank == INF else _DOT_COLORS[int(rank) % len(_DOT_COLORS)]
            lines.append(f'  "{a}" [label="{a}\\n{rank_str(rank)}", fillcolor="{color}"];')
    for s, t in sorted(af.attacks):
        lines.append(f'  "{s}" -> "{t}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
