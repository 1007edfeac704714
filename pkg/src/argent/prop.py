"""Propositional core: formula trees, parsing, models, entailment, minimal conflicts.

Grammar, loosest to tightest: ``<->`` (left-associative), ``->``
(right-associative), ``|``, ``&``, ``!``.  Atoms are identifiers matching
``[a-z][a-zA-Z0-9_]*``, the constants ``true`` / ``false``, or a parenthesized
formula.  ``#`` starts a comment running to the end of the line.  Belief-base
files hold one formula per line, blank lines ignored.

Formulas are immutable trees; equality and set membership are structural.
Semantic questions (consistency, entailment) go through :func:`is_consistent`
and :func:`entails`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import ParseError, ResourceLimitError, VocabularyMismatchError

ID_PATTERN = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")

# Exhaustive truth-table search is used up to this many variables; beyond it a
# unit-propagation/splitting search takes over.
ENUMERATION_LIMIT = 20

CONFLICT_CANDIDATE_LIMIT = 16


class Formula:
    """Base class for formula nodes.  Instances are immutable and hashable."""

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Var(Formula):
    name: str


@dataclass(frozen=True)
class Const(Formula):
    value: bool


@dataclass(frozen=True)
class Not(Formula):
    child: Formula


@dataclass(frozen=True)
class And(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("And nodes need at least two children; use conj()")


@dataclass(frozen=True)
class Or(Formula):
    children: tuple[Formula, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("Or nodes need at least two children; use disj()")


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


TRUE = Const(True)
FALSE = Const(False)


def conj(items: Iterable[Formula]) -> Formula:
    """N-ary conjunction; empty -> true, singleton -> the item itself."""
    parts = tuple(items)
    if not parts:
        return TRUE
    if len(parts) == 1:
        return parts[0]
    return And(parts)


def disj(items: Iterable[Formula]) -> Formula:
    parts = tuple(items)
    if not parts:
        return FALSE
    if len(parts) == 1:
        return parts[0]
    return Or(parts)


def neg(f: Formula) -> Formula:
    if isinstance(f, Const):
        return Const(not f.value)
    return Not(f)


# ---------------------------------------------------------------------------
# Scanner / parser
# ---------------------------------------------------------------------------

_IDENT_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")
_PUNCT = {"(": "lparen", ")": "rparen", "&": "and", "|": "or", "!": "not", ",": "comma"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def scan(text: str) -> list[Token]:
    tokens = []
    i, line, col = 0, 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if text.startswith("<->", i):
            tokens.append(Token("iff", "<->", line, col))
            i += 3
            col += 3
            continue
        if text.startswith("->", i):
            tokens.append(Token("implies", "->", line, col))
            i += 2
            col += 2
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
            continue
        m = _IDENT_RE.match(text, i)
        if m:
            word = m.group()
            kind = "const" if word in ("true", "false") else "ident"
            tokens.append(Token(kind, word, line, col))
            i = m.end()
            col += len(word)
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("eof", "", line, col))
    return tokens


class FormulaParser:
    """Recursive-descent parser over scanned tokens.

    Subclasses may override :meth:`ident_atom` to give identifiers a different
    meaning (the goal-formula parser does).
    """

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    def peek(self) -> Token:
        return self._tokens[self._pos]

    def advance(self) -> Token:
        tok = self._tokens[self._pos]
        self._pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.advance()
        if tok.kind != kind:
            raise ParseError(f"expected {what}", tok.line, tok.col)
        return tok

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
        return f

    def iff(self) -> Formula:
        left = self.implies()
        while self.peek().kind == "iff":
            self.advance()
            left = Iff(left, self.implies())
        return left

    def implies(self) -> Formula:
        left = self.disj()
        if self.peek().kind == "implies":
            self.advance()
            return Implies(left, self.implies())
        return left

    def disj(self) -> Formula:
        items = [self.conj()]
        while self.peek().kind == "or":
            self.advance()
            items.append(self.conj())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def conj(self) -> Formula:
        items = [self.unary()]
        while self.peek().kind == "and":
            self.advance()
            items.append(self.unary())
        return items[0] if len(items) == 1 else And(tuple(items))

    def unary(self) -> Formula:
        if self.peek().kind == "not":
            self.advance()
            return Not(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        tok = self.peek()
        if tok.kind == "lparen":
            self.advance()
            f = self.iff()
            self.expect("rparen", "')'")
            return f
        if tok.kind == "const":
            self.advance()
            return Const(tok.text == "true")
        if tok.kind == "ident":
            return self.ident_atom()
        raise ParseError(
            f"unexpected {tok.text!r}" if tok.text else "unexpected end of input",
            tok.line,
            tok.col,
        )

    def ident_atom(self) -> Formula:
        return Var(self.advance().text)


def parse_formula(text: str) -> Formula:
    """Parse a formula; raises :class:`ParseError` with line/column on bad input."""
    return FormulaParser(scan(text)).parse()


def parse_formula_lines(text: str) -> tuple[Formula, ...]:
    """Parse a belief-base style file: one formula per line, blanks ignored."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            out.append(parse_formula(stripped))
        except ParseError as exc:
            raise ParseError(exc.message, lineno, exc.col) from None
    return tuple(out)


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}


def _prec(f: Formula) -> int:
    return _PREC[type(f)]


def _wrap(f: Formula, level: int) -> str:
    s = format_formula(f)
    return f"({s})" if _prec(f) <= level else s


def format_formula(f: Formula) -> str:
    """Print with minimal parentheses; parsing the result restores `f` exactly."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Const):
        return "true" if f.value else "false"
    if isinstance(f, Not):
        inner = format_formula(f.child)
        return "!" + (inner if _prec(f.child) >= 5 else f"({inner})")
    if isinstance(f, And):
        return " & ".join(_wrap(c, 4) for c in f.children)
    if isinstance(f, Or):
        return " | ".join(_wrap(c, 3) for c in f.children)
    if isinstance(f, Implies):
        left = _wrap(f.left, 2)
        right = _wrap(f.right, 1)
        return f"{left} -> {right}"
    if isinstance(f, Iff):
        left = _wrap(f.left, 0)
        right = _wrap(f.right, 1)
        return f"{left} <-> {right}"
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Semantics
# ---------------------------------------------------------------------------

def variables(f: Formula) -> frozenset[str]:
    if isinstance(f, Var):
        return frozenset((f.name,))
    if isinstance(f, Const):
        return frozenset()
    if isinstance(f, Not):
        return variables(f.child)
    if isinstance(f, (And, Or)):
        out: frozenset[str] = frozenset()
        for c in f.children:
            out |= variables(c)
        return out
    return variables(f.left) | variables(f.right)


def evaluate(f: Formula, true_names) -> bool:
    """Truth value under the assignment sending exactly `true_names` to true."""
    if isinstance(f, Var):
        return f.name in true_names
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not evaluate(f.child, true_names)
    if isinstance(f, And):
        return all(evaluate(c, true_names) for c in f.children)
    if isinstance(f, Or):
        return any(evaluate(c, true_names) for c in f.children)
    if isinstance(f, Implies):
        return (not evaluate(f.left, true_names)) or evaluate(f.right, true_names)
    if isinstance(f, Iff):
        return evaluate(f.left, true_names) == evaluate(f.right, true_names)
    raise TypeError(f"not a formula: {f!r}")


def substitute(f: Formula, assignment: Mapping[str, bool]) -> Formula:
    """Replace assigned variables by constants, folding constants away."""
    if isinstance(f, Var):
        if f.name in assignment:
            return TRUE if assignment[f.name] else FALSE
        return f
    if isinstance(f, Const):
        return f
    if isinstance(f, Not):
        return neg(substitute(f.child, assignment))
    if isinstance(f, And):
        parts = []
        for c in f.children:
            s = substitute(c, assignment)
            if s == FALSE:
                return FALSE
            if s != TRUE:
                parts.append(s)
        return conj(parts)
    if isinstance(f, Or):
        parts = []
        for c in f.children:
            s = substitute(c, assignment)
            if s == TRUE:
                return TRUE
            if s != FALSE:
                parts.append(s)
        return disj(parts)
    if isinstance(f, Implies):
        left = substitute(f.left, assignment)
        right = substitute(f.right, assignment)
        if left == FALSE or right == TRUE:
            return TRUE
        if left == TRUE:
            return right
        if right == FALSE:
            return neg(left)
        return Implies(left, right)
    if isinstance(f, Iff):
        left = substitute(f.left, assignment)
        right = substitute(f.right, assignment)
        if isinstance(left, Const):
            return right if left.value else neg(right)
        if isinstance(right, Const):
            return left if right.value else neg(left)
        return Iff(left, right)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Vocabularies and interpretations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Vocabulary:
    """Ordered, duplicate-free variable names; the order fixes model enumeration."""

    names: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        seen = set()
        for name in self.names:
            if not ID_PATTERN.match(name):
                raise ValueError(f"bad variable name: {name!r}")
            if name in seen:
                raise ValueError(f"duplicate variable name: {name!r}")
            seen.add(name)

    @classmethod
    def of(cls, *names: str) -> "Vocabulary":
        return cls(tuple(names))

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self.names

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class Interpretation:
    """Truth assignment over a vocabulary, given by its set of true variables."""

    vocabulary: Vocabulary
    true_set: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "true_set", frozenset(self.true_set))
        extra = self.true_set - set(self.vocabulary.names)
        if extra:
            raise VocabularyMismatchError(
                f"true set mentions variables outside the vocabulary: {sorted(extra)}"
            )

    def satisfies(self, f: Formula) -> bool:
        return evaluate(f, self.true_set)

    def sort_key(self) -> tuple[bool, ...]:
        return tuple(name in self.true_set for name in self.vocabulary.names)

    def __str__(self) -> str:
        return format_interpretation(self)


def format_interpretation(i: Interpretation) -> str:
    members = [name for name in i.vocabulary.names if name in i.true_set]
    return "{" + ",".join(members) + "}"


def models(f: Formula, vocabulary: Vocabulary) -> list[Interpretation]:
    """All interpretations over `vocabulary` satisfying `f`, in canonical order.

    Canonical order is lexicographic over the vocabulary order with false
    before true.  Top-level unit literals are fixed before enumerating, so
    formulas that pin most variables stay cheap.
    """
    extra = variables(f) - set(vocabulary.names)
    if extra:
        raise VocabularyMismatchError(
            f"formula uses variables outside the vocabulary: {sorted(extra)}"
        )
    units = _unit_literals([f])
    if units is None:
        return []
    residual = substitute(f, units)
    if residual == FALSE:
        return []
    fixed_true = {name for name, val in units.items() if val}
    free = [name for name in vocabulary.names if name not in units]
    width = len(free)
    out = []
    for m in range(1 << width):
        ts = set(fixed_true)
        for j in range(width):
            if (m >> (width - 1 - j)) & 1:
                ts.add(free[j])
        if evaluate(residual, ts):
            out.append(Interpretation(vocabulary, frozenset(ts)))
    return out


def _unit_literals(formulas: Iterable[Formula]):
    """Unit literals of a top-level conjunction; None when they contradict."""
    units: dict[str, bool] = {}
    stack = list(formulas)
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.extend(g.children)
        elif isinstance(g, Var):
            if units.get(g.name) is False:
                return None
            units[g.name] = True
        elif isinstance(g, Not) and isinstance(g.child, Var):
            if units.get(g.child.name) is True:
                return None
            units[g.child.name] = False
    return units


# ---------------------------------------------------------------------------
# Satisfiability, consistency, entailment
# ---------------------------------------------------------------------------

def _flatten_conjuncts(formulas: Iterable[Formula]):
    """Fold constants and flatten nested Ands; None when plainly unsatisfiable."""
    flat = []
    stack = [substitute(f, {}) for f in formulas]
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.extend(g.children)
        elif g == FALSE:
            return None
        elif g != TRUE:
            flat.append(g)
    return flat


def satisfiable(formulas: Sequence[Formula]) -> bool:
    """Joint satisfiability of a set of formulas over their own vocabulary."""
    flat = _flatten_conjuncts(formulas)
    if flat is None:
        return False
    if not flat:
        return True
    names = set()
    for g in flat:
        names |= variables(g)
    if len(names) <= ENUMERATION_LIMIT:
        order = sorted(names)
        width = len(order)
        for m in range(1 << width):
            ts = {order[j] for j in range(width) if (m >> j) & 1}
            if all(evaluate(g, ts) for g in flat):
                return True
        return False
    return _split_search(flat)


def _split_search(flat: list[Formula]) -> bool:
    """Unit propagation plus variable splitting on folded conjunct lists."""
    units = _unit_literals(flat)
    if units is None:
        return False
    if units:
        flat = _flatten_conjuncts(substitute(g, units) for g in flat)
        if flat is None:
            return False
    if not flat:
        return True
    var = next(iter(variables(flat[0])))
    for val in (True, False):
        branch = _flatten_conjuncts(substitute(g, {var: val}) for g in flat)
        if branch is None:
            continue
        if not branch or _split_search(branch):
            return True
    return False


def is_consistent(formulas: Sequence[Formula]) -> bool:
    """True iff the conjunction of `formulas` has at least one model."""
    return satisfiable(list(formulas))


def entails(formulas: Sequence[Formula], f: Formula) -> bool:
    """True iff `formulas` together with the negation of `f` are inconsistent."""
    return not satisfiable(list(formulas) + [neg(f)])


def minimal_conflict_subsets(
    candidates: Sequence[Formula],
    context: Sequence[Formula] = (),
    max_candidates: int = CONFLICT_CANDIDATE_LIMIT,
) -> list[tuple[Formula, ...]]:
    """All subset-minimal sets of `candidates` inconsistent with `context`.

    Candidates are deduplicated structurally; results keep candidate order and
    are listed by size, then lexicographically by candidate position.  Since
    any superset of a conflict is a conflict, subsets containing an already
    found conflict are skipped.  If `context` alone is inconsistent the empty
    set is the unique answer.
    """
    cand: list[Formula] = []
    for f in candidates:
        if f not in cand:
            cand.append(f)
    if len(cand) > max_candidates:
        raise ResourceLimitError(
            f"{len(cand)} candidate formulas exceed the limit of {max_candidates}"
        )
    ctx = list(context)
    if satisfiable(cand + ctx):
        return []
    if not satisfiable(ctx):
        return [()]
    found: list[tuple[int, ...]] = []
    for r in range(1, len(cand) + 1):
        for combo in combinations(range(len(cand)), r):
            combo_set = set(combo)
            if any(set(prev) <= combo_set for prev in found):
                continue
            if not satisfiable([cand[i] for i in combo] + ctx):
                found.append(combo)
    return [tuple(cand[i] for i in combo) for combo in found]


def format_formula_set(formulas: Iterable[Formula]) -> str:
    return "{" + "; ".join(format_formula(f) for f in formulas) + "}"
