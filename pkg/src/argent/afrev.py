"""Minimal-change revision of frameworks under goals over acc/att atoms.

Goals and integrity constraints are written with `acc(<id>)` / `att(<id>,<id>)`
atoms in the ordinary formula grammar and compile to att/acc variables.  The
search walks attack configurations outward from the original framework by
increasing flip count over the att variables left free by the constraint's
unit literals; acc variables are never searched, they are determined by the
attacks.  Three distance modes are supported:

  dalal         every variable flip costs 1
  att-weighted  an att flip costs |A|+1, an acc flip costs 1
  att-only      only att flips count

With uniform weights the scan keeps going until no deeper level can beat the
best total found, so the returned set is exactly the distance-minimal one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable

from . import kernels
from .af import ArgumentationFramework, format_af
from .encoding import AttAccVocabulary, att_unit_literals, attacker_masks_from
from .errors import ParseError, ResourceLimitError, UnknownArgumentError
from .prop import (
    And,
    Const,
    Formula,
    FormulaParser,
    Iff,
    Implies,
    Not,
    Or,
    TRUE,
    Var,
    satisfiable,
    scan,
)

DALAL = "dalal"
ATT_WEIGHTED = "att-weighted"
ATT_ONLY = "att-only"
MODES = (DALAL, ATT_WEIGHTED, ATT_ONLY)


def mode_weights(mode: str, n: int) -> tuple[int, int]:
    """(att weight, acc weight) for `mode` over an n-argument framework."""
    if mode == DALAL:
        return 1, 1
    if mode == ATT_WEIGHTED:
        return n + 1, 1
    if mode == ATT_ONLY:
        return 1, 0
    raise ValueError(f"unknown distance mode: {mode!r} (choose from {MODES})")


class _GoalParser(FormulaParser):
    """Formula parser whose only identifier atoms are acc(...) and att(...,...)."""

    def __init__(self, tokens, enc: AttAccVocabulary):
        super().__init__(tokens)
        self._enc = enc

    def ident_atom(self) -> Formula:
        tok = self.advance()
        if tok.text not in ("acc", "att"):
            raise ParseError(
                "expected an acc(...) or att(...,...) atom", tok.line, tok.col
            )
        self.expect("lparen", "'('")
        first = self.expect("ident", "an argument identifier")
        if tok.text == "acc":
            self.expect("rparen", "')'")
            self._check(first)
            return Var(self._enc.acc_var(first.text))
        self.expect("comma", "','")
        second = self.expect("ident", "an argument identifier")
        self.expect("rparen", "')'")
        self._check(first)
        self._check(second)
        return Var(self._enc.att_var(first.text, second.text))

    def _check(self, tok) -> None:
        if tok.text not in self._enc.arguments:
            raise UnknownArgumentError(
                f"unknown argument {tok.text!r} at line {tok.line}, col {tok.col}"
            )


def parse_goal(text: str, enc: AttAccVocabulary) -> Formula:
    """Compile a goal/constraint over acc(x) and att(x,y) atoms to att/acc variables."""
    return _GoalParser(scan(text), enc).parse()


def _compile(formula: Formula, enc: AttAccVocabulary) -> Callable[[int, int], bool]:
    """Closure evaluating `formula` on (att bitmask, acc bitmask)."""
    if isinstance(formula, Var):
        p = enc.att_position(formula.name)
        if p is not None:
            return lambda att, acc, p=p: bool((att >> p) & 1)
        i = enc.acc_position(formula.name)
        if i is None:
            raise UnknownArgumentError(f"variable {formula.name!r} is not an att/acc variable")
        return lambda att, acc, i=i: bool((acc >> i) & 1)
    if isinstance(formula, Const):
        return lambda att, acc, v=formula.value: v
    if isinstance(formula, Not):
        g = _compile(formula.child, enc)
        return lambda att, acc: not g(att, acc)
    if isinstance(formula, And):
        gs = [_compile(c, enc) for c in formula.children]
        return lambda att, acc: all(g(att, acc) for g in gs)
    if isinstance(formula, Or):
        gs = [_compile(c, enc) for c in formula.children]
        return lambda att, acc: any(g(att, acc) for g in gs)
    if isinstance(formula, Implies):
        gl = _compile(formula.left, enc)
        gr = _compile(formula.right, enc)
        return lambda att, acc: (not gl(att, acc)) or gr(att, acc)
    if isinstance(formula, Iff):
        gl = _compile(formula.left, enc)
        gr = _compile(formula.right, enc)
        return lambda att, acc: gl(att, acc) == gr(att, acc)
    raise TypeError(f"not a formula: {formula!r}")


@dataclass(frozen=True)
class RevisionEntry:
    """One distance-minimal revised framework with its change record."""

    af: ArgumentationFramework
    accepted: frozenset[str]
    vacuous: bool
    att_added: frozenset[tuple[str, str]]
    att_removed: frozenset[tuple[str, str]]
    acc_changed: frozenset[str]
    total_weight: int


@dataclass(frozen=True)
class RevisionOutcome:
    """Distance-minimal revised frameworks, canonically ordered by flip set."""

    entries: tuple[RevisionEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def attack_sets(self) -> set[frozenset[tuple[str, str]]]:
        return {entry.af.attacks for entry in self.entries}


def revise_af(
    af: ArgumentationFramework,
    goal: Formula,
    constraint: Formula | None = None,
    mode: str = ATT_ONLY,
    require_extension: bool = True,
) -> RevisionOutcome:
    """Theory models satisfying goal and constraint at minimal distance from `af`.

    The search fixes att variables pinned by unit literals of goal/constraint,
    then scans flip subsets of the free att variables by increasing size k.
    Each candidate's acc assignment is forced by the attacks, so a level-k scan
    is complete for every model with k free flips; the scan stops once no
    deeper level can reach the best total weight.  When `require_extension` is
    set, candidates without a stable extension are excluded, which keeps the
    degenerate all-accepted models out of the result.

    An empty outcome (never an exception) means no admissible model exists.
    """
    n = len(af.arguments)
    if n > kernels.MAX_ARGUMENTS:
        raise ResourceLimitError(
            f"{n} arguments exceed the enumeration limit of {kernels.MAX_ARGUMENTS}"
        )
    enc = AttAccVocabulary(af.arguments)
    constraint = TRUE if constraint is None else constraint
    combined = And((goal, constraint)) if constraint != TRUE else goal
    w_att, w_acc = mode_weights(mode, n)
    if not satisfiable([combined]):
        return RevisionOutcome(())
    units = att_unit_literals(combined, enc)
    if units is None:
        return RevisionOutcome(())
    free = [p for p in range(n * n) if p not in units]
    if len(free) > 25:
        raise ResourceLimitError(f"{len(free)} free att variables exceed the limit of 25")

    base_att = 0
    for p, (x, y) in enumerate(enc.pairs):
        if (x, y) in af.attacks:
            base_att |= 1 << p
    start = base_att
    for p, value in units.items():
        if value:
            start |= 1 << p
        else:
            start &= ~(1 << p)
    baseline = bin(start ^ base_att).count("1")

    acc0_mask, _ = kernels.acceptance_mask(attacker_masks_from(base_att, n), n)
    check = _compile(combined, enc)

    hits: list[tuple[int, tuple[int, ...], int, int, bool]] = []
    best: int | None = None
    for k in range(len(free) + 1):
        if best is not None and w_att * (baseline + k) > best:
            break
        for combo in combinations(free, k):
            att = start
            for p in combo:
                att ^= 1 << p
            acc_mask, vacuous = kernels.acceptance_mask(attacker_masks_from(att, n), n)
            if require_extension and vacuous:
                continue
            if not check(att, acc_mask):
                continue
            acc_flips = bin(acc_mask ^ acc0_mask).count("1")
            total = w_att * (baseline + k) + w_acc * acc_flips
            if best is None or total < best:
                best = total
            flip_positions = tuple(p for p in range(n * n) if (att ^ base_att) >> p & 1)
            hits.append((total, flip_positions, att, acc_mask, vacuous))
    if best is None:
        return RevisionOutcome(())
    entries = []
    for total, flips, att, acc_mask, vacuous in sorted(
        (h for h in hits if h[0] == best), key=lambda h: h[1]
    ):
        attacks = frozenset(enc.pairs[p] for p in range(n * n) if (att >> p) & 1)
        new_af = ArgumentationFramework(af.arguments, attacks)
        accepted = frozenset(a for i, a in enumerate(af.arguments) if (acc_mask >> i) & 1)
        entries.append(
            RevisionEntry(
                af=new_af,
                accepted=accepted,
                vacuous=vacuous,
                att_added=frozenset(attacks - af.attacks),
                att_removed=frozenset(af.attacks - attacks),
                acc_changed=frozenset(
                    a for i, a in enumerate(af.arguments) if ((acc_mask ^ acc0_mask) >> i) & 1
                ),
                total_weight=total,
            )
        )
    return RevisionOutcome(tuple(entries))


def format_outcome(outcome: RevisionOutcome) -> str:
    """Text serialization: one block per entry, apx text then change fields."""
    lines = [f"entries: {len(outcome)}"]
    for idx, entry in enumerate(outcome, start=1):
        lines.append(f"entry {idx}:")
        lines.append(format_af(entry.af))
        lines.append(f"accepted: {_fmt_args(entry.af, entry.accepted)}")
        lines.append(f"att_added: {_fmt_pairs(entry.af, entry.att_added)}")
        lines.append(f"att_removed: {_fmt_pairs(entry.af, entry.att_removed)}")
        lines.append(f"acc_changed: {_fmt_args(entry.af, entry.acc_changed)}")
        lines.append(f"weight: {entry.total_weight}")
        if entry.vacuous:
            lines.append("vacuous: true")
    return "\n".join(lines)


def outcome_to_dict(outcome: RevisionOutcome) -> dict:
    """Structured form mirroring :func:`format_outcome` field for field."""
    return {
        "entries": [
            {
                "arguments": list(entry.af.arguments),
                "attacks": [list(p) for p in entry.af.sorted_attacks()],
                "accepted": _sorted_args(entry.af, entry.accepted),
                "vacuous": entry.vacuous,
                "att_added": [list(p) for p in sorted(entry.att_added, key=entry.af.pair_key)],
                "att_removed": [list(p) for p in sorted(entry.att_removed, key=entry.af.pair_key)],
                "acc_changed": _sorted_args(entry.af, entry.acc_changed),
                "weight": entry.total_weight,
            }
            for entry in outcome
        ]
    }


def _sorted_args(af: ArgumentationFramework, names: Iterable[str]) -> list[str]:
    member = set(names)
    return [a for a in af.arguments if a in member]


def _fmt_args(af: ArgumentationFramework, names: Iterable[str]) -> str:
    return "{" + ",".join(_sorted_args(af, names)) + "}"


def _fmt_pairs(af: ArgumentationFramework, pairs) -> str:
    ordered = sorted(pairs, key=af.pair_key)
    return "{" + ",".join(f"({s},{t})" for s, t in ordered) + "}"
