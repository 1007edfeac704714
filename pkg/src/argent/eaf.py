"""Enthymeme-based frameworks: classification, constraints, revision, acceptability.

Attacks are declared in the input, not derived from the logic: received
enthymemes may carry attack patterns that differ from what their completed
contents would generate, so the classifier reports mismatches as warnings
instead of rewriting the graph.

An attack is *certain* when, on both endpoints, some minimal conflicting part
of the argument lies entirely inside its fixed (transmitted) material; such a
conflict survives any recompletion.  Since minimal conflicting parts need not
be unique, certainty is an existential condition, and a note is emitted
whenever it hinges on the choice of witness for an enthymeme.

File format::

    deductive <id> { support: f1 ; f2  claim: f }
    enthymeme <id> { support: ...  claim: f  [added_support: ...]  [full_claim: f] }
    att(<id>,<id>).

`full_claim` defaults to `claim`; `#` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .af import ArgumentationFramework
from .afrev import ATT_ONLY, RevisionEntry, RevisionOutcome, parse_goal, revise_af
from .encoding import AttAccVocabulary
from .errors import ParseError, UnknownArgumentError
from .prop import (
    Formula,
    Not,
    TRUE,
    Var,
    conj,
    format_formula,
    format_formula_set,
    is_consistent,
    minimal_conflict_subsets,
    parse_formula,
)
from .structured import (
    DEDUCTIVE,
    ENTHYMEME,
    StructuredArgument,
    added_support_is_tight,
    complete_enthymeme,
    is_defeater,
)


@dataclass(frozen=True)
class EnthymemeAF:
    """Structured arguments plus declared attacks."""

    arguments: tuple[StructuredArgument, ...]
    declared_attacks: frozenset[tuple[str, str]]

    def __post_init__(self):
        object.__setattr__(self, "arguments", tuple(self.arguments))
        object.__setattr__(self, "declared_attacks", frozenset(self.declared_attacks))
        ids = [a.id for a in self.arguments]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate argument identifiers")
        declared = set(ids)
        for src, tgt in self.declared_attacks:
            if src not in declared or tgt not in declared:
                raise UnknownArgumentError(
                    f"attack ({src},{tgt}) uses an undeclared argument"
                )

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arguments)

    @property
    def argument_map(self) -> dict[str, StructuredArgument]:
        return {a.id: a for a in self.arguments}

    @property
    def deductive_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arguments if a.kind == DEDUCTIVE)

    @property
    def enthymeme_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.arguments if a.kind == ENTHYMEME)

    def to_af(self) -> ArgumentationFramework:
        return ArgumentationFramework(self.ids, self.declared_attacks)

    def pair_key(self, pair: tuple[str, str]) -> tuple[int, int]:
        ids = self.ids
        return (ids.index(pair[0]), ids.index(pair[1]))


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"(deductive|enthymeme)\s+([a-z][a-zA-Z0-9_]*)\s*\{")
_ATT_RE = re.compile(r"att\s*\(\s*([a-z][a-zA-Z0-9_]*)\s*,\s*([a-z][a-zA-Z0-9_]*)\s*\)\s*\.")
_FIELD_RE = re.compile(r"\b(support|claim|added_support|full_claim)\s*:")


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last = text.rfind("\n", 0, pos)
    return line, pos - last


def parse_eaf(text: str) -> EnthymemeAF:
    """Parse the enthymeme-framework format; completed-enthymeme invariants are
    checked and reported with the offending argument identifier."""
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    arguments: list[StructuredArgument] = []
    attacks: list[tuple[str, str]] = []
    pos = 0
    n = len(stripped)
    while pos < n:
        if stripped[pos] in " \t\r\n":
            pos += 1
            continue
        m = _HEADER_RE.match(stripped, pos)
        if m:
            close = stripped.find("}", m.end())
            if close < 0:
                line, col = _line_col(stripped, pos)
                raise ParseError("unterminated argument block", line, col)
            arguments.append(
                _parse_block(m.group(1), m.group(2), stripped[m.end():close],
                             _line_col(stripped, pos)[0])
            )
            pos = close + 1
            continue
        m = _ATT_RE.match(stripped, pos)
        if m:
            attacks.append((m.group(1), m.group(2)))
            pos = m.end()
            continue
        line, col = _line_col(stripped, pos)
        raise ParseError("expected an argument block or att(...,...).", line, col)
    return EnthymemeAF(tuple(arguments), frozenset(attacks))


def _parse_block(kind: str, arg_id: str, body: str, line: int) -> StructuredArgument:
    labels = list(_FIELD_RE.finditer(body))
    if not labels or body[: labels[0].start()].strip():
        raise ParseError(f"argument {arg_id}: malformed field list", line, 1)
    fields: dict[str, str] = {}
    for i, m in enumerate(labels):
        end = labels[i + 1].start() if i + 1 < len(labels) else len(body)
        name = m.group(1)
        if name in fields:
            raise ParseError(f"argument {arg_id}: duplicate field {name!r}", line, 1)
        fields[name] = body[m.end():end].strip()
    for required in ("support", "claim"):
        if required not in fields:
            raise ParseError(f"argument {arg_id}: missing field {required!r}", line, 1)
    if kind == "deductive":
        for forbidden in ("added_support", "full_claim"):
            if forbidden in fields:
                raise ParseError(
                    f"argument {arg_id}: deductive arguments take no {forbidden!r}",
                    line, 1,
                )
    support = _parse_formula_list(fields["support"], arg_id, line)
    claim = _parse_field_formula(fields["claim"], arg_id, line)
    try:
        if kind == "deductive":
            return StructuredArgument.deductive(arg_id, support, claim)
        added = _parse_formula_list(fields.get("added_support", ""), arg_id, line)
        full = (
            _parse_field_formula(fields["full_claim"], arg_id, line)
            if "full_claim" in fields
            else None
        )
        return StructuredArgument.enthymeme(arg_id, support, claim, added, full)
    except ValueError as exc:
        raise ParseError(str(exc), line, 1) from None


def _parse_formula_list(text: str, arg_id: str, line: int) -> tuple[Formula, ...]:
    out = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        out.append(_parse_field_formula(part, arg_id, line))
    return tuple(out)


def _parse_field_formula(text: str, arg_id: str, line: int) -> Formula:
    try:
        return parse_formula(text)
    except ParseError as exc:
        raise ParseError(f"argument {arg_id}: {exc.message}", line, exc.col) from None


# ---------------------------------------------------------------------------
# Fixed and involved parts, classification
# ---------------------------------------------------------------------------

def fixed_part(a: StructuredArgument) -> tuple[Formula, ...]:
    """Transmitted support plus transmitted claim (the whole content for a
    deductive argument)."""
    out: list[Formula] = []
    for f in a.fixed_support + (a.fixed_claim,):
        if f not in out:
            out.append(f)
    return tuple(out)


def involved_parts(a: StructuredArgument, b: StructuredArgument) -> list[tuple[Formula, ...]]:
    """All minimal parts of `a`'s content jointly inconsistent with `b`'s content;
    empty when the two contents are consistent."""
    return minimal_conflict_subsets(a.content, b.content)


@dataclass(frozen=True)
class AttackClassification:
    """Certain/questionable split of the declared attacks.

    `deductive_core` restricts the certain attacks to deductive endpoints.
    Warnings flag declared attacks without logical conflict and undeclared
    defeater pairs; notes record certainty verdicts that rest on one conflict
    witness among several.
    """

    certain: frozenset[tuple[str, str]]
    questionable: frozenset[tuple[str, str]]
    deductive_core: frozenset[tuple[str, str]]
    warnings: tuple[str, ...]
    notes: tuple[str, ...]


def classify_attacks(eaf: EnthymemeAF) -> AttackClassification:
    """Split declared attacks by whether both endpoints conflict within their
    fixed parts (a witness inside the fixed part survives any recompletion)."""
    amap = eaf.argument_map
    deductive = set(eaf.deductive_ids)
    certain: set[tuple[str, str]] = set()
    questionable: set[tuple[str, str]] = set()
    warnings: list[str] = []
    notes: list[str] = []
    for xid, yid in sorted(eaf.declared_attacks, key=eaf.pair_key):
        x, y = amap[xid], amap[yid]
        inv_x = involved_parts(x, y)
        inv_y = involved_parts(y, x)
        if not inv_x and not inv_y:
            warnings.append(f"declared attack ({xid},{yid}) has no logical conflict")
            questionable.add((xid, yid))
            continue
        witnesses = {}
        escapes = {}
        for arg, invs in ((x, inv_x), (y, inv_y)):
            fix = set(fixed_part(arg))
            witnesses[arg.id] = [s for s in invs if set(s) <= fix]
            escapes[arg.id] = [s for s in invs if not set(s) <= fix]
        if witnesses[xid] and witnesses[yid]:
            certain.add((xid, yid))
            for arg in (x, y):
                if arg.kind == ENTHYMEME and escapes[arg.id]:
                    notes.append(
                        f"attack ({xid},{yid}): certain via fixed-part conflict "
                        f"{format_formula_set(witnesses[arg.id][0])} of {arg.id}; "
                        f"minimal conflict sets outside the fixed part exist "
                        f"(e.g. {format_formula_set(escapes[arg.id][0])})"
                    )
        else:
            questionable.add((xid, yid))
    for x in eaf.arguments:
        for y in eaf.arguments:
            if (x.id, y.id) not in eaf.declared_attacks and is_defeater(x, y):
                warnings.append(f"undeclared defeater ({x.id},{y.id})")
    return AttackClassification(
        certain=frozenset(certain),
        questionable=frozenset(questionable),
        deductive_core=frozenset(
            p for p in certain if p[0] in deductive and p[1] in deductive
        ),
        warnings=tuple(warnings),
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Integrity constraints and revision
# ---------------------------------------------------------------------------

def constraint_deductive(eaf: EnthymemeAF) -> Formula:
    """Freeze every attack and non-attack between deductive arguments."""
    enc = AttAccVocabulary(eaf.ids)
    deductive = eaf.deductive_ids
    parts: list[Formula] = []
    negatives: list[Formula] = []
    for x in deductive:
        for y in deductive:
            v = Var(enc.att_var(x, y))
            if (x, y) in eaf.declared_attacks:
                parts.append(v)
            else:
                negatives.append(Not(v))
    return conj(tuple(parts + negatives))


def constraint_certain(
    eaf: EnthymemeAF, classification: AttackClassification | None = None
) -> Formula:
    """Freeze every certain attack; forbid non-core attacks between deductive
    arguments.  Negative literals cover only deductive pairs."""
    cls = classification or classify_attacks(eaf)
    enc = AttAccVocabulary(eaf.ids)
    deductive = eaf.deductive_ids
    positives = [
        Var(enc.att_var(x, y))
        for x, y in sorted(cls.certain, key=eaf.pair_key)
    ]
    negatives = [
        Not(Var(enc.att_var(x, y)))
        for x in deductive
        for y in deductive
        if (x, y) not in cls.deductive_core
    ]
    return conj(tuple(positives + negatives))


def revise_eaf(
    eaf: EnthymemeAF,
    goal: str | Formula,
    constraint_mode: str = "deductive",
    mode: str = ATT_ONLY,
    require_extension: bool = True,
) -> RevisionOutcome:
    """Revise the projected plain framework under the chosen integrity constraint."""
    af = eaf.to_af()
    enc = AttAccVocabulary(af.arguments)
    goal_f = parse_goal(goal, enc) if isinstance(goal, str) else goal
    if constraint_mode == "deductive":
        constraint = constraint_deductive(eaf)
    elif constraint_mode == "certain":
        constraint = constraint_certain(eaf)
    elif constraint_mode in (None, "none"):
        constraint = TRUE
    else:
        raise ValueError(f"unknown constraint mode: {constraint_mode!r}")
    return revise_af(af, goal_f, constraint, mode=mode, require_extension=require_extension)


# ---------------------------------------------------------------------------
# Acceptability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AcceptabilityResult:
    """Verdict for one revision entry: a minimal recompletion witness when the
    changed attacks are justifiable, otherwise the blocking reason."""

    entry: RevisionEntry
    acceptable: bool
    witness: dict[str, StructuredArgument]
    reason: str | None


def acceptable_afs(
    eaf: EnthymemeAF,
    outcome: RevisionOutcome,
    base: Sequence[Formula],
    pool: Sequence[Formula],
    max_added: int = 3,
) -> list[AcceptabilityResult]:
    """Filter revised frameworks by whether their changed attacks are justified
    by recompleting the enthymemes involved.

    Only attack pairs that differ from the original framework and touch at
    least one enthymeme are checked: a present attack needs jointly
    inconsistent completed contents, an absent one jointly consistent.  Each
    enthymeme involved may keep its current completion or take a proper
    recompletion from the belief base (the bare transmitted pair does not
    count) with no superfluous added formula; candidates are tried current
    first, then smallest first, so the first witness found is minimal.  The
    witness maps only the enthymemes whose completion actually changed.
    """
    amap = eaf.argument_map
    enth = set(eaf.enthymeme_ids)
    results = []
    for entry in outcome.entries:
        changed = sorted(
            (
                p
                for p in eaf.declared_attacks ^ entry.af.attacks
                if p[0] in enth or p[1] in enth
            ),
            key=eaf.pair_key,
        )
        if not changed:
            results.append(AcceptabilityResult(entry, True, {}, None))
            continue
        involved = [
            aid for aid in eaf.ids if aid in enth and any(aid in p for p in changed)
        ]
        candidates = {
            aid: _witness_candidates(amap[aid], base, pool, max_added)
            for aid in involved
        }
        witness = _search_witness(involved, candidates, changed, entry.af.attacks, amap)
        if witness is not None:
            changed_only = {
                aid: c
                for aid, c in witness.items()
                if (c.added_support, c.full_claim)
                != (amap[aid].added_support, amap[aid].full_claim)
            }
            results.append(AcceptabilityResult(entry, True, changed_only, None))
        else:
            reason = _diagnose(changed, entry.af.attacks, amap, candidates, enth)
            results.append(AcceptabilityResult(entry, False, {}, reason))
    return results


def _witness_candidates(
    arg: StructuredArgument,
    base: Sequence[Formula],
    pool: Sequence[Formula],
    max_added: int,
) -> list[StructuredArgument]:
    out = [arg]
    bare = StructuredArgument.enthymeme(arg.id, arg.fixed_support, arg.fixed_claim)
    for c in complete_enthymeme(bare, base, pool, max_added):
        if not c.added_support and c.full_claim == c.fixed_claim:
            continue
        if (c.added_support, c.full_claim) == (arg.added_support, arg.full_claim):
            continue
        if not added_support_is_tight(c):
            continue
        out.append(c)
    return out


def _search_witness(involved, candidates, changed, new_attacks, amap):
    assignment: dict[str, StructuredArgument] = {}

    def resolve(aid: str) -> StructuredArgument | None:
        if aid in assignment:
            return assignment[aid]
        if aid in candidates:
            return None
        return amap[aid]

    def pair_ok(pair) -> bool:
        x = resolve(pair[0])
        y = resolve(pair[1])
        if x is None or y is None:
            return True
        consistent = is_consistent(list(x.content) + list(y.content))
        return not consistent if pair in new_attacks else consistent

    def rec(i: int):
        if i == len(involved):
            return dict(assignment)
        aid = involved[i]
        for cand in candidates[aid]:
            assignment[aid] = cand
            if all(pair_ok(p) for p in changed if aid in p):
                found = rec(i + 1)
                if found is not None:
                    return found
            del assignment[aid]
        return None

    return rec(0)


def _diagnose(changed, new_attacks, amap, candidates, enth) -> str:
    for pair in changed:
        if pair in new_attacks:
            continue
        x, y = amap[pair[0]], amap[pair[1]]
        fix_joint = list(fixed_part(x)) + list(fixed_part(y))
        if not is_consistent(fix_joint):
            conflict_x = minimal_conflict_subsets(fixed_part(x), fixed_part(y))
            conflict_y = minimal_conflict_subsets(fixed_part(y), fixed_part(x))
            return (
                f"attack ({pair[0]},{pair[1]}): removed, but the fixed parts alone "
                f"conflict ({format_formula_set(conflict_x[0])} of {pair[0]} against "
                f"{format_formula_set(conflict_y[0])} of {pair[1]}); no recompletion "
                f"can restore consistency"
            )
    for aid, cands in candidates.items():
        if len(cands) > 1:
            continue
        only = cands[0]
        for pair in changed:
            if aid not in pair:
                continue
            other_id = pair[1] if pair[0] == aid else pair[0]
            if other_id != aid and other_id in candidates:
                continue
            other = only if other_id == aid else amap[other_id]
            joint = list(only.content) + list(other.content)
            ok = (
                not is_consistent(joint)
                if pair in new_attacks
                else is_consistent(joint)
            )
            if not ok:
                return (
                    f"attack ({pair[0]},{pair[1]}): cannot be justified; no proper "
                    f"recompletion of {aid} is available from the belief base"
                )
    return (
        "no joint recompletion of "
        + ", ".join(sorted(candidates))
        + " matches the changed attacks"
    )
