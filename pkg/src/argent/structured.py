"""Deductive arguments, defeaters, exhaustive graphs, and enthymemes.

A structured argument carries a transmitted (fixed) support and claim plus,
for enthymemes completed from the receiving agent's beliefs, an added support
and a possibly strengthened full claim.  The conflict-relevant content of an
argument is its whole support together with its full claim.

Certainty values are exact rationals so threshold comparisons never suffer
float noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .af import ArgumentationFramework
from .errors import ParseError, ResourceLimitError
from .prop import (
    Formula,
    ID_PATTERN,
    entails,
    format_formula,
    is_consistent,
    parse_formula,
)

DEDUCTIVE = "deductive"
ENTHYMEME = "enthymeme"

EXHAUSTIVE_BASE_LIMIT = 12


@dataclass(frozen=True)
class StructuredArgument:
    """Deductive argument or enthymeme.

    For deductive arguments the added support is empty and the full claim
    equals the fixed claim.  A completed enthymeme must have a consistent
    support entailing its full claim; the full claim always entails the fixed
    (transmitted) claim.
    """

    id: str
    kind: str
    fixed_support: tuple[Formula, ...]
    fixed_claim: Formula
    added_support: tuple[Formula, ...] = ()
    full_claim: Formula | None = None

    def __post_init__(self):
        object.__setattr__(self, "fixed_support", tuple(self.fixed_support))
        object.__setattr__(self, "added_support", tuple(self.added_support))
        if self.full_claim is None:
            object.__setattr__(self, "full_claim", self.fixed_claim)
        if not ID_PATTERN.match(self.id):
            raise ValueError(f"bad argument identifier: {self.id!r}")
        if self.kind not in (DEDUCTIVE, ENTHYMEME):
            raise ValueError(f"bad argument kind: {self.kind!r}")
        if self.kind == DEDUCTIVE:
            if self.added_support:
                raise ValueError(f"{self.id}: deductive arguments have no added support")
            if self.full_claim != self.fixed_claim:
                raise ValueError(f"{self.id}: deductive arguments have a single claim")
        if not entails([self.full_claim], self.fixed_claim):
            raise ValueError(f"{self.id}: full claim does not entail the fixed claim")
        if self.kind == ENTHYMEME and self.is_completed:
            support = list(self.support)
            if not is_consistent(support):
                raise ValueError(f"{self.id}: completed support is inconsistent")
            if not entails(support, self.full_claim):
                raise ValueError(f"{self.id}: completed support does not entail the claim")

    @classmethod
    def deductive(cls, arg_id: str, support: Iterable[Formula], claim: Formula):
        return cls(arg_id, DEDUCTIVE, tuple(support), claim)

    @classmethod
    def enthymeme(
        cls,
        arg_id: str,
        support: Iterable[Formula],
        claim: Formula,
        added: Iterable[Formula] = (),
        full_claim: Formula | None = None,
    ):
        return cls(arg_id, ENTHYMEME, tuple(support), claim, tuple(added), full_claim)

    @property
    def support(self) -> tuple[Formula, ...]:
        return self.fixed_support + self.added_support

    @property
    def content(self) -> tuple[Formula, ...]:
        """Support plus full claim, deduplicated, declaration order."""
        out: list[Formula] = []
        for f in self.support + (self.full_claim,):
            if f not in out:
                out.append(f)
        return tuple(out)

    @property
    def is_completed(self) -> bool:
        return self.kind == ENTHYMEME and (
            bool(self.added_support) or self.full_claim != self.fixed_claim
        )

    def __str__(self) -> str:
        inner = "; ".join(format_formula(f) for f in self.support)
        return f"<{{{inner}}}, {format_formula(self.full_claim)}>"


BeliefBase = Sequence[Formula]
ClaimPool = Sequence[Formula]


@dataclass
class CertaintyMap:
    """Rational certainty in [0,1] per formula; unmapped formulas default to 0."""

    values: dict[Formula, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        for f, v in self.values.items():
            if not 0 <= v <= 1:
                raise ValueError(f"certainty of {format_formula(f)} outside [0,1]: {v}")

    def value_of(self, f: Formula) -> Fraction:
        return self.values.get(f, Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "CertaintyMap":
        """Parse lines of the form `<rational in [0,1]> : <formula>`."""
        values: dict[Formula, Fraction] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.split("#", 1)[0].strip()
            if not stripped:
                continue
            head, sep, rest = stripped.partition(":")
            if not sep:
                raise ParseError("expected '<rational> : <formula>'", lineno, 1)
            try:
                value = Fraction(head.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad rational {head.strip()!r}", lineno, 1) from None
            values[parse_formula(rest)] = value
        return cls(values)


@dataclass(frozen=True)
class DeductiveReport:
    """The four deductive-argument checks with their offending items."""

    in_base: bool
    consistent: bool
    entails_claim: bool
    minimal: bool
    missing_from_base: tuple[Formula, ...] = ()
    redundant: tuple[Formula, ...] = ()

    @property
    def ok(self) -> bool:
        return self.in_base and self.consistent and self.entails_claim and self.minimal


def validate_deductive(
    support: Sequence[Formula], claim: Formula, base: BeliefBase
) -> DeductiveReport:
    """Check base membership, consistency, entailment, and support minimality.

    Minimality is leave-one-out: no single support formula may be droppable,
    which for a monotonic logic coincides with subset minimality.
    """
    support = list(support)
    base_list = list(base)
    missing = tuple(f for f in support if f not in base_list)
    consistent = is_consistent(support)
    entails_claim = entails(support, claim)
    redundant = ()
    minimal = True
    if consistent and entails_claim:
        redundant = tuple(
            f
            for i, f in enumerate(support)
            if entails(support[:i] + support[i + 1:], claim)
        )
        minimal = not redundant
    return DeductiveReport(
        in_base=not missing,
        consistent=consistent,
        entails_claim=entails_claim,
        minimal=minimal,
        missing_from_base=missing,
        redundant=redundant,
    )


def is_defeater(attacker: StructuredArgument, target: StructuredArgument) -> bool:
    """True iff the attacker's full claim is inconsistent with the target's support."""
    return not is_consistent([attacker.full_claim, *target.support])


def exhaustive_graph(
    base: BeliefBase, pool: ClaimPool, max_base: int = EXHAUSTIVE_BASE_LIMIT
) -> tuple[ArgumentationFramework, dict[str, StructuredArgument]]:
    """Every deductive argument buildable from `base` with a claim in `pool`,
    under the defeater attack relation.

    Identifiers a1, a2, ... follow enumeration order: support subsets by size
    then position, claims in pool order.
    """
    base_c: list[Formula] = []
    for f in base:
        if f not in base_c:
            base_c.append(f)
    if len(base_c) > max_base:
        raise ResourceLimitError(
            f"{len(base_c)} belief-base formulas exceed the limit of {max_base}"
        )
    pool_c: list[Formula] = []
    for f in pool:
        if f not in pool_c:
            pool_c.append(f)
    args: list[StructuredArgument] = []
    for r in range(len(base_c) + 1):
        for combo in combinations(range(len(base_c)), r):
            support = [base_c[i] for i in combo]
            if not is_consistent(support):
                continue
            for claim in pool_c:
                if validate_deductive(support, claim, base_c).ok:
                    args.append(StructuredArgument.deductive(f"a{len(args) + 1}", support, claim))
    attacks = frozenset(
        (x.id, y.id) for x in args for y in args if is_defeater(x, y)
    )
    af = ArgumentationFramework(tuple(a.id for a in args), attacks)
    return af, {a.id: a for a in args}


def make_enthymeme(
    arg: StructuredArgument, certainty: CertaintyMap, tau: Fraction
) -> StructuredArgument:
    """Transmitted form of a deductive argument: keep only support formulas
    whose certainty of being common knowledge falls below `tau`."""
    if arg.kind != DEDUCTIVE:
        raise ValueError(f"{arg.id}: only deductive arguments can be abbreviated")
    kept = tuple(f for f in arg.fixed_support if certainty.value_of(f) < tau)
    return StructuredArgument.enthymeme(arg.id, kept, arg.fixed_claim)


def is_enthymeme_for(
    candidate: tuple[Sequence[Formula], Formula], d: StructuredArgument
) -> bool:
    """True iff the candidate support is a strict structural subset of `d`'s
    support and `d`'s claim entails the candidate claim."""
    cand_support, cand_claim = candidate
    cand_set = set(cand_support)
    full_set = set(d.support)
    if not (cand_set < full_set):
        return False
    return entails([d.full_claim], cand_claim)


def complete_enthymeme(
    e: StructuredArgument,
    base: BeliefBase,
    pool: ClaimPool,
    max_added: int = 3,
    strict: bool = False,
) -> list[StructuredArgument]:
    """All completions of `e` from `base` with claims in `pool` or the fixed claim.

    A completion adds a support set of at most `max_added` base formulas such
    that the whole support is consistent and entails the chosen full claim,
    which in turn entails the transmitted claim.  Results are ordered by added
    set size, then position, with pool claims tried before the fixed claim.
    With `strict` set, completions must also pass the consistency, entailment
    and minimality checks of deductive arguments (base membership excepted,
    since the transmitted part comes from another agent).
    """
    base_c: list[Formula] = []
    for f in base:
        if f not in base_c and f not in e.fixed_support:
            base_c.append(f)
    claims: list[Formula] = []
    for f in list(pool) + [e.fixed_claim]:
        if f not in claims:
            claims.append(f)
    out: list[StructuredArgument] = []
    for r in range(min(max_added, len(base_c)) + 1):
        for combo in combinations(range(len(base_c)), r):
            psi = tuple(base_c[i] for i in combo)
            support = list(e.fixed_support) + list(psi)
            if not is_consistent(support):
                continue
            for beta in claims:
                if not entails(support, beta) or not entails([beta], e.fixed_claim):
                    continue
                if strict and not _strict_ok(support, beta):
                    continue
                out.append(
                    StructuredArgument.enthymeme(
                        e.id, e.fixed_support, e.fixed_claim, psi, beta
                    )
                )
    return out


def _strict_ok(support: Sequence[Formula], claim: Formula) -> bool:
    report = validate_deductive(support, claim, support)
    return report.consistent and report.entails_claim and report.minimal


def added_support_is_tight(arg: StructuredArgument) -> bool:
    """No added formula can be dropped while the support still entails the claim."""
    fixed = list(arg.fixed_support)
    added = list(arg.added_support)
    for i in range(len(added)):
        if entails(fixed + added[:i] + added[i + 1:], arg.full_claim):
            return False
    return True
