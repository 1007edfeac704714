"""Propositional encoding of frameworks over att/acc variables.

For arguments x1..xn the vocabulary holds `att_<x>_<y>` for every ordered pair
(source-major order) followed by `acc_<x>` for every argument.  Variable names
are resolved through the constructed bijection, never by splitting on
underscores, so argument identifiers may themselves contain underscores; sets
of identifiers whose mangled names collide (e.g. `a` next to `a_a`) are
rejected at construction.

The acceptance theory is treated semantically: an interpretation satisfies it
iff its acc variables equal the skeptical acceptance (vacuous convention
included) of the framework decoded from its att variables.  Only
:func:`emit_stable_encoding` builds the theory as an explicit formula, and only
for tiny instances, since the quantifier expansion is exponential.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

from . import kernels
from .af import ArgumentationFramework, skeptical_accepted
from .errors import ResourceLimitError, VocabularyMismatchError
from .prop import (
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Interpretation,
    Not,
    Var,
    Vocabulary,
    conj,
    evaluate,
    neg,
    substitute,
    variables,
)

EMIT_ARGUMENT_LIMIT = 4
FREE_ATT_LIMIT = 25


class AttAccVocabulary:
    """The att/acc variable space for a fixed argument sequence."""

    def __init__(self, arguments: Sequence[str]):
        self.arguments = tuple(arguments)
        n = len(self.arguments)
        self.pairs = [(x, y) for x in self.arguments for y in self.arguments]
        self.att_names = tuple(f"att_{x}_{y}" for x, y in self.pairs)
        self.acc_names = tuple(f"acc_{x}" for x in self.arguments)
        names = self.att_names + self.acc_names
        if len(set(names)) != n * n + n:
            raise ValueError(
                "att/acc variable names collide for these argument identifiers"
            )
        self.vocabulary = Vocabulary(names)
        self._att_index = {name: p for p, name in enumerate(self.att_names)}
        self._acc_index = {name: i for i, name in enumerate(self.acc_names)}

    @property
    def n(self) -> int:
        return len(self.arguments)

    def __eq__(self, other):
        return isinstance(other, AttAccVocabulary) and self.arguments == other.arguments

    def __hash__(self):
        return hash(self.arguments)

    def att_var(self, x: str, y: str) -> str:
        name = f"att_{x}_{y}"
        if name not in self._att_index:
            raise VocabularyMismatchError(f"no att variable for pair ({x},{y})")
        return name

    def acc_var(self, x: str) -> str:
        name = f"acc_{x}"
        if name not in self._acc_index:
            raise VocabularyMismatchError(f"no acc variable for argument {x!r}")
        return name

    def pair_position(self, x: str, y: str) -> int:
        return self._att_index[self.att_var(x, y)]

    def att_position(self, name: str) -> int | None:
        return self._att_index.get(name)

    def acc_position(self, name: str) -> int | None:
        return self._acc_index.get(name)

    @classmethod
    def from_vocabulary(cls, vocabulary: Vocabulary) -> "AttAccVocabulary":
        total = len(vocabulary)
        n = (math.isqrt(4 * total + 1) - 1) // 2
        if n * n + n != total:
            raise VocabularyMismatchError("vocabulary size is not of the form n*n + n")
        tail = vocabulary.names[n * n:]
        args = []
        for name in tail:
            if not name.startswith("acc_"):
                raise VocabularyMismatchError(f"expected an acc variable, got {name!r}")
            args.append(name[4:])
        enc = cls(tuple(args))
        if enc.vocabulary != vocabulary:
            raise VocabularyMismatchError("vocabulary is not an att/acc layout")
        return enc

    def model(self, attacks, accepted) -> Interpretation:
        true_set = {self.att_var(x, y) for x, y in attacks}
        true_set |= {self.acc_var(x) for x in accepted}
        return Interpretation(self.vocabulary, frozenset(true_set))


def canonical_model(af: ArgumentationFramework) -> Interpretation:
    """The unique theory model of `af`: its attacks plus its skeptical acceptance."""
    enc = AttAccVocabulary(af.arguments)
    report = skeptical_accepted(af)
    return enc.model(af.attacks, report.accepted)


def decode(m: Interpretation) -> ArgumentationFramework:
    """Framework whose attacks are exactly the true att variables of `m`."""
    enc = AttAccVocabulary.from_vocabulary(m.vocabulary)
    attacks = {pair for pair, name in zip(enc.pairs, enc.att_names) if name in m.true_set}
    return ArgumentationFramework(enc.arguments, frozenset(attacks))


def decoded_acceptance(m: Interpretation) -> frozenset[str]:
    """Arguments whose acc variable is true in `m` (structure ignored)."""
    enc = AttAccVocabulary.from_vocabulary(m.vocabulary)
    return frozenset(x for x, name in zip(enc.arguments, enc.acc_names) if name in m.true_set)


def satisfies_theory(m: Interpretation) -> bool:
    """True iff the acc variables of `m` match the skeptical acceptance of the
    framework decoded from its att variables (vacuous convention included)."""
    af = decode(m)
    return decoded_acceptance(m) == skeptical_accepted(af).accepted


def attacker_masks_from(att_mask: int, n: int) -> list[int]:
    """Kernel-ready attacker masks from a source-major att bitmask."""
    masks = [0] * n
    p = 0
    for i in range(n):
        for j in range(n):
            if (att_mask >> p) & 1:
                masks[j] |= 1 << i
            p += 1
    return masks


def att_unit_literals(constraint: Formula, enc: AttAccVocabulary):
    """Att positions pinned by unit literals of a top-level conjunction.

    Returns a position->bool mapping, or None when two units contradict.
    Acc literals and non-literal conjuncts are left for per-model evaluation.
    """
    units: dict[int, bool] = {}
    stack = [constraint]
    while stack:
        g = stack.pop()
        if isinstance(g, And):
            stack.extend(g.children)
            continue
        if isinstance(g, Var):
            name, value = g.name, True
        elif isinstance(g, Not) and isinstance(g.child, Var):
            name, value = g.child.name, False
        else:
            continue
        pos = enc.att_position(name)
        if pos is None:
            continue
        if pos in units and units[pos] != value:
            return None
        units[pos] = value
    return units


def theory_models(arguments: Sequence[str], constraint: Formula) -> Iterator[Interpretation]:
    """All theory models satisfying `constraint`, streamed in canonical order.

    Only att assignments are enumerated; acc variables are functionally
    determined by the attacks.  Att variables pinned by unit literals of the
    constraint are fixed up front; more than FREE_ATT_LIMIT remaining free att
    variables trips the resource guard.
    """
    enc = AttAccVocabulary(arguments)
    extra = variables(constraint) - set(enc.vocabulary.names)
    if extra:
        raise VocabularyMismatchError(
            f"constraint uses variables outside the att/acc vocabulary: {sorted(extra)}"
        )
    units = att_unit_literals(constraint, enc)
    if units is None:
        return
    free = [p for p in range(len(enc.pairs)) if p not in units]
    if len(free) > FREE_ATT_LIMIT:
        raise ResourceLimitError(
            f"{len(free)} free att variables exceed the limit of {FREE_ATT_LIMIT}"
        )
    n = enc.n
    base = 0
    for p, value in units.items():
        if value:
            base |= 1 << p
    width = len(free)
    for m in range(1 << width):
        att_mask = base
        for j in range(width):
            if (m >> (width - 1 - j)) & 1:
                att_mask |= 1 << free[j]
        acc_mask, _ = kernels.acceptance_mask(attacker_masks_from(att_mask, n), n)
        true_set = {enc.att_names[p] for p in range(n * n) if (att_mask >> p) & 1}
        true_set |= {enc.acc_names[i] for i in range(n) if (acc_mask >> i) & 1}
        if evaluate(constraint, true_set):
            yield Interpretation(enc.vocabulary, frozenset(true_set))


def stable_fixpoint_formula(arguments: Sequence[str]) -> Formula:
    """Fixpoint conjunct with free argument variables: an assignment to the
    argument variables satisfies it iff its true arguments form a stable
    extension of the framework read off the att variables."""
    enc = AttAccVocabulary(arguments)
    outer = []
    for y in arguments:
        inner = conj(tuple(Implies(Var(enc.att_var(z, y)), Not(Var(z))) for z in arguments))
        outer.append(Iff(Var(y), inner))
    return conj(tuple(outer))


def emit_stable_encoding(af: ArgumentationFramework) -> Formula:
    """Explicit encoding formula whose unique model is :func:`canonical_model`.

    Conjoins one literal per att variable with, for each argument, a
    biconditional equating its acc variable to the expansion of the
    universally quantified acceptance condition over all 2^n argument-variable
    assignments.  The expansion is constant-folded, which leaves the model set
    unchanged.  Guarded to at most EMIT_ARGUMENT_LIMIT arguments.
    """
    n = len(af.arguments)
    if n > EMIT_ARGUMENT_LIMIT:
        raise ResourceLimitError(
            f"{n} arguments exceed the emission limit of {EMIT_ARGUMENT_LIMIT}"
        )
    enc = AttAccVocabulary(af.arguments)
    parts: list[Formula] = []
    for x, y in enc.pairs:
        v = Var(enc.att_var(x, y))
        parts.append(v if (x, y) in af.attacks else Not(v))
    subsets = [
        [af.arguments[i] for i in range(n) if (mask >> i) & 1] for mask in range(1 << n)
    ]
    for x in af.arguments:
        conjuncts: list[Formula] = []
        for members in subsets:
            antecedent_terms: list[Formula] = []
            for y in af.arguments:
                unattacked = conj(tuple(Not(Var(enc.att_var(z, y))) for z in members))
                antecedent_terms.append(unattacked if y in members else neg(unattacked))
            antecedent = substitute(conj(tuple(antecedent_terms)), {})
            folded = _fold_implication(antecedent, Const(x in members))
            if folded != Const(True):
                conjuncts.append(folded)
        parts.append(Iff(Var(enc.acc_var(x)), conj(tuple(conjuncts))))
    return conj(tuple(parts))


def _fold_implication(antecedent: Formula, consequent: Formula) -> Formula:
    if antecedent == Const(False) or consequent == Const(True):
        return Const(True)
    if consequent == Const(False):
        return neg(antecedent)
    if antecedent == Const(True):
        return consequent
    return Implies(antecedent, consequent)
