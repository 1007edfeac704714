"""Enthymeme-aware abstract argumentation and minimal-change revision.

Layers, bottom up: propositional logic (`prop`), model-based revision
(`revision`), abstract frameworks with stable semantics (`af`), the att/acc
propositional encoding (`encoding`), framework revision (`afrev`), deductive
arguments and enthymemes (`structured`), enthymeme-based frameworks with
attack classification and acceptability (`eaf`), and the command line (`cli`).
"""

from .af import (
    AcceptanceReport,
    ArgumentationFramework,
    ExtensionSet,
    format_af,
    is_stable,
    parse_af,
    skeptical_accepted,
    stable_extensions,
)
from .afrev import (
    ATT_ONLY,
    ATT_WEIGHTED,
    DALAL,
    MODES,
    RevisionEntry,
    RevisionOutcome,
    format_outcome,
    mode_weights,
    outcome_to_dict,
    parse_goal,
    revise_af,
)
from .eaf import (
    AcceptabilityResult,
    AttackClassification,
    EnthymemeAF,
    acceptable_afs,
    classify_attacks,
    constraint_certain,
    constraint_deductive,
    fixed_part,
    involved_parts,
    parse_eaf,
    revise_eaf,
)
from .encoding import (
    AttAccVocabulary,
    canonical_model,
    decode,
    decoded_acceptance,
    emit_stable_encoding,
    satisfies_theory,
    stable_fixpoint_formula,
    theory_models,
)
from .errors import (
    ArgentError,
    ParseError,
    ResourceLimitError,
    UnknownArgumentError,
    VocabularyMismatchError,
)
from .prop import (
    And,
    Const,
    FALSE,
    Formula,
    Iff,
    Implies,
    Interpretation,
    Not,
    Or,
    TRUE,
    Var,
    Vocabulary,
    entails,
    evaluate,
    format_formula,
    format_interpretation,
    is_consistent,
    minimal_conflict_subsets,
    models,
    parse_formula,
    parse_formula_lines,
    variables,
)
from .revision import (
    DistanceProfile,
    WeightMap,
    dalal_revise,
    hamming,
    minimal_models,
    weighted_distance,
)
from .structured import (
    CertaintyMap,
    DeductiveReport,
    StructuredArgument,
    added_support_is_tight,
    complete_enthymeme,
    exhaustive_graph,
    is_defeater,
    is_enthymeme_for,
    make_enthymeme,
    validate_deductive,
)

__version__ = "0.1.0"
