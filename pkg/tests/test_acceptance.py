"""End-to-end acceptance checks, one test per criterion.

Every expected value is either frozen from an independent derivation or
re-certified at runtime by the set-based oracles in conftest (which share no
code with the bitmask kernels or the revision search).  All comparisons are
exact: integer distances, set equality, zero tolerance.
"""

import random
from itertools import combinations

from argent import (
    ATT_ONLY,
    ATT_WEIGHTED,
    ArgumentationFramework,
    AttAccVocabulary,
    DALAL,
    And,
    Interpretation,
    Not,
    TRUE,
    Var,
    Vocabulary,
    acceptable_afs,
    canonical_model,
    classify_attacks,
    dalal_revise,
    emit_stable_encoding,
    entails,
    fixed_part,
    hamming,
    involved_parts,
    models,
    parse_formula,
    parse_formula_lines,
    parse_goal,
    revise_af,
    revise_eaf,
    satisfies_theory,
    skeptical_accepted,
    stable_extensions,
)
from argent.prop import conj, neg
from conftest import (
    DATA,
    oracle_acceptance,
    oracle_minimal_conflicts,
    oracle_revision_solutions,
)

p = parse_formula


# -- criterion 1 -------------------------------------------------------------

def test_criterion_1_dalal_example():
    """Revising the background formula yields exactly {a,c}; the distance table
    between the six models of phi and the two models of alpha is reproduced
    row for row with exact integers."""
    v = Vocabulary.of("a", "b", "c", "d")
    phi = p("((a & b) | (!a & c) | !(b | (a & c))) & !d")
    alpha = p("a & !b & c")

    table = {
        frozenset(): (2, 3),
        frozenset({"a"}): (1, 2),
        frozenset({"c"}): (1, 2),
        frozenset({"a", "b"}): (2, 3),
        frozenset({"b", "c"}): (2, 3),
        frozenset({"a", "b", "c"}): (1, 2),
    }
    phi_models = models(phi, v)
    assert {m.true_set for m in phi_models} == set(table)
    col_ac = Interpretation(v, frozenset({"a", "c"}))
    col_acd = Interpretation(v, frozenset({"a", "c", "d"}))
    for row in phi_models:
        assert (hamming(row, col_ac), hamming(row, col_acd)) == table[row.true_set]

    result = dalal_revise(phi, alpha, v)
    assert [m.true_set for m in result] == [frozenset({"a", "c"})]


# -- criterion 2 -------------------------------------------------------------

def test_criterion_2_stable_semantics(f1, f2, f3):
    assert stable_extensions(f1).as_sets() == {
        frozenset({"x", "z"}), frozenset({"y", "t"}),
    }
    assert stable_extensions(f2).as_sets() == {
        frozenset({"x", "u"}), frozenset({"y", "u"}),
    }
    report = skeptical_accepted(f3.to_af())
    assert report.accepted == {"e2", "d1"}
    assert not report.vacuous


# -- criterion 3 -------------------------------------------------------------

def test_criterion_3_constrained_af_revision(f1, f2):
    enc = AttAccVocabulary(f1.arguments)
    goal = parse_goal("acc(u)", enc)
    constraint = parse_goal("att(t,u) & att(z,u)", enc)

    def admits(attacks, accepted, vacuous):
        return (
            "u" in accepted
            and ("t", "u") in attacks
            and ("z", "u") in attacks
        )

    solutions = oracle_revision_solutions(f1, admits, max_radius=2)
    radii = {r for r, _, _ in solutions}
    assert radii and min(radii) == 2  # no 0- or 1-flip solution exists
    oracle_at_two = {atts for r, atts, _ in solutions if r == 2}
    assert f2.attacks in oracle_at_two

    att_only = revise_af(f1, goal, constraint, mode=ATT_ONLY)
    assert f2.attacks in att_only.attack_sets()
    assert att_only.attack_sets() == oracle_at_two

    dalal = revise_af(f1, goal, constraint, mode=DALAL)
    assert f2.attacks in dalal.attack_sets()
    # oracle fixes the dalal-minimal subset by total (att + acc) flips;
    # radius-3 solutions cannot reach total 3 because acc_u must flip
    acc0, _ = oracle_acceptance(f1.arguments, f1.attacks)
    totals = {
        atts: r + len(acc ^ acc0)
        for r, atts, acc in solutions
    }
    best_total = min(totals.values())
    assert best_total == 3
    assert dalal.attack_sets() == {a for a, t in totals.items() if t == best_total}

    for out in (att_only, dalal):
        for entry in out:
            assert len(entry.att_added) + len(entry.att_removed) == 2
            m = canonical_model(entry.af)
            assert satisfies_theory(m)
            assert m.satisfies(goal) and m.satisfies(constraint)
            assert len(stable_extensions(entry.af)) > 0


# -- criterion 4 -------------------------------------------------------------

def test_criterion_4_eaf_revision(f3):
    f4_attacks = frozenset({("d2", "d1"), ("e2", "d2")})
    f5_attacks = frozenset({("d2", "d1"), ("d1", "e1")})

    out = revise_eaf(f3, "acc(e1)", "deductive", ATT_ONLY)
    assert f4_attacks in out.attack_sets()
    assert f5_attacks in out.attack_sets()
    for entry in out:
        assert len(entry.att_added) + len(entry.att_removed) == 1

    def admits(attacks, accepted, vacuous):
        deductive_pairs = {("d1", "d1"), ("d1", "d2"), ("d2", "d2")}
        if attacks & deductive_pairs or ("d2", "d1") not in attacks:
            return False
        return "e1" in accepted

    solutions = oracle_revision_solutions(f3.to_af(), admits, max_radius=1)
    assert min(r for r, _, _ in solutions) == 1
    oracle_set = {atts for r, atts, _ in solutions if r == 1}
    # the oracle certifies a third minimal solution beyond the documented two
    assert oracle_set == {
        f4_attacks,
        f5_attacks,
        f3.declared_attacks | {("e2", "d1")},
    }
    assert out.attack_sets() == oracle_set


# -- criterion 5 -------------------------------------------------------------

MEDIA_CASES = [
    # (file, goal, goal sense, documented minimal results, exact?)
    (
        "media_a1.eaf",
        "acc(c)",
        lambda acc: "c" in acc,
        {frozenset({("a", "b")})},
        True,  # the documented pair is the exact answer
    ),
    (
        "media_a3.eaf",
        "acc(c)",
        lambda acc: "c" in acc,
        {frozenset(), frozenset({("a", "b"), ("b", "c")})},
        True,
    ),
    (
        "media_a2.eaf",
        "!acc(c)",
        lambda acc: "c" not in acc,
        {
            frozenset({("b", "c")}),
            frozenset({("a", "b"), ("b", "c"), ("a", "c")}),
        },
        False,  # documented results are a subset; the oracle fixes the full set
    ),
]


def test_criterion_5_media_agent_scenarios():
    from argent import parse_eaf

    for name, goal, sense, documented, exact in MEDIA_CASES:
        eaf = parse_eaf((DATA / name).read_text())
        out = revise_eaf(eaf, goal, "none", ATT_ONLY)

        def admits(attacks, accepted, vacuous, sense=sense):
            return sense(accepted)

        solutions = oracle_revision_solutions(eaf.to_af(), admits, max_radius=2)
        best = min(r for r, _, _ in solutions)
        oracle_set = {atts for r, atts, _ in solutions if r == best}
        assert out.attack_sets() == oracle_set
        if exact:
            assert out.attack_sets() == documented
        else:
            assert documented <= out.attack_sets()
        for entry in out:
            assert len(stable_extensions(entry.af)) > 0


# -- criterion 6 -------------------------------------------------------------

def test_criterion_6_classification(f3, f6):
    amap = f3.argument_map
    assert fixed_part(amap["e1"]) == (p("alpha"), p("gamma"))
    assert fixed_part(amap["e2"]) == (p("eta"), TRUE)

    # involved parts of the deductive pair: the d1 direction is the singleton
    # {delta}; the d2 direction contains {!delta}, with the full family fixed
    # by the subset-lattice oracle
    inv_d2 = involved_parts(amap["d2"], amap["d1"])
    inv_d1 = involved_parts(amap["d1"], amap["d2"])
    assert (p("!delta"),) in inv_d2
    assert inv_d1 == [(p("delta"),)]
    assert {frozenset(s) for s in inv_d2} == oracle_minimal_conflicts(
        amap["d2"].content, amap["d1"].content
    )
    assert {frozenset(s) for s in inv_d1} == oracle_minimal_conflicts(
        amap["d1"].content, amap["d2"].content
    )

    cls6 = classify_attacks(f6)
    assert cls6.certain == {("d3", "e3"), ("e3", "d3")}

    cls3 = classify_attacks(f3)
    assert ("e2", "d2") in cls3.questionable
    assert ("d1", "e1") in cls3.certain
    # the witness-dependent verdict is documented in the report output
    assert any(
        "(d1,e1)" in note and "outside the fixed part" in note for note in cls3.notes
    )


# -- criterion 7 -------------------------------------------------------------

def test_criterion_7_acceptability(f3):
    out = revise_eaf(f3, "acc(e1)", "deductive", ATT_ONLY)
    base = parse_formula_lines((DATA / "beliefs_completion.txt").read_text())
    pool = parse_formula_lines((DATA / "claims_completion.txt").read_text())
    results = {r.entry.af.attacks: r for r in acceptable_afs(f3, out, base, pool)}

    f5 = results[frozenset({("d2", "d1"), ("d1", "e1")})]
    assert f5.acceptable
    witness = f5.witness["e2"]
    assert witness.support == (p("eta"), p("eta -> iota"))
    assert witness.full_claim == p("iota")

    f4 = results[frozenset({("d2", "d1"), ("e2", "d2")})]
    assert not f4.acceptable
    assert "gamma" in f4.reason and "beta & !gamma" in f4.reason

    # exhaustive certification: every completion of e1 with up to 3 added
    # formulas keeps a claim entailing gamma, hence conflicts with d1
    from argent import StructuredArgument, complete_enthymeme, is_consistent

    e1 = f3.argument_map["e1"]
    d1 = f3.argument_map["d1"]
    bare = StructuredArgument.enthymeme("e1", e1.fixed_support, e1.fixed_claim)
    completions = complete_enthymeme(bare, base, pool, max_added=3)
    assert completions
    for c in completions:
        assert entails([c.full_claim], p("gamma"))
        assert not is_consistent(list(c.content) + list(d1.content))


# -- criterion 8 -------------------------------------------------------------

def _random_formula(rng, names, depth):
    if depth == 0 or rng.random() < 0.3:
        return Var(rng.choice(names))
    k = rng.randrange(4)
    sub = lambda: _random_formula(rng, names, depth - 1)
    if k == 0:
        return Not(sub())
    if k == 1:
        return And((sub(), sub()))
    from argent import Implies, Or

    if k == 2:
        return Or((sub(), sub()))
    return Implies(sub(), sub())


def test_criterion_8a_km_postulates():
    rng = random.Random(20240809)
    names = ["a", "b", "c", "d"]
    v = Vocabulary.of(*names)
    for _ in range(200):
        phi = _random_formula(rng, names, 3)
        alpha = _random_formula(rng, names, 3)
        result = dalal_revise(phi, alpha, v)
        alpha_models = models(alpha, v)
        assert set(result) <= set(alpha_models)          # success
        assert bool(result) == bool(alpha_models)        # consistency
        joint = models(And((phi, alpha)), v)
        if joint and models(phi, v):
            assert result == joint                       # vacuity


def test_criterion_8b_faithful_assignment():
    rng = random.Random(1968)
    names = ["a", "b", "c"]
    v = Vocabulary.of(*names)
    everything = models(TRUE, v)
    for _ in range(50):
        phi = _random_formula(rng, names, 3)
        base = models(phi, v)
        if not base:
            continue
        key = {i: min(hamming(i, b) for b in base) for i in everything}
        for i in everything:
            for j in everything:
                if i.satisfies(phi) and j.satisfies(phi):
                    assert key[i] == key[j] == 0
                if i.satisfies(phi) and not j.satisfies(phi):
                    assert key[i] < key[j]
        # logically equivalent formulas induce the identical preorder
        for variant in (Not(Not(phi)), And((phi, phi)), And((phi, TRUE))):
            base2 = models(variant, v)
            assert {i: min(hamming(i, b) for b in base2) for i in everything} == key


def test_criterion_8c_emit_encoding_all_two_argument_afs():
    args = ("a", "b")
    enc = AttAccVocabulary(args)
    pairs = enc.pairs
    for bits in range(16):
        attacks = frozenset(pairs[i] for i in range(4) if (bits >> i) & 1)
        af = ArgumentationFramework(args, attacks)
        found = models(emit_stable_encoding(af), enc.vocabulary)
        assert found == [canonical_model(af)]


def test_criterion_8d_defeater_subset_refutation():
    from argent import StructuredArgument, is_defeater

    rng = random.Random(1202)
    names = ["a", "b", "c"]
    for _ in range(100):
        support = [_random_formula(rng, names, 2) for _ in range(rng.randrange(1, 7))]
        claim = _random_formula(rng, names, 2)
        attacker = StructuredArgument.deductive("x", (claim,), claim)
        target = StructuredArgument.enthymeme("y", tuple(support), TRUE)
        by_subsets = any(
            entails([claim], neg(conj(subset)))
            for r in range(1, len(support) + 1)
            for subset in combinations(support, r)
        )
        assert is_defeater(attacker, target) == by_subsets


def test_criterion_8e_outcome_revalidation():
    rng = random.Random(60606)
    for _ in range(10):
        args = ("a", "b", "c")
        attacks = frozenset(
            (args[rng.randrange(3)], args[rng.randrange(3)])
            for _ in range(rng.randrange(4))
        )
        af = ArgumentationFramework(args, attacks)
        enc = AttAccVocabulary(args)
        target = rng.choice(args)
        positive = rng.random() < 0.5
        goal = parse_goal(f"acc({target})" if positive else f"!acc({target})", enc)

        def admits(atts, accepted, vacuous):
            return (target in accepted) == positive

        solutions = oracle_revision_solutions(af, admits, max_radius=3)
        acc0, _ = oracle_acceptance(args, attacks)
        scored = [(r, atts, len(acc ^ acc0)) for r, atts, acc in solutions]
        for mode in (DALAL, ATT_WEIGHTED, ATT_ONLY):
            out = revise_af(af, goal, mode=mode)
            for entry in out:
                m = canonical_model(entry.af)
                assert satisfies_theory(m)
                assert m.satisfies(goal)
                assert len(stable_extensions(entry.af)) > 0
                assert entry.af.attacks ^ af.attacks == entry.att_added | entry.att_removed
            if not out:
                assert not solutions
                continue
            best_radius = min(r for r, _, _ in scored)
            at_best = [(atts, acc) for r, atts, acc in scored if r == best_radius]
            if mode == ATT_ONLY:
                assert out.attack_sets() == {atts for atts, _ in at_best}
            elif mode == ATT_WEIGHTED:
                best_acc = min(acc for _, acc in at_best)
                assert out.attack_sets() == {
                    atts for atts, acc in at_best if acc == best_acc
                }
            else:  # dalal minimizes total flips, which can mix att radii
                best_total = min(r + acc for r, _, acc in scored)
                assert {e.total_weight for e in out} == {best_total}
                if best_total <= 3:  # oracle radius covers every tying solution
                    assert out.attack_sets() == {
                        atts for r, atts, acc in scored if r + acc == best_total
                    }
