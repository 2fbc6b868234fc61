import random

import pytest

from trisep import (
    Clause,
    ClauseSet,
    Constant,
    Variable,
    clause_set,
    is_standard_contradiction,
    is_unsatisfiable_bruteforce,
    neg,
    pos,
    propositional_shadow,
    shadow_contradiction_check,
    standard_contradiction_counterexample,
    verify_model,
)
from trisep.errors import OracleError
from trisep.oracle import find_model_bruteforce, ground_fresh
from conftest import fn, random_clause_list


def clauses(*literal_lists):
    return [Clause(i + 1, lits) for i, lits in enumerate(literal_lists)]


def test_standard_contradiction_worked_four_clause_case(ex41):
    assert is_standard_contradiction(list(ex41.clauses))


def test_standard_contradiction_trivial_cases():
    assert is_standard_contradiction(clauses([pos("p")], [neg("p")]))
    assert not is_standard_contradiction(clauses([pos("p")], [pos("q")]))


def test_counterexample_is_first_pair_free_tuple():
    found = standard_contradiction_counterexample(
        clauses([pos("p"), pos("q")], [pos("r")]))
    assert found == (pos("p"), pos("r"))


def test_standard_contradiction_rejects_non_ground_and_empty():
    with pytest.raises(OracleError):
        is_standard_contradiction(clauses([pos("P", Variable("x"))]))
    with pytest.raises(OracleError):
        is_standard_contradiction(clauses([pos("p")], []))


def test_bruteforce_on_worked_sets(ex41, ex43):
    assert is_unsatisfiable_bruteforce(ex41)
    assert is_unsatisfiable_bruteforce(ex43)
    assert not is_unsatisfiable_bruteforce(clause_set([[pos("p")]]))


def test_bruteforce_rejects_first_order_input():
    fol = ClauseSet([Clause(1, [pos("P", Constant("a"))])])
    with pytest.raises(OracleError):
        is_unsatisfiable_bruteforce(fol)


def test_bruteforce_variable_cap():
    wide = clause_set([[neg(f"v{i}")] for i in range(30)])
    with pytest.raises(OracleError):
        is_unsatisfiable_bruteforce(wide)
    # raising the cap admits the sweep; all-false satisfies immediately
    assert not is_unsatisfiable_bruteforce(wide, variable_cap=30)


def test_verify_model_basic():
    s = clause_set([[pos("p1")], [neg("p1"), pos("p4")]])
    # brute force over the 4 assignments confirms this is the model family
    assert verify_model(s, {"p1": True, "p4": True})
    assert not verify_model(s, {"p1": True, "p4": False})
    assert not verify_model(clause_set([[pos("p")]]), {"p": False})


def test_verify_model_empty_clause_and_coverage():
    with_empty = ClauseSet([Clause(1, [pos("p")]), Clause(2, [])])
    assert not verify_model(with_empty, {"p": True})
    with pytest.raises(OracleError):
        verify_model(clause_set([[pos("p"), pos("q")]]), {"p": True})


def test_verify_model_implies_satisfiable():
    rng = random.Random(5)
    names = [f"v{i}" for i in range(5)]
    for _ in range(100):
        lits_lists = [[(pos if rng.random() < 0.5 else neg)(rng.choice(names))
                       for _ in range(rng.randint(1, 3))]
                      for _ in range(rng.randint(1, 6))]
        s = clause_set(lits_lists)
        model = find_model_bruteforce(s)
        if model is not None:
            assert verify_model(s, model)
            assert not is_unsatisfiable_bruteforce(s)


def test_propositional_shadow_bijection():
    a = Constant("a")
    cs = clauses([pos("P3", fn("f", a))], [neg("P3", a)])
    shadow = propositional_shadow(cs)
    assert [[str(l) for l in c.literals] for c in shadow] == [["a1"], ["~a2"]]

    same_atom = clauses([pos("P", a)], [neg("P", a)])
    shadow2 = propositional_shadow(same_atom)
    assert shadow2[0].literals[0].predicate == shadow2[1].literals[0].predicate


def test_propositional_shadow_empty_and_non_ground():
    assert propositional_shadow([]) == []
    with pytest.raises(OracleError):
        propositional_shadow(clauses([pos("P", Variable("x"))]))


def test_shadow_check_on_instantiated_first_order_columns():
    # the three inside parts of the worked first-order table, grounded at one
    # fresh constant for the shared variable; enumerating the literal tuples
    # by hand gives 1*2*1 = 2 tuples, each holding a complementary pair
    x31 = Variable("x31")
    cols = clauses(
        [neg("P5", x31)],
        [pos("P4", x31), pos("P5", x31)],
        [neg("P4", x31)],
    )
    assert shadow_contradiction_check(cols)
    grounded = ground_fresh(cols)
    assert is_standard_contradiction(propositional_shadow(grounded))


def test_ground_fresh_uses_one_constant_per_variable():
    cols = clauses([pos("P", Variable("x"), Variable("y"))])
    grounded = ground_fresh(cols)
    args = grounded[0].literals[0].args
    assert args[0] != args[1]


def test_substitution_invariance_of_standard_contradictions():
    # consistent renaming of atoms preserves the contradiction property
    rng = random.Random(12)
    base = clauses([pos("p"), pos("q")], [neg("p"), pos("q")], [neg("q")])
    assert is_standard_contradiction(base)
    for _ in range(20):
        mapping = {"p": rng.choice(["p", "r", "s"]), "q": rng.choice(["q", "t"])}
        renamed = [Clause(c.id, [type(l)(l.positive, mapping[l.predicate]) for l in c.literals])
                   for c in base]
        assert is_standard_contradiction(renamed)


def test_tuple_check_agrees_with_truth_table_both_directions():
    rng = random.Random(99)
    for _ in range(300):
        cs = random_clause_list(rng)
        tuple_side = is_standard_contradiction(cs)
        table_side = is_unsatisfiable_bruteforce(
            ClauseSet([Clause(i + 1, c.literals) for i, c in enumerate(cs)]))
        assert tuple_side == table_side
