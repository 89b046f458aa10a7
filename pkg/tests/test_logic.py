import pytest
from hypothesis import given
from hypothesis import strategies as st

from rectatg import (
    Clause,
    ClauseSet,
    Constant,
    EMPTY_CLAUSE,
    EmptyClauseError,
    Function,
    Literal,
    Pred,
    Prop,
    Variable,
    collect_atoms,
    complementary,
    negate_clause,
    negate_literal,
)

from conftest import clause, lit


names = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,4}", fullmatch=True)
atoms = st.one_of(
    names.map(Prop),
    st.builds(Pred, names, st.lists(names.map(Constant), max_size=2).map(tuple)),
)
literals = st.builds(Literal, atoms, st.booleans())


def test_negate_literal_flips_polarity():
    p = lit("p")
    assert negate_literal(p) == lit("p", True)
    assert negate_literal(lit("p", True)) == p


@given(literals)
def test_negate_literal_is_an_involution(l):
    assert negate_literal(negate_literal(l)) == l
    assert negate_literal(l) != l


def test_no_stacked_negation_representable():
    # Negation is a flag, so negating twice structurally collapses.
    l = Literal(Prop("p"), True)
    assert negate_literal(l).negated is False


def test_complementary():
    assert complementary(lit("p"), lit("p", True))
    assert complementary(lit("p", True), lit("p"))
    assert not complementary(lit("p"), lit("p"))
    assert not complementary(lit("p"), lit("q", True))
    fo = Literal(Pred("P1", (Constant("a"),)))
    assert complementary(fo, negate_literal(fo))
    other = Literal(Pred("P1", (Constant("b"),)), True)
    assert not complementary(fo, other)


def test_negate_clause_gives_literal_complements_in_order():
    c = clause("p", "~q")
    assert negate_clause(c) == (lit("p", True), lit("q"))


def test_negate_clause_twice_recovers_the_clause():
    c = clause("p", "~q", "r")
    again = Clause(negate_literal(l) for l in negate_clause(c))
    assert again == c


def test_negate_empty_clause_rejected():
    with pytest.raises(EmptyClauseError):
        negate_clause(EMPTY_CLAUSE)


def test_clause_equality_ignores_order():
    assert clause("p", "q") == clause("q", "p")
    assert hash(clause("p", "q")) == hash(clause("q", "p"))
    assert clause("p", "q") != clause("p")
    assert clause("p", "~q") != clause("p", "q")


def test_clause_equality_is_multiset_not_set():
    assert clause("p", "p") != clause("p")
    assert clause("p", "p", "q") == clause("q", "p", "p")


@given(st.lists(literals, min_size=1, max_size=5), st.randoms())
def test_clause_equality_under_random_shuffle(ls, rng):
    shuffled = list(ls)
    rng.shuffle(shuffled)
    assert Clause(ls) == Clause(shuffled)


def test_empty_clause_set_differs_from_set_of_empty_clause():
    assert ClauseSet() != ClauseSet([EMPTY_CLAUSE])
    assert len(ClauseSet()) == 0
    assert len(ClauseSet([EMPTY_CLAUSE])) == 1


def test_atom_structural_equality():
    assert Prop("p") == Prop("p")
    assert Prop("p") != Prop("q")
    assert Pred("P", (Constant("a"),)) == Pred("P", (Constant("a"),))
    assert Pred("P", (Constant("a"),)) != Pred("P", (Constant("b"),))
    assert Prop("p") != Pred("p")
    assert Constant("a") != Variable("a")


def test_equality_predicate_requires_arity_two():
    Pred("=", (Constant("a"), Constant("b")))
    with pytest.raises(ValueError):
        Pred("=", (Constant("a"),))
    with pytest.raises(ValueError):
        Pred("=", ())


def test_function_requires_arguments():
    with pytest.raises(ValueError):
        Function("f", ())


def test_display_forms():
    assert str(lit("p")) == "p"
    assert str(lit("p", True)) == "¬p"
    assert str(Literal(Pred("P1", (Constant("a"),)), True)) == "¬P1(a)"
    assert (
        str(Pred("P3", (Function("g", (Variable("y"), Constant("a"))),)))
        == "P3(g(y, a))"
    )
    assert str(Pred("=", (Constant("a"), Constant("b")))) == "a=b"
    assert str(clause("~p", "q")) == "¬p ∨ q"
    assert str(EMPTY_CLAUSE) == "□"


def test_collect_atoms_first_appearance_order():
    s = ClauseSet([clause("q", "p"), clause("r", "q")])
    assert collect_atoms(s) == (Prop("q"), Prop("p"), Prop("r"))
