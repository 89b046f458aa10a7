import json
import re

import pytest

from rectatg import (
    AtomNumbering,
    Clause,
    ClauseSet,
    MalformedRecordError,
    Prop,
    SchemaMismatchError,
    UnnumberedAtomError,
    construct_from_template,
    export_dimacs,
    export_tptp,
    generate_theorem,
    generate_theorem_with_partition,
    load_record,
    parse_generation_set,
    parse_literal,
    remove_clauses,
    render_matrix,
    render_theorem,
    save_record,
)

from conftest import clause, clause_set, lit

DIMACS_TWO_GENERATORS = "p cnf 2 4\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n"


def rect_for(text, **kw):
    return construct_from_template(parse_generation_set(text, **kw))


def test_numbering_follows_generation_order():
    rect = rect_for("p, q, r")
    numbering = AtomNumbering.from_rectangle(rect)
    assert [numbering.number(Prop(s)) for s in "pqr"] == [1, 2, 3]
    assert numbering.atom(2) == Prop("q")
    assert len(numbering) == 3


def test_numbering_round_trips_and_rejects_strangers():
    numbering = AtomNumbering.from_clause_set(clause_set(clause("q", "p")))
    assert numbering.number(Prop("q")) == 1
    with pytest.raises(UnnumberedAtomError):
        numbering.number(Prop("z"))
    with pytest.raises(UnnumberedAtomError):
        numbering.atom(3)
    with pytest.raises(ValueError):
        AtomNumbering([Prop("p"), Prop("p")])


def test_dimacs_two_generator_fixture_is_byte_exact():
    rect = rect_for("p, q")
    got = export_dimacs(rect.clause_set(), AtomNumbering.from_rectangle(rect))
    assert got == DIMACS_TWO_GENERATORS


def test_dimacs_of_empty_clause_set():
    assert export_dimacs(ClauseSet(), AtomNumbering(())) == "p cnf 0 0\n"


def test_dimacs_after_removal():
    rect = rect_for("p, q")
    rest = remove_clauses(rect, (0,))
    got = export_dimacs(rest, AtomNumbering.from_rectangle(rect))
    assert got == "p cnf 2 3\n-1 2 0\n1 -2 0\n-1 -2 0\n"


def test_dimacs_first_order_sets_get_a_comment_map():
    rect = rect_for("P1(a), ~P2(f(x))")
    got = export_dimacs(rect.clause_set(), AtomNumbering.from_rectangle(rect))
    lines = got.splitlines()
    assert lines[0] == "c 1 P1(a)"
    assert lines[1] == "c 2 P2(f(x))"
    assert lines[2] == "p cnf 2 4"
    # Column 0 carries the generators as written, negation included.
    assert lines[3] == "1 -2 0"


def test_dimacs_rejects_atoms_outside_the_numbering():
    numbering = AtomNumbering((Prop("p"),))
    with pytest.raises(UnnumberedAtomError):
        export_dimacs(clause_set(clause("q")), numbering)


@pytest.mark.parametrize("n", range(1, 5))
def test_dimacs_shape_for_full_rectangles(n):
    rect = rect_for(", ".join(f"p{i}" for i in range(n)))
    got = export_dimacs(rect.clause_set(), AtomNumbering.from_rectangle(rect))
    lines = got.splitlines()
    assert lines[0] == f"p cnf {n} {1 << n}"
    body = [tuple(int(x) for x in line.split()[:-1]) for line in lines[1:]]
    assert len(set(body)) == 1 << n
    assert all(len(row) == n for row in body)
    assert all(abs(row[i]) == i + 1 for row in body for i in range(n))


def test_matrix_single_generator():
    out = render_matrix(rect_for("p"))
    assert out.split() == ["p", "¬p"]


def test_matrix_reparses_to_the_original_grid():
    rect = rect_for("P1(a), ~P2(f(x)), P3(g(y,a))")
    for line, row in zip(render_matrix(rect).splitlines(), rect.rows):
        cells = re.split(r" {2,}", line.strip())
        assert tuple(parse_literal(c) for c in cells) == row


def test_matrix_lines_and_columns_align():
    out = render_matrix(rect_for("w, x, y, z"))
    lines = out.splitlines()
    assert len(lines) == 4
    assert lines[0].split() == [
        "w", "¬w", "w", "¬w", "w", "¬w", "w", "¬w",
        "w", "¬w", "w", "¬w", "w", "¬w", "w", "¬w",
    ]


def test_tptp_single_generator():
    t = generate_theorem(parse_generation_set("p"))
    assert export_tptp(t) == (
        "cnf(premise_0001, axiom, ~p).\n"
        "fof(conclusion, conjecture, ~p).\n"
    )


def test_tptp_canonical_two_generators():
    t = generate_theorem(parse_generation_set("p, q"))
    assert export_tptp(t) == (
        "cnf(premise_0001, axiom, (~p | q)).\n"
        "cnf(premise_0002, axiom, (p | ~q)).\n"
        "cnf(premise_0003, axiom, (~p | ~q)).\n"
        "fof(conclusion, conjecture, (~p & ~q)).\n"
    )


def test_tptp_quotes_nonconforming_symbols_and_uppercases_variables():
    g = parse_generation_set("P1(a), ~P2(f(x)), P3(g(y,a))", var_style="lower")
    out = export_tptp(generate_theorem(g))
    assert "'P1'(a)" in out
    assert "f(X)" in out
    assert "g(Y,a)" in out
    assert out.strip().endswith(
        "fof(conclusion, conjecture, "
        "! [X, Y] : (~'P1'(a) & 'P2'(f(X)) & ~'P3'(g(Y,a))))."
    )


def test_tptp_multi_clause_hypothesis_conjecture():
    t = generate_theorem_with_partition(parse_generation_set("p, q"), (0, 1))
    out = export_tptp(t)
    assert "fof(conclusion, conjecture, ~((p | q) & (~p | q)))." in out


def test_render_theorem_text():
    t = generate_theorem(parse_generation_set("p, q"))
    assert render_theorem(t) == "¬p ∨ q\np ∨ ¬q\n¬p ∨ ¬q\n⊢ ¬p ∧ ¬q\n"


def test_record_round_trip_identity():
    for text, style, partition in (
        ("p, q", "upper", None),
        ("P1(a), ~P2(f(x)), P3(g(y,a))", "lower", None),
        ("p, q, r", "upper", (1, 5)),
    ):
        g = parse_generation_set(text, var_style=style)
        if partition is None:
            t = generate_theorem(g)
        else:
            t = generate_theorem_with_partition(g, partition)
        assert load_record(save_record(t)) == t


def test_record_fields():
    t = generate_theorem(parse_generation_set("p, q"))
    data = json.loads(save_record(t))
    assert data["version"] == 1
    assert data["removed_indices"] == [0]
    assert data["premises"] == ["¬p ∨ q", "p ∨ ¬q", "¬p ∨ ¬q"]
    assert data["conclusion"] == "¬p ∧ ¬q"
    assert [l["atom"]["name"] for l in data["generators"]] == ["p", "q"]


def test_record_distinguishes_variables_from_constants():
    g = parse_generation_set("P2(f(x))", var_style="lower")
    t = generate_theorem(g)
    reloaded = load_record(save_record(t))
    assert reloaded.provenance.generators == g
    upper = parse_generation_set("P2(f(x))", var_style="upper")
    assert reloaded.provenance.generators != upper


def test_unknown_schema_version_rejected():
    t = generate_theorem(parse_generation_set("p"))
    data = json.loads(save_record(t))
    data["version"] = 2
    with pytest.raises(SchemaMismatchError):
        load_record(json.dumps(data))


def test_malformed_json_rejected():
    with pytest.raises(MalformedRecordError):
        load_record("{not json")
    with pytest.raises(MalformedRecordError):
        load_record("[1, 2, 3]")


def test_missing_fields_rejected():
    t = generate_theorem(parse_generation_set("p"))
    data = json.loads(save_record(t))
    del data["premises"]
    with pytest.raises(MalformedRecordError):
        load_record(json.dumps(data))


def test_tampered_premises_rejected_on_revalidation():
    t = generate_theorem(parse_generation_set("p, q"))
    data = json.loads(save_record(t))
    data["premises"] = data["premises"][1:]
    with pytest.raises(MalformedRecordError):
        load_record(json.dumps(data))


def test_tampered_indices_rejected_on_revalidation():
    t = generate_theorem(parse_generation_set("p, q"))
    data = json.loads(save_record(t))
    data["removed_indices"] = [1]
    with pytest.raises(MalformedRecordError):
        load_record(json.dumps(data))


def test_record_with_bad_provenance_rejected():
    t = generate_theorem(parse_generation_set("p, q"))
    data = json.loads(save_record(t))
    data["removed_indices"] = [99]
    with pytest.raises(MalformedRecordError):
        load_record(json.dumps(data))
    data["removed_indices"] = []
    with pytest.raises(MalformedRecordError):
        load_record(json.dumps(data))
