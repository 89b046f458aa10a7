"""Rendering and serialization: matrix text, DIMACS, TPTP, JSON records.

Formats are deterministic down to the byte for a fixed input.  DIMACS
numbering is handed in explicitly through an AtomNumbering so callers
control the variable order; rectangles number row i as variable i.
"""

from __future__ import annotations

import json
import re
from typing import Iterable

from .errors import (
    CapExceededError,
    MalformedRecordError,
    RectAtgError,
    SchemaMismatchError,
    UnnumberedAtomError,
)
from .logic import (
    Atom,
    ClauseSet,
    Constant,
    Function,
    Literal,
    Pred,
    Prop,
    Term,
    Variable,
    collect_atoms,
)
from .parser import validate_generation_set
from .rectangle import Rectangle
from .template import DEFAULT_MAX_LEVEL
from .theoremgen import (
    LiteralConjunction,
    Theorem,
    generate_theorem_with_partition,
)

SCHEMA_VERSION = 1

_TPTP_LOWER_WORD = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class AtomNumbering:
    """Bijection between atoms and DIMACS variables 1..n."""

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Iterable[Atom]):
        self.atoms: tuple[Atom, ...] = tuple(atoms)
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("atom numbering must not repeat atoms")
        self._index = {atom: i + 1 for i, atom in enumerate(self.atoms)}

    @classmethod
    def from_rectangle(cls, rect: Rectangle) -> "AtomNumbering":
        return cls(lit.atom for lit in rect.generators)

    @classmethod
    def from_clause_set(cls, clause_set: ClauseSet) -> "AtomNumbering":
        return cls(collect_atoms(clause_set))

    def number(self, atom: Atom) -> int:
        try:
            return self._index[atom]
        except KeyError:
            raise UnnumberedAtomError(f"atom {atom} has no number") from None

    def atom(self, number: int) -> Atom:
        if not 1 <= number <= len(self.atoms):
            raise UnnumberedAtomError(f"no atom numbered {number}")
        return self.atoms[number - 1]

    def __len__(self) -> int:
        return len(self.atoms)


def render_matrix(rect: Rectangle) -> str:
    """Aligned literal grid, one line per row, negation rendered as ¬.

    Cells are padded to their column's width and joined with two spaces,
    so columns stay readable even when first-order cells contain single
    spaces of their own.
    """
    cells = [[str(lit) for lit in row] for row in rect.rows]
    widths = [max(len(cell) for cell in col) for col in zip(*cells)]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in cells
    )


def export_dimacs(clause_set: ClauseSet, numbering: AtomNumbering) -> str:
    """DIMACS CNF text: header line, then one zero-terminated line per clause.

    Propositional sets are emitted bare.  If any atom is a predicate, a
    comment block up front maps each variable number to its atom text.
    """
    lines = []
    if any(isinstance(atom, Pred) for atom in numbering.atoms):
        for i, atom in enumerate(numbering.atoms, start=1):
            lines.append(f"c {i} {atom}")
    lines.append(f"p cnf {len(numbering)} {len(clause_set)}")
    # Rectangles reuse one literal object per row and polarity, so an
    # identity cache spares re-hashing nested atoms on every cell.
    token_cache: dict[int, str] = {}
    for clause in clause_set:
        parts = []
        for lit in clause.literals:
            token = token_cache.get(id(lit))
            if token is None:
                number = numbering.number(lit.atom)
                token = f"-{number}" if lit.negated else str(number)
                token_cache[id(lit)] = token
            parts.append(token)
        parts.append("0")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def _tptp_name(name: str) -> str:
    # TPTP reads a leading-uppercase word as a variable, so anything
    # else gets single quotes.
    return name if _TPTP_LOWER_WORD.match(name) else f"'{name}'"


def _tptp_term(term: Term) -> str:
    if isinstance(term, Variable):
        return term.name[0].upper() + term.name[1:]
    if isinstance(term, Constant):
        return _tptp_name(term.name)
    return f"{_tptp_name(term.name)}({','.join(_tptp_term(a) for a in term.args)})"


def _tptp_atom(atom: Atom) -> str:
    if isinstance(atom, Prop):
        return _tptp_name(atom.name)
    if atom.predicate == "=":
        return f"{_tptp_term(atom.args[0])} = {_tptp_term(atom.args[1])}"
    if not atom.args:
        return _tptp_name(atom.predicate)
    return f"{_tptp_name(atom.predicate)}({','.join(_tptp_term(a) for a in atom.args)})"


def _tptp_literal(lit: Literal) -> str:
    rendered = _tptp_atom(lit.atom)
    return f"~{rendered}" if lit.negated else rendered


def _tptp_clause(clause) -> str:
    parts = [_tptp_literal(l) for l in clause.literals]
    return parts[0] if len(parts) == 1 else f"({' | '.join(parts)})"


def _collect_variables(term: Term, seen: dict[str, None]) -> None:
    if isinstance(term, Variable):
        seen.setdefault(term.name, None)
    elif isinstance(term, Function):
        for arg in term.args:
            _collect_variables(arg, seen)


def _conjecture_formula(theorem: Theorem) -> str:
    conclusion = theorem.conclusion
    if isinstance(conclusion, LiteralConjunction):
        parts = [_tptp_literal(l) for l in conclusion.literals]
        body = parts[0] if len(parts) == 1 else f"({' & '.join(parts)})"
        literals = conclusion.literals
    else:
        parts = [_tptp_clause(c) for c in conclusion.clauses]
        body = f"~({' & '.join(parts)})"
        literals = tuple(l for c in conclusion.clauses for l in c.literals)
    seen: dict[str, None] = {}
    for lit in literals:
        if isinstance(lit.atom, Pred):
            for arg in lit.atom.args:
                _collect_variables(arg, seen)
    if seen:
        bound = ", ".join(name[0].upper() + name[1:] for name in seen)
        return f"! [{bound}] : {body if body.startswith('(') else f'({body})'}"
    return body


def export_tptp(theorem: Theorem) -> str:
    """TPTP problem text: premises as cnf axioms, conclusion as fof conjecture.

    Axiom names run premise_0001 upward.  Clause variables stay free
    (cnf reads them as universally quantified); the fof conjecture is
    closed with an explicit universal block when variables occur.
    """
    width = max(4, len(str(len(theorem.premises))))
    lines = [
        f"cnf(premise_{i:0{width}d}, axiom, {_tptp_clause(clause)})."
        for i, clause in enumerate(theorem.premises, start=1)
    ]
    lines.append(f"fof(conclusion, conjecture, {_conjecture_formula(theorem)}).")
    return "\n".join(lines) + "\n"


def render_theorem(theorem: Theorem) -> str:
    """Plain text: one premise per line, then the turnstile line."""
    lines = [str(clause) for clause in theorem.premises]
    lines.append(f"⊢ {theorem.conclusion}")
    return "\n".join(lines) + "\n"


def _term_to_json(term: Term):
    if isinstance(term, Constant):
        return {"kind": "const", "name": term.name}
    if isinstance(term, Variable):
        return {"kind": "var", "name": term.name}
    return {
        "kind": "func",
        "name": term.name,
        "args": [_term_to_json(a) for a in term.args],
    }


def _term_from_json(data) -> Term:
    kind = data["kind"]
    if kind == "const":
        return Constant(data["name"])
    if kind == "var":
        return Variable(data["name"])
    if kind == "func":
        return Function(data["name"], tuple(_term_from_json(a) for a in data["args"]))
    raise ValueError(f"unknown term kind {kind!r}")


def _literal_to_json(lit: Literal):
    atom = lit.atom
    if isinstance(atom, Prop):
        atom_data = {"kind": "prop", "name": atom.name}
    else:
        atom_data = {
            "kind": "pred",
            "symbol": atom.predicate,
            "args": [_term_to_json(a) for a in atom.args],
        }
    return {"negated": lit.negated, "atom": atom_data}


def _literal_from_json(data) -> Literal:
    atom_data = data["atom"]
    kind = atom_data["kind"]
    if kind == "prop":
        atom: Atom = Prop(atom_data["name"])
    elif kind == "pred":
        atom = Pred(
            atom_data["symbol"],
            tuple(_term_from_json(a) for a in atom_data["args"]),
        )
    else:
        raise ValueError(f"unknown atom kind {kind!r}")
    negated = data["negated"]
    if not isinstance(negated, bool):
        raise ValueError("negated must be a boolean")
    return Literal(atom, negated)


def save_record(theorem: Theorem) -> str:
    """Versioned JSON form of a theorem.

    Generators are stored structurally (so variable/constant identity
    survives without a parser flag); premises and conclusion are stored
    as display text for the reader and re-derived on load.
    """
    record = {
        "version": SCHEMA_VERSION,
        "generators": [_literal_to_json(l) for l in theorem.provenance.generators],
        "removed_indices": list(theorem.provenance.removed_indices),
        "premises": [str(c) for c in theorem.premises],
        "conclusion": str(theorem.conclusion),
    }
    return json.dumps(record, ensure_ascii=False, indent=2) + "\n"


def load_record(text: str, max_level: int = DEFAULT_MAX_LEVEL) -> Theorem:
    """Parse a record and revalidate it by rebuilding from provenance.

    The generators and removed indices are replayed through theorem
    generation; if the stored premises or conclusion disagree with the
    reconstruction, the record is rejected as malformed.  Only cap
    violations escape as themselves.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedRecordError(f"record is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise MalformedRecordError("record must be a JSON object")
    version = data.get("version")
    if version != SCHEMA_VERSION:
        raise SchemaMismatchError(
            f"record version {version!r} is not supported (expected {SCHEMA_VERSION})"
        )
    for key in ("generators", "removed_indices", "premises", "conclusion"):
        if key not in data:
            raise MalformedRecordError(f"record is missing the {key!r} field")
    try:
        literals = [_literal_from_json(item) for item in data["generators"]]
        generators = validate_generation_set(literals)
        indices = [int(i) for i in data["removed_indices"]]
        theorem = generate_theorem_with_partition(generators, indices, max_level)
    except CapExceededError:
        raise
    except (RectAtgError, ValueError, TypeError, KeyError) as exc:
        raise MalformedRecordError(f"provenance does not rebuild: {exc}") from exc
    premises = [str(c) for c in theorem.premises]
    if data["premises"] != premises or data["conclusion"] != str(theorem.conclusion):
        raise MalformedRecordError(
            "stored premises or conclusion disagree with reconstruction from provenance"
        )
    return theorem
