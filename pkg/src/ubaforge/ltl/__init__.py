from .formula import (
    Formula,
    And,
    Or,
    Not,
    Next,
    Until,
    Release,
    Finally,
    Globally,
    Implies,
    atom,
    neg_atom,
    true,
    false,
)
from .parser import FormulaSyntaxError, parse_formula, unparse, unparse_prefix
from .normal import to_pnf, negate_pnf, is_pnf
from .simplify import simplify, conj, disj, operands, mk_and, mk_or, mk_next, mk_until
from .fragments import (
    FormulaClass,
    FragmentError,
    classify,
    decompose_disjunction_free,
    goal,
    is_disjunction_free,
    is_purely_universal,
)

__all__ = [
    "Formula",
    "And",
    "Or",
    "Not",
    "Next",
    "Until",
    "Release",
    "Finally",
    "Globally",
    "Implies",
    "atom",
    "neg_atom",
    "true",
    "false",
    "FormulaSyntaxError",
    "parse_formula",
    "unparse",
    "unparse_prefix",
    "to_pnf",
    "negate_pnf",
    "is_pnf",
    "simplify",
    "conj",
    "disj",
    "operands",
    "mk_and",
    "mk_or",
    "mk_next",
    "mk_until",
    "FormulaClass",
    "FragmentError",
    "classify",
    "decompose_disjunction_free",
    "goal",
    "is_disjunction_free",
    "is_purely_universal",
]
