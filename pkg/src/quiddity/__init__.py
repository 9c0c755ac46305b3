"""Exact arithmetic on SL(2,Z) words, equation solvers, and the dissection
models of their solutions."""

from .errors import InvalidDissectionError, NotASolutionError
from .matrices import ID, K, S, T, T_INV, Mat2, parse_matrix, unimodular
from .words import (
    NEG_ID_WORD,
    RewriteStep,
    S_WORD,
    T_INV_WORD,
    T_WORD,
    Word,
    apply_op_a,
    apply_op_b,
    as_word,
    eval_word,
    format_word,
    is_positive,
    letter,
    normalize_to_positive,
    normalize_with_trace,
    parse_word,
    reduce_word,
    replay_trace,
    reverse_word,
    rotate_word,
)
from .solvers import (
    TARGET_ID,
    TARGET_S,
    TARGET_T,
    EquationTarget,
    Solution,
    SolutionSet,
    check_equation,
    enumerate_solutions,
    generate_closure,
    matrix_order,
    minimal_presentation,
    minimality_criterion_ok,
    parse_target,
    positive_word_of_matrix,
)
from .dissections import (
    CcReport,
    Dissection,
    cc_triangulation_check,
    coiffee_from_t_solution,
    dissection_from_id_solution,
    dumps_dissection,
    echancree_from_s_solution,
    enumerate_dissections,
    faces_of,
    loads_dissection,
    make_dissection,
    paper_labels,
    quiddity_of,
    solution_from_dissection,
    validate,
)
from .render import RenderSpec, render

__all__ = [
    "ID", "S", "T", "T_INV", "K", "Mat2", "parse_matrix", "unimodular",
    "Word", "RewriteStep", "S_WORD", "T_WORD", "T_INV_WORD", "NEG_ID_WORD",
    "letter", "as_word", "parse_word", "format_word", "is_positive",
    "eval_word", "apply_op_a", "apply_op_b", "reduce_word", "replay_trace",
    "normalize_to_positive", "normalize_with_trace", "rotate_word",
    "reverse_word",
    "EquationTarget", "Solution", "SolutionSet", "TARGET_ID", "TARGET_S",
    "TARGET_T", "parse_target", "check_equation", "enumerate_solutions",
    "generate_closure", "matrix_order", "minimal_presentation",
    "minimality_criterion_ok", "positive_word_of_matrix",
    "Dissection", "CcReport", "make_dissection", "faces_of", "validate",
    "quiddity_of", "paper_labels", "dissection_from_id_solution",
    "echancree_from_s_solution", "coiffee_from_t_solution",
    "solution_from_dissection", "enumerate_dissections",
    "cc_triangulation_check", "dumps_dissection", "loads_dissection",
    "RenderSpec", "render",
    "NotASolutionError", "InvalidDissectionError",
]
