"""Shifted tableau crystals: words, walks, coplactic operators, jdt, graphs."""

from .errors import IntegrityError, SchemaError
from .backend import backend_name
from .words import Letter, Word, canonicalize, equivalent, representatives, weight, \
    standardize, destandardize, restrict, canonical_words
from .walks import walk, endpoint, is_ballot, rect_shape, walk_svg
from .operators import OperatorKind, f, e, f_prime, e_prime, \
    critical_substrings, final_critical
from .tableaux import ShiftedShape, Tableau, enumerate_tableaux, reading_word, \
    skew_word_tableau
from .jdt import slide, anti_slide, rectify, inner_corners, is_littlewood_richardson
from .qpoly import QPolynomial
from .crystal import CrystalGraph, build, generating_function, lr_coefficients
from .axioms import AbstractGraph, load_graph, check_axioms, certify_component

__version__ = "0.1.0"

__all__ = [
    "IntegrityError", "SchemaError", "backend_name",
    "Letter", "Word", "canonicalize", "equivalent", "representatives",
    "weight", "standardize", "destandardize", "restrict", "canonical_words",
    "walk", "endpoint", "is_ballot", "rect_shape", "walk_svg",
    "OperatorKind", "f", "e", "f_prime", "e_prime",
    "critical_substrings", "final_critical",
    "ShiftedShape", "Tableau", "enumerate_tableaux", "reading_word",
    "skew_word_tableau",
    "slide", "anti_slide", "rectify", "inner_corners",
    "is_littlewood_richardson",
    "QPolynomial",
    "CrystalGraph", "build", "generating_function", "lr_coefficients",
    "AbstractGraph", "load_graph", "check_axioms", "certify_component",
    "__version__",
]
