"""Coxeter groups, Coxeter complexes of weak intervals and linear shellability."""
from .complex import (
    FinitePoset,
    IntPolynomial,
    PureComplex,
    all_extensions_shelling,
    bruhat_poset,
    decide_linear_shellability,
    f_polynomial,
    find_shelling_order,
    gale_leq,
    h_polynomial,
    is_shelling,
    is_strong_shelling,
    linear_extensions,
    relabel,
    tail_swap,
)
from .coxcomplex import (
    build_complex,
    classify_thin,
    facet_of,
    h_by_descent_formula,
    labeling_L,
    preceq_poset,
    supports,
)
from .coxeter import (
    CoxeterSystem,
    GroupElement,
    bruhat_leq,
    new_system,
    one_line,
    parabolic_projection,
    project_left,
    project_right,
    weak_leq,
)
from .exactnum import AlgebraicNumber, bilinear_entry
from .interval import WeakInterval, check_reflection_formula, enumerate_interval, interval_descent_set

__version__ = "0.1.0"
