"""Weakly distance-regular digraphs and P-polynomial association schemes."""

from ._core import (
    AssociationScheme,
    Digraph,
    Ordering,
    PPolyProfile,
    attached_scheme,
    check_lemmas,
    circulant,
    directed_cycle,
    enumerate_valid_unions,
    find_p_poly_orderings,
    format_digraph,
    is_p_polynomial,
    is_weakly_distance_regular,
    lex_product,
    parse_digraph,
    run_cli,
    theorem_menu,
    verify_theorem,
)

__all__ = [
    "AssociationScheme",
    "Digraph",
    "Ordering",
    "PPolyProfile",
    "attached_scheme",
    "check_lemmas",
    "circulant",
    "directed_cycle",
    "enumerate_valid_unions",
    "find_p_poly_orderings",
    "format_digraph",
    "is_p_polynomial",
    "is_weakly_distance_regular",
    "lex_product",
    "parse_digraph",
    "run_cli",
    "theorem_menu",
    "verify_theorem",
]
