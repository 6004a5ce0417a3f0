"""Exact facet enumeration, classification and membership for the cone
generated by triangle incidence vectors of the complete graph."""

from ._core import (
    binary_star_facet,
    canonical_form,
    classify,
    cut_facet,
    decide_membership,
    enumerate_facets,
    facet_degree,
    is_facet,
    lex_product_c4,
    metric_check,
    mod3_category,
    pair_count,
    sample_facet,
    star_facet,
    trivial_facet,
    vertex_split,
)

__all__ = [
    "binary_star_facet",
    "canonical_form",
    "classify",
    "cut_facet",
    "decide_membership",
    "enumerate_facets",
    "facet_degree",
    "is_facet",
    "lex_product_c4",
    "metric_check",
    "mod3_category",
    "pair_count",
    "sample_facet",
    "star_facet",
    "trivial_facet",
    "vertex_split",
]
