"""Exact lattice-polytope toolkit: Ehrhart h*-vectors, lattice isomorphism,
Gorenstein duality, Cayley/Minkowski constructions, semigroup presentations,
and the classification of Gorenstein polytopes of degree 2."""

from ._gorpoly import (
    cayley,
    catalog_ids,
    catalog_vertices,
    check,
    classify_counts,
    decompose,
    dual,
    ehrhart_count,
    h_star,
    is_isomorphic,
    normal_form,
    pyramid,
    semigroup_summary,
    theta,
    two_s3,
)

__all__ = [
    "cayley",
    "catalog_ids",
    "catalog_vertices",
    "check",
    "classify_counts",
    "decompose",
    "dual",
    "ehrhart_count",
    "h_star",
    "is_isomorphic",
    "normal_form",
    "pyramid",
    "semigroup_summary",
    "theta",
    "two_s3",
]

__version__ = "0.1.0"
