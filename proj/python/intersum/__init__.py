"""Exact omega computations for intersecting and cross-intersecting families."""

from ._intersum import (
    Family,
    IntersumError,
    SearchResult,
    canonical_form,
    double_count_check,
    ekr_bound,
    heuristic_max,
    intersection_profile,
    is_cross_intersecting,
    is_intersecting,
    is_star,
    katona_verify,
    max_omega_cross,
    max_omega_intersecting,
    omega_cross,
    omega_cross_bound,
    omega_cross_strict,
    omega_family,
    omega_intersecting_bound,
    omega_strict_bound,
    pm_star_count,
    run_cli,
    star,
    star_identity_check,
)

__all__ = [
    "Family",
    "IntersumError",
    "SearchResult",
    "canonical_form",
    "double_count_check",
    "ekr_bound",
    "heuristic_max",
    "intersection_profile",
    "is_cross_intersecting",
    "is_intersecting",
    "is_star",
    "katona_verify",
    "max_omega_cross",
    "max_omega_intersecting",
    "omega_cross",
    "omega_cross_bound",
    "omega_cross_strict",
    "omega_family",
    "omega_intersecting_bound",
    "omega_strict_bound",
    "pm_star_count",
    "run_cli",
    "star",
    "star_identity_check",
]
