"""Betti diagrams of Stanley-Reisner ideals, pure resolutions and constructions."""

from ._core import (
    Complex,
    ConsistencyError,
    Diagram,
    DomainError,
    alexander_dual,
    are_isomorphic,
    barycentric,
    betti_direct,
    betti_dual,
    boundary_simplex,
    build_pr_complex,
    canonical_form,
    census,
    extremal_rays,
    intersection_complex,
    is_cohen_macaulay,
    is_in_cone,
    is_pr,
    join,
    link,
    partition_complex,
    phi,
    reduced_homology,
    skeleton,
)

__all__ = [
    "Complex",
    "ConsistencyError",
    "Diagram",
    "DomainError",
    "alexander_dual",
    "are_isomorphic",
    "barycentric",
    "betti_direct",
    "betti_dual",
    "boundary_simplex",
    "build_pr_complex",
    "canonical_form",
    "census",
    "extremal_rays",
    "intersection_complex",
    "is_cohen_macaulay",
    "is_in_cone",
    "is_pr",
    "join",
    "link",
    "partition_complex",
    "phi",
    "reduced_homology",
    "skeleton",
]
