"""Additive graph pairs: witnesses, forbidden-structure outcomes, verification runs."""

from ._core import (  # noqa: F401
    Graph,
    InputError,
    ParseError,
    UnsupportedSize,
    build_P0,
    build_P0_complement,
    build_P1,
    build_P2,
    canonical_form,
    catalog,
    classify_outcomes,
    complete,
    contains_induced,
    cycle,
    difference,
    edgeless,
    enumerate_exhaustive,
    find_min_witness,
    induced,
    is_additive,
    is_isomorphic,
    max_clique,
    max_stable_set,
    necessity_suite,
    omega,
    sample_random,
    union_decomposable,
    union_graph,
    verify_pair,
)
