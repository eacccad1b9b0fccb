"""Isomorphism-free generation of functional digraphs (finite endofunctions).

Codes are nested lists of ints: a tree is ``[4, 1, 2, 1]``, a connected
component ``[[1], [3, 1, 1]]`` and a digraph ``[[[1]], [[1], [3, 1, 1]]]``.
"""

from ._core import (
    InvalidInput,
    canonicalize,
    compare_digraphs,
    cunmerge,
    cycle,
    first_partition,
    generate_components,
    generate_digraphs,
    generation_rank,
    is_canonical,
    is_valid_tree_code,
    isomorphic,
    merge,
    merges,
    parse_digraph,
    realize,
    render,
    successor_component,
    successor_digraph,
    successor_partition,
    unmerge,
)

__all__ = [
    "InvalidInput",
    "canonicalize",
    "compare_digraphs",
    "cunmerge",
    "cycle",
    "first_partition",
    "generate_components",
    "generate_digraphs",
    "generation_rank",
    "is_canonical",
    "is_valid_tree_code",
    "isomorphic",
    "merge",
    "merges",
    "parse_digraph",
    "realize",
    "render",
    "successor_component",
    "successor_digraph",
    "successor_partition",
    "unmerge",
]
