"""Exact computations on the Grassmann graph J_q(n,k), its projective
geometry, and the theta_1 Euclidean representation.

The heavy lifting lives in the C++ extension module ``_core``; this package
re-exports its public surface.
"""

from ._core import (
    Context,
    ExternalGraph,
    Subspace,
    cosine_table,
    distance,
    gauss_binom,
    gram_table,
    intersection_numbers,
    join,
    load_graph,
    m_inverse,
    meet,
    qint,
    subspace,
    transition,
)

__all__ = [
    "Context",
    "ExternalGraph",
    "Subspace",
    "cosine_table",
    "distance",
    "gauss_binom",
    "gram_table",
    "intersection_numbers",
    "join",
    "load_graph",
    "m_inverse",
    "meet",
    "qint",
    "subspace",
    "transition",
]
