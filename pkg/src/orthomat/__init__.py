"""Orthogonality of matrices under operator, Schatten and vector norms.

Deciders for Birkhoff-James, isosceles, Roberts, r- and strong-isosceles
orthogonality with numeric margins and witness vectors, plus randomized
theorem suites and exact reproduction of the worked diagonal examples.
"""

from ._kernels import backend_name
from .linalg import (
    Field,
    Matrix,
    SubspaceBasis,
    Tolerances,
    adjoint,
    hermitian_eigen,
    intersect,
    operator_norm,
    svd,
    top_singular_subspace,
)
from .norms import (
    NormDescriptor,
    NormedElement,
    NormKind,
    norm_of,
    operator_two,
    schatten,
    uin_singular_match,
    vector_p,
)
from .ortho import (
    Decision,
    OrthReport,
    Relation,
    bj_check,
    bj_from_si,
    is_decisive,
    iso_check,
    iso_from_double_bj,
    r_orth_check,
    roberts_check,
    si_check,
    xplus_xminus,
)
from .hilbert import (
    AttainmentKind,
    AttainmentSet,
    BJWitness,
    attainment_set,
    bj_crosscheck,
    bj_spectral,
    disjoint_support,
    disjoint_support_consequences,
    gamma_test,
    GammaOutcome,
    o_ta_member,
    o_ta_subspace_probe,
    ProbeOutcome,
)
from .positive import (
    KittanehChain,
    MaxMinPair,
    PsdCertificate,
    accretive_check,
    accretive_iso_corollary,
    invertible_pair_impossibility,
    kittaneh_bounds,
    max_min_pair,
    positive_iso_check,
    positive_iso_witness,
    projection_propositions,
    psd_certify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
