"""Exact-arithmetic workbench for super Fock spaces.

Layers, bottom up: exact scalars over Q(sqrt 2) (:mod:`sfk.exactnum`), the
sparse super-commutative polynomial engine (:mod:`sfk.superalgebra`),
partitions and Schur determinants (:mod:`sfk.symfunc`), mode operators and
the coordinate isomorphism (:mod:`sfk.oscillator`), singular-vector search
and tensor-basis expansion (:mod:`sfk.singular`), Chern-symbol class
calculus (:mod:`sfk.charclass`), stratum combinatorics (:mod:`sfk.strata`),
relation-verification sweeps (:mod:`sfk.relations`), and the ``sfk``
command line (:mod:`sfk.cli`).
"""

from .exactnum import QSqrt2, SQRT2
from .superalgebra import (
    COORD_F,
    COORD_R,
    HalfInt,
    SuperMonomial,
    SuperPolynomial,
    weight_basis,
    weight_component,
)
from .symfunc import Partition, conjugate, elementary_polynomial, poly_det, schur_paper
from .oscillator import (
    ModeOp,
    apply_a,
    apply_b,
    apply_G,
    apply_L,
    operator_matrix,
    phi,
    phi_inv,
)
from .singular import (
    find_singular,
    kernel_basis,
    koschorke_expand,
    koschorke_pairs,
    rectangular_singular,
    verify_singular,
)
from .charclass import (
    ClassPolynomial,
    class_to_fock,
    d_ev_kernel_check,
    d_odd,
    even_koschorke,
    generalized_koschorke,
    odd_koschorke,
    odd_sigma_class,
)
from .strata import (
    IndexSeq,
    RationalSubspace,
    closure_dominates,
    enumerate_strata,
    exact_type,
    j_min,
    k_dominates,
    n_k,
    n_odd,
    stratum_codim,
)

__version__ = "0.1.0"
