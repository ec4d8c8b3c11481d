"""Exact algebra of double posets.

A double poset is a finite set carrying two strict partial orders; only its
isomorphism class matters here.  The package provides the graded Hopf
algebra these generate (composition product, ideal-decomposition coproduct,
antipode), the picture-counting scalar product, the degree-preserving
internal product, the map onto the permutation Hopf algebra by linear
extensions, quasi-symmetric generating functions, and the lattice-word
counting rules pairing special double posets with partition diagrams.
All arithmetic is exact over checked 64-bit integers.
"""

from . import algebra, catalog, checks, lr, oracles, perms, qsym
from ._accel import USING_NUMBA, backend_name
from .dposets import (
    CANONICALIZATION_CAP,
    CanonicalForm,
    DoublePoset,
    canonical_form,
    canonicalize,
    compose,
    decode,
    decompose,
    empty_dp,
    from_permutation,
    increasing_bijections,
    internal_graph,
    internal_product_basis,
    is_naturally_labelled,
    is_special,
    labelling,
    p_partition_violation,
    pairing_basis,
    pi_from_partition,
    pictures,
    point,
    relabel,
    restrict,
    tilde,
)
from .errors import (
    CycleError,
    DoublePosetError,
    EmptyError,
    InvalidPartitionError,
    LengthMismatchError,
    NotAPartitionError,
    NotIncreasingError,
    NotLatticeError,
    NotSpecialError,
    ParseError,
    PreconditionError,
    SizeCapError,
    SizeMismatchError,
)
from .relations import (
    Relation,
    chain_relation,
    decompositions,
    empty_relation,
    induced,
    linear_extensions,
    lower_ideals,
    validate,
)

__version__ = "0.1.0"
