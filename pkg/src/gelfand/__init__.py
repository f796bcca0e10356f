"""Exact computation of the binary quadratic identities induced by
derivations on free multi-differential commutative algebras.

The product a >_w b := a * D_w(b) (and, in "post" mode, the plain product
a * b) turns such an algebra into a nonassociative algebra; this package
determines *all* arity-3 identities those products satisfy, as the exact
rational nullspace of an evaluation matrix, and compares the result against
the classical identity families (Novikov, pre-Lie, and the multi-operator
variants).
"""

from .diffalg import (
    DerWord,
    DiffPoly,
    DiffVar,
    ModelConfig,
    Monomial,
    monomial_key,
    monomial_order,
    var,
)
from .exprspace import (
    COMPOSITION_TABLE,
    LEFT,
    POST,
    PRE,
    RIGHT,
    S3,
    S3_NAMES,
    ExprBasisElem,
    ExprVec,
    OpSymbol,
    act_s3,
    compose,
    coordinates,
    enumerate_basis,
    evaluate,
    evaluate_elem,
    from_coordinates,
    pretty,
    term_str,
)
from .linalg import (
    RatMatrix,
    Subspace,
    contains,
    nullspace,
    rref,
    span,
    subspace_eq,
    subspace_leq,
)
from .catalog import (
    Family,
    KernelReport,
    Verdicts,
    compute_kernel,
    family_relators,
    gelfand_check,
    orbit_span,
    plain_assoc,
    plain_comm3,
    relator_mixed,
    relator_mixed_alt,
    relator_prelie,
    relator_right_comm,
    verify,
)

__version__ = "0.1.0"
