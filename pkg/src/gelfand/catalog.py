"""Named identity families and the kernel pipeline.

The pipeline evaluates every arity-3 basis expression into the free
differential algebra on {x, y, z}, assembles the evaluation matrix (one row
per differential monomial, one column per basis element) and takes its
exact nullspace: the space of all identities satisfied by the induced
products.  A family of written identities is compared against that kernel
through the canonical span of its S3-orbit.

Relator constructors encode the written identities in the comb basis, with
opposite products translated by leaf swaps.  For operators a, b:

  relator_prelie(a, b):
      (x >_a y) >_b z - x >_a (y >_b z) - (y >_a x) >_b z + y >_a (x >_b z)
  relator_mixed(a, b):
      (x >_a y) >_b z - x >_a (y >_b z) - (x >_b y) >_a z + x >_b (y >_a z)
  relator_right_comm(a, b):
      (x >_a y) >_b z - (x >_b z) >_a y
  relator_mixed_alt(a, b):
      (x >_a y) >_b z - x >_a (y >_b z) - (x >_a z) >_b y + x >_b (y >_a z)

relator_mixed_alt(a, b) == relator_mixed(a, b) + relator_right_comm(b, a),
so {mixed_alt, right_comm} and {mixed, right_comm} generate the same span.
relator_mixed holds only when the two derivations commute; the other three
hold in the noncommuting model as well.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Sequence

from .diffalg import DiffPoly, ModelConfig, monomial_key
from .exprspace import (
    LEFT,
    POST,
    PRE,
    RIGHT,
    S3,
    ExprBasisElem,
    ExprVec,
    OpSymbol,
    act_s3,
    check_mode,
    coordinates,
    enumerate_basis,
    evaluate,
    evaluate_elem,
    from_coordinates,
)
from .linalg import RatMatrix, Subspace, contains, nullspace, span, subspace_eq, subspace_leq

__all__ = [
    "Family",
    "Verdicts",
    "KernelReport",
    "relator_prelie",
    "relator_mixed",
    "relator_mixed_alt",
    "relator_right_comm",
    "plain_assoc",
    "plain_comm3",
    "family_relators",
    "orbit_span",
    "compute_kernel",
    "verify",
    "gelfand_check",
]

_ID = (0, 1, 2)
_XY = (1, 0, 2)
_YZ = (0, 2, 1)


class Family(str, Enum):
    """The identity families that can be checked against a kernel."""

    NOVIKOV = "novikov"
    PRELIE = "prelie"
    MULTI_NOVIKOV = "multi-novikov"
    NC_MULTI_NOVIKOV = "nc-multi-novikov"
    RIGHT_COMMUTATIVITY = "right-commutativity"


def _D(i: int) -> OpSymbol:
    return OpSymbol.derived(i)


def _combo(*terms: tuple[int, ExprBasisElem]) -> ExprVec:
    # accumulate: terms sharing a basis element must add up, not overwrite
    # (for a == b several relator terms collapse onto the same element)
    acc: dict[ExprBasisElem, Fraction] = {}
    for coeff, elem in terms:
        acc[elem] = acc.get(elem, Fraction(0)) + coeff
    return ExprVec(acc)


def relator_prelie(a: int, b: int) -> ExprVec:
    """(x >_a y) >_b z - x >_a (y >_b z) symmetrized in x, y."""
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, _D(a), _D(b))),
        (-1, ExprBasisElem(_ID, RIGHT, _D(b), _D(a))),
        (-1, ExprBasisElem(_XY, LEFT, _D(a), _D(b))),
        (1, ExprBasisElem(_XY, RIGHT, _D(b), _D(a))),
    )


def relator_mixed(a: int, b: int) -> ExprVec:
    """(x >_a y) >_b z - x >_a (y >_b z), antisymmetrized in the operators."""
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, _D(a), _D(b))),
        (-1, ExprBasisElem(_ID, RIGHT, _D(b), _D(a))),
        (-1, ExprBasisElem(_ID, LEFT, _D(b), _D(a))),
        (1, ExprBasisElem(_ID, RIGHT, _D(a), _D(b))),
    )


def relator_right_comm(a: int, b: int) -> ExprVec:
    """(x >_a y) >_b z - (x >_b z) >_a y."""
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, _D(a), _D(b))),
        (-1, ExprBasisElem(_YZ, LEFT, _D(b), _D(a))),
    )


def relator_mixed_alt(a: int, b: int) -> ExprVec:
    """Variant of relator_mixed with a right-commuted last pair of terms;
    equals relator_mixed(a, b) + relator_right_comm(b, a)."""
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, _D(a), _D(b))),
        (-1, ExprBasisElem(_ID, RIGHT, _D(b), _D(a))),
        (-1, ExprBasisElem(_YZ, LEFT, _D(a), _D(b))),
        (1, ExprBasisElem(_ID, RIGHT, _D(a), _D(b))),
    )


def plain_assoc() -> ExprVec:
    """(x v y) v z - x v (y v z) for the plain product (post mode)."""
    P = OpSymbol.plain()
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, P, P)),
        (-1, ExprBasisElem(_ID, RIGHT, P, P)),
    )


def plain_comm3() -> ExprVec:
    """(x v y) v z - (y v x) v z for the plain product (post mode)."""
    P = OpSymbol.plain()
    return _combo(
        (1, ExprBasisElem(_ID, LEFT, P, P)),
        (-1, ExprBasisElem(_XY, LEFT, P, P)),
    )


def family_relators(
    family: Family, model: ModelConfig, mode: str = PRE
) -> list[ExprVec]:
    """One relator per identity scheme per ordered operator pair."""
    check_mode(mode)
    family = Family(family)
    n = model.num_operators
    if family in (Family.NOVIKOV, Family.PRELIE) and n != 1:
        raise ValueError(f"family {family.value} requires num_operators == 1, got {n}")
    pairs = list(product(range(n), repeat=2))
    if family == Family.NOVIKOV:
        return [relator_prelie(0, 0), relator_right_comm(0, 0)]
    if family == Family.PRELIE:
        return [relator_prelie(0, 0)]
    if family == Family.MULTI_NOVIKOV:
        return [
            rel(a, b)
            for a, b in pairs
            for rel in (relator_prelie, relator_mixed, relator_right_comm)
        ]
    if family == Family.NC_MULTI_NOVIKOV:
        return [
            rel(a, b) for a, b in pairs for rel in (relator_prelie, relator_right_comm)
        ]
    if family == Family.RIGHT_COMMUTATIVITY:
        return [relator_right_comm(a, b) for a, b in pairs]
    raise ValueError(f"unknown family: {family!r}")


@dataclass
class Verdicts:
    """Subspace comparison of a family's S3-orbit span against the kernel."""

    family: Family
    contains_all: bool
    leq: bool
    geq: bool
    eq: bool


@dataclass
class KernelReport:
    """Result of one kernel computation (plus optional family verdicts)."""

    mode: str
    model: ModelConfig
    basis: list[ExprBasisElem]
    monomial_count: int
    rank: int
    kernel: Subspace
    kernel_vectors: list[ExprVec]
    degenerate_identifications: tuple[str, ...]
    verdicts: Verdicts | None = None
    elapsed: float = 0.0

    @property
    def basis_size(self) -> int:
        return len(self.basis)

    @property
    def kernel_dim(self) -> int:
        return self.kernel.dim


def _identifications(mode: str, model: ModelConfig) -> tuple[str, ...]:
    # Arity-2 identifications forced by commutativity of the target product.
    # They are collapsed into the symbol set up front, never folded into the
    # arity-3 kernel.
    notes = [
        f">'_w(a,b) := >_w(b,a) identified with a*D_w(b) swapped, w = 0..{model.num_operators - 1}"
    ]
    if mode == POST:
        notes.append("v'(a,b) := v(b,a) identified with v(a,b) (plain product is commutative)")
    return tuple(notes)


def compute_kernel(model: ModelConfig, mode: str = PRE) -> KernelReport:
    """Evaluate the basis, assemble the monomial matrix, take its nullspace."""
    check_mode(mode)
    t0 = time.perf_counter()
    basis = enumerate_basis(mode, model)
    images = [evaluate_elem(elem, model) for elem in basis]
    monomials = sorted({m for p in images for m in p.monomials()}, key=monomial_key)
    index = {m: i for i, m in enumerate(monomials)}
    rows = [[Fraction(0)] * len(basis) for _ in monomials]
    for j, p in enumerate(images):
        for m, c in p.terms():
            rows[index[m]][j] = c
    matrix = RatMatrix(rows, cols=len(basis))
    kernel = nullspace(matrix)
    vectors = [from_coordinates(row, basis) for row in kernel.basis.data]
    for row in kernel.basis.data:
        combo = DiffPoly.zero(model)
        for j, c in enumerate(row):
            if c:
                combo = combo + images[j] * c
        assert combo.is_zero, "kernel vector does not evaluate to zero"
    rank = len(basis) - kernel.dim
    return KernelReport(
        mode=mode,
        model=model,
        basis=basis,
        monomial_count=len(monomials),
        rank=rank,
        kernel=kernel,
        kernel_vectors=vectors,
        degenerate_identifications=_identifications(mode, model),
        elapsed=time.perf_counter() - t0,
    )


def orbit_span(
    relators: Sequence[ExprVec], basis: Sequence[ExprBasisElem]
) -> Subspace:
    """Canonical span of the S3-orbit of the given relators."""
    vecs = [
        coordinates(act_s3(sigma, r), basis) for r in relators for sigma in S3
    ]
    return span(vecs, len(basis))


def verify(family: Family, model: ModelConfig, mode: str = PRE) -> KernelReport:
    """Kernel report with subspace verdicts for the given family."""
    report = compute_kernel(model, mode)
    relators = family_relators(family, model, mode)
    orbit = orbit_span(relators, report.basis)
    contains_all = all(
        contains(report.kernel, coordinates(r, report.basis)) for r in relators
    )
    report.verdicts = Verdicts(
        family=Family(family),
        contains_all=contains_all,
        leq=subspace_leq(orbit, report.kernel),
        geq=subspace_leq(report.kernel, orbit),
        eq=subspace_eq(orbit, report.kernel),
    )
    return report


def gelfand_check(family: Family, model: ModelConfig) -> bool:
    """Forward half of verify: every family relator evaluates to zero."""
    return all(
        evaluate(r, model).is_zero for r in family_relators(family, model, PRE)
    )
