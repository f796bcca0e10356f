"""Seeded randomized property suites.

Each check draws its cases from a ``random.Random`` seeded by the caller,
so a given seed always exercises exactly the same cases.  All assertions
are exact (no tolerances).  The CLI exposes these through ``--selftest``;
the test suite runs them as the randomized half of the acceptance criteria.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .catalog import compute_kernel
from .diffalg import DerWord, DiffPoly, DiffVar, ModelConfig, Monomial, var
from .exprspace import (
    POST,
    PRE,
    S3,
    ExprVec,
    act_s3,
    coordinates,
    enumerate_basis,
    evaluate,
)
from .linalg import RatMatrix, Subspace, contains, nullspace, rref

__all__ = ["CHECKS", "run_all", "random_poly", "random_matrix"]


def _random_word(rng: random.Random, model: ModelConfig, max_order: int) -> DerWord:
    word = DerWord.empty(model.commuting)
    for _ in range(rng.randint(0, max_order)):
        word = word.prepend(rng.randrange(model.num_operators))
    return word


def random_poly(
    rng: random.Random,
    model: ModelConfig,
    max_terms: int = 3,
    max_factors: int = 3,
    max_order: int = 2,
    max_exp: int = 2,
) -> DiffPoly:
    """A small random polynomial with nonzero integer coefficients."""
    p = DiffPoly.zero(model)
    for _ in range(rng.randint(1, max_terms)):
        exps: dict[DiffVar, int] = {}
        for _ in range(rng.randint(0, max_factors)):
            dv = DiffVar(
                _random_word(rng, model, max_order),
                rng.randrange(len(model.variables)),
            )
            exps[dv] = exps.get(dv, 0) + rng.randint(1, max_exp)
        coeff = rng.choice([-3, -2, -1, 1, 2, 3])
        p = p + DiffPoly(model, {Monomial.of(exps): coeff})
    return p


def random_matrix(rng: random.Random, max_dim: int = 5) -> RatMatrix:
    rows = rng.randint(0, max_dim)
    cols = rng.randint(1, max_dim)
    data = [
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)]
        for _ in range(rows)
    ]
    return RatMatrix(data, cols=cols)


def _random_model(rng: random.Random) -> ModelConfig:
    return ModelConfig(commuting=rng.random() < 0.5, num_operators=rng.randint(1, 3))


def check_leibniz(rng: random.Random, cases: int) -> int:
    """derive(p*q) == derive(p)*q + p*derive(q), exactly."""
    for _ in range(cases):
        model = _random_model(rng)
        p = random_poly(rng, model)
        q = random_poly(rng, model)
        w = rng.randrange(model.num_operators)
        assert (p * q).derive(w) == p.derive(w) * q + p * q.derive(w)
    return cases


def check_derive_linear(rng: random.Random, cases: int) -> int:
    """derive(a*p + b*q) == a*derive(p) + b*derive(q) for random rationals."""
    for _ in range(cases):
        model = _random_model(rng)
        p = random_poly(rng, model)
        q = random_poly(rng, model)
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        b = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        w = rng.randrange(model.num_operators)
        assert (a * p + b * q).derive(w) == a * p.derive(w) + b * q.derive(w)
    return cases


def check_commutation(rng: random.Random, cases: int) -> int:
    """Commuting model: derivations commute on every polynomial."""
    for _ in range(cases):
        model = ModelConfig(commuting=True, num_operators=rng.randint(2, 3))
        p = random_poly(rng, model)
        a = rng.randrange(model.num_operators)
        b = rng.randrange(model.num_operators)
        assert p.derive(a).derive(b) == p.derive(b).derive(a)
    return cases


def check_noncommutation_witness(rng: random.Random, cases: int) -> int:
    """Noncommuting model, two operators: D0 D1 x != D1 D0 x."""
    model = ModelConfig(commuting=False, num_operators=2)
    x = var(model, 0)
    assert x.derive(0).derive(1) != x.derive(1).derive(0)
    return 1


def check_ring_laws(rng: random.Random, cases: int) -> int:
    """Commutativity, associativity, distributivity of the product."""
    for _ in range(cases):
        model = _random_model(rng)
        p = random_poly(rng, model, max_terms=2)
        q = random_poly(rng, model, max_terms=2)
        r = random_poly(rng, model, max_terms=2)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
    return cases


def check_equivariance(rng: random.Random, cases: int) -> int:
    """evaluate(act_s3(s, r)) == evaluate(r) with variables renamed by s."""
    model = ModelConfig(commuting=True, num_operators=2)
    basis = enumerate_basis(PRE, model)
    for _ in range(cases):
        terms = {
            rng.choice(basis): Fraction(rng.randint(-3, 3), rng.randint(1, 2))
            for _ in range(rng.randint(1, 4))
        }
        r = ExprVec(terms)
        sigma = rng.choice(S3)
        assert evaluate(act_s3(sigma, r), model) == evaluate(r, model).rename(sigma)
    return cases


def check_rref_idempotent(rng: random.Random, cases: int) -> int:
    """rref(rref(m)) == rref(m)."""
    for _ in range(cases):
        m = random_matrix(rng)
        reduced, rank = rref(m)
        again, rank2 = rref(reduced)
        assert again == reduced and rank2 == rank
    return cases


def check_rank_nullity(rng: random.Random, cases: int) -> int:
    """rank(m) + dim nullspace(m) == cols(m); nullspace vectors annihilate m."""
    for _ in range(cases):
        m = random_matrix(rng)
        _, rank = rref(m)
        ns = nullspace(m)  # soundness m v = 0 is asserted inside
        assert rank + ns.dim == m.cols
    return cases


def check_span_canonical(rng: random.Random, cases: int) -> int:
    """Shuffling and rescaling a generating set does not change the span."""
    for _ in range(cases):
        m = random_matrix(rng)
        if m.rows == 0:
            continue
        vecs = [list(r) for r in m.data]
        shuffled = vecs[:]
        rng.shuffle(shuffled)
        scaled = []
        for row in shuffled:
            c = Fraction(rng.choice([1, 2, 3, -1, -2]))
            scaled.append([c * v for v in row])
        assert Subspace(vecs, m.cols) == Subspace(scaled, m.cols)
    return cases


def check_kernel_reports(rng: random.Random, cases: int) -> int:
    """Every computed kernel is S3-stable and its vectors evaluate to zero.

    Runs over the fixed grid of configurations (both models, n <= 2, both
    modes); the case count is the number of reports checked.
    """
    checked = 0
    for commuting in (True, False):
        for n in (1, 2):
            model = ModelConfig(commuting=commuting, num_operators=n)
            for mode in (PRE, POST):
                report = compute_kernel(model, mode)
                for vec in report.kernel_vectors:
                    assert evaluate(vec, model).is_zero
                    for sigma in S3:
                        moved = coordinates(act_s3(sigma, vec), report.basis)
                        assert contains(report.kernel, moved)
                checked += 1
    return checked


CHECKS: tuple[tuple[str, Callable[[random.Random, int], int]], ...] = (
    ("leibniz", check_leibniz),
    ("derive-linearity", check_derive_linear),
    ("derivation-commutation", check_commutation),
    ("noncommutation-witness", check_noncommutation_witness),
    ("ring-laws", check_ring_laws),
    ("s3-equivariance", check_equivariance),
    ("rref-idempotence", check_rref_idempotent),
    ("rank-nullity", check_rank_nullity),
    ("span-canonicality", check_span_canonical),
    ("kernel-reports", check_kernel_reports),
)


def run_all(seed: int, cases: int = 1000, out=print) -> bool:
    """Run every suite; report one line per suite; True iff all passed."""
    ok = True
    for name, fn in CHECKS:
        rng = random.Random(seed)
        try:
            ran = fn(rng, cases)
        except AssertionError as exc:
            ok = False
            out(f"{name}: FAIL {exc}")
        else:
            out(f"{name}: ok ({ran} cases)")
    return ok
