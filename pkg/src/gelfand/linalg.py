"""Dense exact linear algebra over the rationals.

Everything here is plain Gauss-Jordan elimination on ``fractions.Fraction``
entries: reduced row echelon form, rank, nullspace and canonical subspace
comparison.  Matrices stay small (at most a few hundred columns), so no
fraction-free or modular tricks are needed; exactness and determinism win
over speed.  Pivots are always the first nonzero entry in column order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "RatMatrix",
    "Subspace",
    "rref",
    "nullspace",
    "span",
    "subspace_eq",
    "subspace_leq",
    "contains",
]

Vector = tuple[Fraction, ...]


def _as_row(row: Iterable) -> Vector:
    return tuple(Fraction(v) for v in row)


class RatMatrix:
    """Immutable rectangular matrix of Fractions with explicit dimensions."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = tuple(_as_row(r) for r in data)
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise ValueError("all rows must have equal length")
            width = widths.pop()
            if cols is not None and cols != width:
                raise ValueError(f"cols={cols} does not match row length {width}")
            cols = width
        elif cols is None:
            cols = 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", rows)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in row) for row in self.data)
        return f"RatMatrix({self.rows}x{self.cols}: {body})"

    def mul_vec(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        vv = _as_row(v)
        return tuple(sum((a * b for a, b in zip(row, vv)), Fraction(0)) for row in self.data)


def _rref_rows(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place Gauss-Jordan; returns (rows, pivot column list)."""
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rref(m: RatMatrix) -> tuple[RatMatrix, int]:
    """Reduced row echelon form and rank (exact, deterministic)."""
    rows = [list(r) for r in m.data]
    rows, pivots = _rref_rows(rows, m.cols)
    return RatMatrix(rows, cols=m.cols), len(pivots)


class Subspace:
    """A rational subspace held in canonical (RREF) basis form.

    Two subspaces are equal iff their RREF basis matrices are identical,
    which makes subspace equality a plain data comparison.
    """

    __slots__ = ("ambient", "basis")

    def __init__(self, vectors: Iterable[Iterable], ambient: int):
        rows = [list(_as_row(v)) for v in vectors]
        for row in rows:
            if len(row) != ambient:
                raise ValueError(f"vector length {len(row)} != ambient {ambient}")
        rows, pivots = _rref_rows(rows, ambient)
        basis = RatMatrix(rows[: len(pivots)], cols=ambient)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def vectors(self) -> list[Vector]:
        return list(self.basis.data)

    def reduce(self, v: Sequence) -> Vector:
        """Residue of v after eliminating along the RREF basis rows."""
        vv = list(_as_row(v))
        if len(vv) != self.ambient:
            raise ValueError("vector length does not match ambient dimension")
        for row in self.basis.data:
            lead = next(c for c, val in enumerate(row) if val)
            f = vv[lead]
            if f:
                vv = [a - f * b for a, b in zip(vv, row)]
        return tuple(vv)


def nullspace(m: RatMatrix) -> Subspace:
    """Canonical basis of {v : m v = 0}; dimension = cols - rank."""
    reduced, _ = rref(m)
    pivots: list[int] = []
    for row in reduced.data:
        lead = next((c for c, v in enumerate(row) if v), None)
        if lead is not None:
            pivots.append(lead)
    free = [c for c in range(m.cols) if c not in pivots]
    vecs = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -reduced.data[r][f]
        assert all(x == 0 for x in m.mul_vec(v)), "nullspace vector fails m v = 0"
        vecs.append(v)
    return Subspace(vecs, m.cols)


def span(vectors: Iterable[Iterable], ambient: int) -> Subspace:
    """Canonical subspace spanned by the given vectors."""
    return Subspace(vectors, ambient)


def subspace_eq(a: Subspace, b: Subspace) -> bool:
    _check_ambient(a, b)
    return a == b


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b.

    Equivalent to rank(b) == rank(stack(b, a)): a basis row of ``a`` lies in
    ``b`` exactly when it reduces to zero along b's RREF rows.
    """
    _check_ambient(a, b)
    return all(
        not any(b.reduce(row)) for row in a.basis.data
    )


def contains(a: Subspace, v: Sequence) -> bool:
    """True iff the vector v lies in the subspace a."""
    return not any(a.reduce(v))


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient != b.ambient:
        raise ValueError("subspaces have different ambient dimensions")
