"""Arity-3 expressions over the induced binary products, and their evaluation.

The generators are the products induced on a multi-differential commutative
algebra: for each operator w a derived product  a >_w b := a * D_w(b),  and
in "post" mode additionally the plain product  a v b := a * b.  An opposite
product is never stored as its own symbol; it is encoded by swapping leaves
(>'_w(a, b) = >_w(b, a)), which turns the classical twelve planar quadratic
compositions on three leaves into a genuine basis:

    ExprBasisElem = (sigma, shape, inner, outer)

where sigma is one of the 6 leaf orderings of (x, y, z), shape is a left
comb ``(a . b) . c`` or right comb ``a . (b . c)``, and inner/outer are the
nested and top-level operation symbols.  This gives 12*s^2 independent
elements for s operation symbols (s = n in "pre" mode, n + 1 in "post"
mode).  The bijection with the classical composition table is recorded in
:data:`COMPOSITION_TABLE`.

An :class:`ExprVec` is an exact-rational linear combination of basis
elements; :func:`evaluate` maps it into the free differential algebra on
{x, y, z} and :func:`act_s3` renames the leaves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .diffalg import DiffPoly, ModelConfig, var

__all__ = [
    "PRE",
    "POST",
    "LEFT",
    "RIGHT",
    "S3",
    "S3_NAMES",
    "S3_ID",
    "compose",
    "OpSymbol",
    "ExprBasisElem",
    "ExprVec",
    "COMPOSITION_TABLE",
    "enumerate_basis",
    "op_symbols",
    "evaluate_elem",
    "evaluate",
    "act_s3",
    "coordinates",
    "from_coordinates",
    "term_str",
    "pretty",
]

PRE = "pre"
POST = "post"

LEFT = "left"
RIGHT = "right"

Perm = tuple[int, int, int]

# Fixed enumeration of S3: id, (xy), (xz), (yz), (xyz), (xzy).
# A permutation is stored as the tuple of images (p[0], p[1], p[2]) of the
# variable indices 0=x, 1=y, 2=z.
S3: tuple[Perm, ...] = (
    (0, 1, 2),
    (1, 0, 2),
    (2, 1, 0),
    (0, 2, 1),
    (1, 2, 0),
    (2, 0, 1),
)
S3_NAMES = ("id", "(xy)", "(xz)", "(yz)", "(xyz)", "(xzy)")
S3_ID: Perm = S3[0]
_S3_INDEX = {p: i for i, p in enumerate(S3)}


def compose(s: Perm, t: Perm) -> Perm:
    """(s o t)[i] = s[t[i]]."""
    return (s[t[0]], s[t[1]], s[t[2]])


def check_mode(mode: str) -> None:
    if mode not in (PRE, POST):
        raise ValueError(f"mode must be '{PRE}' or '{POST}', got {mode!r}")


@dataclass(frozen=True)
class OpSymbol:
    """One operation symbol: Derived(w) -> a * D_w(b), or Plain -> a * b."""

    index: int | None = None  # None means the plain product

    @staticmethod
    def derived(index: int) -> "OpSymbol":
        if index < 0:
            raise ValueError("operator index must be nonnegative")
        return OpSymbol(index)

    @staticmethod
    def plain() -> "OpSymbol":
        return OpSymbol(None)

    @property
    def is_plain(self) -> bool:
        return self.index is None

    def key(self) -> tuple:
        # derived operators first (by index), the plain product last
        return (1, 0) if self.is_plain else (0, self.index)


@dataclass(frozen=True)
class ExprBasisElem:
    """One bracketed product of x, y, z: a leaf ordering, a comb shape and
    the (inner, outer) operation pair."""

    sigma: Perm
    shape: str
    inner: OpSymbol
    outer: OpSymbol

    def key(self) -> tuple:
        return (
            _S3_INDEX[self.sigma],
            0 if self.shape == LEFT else 1,
            self.inner.key(),
            self.outer.key(),
        )


# The classical table of the twelve planar quadratic compositions on three
# leaves, extended over all operation pairs.  Each row documents one
# composition  outer^p o_slot inner^q  where a prime means the
# argument-swapped product, and the slots are
#     slot 1: out(in(x, y), z),  slot 2: out(in(y, z), x),  slot 3: out(in(z, x), y),
# together with its encoding here as (sigma, shape).  The ``display`` column
# shows the classical single-product bracketing.
# Fields: (slot, outer_primed, inner_primed, sigma, shape, display).
COMPOSITION_TABLE: tuple[tuple[int, bool, bool, Perm, str, str], ...] = (
    (1, False, False, (0, 1, 2), LEFT, "(xy)z"),
    (2, True, False, (0, 1, 2), RIGHT, "x(yz)"),
    (2, True, True, (0, 2, 1), RIGHT, "x(zy)"),
    (3, False, True, (0, 2, 1), LEFT, "(xz)y"),
    (3, False, False, (2, 0, 1), LEFT, "(zx)y"),
    (1, True, False, (2, 0, 1), RIGHT, "z(xy)"),
    (1, True, True, (2, 1, 0), RIGHT, "z(yx)"),
    (2, False, True, (2, 1, 0), LEFT, "(zy)x"),
    (2, False, False, (1, 2, 0), LEFT, "(yz)x"),
    (3, True, False, (1, 2, 0), RIGHT, "y(zx)"),
    (3, True, True, (1, 0, 2), RIGHT, "y(xz)"),
    (1, False, True, (1, 0, 2), LEFT, "(yx)z"),
)


def op_symbols(mode: str, model: ModelConfig) -> list[OpSymbol]:
    """The ordered operation symbols available in the given mode."""
    check_mode(mode)
    symbols = [OpSymbol.derived(i) for i in range(model.num_operators)]
    if mode == POST:
        symbols.append(OpSymbol.plain())
    return symbols


def enumerate_basis(mode: str, model: ModelConfig) -> list[ExprBasisElem]:
    """Deterministic basis order: sigma, then shape, then inner, then outer."""
    symbols = op_symbols(mode, model)
    return [
        ExprBasisElem(sigma, shape, inner, outer)
        for sigma in S3
        for shape in (LEFT, RIGHT)
        for inner in symbols
        for outer in symbols
    ]


class ExprVec:
    """Exact-rational vector over the expression basis (no zero entries)."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[ExprBasisElem, int | Fraction] | None = None):
        clean: dict[ExprBasisElem, Fraction] = {}
        if terms:
            for elem, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[elem] = c
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExprVec is immutable")

    @staticmethod
    def basis_vector(elem: ExprBasisElem) -> "ExprVec":
        return ExprVec({elem: 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[ExprBasisElem, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: t[0].key())

    def coeff(self, elem: ExprBasisElem) -> Fraction:
        return self._terms.get(elem, Fraction(0))

    def support(self) -> list[ExprBasisElem]:
        return [e for e, _ in self.terms()]

    def __add__(self, other: "ExprVec") -> "ExprVec":
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return ExprVec(out)

    def __neg__(self) -> "ExprVec":
        return ExprVec({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "ExprVec") -> "ExprVec":
        return self + (-other)

    def __mul__(self, scalar: int | Fraction) -> "ExprVec":
        c = Fraction(scalar)
        return ExprVec({e: c * v for e, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExprVec):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"ExprVec({pretty(self)})"


def _apply(sym: OpSymbol, a: DiffPoly, b: DiffPoly, model: ModelConfig) -> DiffPoly:
    if sym.is_plain:
        return a * b
    model.check_operator(sym.index)
    return a * b.derive(sym.index)


def evaluate_elem(elem: ExprBasisElem, model: ModelConfig) -> DiffPoly:
    """Image of a single basis element in the free differential algebra."""
    if len(model.variables) < 3:
        raise ValueError("evaluation needs a model with at least three variables")
    a = var(model, elem.sigma[0])
    b = var(model, elem.sigma[1])
    c = var(model, elem.sigma[2])
    if elem.shape == LEFT:
        return _apply(elem.outer, _apply(elem.inner, a, b, model), c, model)
    return _apply(elem.outer, a, _apply(elem.inner, b, c, model), model)


def evaluate(r: ExprVec, model: ModelConfig) -> DiffPoly:
    """Linear extension of :func:`evaluate_elem`."""
    out = DiffPoly.zero(model)
    for elem, c in r.terms():
        out = out + evaluate_elem(elem, model) * c
    return out


def act_s3(sigma: Perm, r: ExprVec) -> ExprVec:
    """Rename the leaves of every term by sigma (left action)."""
    out: dict[ExprBasisElem, Fraction] = {}
    for elem, c in r.terms():
        new = ExprBasisElem(
            compose(sigma, elem.sigma), elem.shape, elem.inner, elem.outer
        )
        out[new] = out.get(new, Fraction(0)) + c
    return ExprVec(out)


def coordinates(r: ExprVec, basis: Sequence[ExprBasisElem]) -> list[Fraction]:
    """Coordinate vector of r over an explicit basis enumeration."""
    index = {e: i for i, e in enumerate(basis)}
    out = [Fraction(0)] * len(basis)
    for elem, c in r.terms():
        if elem not in index:
            raise ValueError(f"vector has a term outside the basis: {elem}")
        out[index[elem]] = c
    return out


def from_coordinates(
    coords: Iterable[int | Fraction], basis: Sequence[ExprBasisElem]
) -> ExprVec:
    return ExprVec({e: c for e, c in zip(basis, coords)})


def _op_str(sym: OpSymbol, style: str) -> str:
    if sym.is_plain:
        return "⊻" if style == "text" else "*"
    return f"▷_{sym.index}" if style == "text" else f"r{sym.index}"


def term_str(elem: ExprBasisElem, style: str = "text") -> str:
    """Render one basis element, e.g. ``(x >_0 y) >_1 z``.

    ``style="text"`` uses the symbols from the written identities;
    ``style="ascii"`` uses ``r0 .. r{n-1}`` and ``*``.
    """
    names = ("x", "y", "z")
    a, b, c = (names[i] for i in elem.sigma)
    if elem.shape == LEFT:
        return f"({a} {_op_str(elem.inner, style)} {b}) {_op_str(elem.outer, style)} {c}"
    return f"{a} {_op_str(elem.outer, style)} ({b} {_op_str(elem.inner, style)} {c})"


def pretty(r: ExprVec, style: str = "text") -> str:
    """Signed-sum rendering with deterministic term order; "0" when empty."""
    if r.is_zero:
        return "0"
    parts: list[str] = []
    for elem, c in r.terms():
        body = term_str(elem, style)
        mag = abs(c)
        text = body if mag == 1 else f"{mag} {body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)
