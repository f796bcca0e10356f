"""Free multi-differential commutative polynomial algebras over Q.

A :class:`ModelConfig` fixes a family of derivation operators D_0 .. D_{n-1}
acting on the commutative polynomial algebra generated by derivative words
applied to base variables.  The operators either commute pairwise or are
free (noncommuting); in both cases every D_w satisfies the Leibniz rule

    D_w(p * q) = D_w(p) * q + p * D_w(q).

Representation:

  DerWord   -- derivative word applied to a single variable.  Commuting
               model: exponent map stored as a sorted tuple of
               (operator, multiplicity) pairs, so that D_a D_b == D_b D_a
               holds by construction rather than by rewriting.
               Noncommuting model: plain tuple of operator indices,
               outermost (most recently applied) operator first.
  DiffVar   -- a DerWord applied to a base variable: "x", "D0(y)", ...
  Monomial  -- commutative monomial: sorted tuple of (DiffVar, exponent).
  DiffPoly  -- finite map Monomial -> Fraction with no zero coefficients.

Coefficients are exact rationals (``fractions.Fraction``).  All values are
immutable after construction and every operation is a pure function, so
sharing across threads is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

__all__ = [
    "ModelConfig",
    "DerWord",
    "DiffVar",
    "Monomial",
    "DiffPoly",
    "var",
    "monomial_key",
    "monomial_order",
]

Coeff = int | Fraction


@dataclass(frozen=True)
class ModelConfig:
    """Ambient algebra: how many derivations there are and whether they commute."""

    commuting: bool = True
    num_operators: int = 1
    variables: tuple[str, ...] = ("x", "y", "z")

    def __post_init__(self) -> None:
        if self.num_operators < 1:
            raise ValueError("num_operators must be >= 1")
        if not self.variables:
            raise ValueError("variables must be nonempty")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")

    def check_operator(self, omega: int) -> None:
        if not 0 <= omega < self.num_operators:
            raise ValueError(
                f"operator index {omega} out of range (num_operators={self.num_operators})"
            )

    def check_variable(self, i: int) -> None:
        if not 0 <= i < len(self.variables):
            raise ValueError(
                f"variable index {i} out of range ({len(self.variables)} variables)"
            )


@dataclass(frozen=True)
class DerWord:
    """A word in the derivation operators.

    ``ops`` is a sorted tuple of (operator, multiplicity) pairs in the
    commuting model and a plain tuple of operator indices (outermost first)
    in the noncommuting model.  The empty word is the identity in both.
    """

    commuting: bool
    ops: tuple = ()

    @staticmethod
    def empty(commuting: bool) -> "DerWord":
        return DerWord(commuting, ())

    @property
    def order(self) -> int:
        """Total number of derivations applied."""
        if self.commuting:
            return sum(m for _, m in self.ops)
        return len(self.ops)

    def prepend(self, omega: int) -> "DerWord":
        """The word for D_omega applied on top of this word."""
        if self.commuting:
            exps = dict(self.ops)
            exps[omega] = exps.get(omega, 0) + 1
            return DerWord(True, tuple(sorted(exps.items())))
        return DerWord(False, (omega,) + self.ops)

    def key(self) -> tuple:
        return (self.order, self.ops)

    def __str__(self) -> str:
        if not self.ops:
            return ""
        if self.commuting:
            return ".".join(
                f"D{o}" if m == 1 else f"D{o}^{m}" for o, m in self.ops
            )
        return ".".join(f"D{o}" for o in self.ops)


@dataclass(frozen=True)
class DiffVar:
    """A derivative word applied to a base variable."""

    word: DerWord
    var: int

    def key(self) -> tuple:
        # var first, then total order, then word comparison
        return (self.var, self.word.order, self.word.ops)

    def render(self, model: ModelConfig) -> str:
        name = model.variables[self.var]
        w = str(self.word)
        return f"{w}({name})" if w else name


@dataclass(frozen=True)
class Monomial:
    """Commutative monomial: sorted tuple of (DiffVar, positive exponent)."""

    factors: tuple = ()

    @staticmethod
    def of(exps: Mapping[DiffVar, int]) -> "Monomial":
        items = tuple(
            sorted(((v, e) for v, e in exps.items() if e), key=lambda t: t[0].key())
        )
        for _, e in items:
            if e < 0:
                raise ValueError("monomial exponents must be positive")
        return Monomial(items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.factors)

    def key(self) -> tuple:
        return (self.degree, tuple((v.key(), e) for v, e in self.factors))

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = dict(self.factors)
        for v, e in other.factors:
            exps[v] = exps.get(v, 0) + e
        return Monomial.of(exps)

    def render(self, model: ModelConfig) -> str:
        if not self.factors:
            return "1"
        parts = []
        for v, e in self.factors:
            s = v.render(model)
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts)


def monomial_key(m: Monomial) -> tuple:
    """Sort key for the deterministic total order on monomials."""
    return m.key()


def monomial_order(a: Monomial, b: Monomial) -> int:
    """-1, 0 or 1: total order by degree, then sorted factor comparison."""
    ka, kb = a.key(), b.key()
    return -1 if ka < kb else (0 if ka == kb else 1)


class DiffPoly:
    """Exact-rational polynomial in differential monomials.

    Supports +, -, * (by polynomials and by scalars), ** and
    :meth:`derive`; all results are normalized (no zero coefficients).
    """

    __slots__ = ("model", "_terms")

    def __init__(
        self, model: ModelConfig, terms: Mapping[Monomial, Coeff] | None = None
    ):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mono] = c
        object.__setattr__(self, "model", model)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("DiffPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(model: ModelConfig) -> "DiffPoly":
        return DiffPoly(model)

    @staticmethod
    def const(model: ModelConfig, c: Coeff) -> "DiffPoly":
        return DiffPoly(model, {Monomial(): Fraction(c)})

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Term list sorted by the monomial order (deterministic)."""
        return sorted(self._terms.items(), key=lambda t: t[0].key())

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    # -- arithmetic ---------------------------------------------------

    def _check_model(self, other: "DiffPoly") -> None:
        if self.model != other.model:
            raise ValueError("polynomials belong to different models")

    def __add__(self, other: "DiffPoly | Coeff") -> "DiffPoly":
        if isinstance(other, (int, Fraction)):
            other = DiffPoly.const(self.model, other)
        self._check_model(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return DiffPoly(self.model, out)

    __radd__ = __add__

    def __neg__(self) -> "DiffPoly":
        return DiffPoly(self.model, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "DiffPoly | Coeff") -> "DiffPoly":
        if isinstance(other, (int, Fraction)):
            other = DiffPoly.const(self.model, other)
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "DiffPoly":
        return (-self) + other

    def __mul__(self, other: "DiffPoly | Coeff") -> "DiffPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return DiffPoly(self.model, {m: c * v for m, v in self._terms.items()})
        self._check_model(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                prod = m1 * m2
                out[prod] = out.get(prod, Fraction(0)) + c1 * c2
        return DiffPoly(self.model, out)

    def __rmul__(self, other: Coeff) -> "DiffPoly":
        return self * other

    def __pow__(self, n: int) -> "DiffPoly":
        if n < 0:
            raise ValueError("negative powers are not defined")
        result = DiffPoly.const(self.model, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DiffPoly.const(self.model, other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self.model == other.model and self._terms == other._terms

    __hash__ = None  # mutable-dict backed; use terms() if a key is needed

    # -- derivations ----------------------------------------------------

    def derive(self, omega: int) -> "DiffPoly":
        """Apply the derivation D_omega (linear + Leibniz on monomials)."""
        self.model.check_operator(omega)
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            # D(v1^e1 * ... * vk^ek) = sum_i e_i v_i^{e_i-1} D(v_i) * rest
            for dv, e in mono.factors:
                exps = dict(mono.factors)
                if e == 1:
                    del exps[dv]
                else:
                    exps[dv] = e - 1
                ndv = DiffVar(dv.word.prepend(omega), dv.var)
                exps[ndv] = exps.get(ndv, 0) + 1
                new = Monomial.of(exps)
                out[new] = out.get(new, Fraction(0)) + c * e
        return DiffPoly(self.model, out)

    def rename(self, perm: Sequence[int]) -> "DiffPoly":
        """Substitute variable i by variable perm[i] everywhere.

        ``perm`` must be a permutation of the model's variable indices.
        """
        n = len(self.model.variables)
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of the variable indices")
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            exps = {
                DiffVar(dv.word, perm[dv.var]): e for dv, e in mono.factors
            }
            new = Monomial.of(exps)
            out[new] = out.get(new, Fraction(0)) + c
        return DiffPoly(self.model, out)

    # -- rendering ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for mono, c in self.terms():
            body = mono.render(self.model)
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"DiffPoly({self})"


def var(model: ModelConfig, i: int) -> DiffPoly:
    """The generator polynomial for base variable ``i`` (empty derivative word)."""
    model.check_variable(i)
    dv = DiffVar(DerWord.empty(model.commuting), i)
    return DiffPoly(model, {Monomial.of({dv: 1}): Fraction(1)})
