"""Exact sparse multivariate polynomial arithmetic over the integers.

The ambient ring is Z[a0..an, b0..bm]: the coefficients of two univariate
polynomials f = sum a_i T^i and g = sum b_j T^j, treated as indeterminates.
All certificate checking reduces to identities between such polynomials, so
the arithmetic here is exact: coefficients are Python ints (arbitrary
precision) and a polynomial is a map from monomials to nonzero coefficients.
The zero polynomial has an empty term map, hence two polynomials are equal
iff their term maps are equal.

A monomial is a sorted tuple of (indeterminate, exponent) pairs with all
exponents positive.  The canonical text form orders terms by graded
lexicographic order (total degree first, then the dense exponent vector with
a-indeterminates before b-indeterminates, ascending index), highest term
first, e.g.

    -1*a0*b0 + 2*a1^2

and the same form parses back via MultiPoly.parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .rings import RingHandle


class MissingAssignment(KeyError):
    """Evaluation met an indeterminate that has no assigned value."""


class PolyParseError(ValueError):
    """A polynomial string is not in the canonical text form."""


@dataclass(frozen=True, order=True)
class Indeterminate:
    """One generator of the coefficient ring: a<index> or b<index>.

    The dataclass ordering (kind first, then index) is exactly the fixed
    variable order used for canonical serialization.
    """

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("a", "b"):
            raise ValueError(f"indeterminate kind must be 'a' or 'b', got {self.kind!r}")
        if self.index < 0:
            raise ValueError(f"indeterminate index must be >= 0, got {self.index}")

    @classmethod
    def a(cls, index: int) -> Indeterminate:
        return cls("a", index)

    @classmethod
    def b(cls, index: int) -> Indeterminate:
        return cls("b", index)

    @property
    def name(self) -> str:
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.name


# A monomial is a sorted tuple of (indeterminate, exponent) pairs; exponents
# are always positive, the empty tuple is the monomial 1.
Monomial = tuple[tuple[Indeterminate, int], ...]

ONE_MONOMIAL: Monomial = ()


def monomial_mul(x: Monomial, y: Monomial) -> Monomial:
    if not x:
        return y
    if not y:
        return x
    exps = dict(x)
    for ind, e in y:
        exps[ind] = exps.get(ind, 0) + e
    return tuple(sorted(exps.items()))


def monomial_degree(x: Monomial) -> int:
    return sum(e for _, e in x)


class MultiPoly:
    """Immutable sparse polynomial with integer coefficients.

    Stored as a dict mapping monomials to nonzero coefficients; every
    operation returns a fresh normalized value.  Integer operands are
    accepted by the arithmetic operators and treated as constants.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned: dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    cleaned[mono] = coeff
        self.terms = cleaned

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def const(cls, value: int) -> MultiPoly:
        return cls({ONE_MONOMIAL: value})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls.const(1)

    @classmethod
    def variable(cls, ind: Indeterminate) -> MultiPoly:
        return cls({((ind, 1),): 1})

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(monomial_degree(mono) for mono in self.terms)

    def indeterminates(self) -> set[Indeterminate]:
        out: set[Indeterminate] = set()
        for mono in self.terms:
            for ind, _ in mono:
                out.add(ind)
        return out

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"MultiPoly({self.render()!r})"

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value: object) -> MultiPoly | None:
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, int):
            return MultiPoly.const(value)
        return None

    def __add__(self, other: MultiPoly | int) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self.terms:
            return rhs
        if not rhs.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in rhs.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly({mono: -coeff for mono, coeff in self.terms.items()})

    def __sub__(self, other: MultiPoly | int) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: MultiPoly | int) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: MultiPoly | int) -> MultiPoly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not self.terms or not rhs.terms:
            return MultiPoly.zero()
        # Iterate the smaller operand on the outside; the single-term case
        # (scaling by a monomial) is by far the most common.
        left, right = self.terms, rhs.terms
        if len(left) < len(right):
            left, right = right, left
        out: dict[Monomial, int] = {}
        for mono_r, coeff_r in right.items():
            for mono_l, coeff_l in left.items():
                mono = monomial_mul(mono_l, mono_r)
                out[mono] = out.get(mono, 0) + coeff_l * coeff_r
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = MultiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- evaluation --------------------------------------------------------

    def evaluate(self, assignment: Mapping[Indeterminate, int], ring: RingHandle) -> int:
        """Homomorphic image of the polynomial in the target ring.

        Raises MissingAssignment if an occurring indeterminate has no value.
        """
        total = ring.zero
        for mono, coeff in self.terms.items():
            value = ring.canon(coeff)
            for ind, e in mono:
                if ind not in assignment:
                    raise MissingAssignment(ind.name)
                value = ring.mul(value, ring.power(ring.canon(assignment[ind]), e))
            total = ring.add(total, value)
        return total

    # -- canonical text form -----------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order: graded lexicographic, highest first."""
        inds = sorted(self.indeterminates())
        position = {ind: k for k, ind in enumerate(inds)}

        def key(item: tuple[Monomial, int]) -> tuple[int, tuple[int, ...]]:
            mono, _ = item
            vec = [0] * len(inds)
            for ind, e in mono:
                vec[position[ind]] = e
            return (monomial_degree(mono), tuple(vec))

        return sorted(self.terms.items(), key=key, reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for ind, e in mono:
                factors.append(ind.name if e == 1 else f"{ind.name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    _FACTOR_RE = re.compile(r"([ab])(\d+)(?:\^(\d+))?\Z")

    @classmethod
    def parse(cls, text: str) -> MultiPoly:
        """Parse the canonical text form produced by render."""
        text = text.strip()
        if text == "0":
            return cls.zero()
        terms: dict[Monomial, int] = {}
        for chunk in text.split(" + "):
            pieces = chunk.split("*")
            try:
                coeff = int(pieces[0])
            except ValueError:
                raise PolyParseError(f"bad coefficient in term {chunk!r}") from None
            if coeff == 0:
                raise PolyParseError(f"zero coefficient in term {chunk!r}")
            exps: dict[Indeterminate, int] = {}
            for piece in pieces[1:]:
                match = cls._FACTOR_RE.match(piece)
                if match is None:
                    raise PolyParseError(f"bad factor {piece!r} in term {chunk!r}")
                ind = Indeterminate(match.group(1), int(match.group(2)))
                e = int(match.group(3)) if match.group(3) else 1
                if e < 1:
                    raise PolyParseError(f"bad exponent in factor {piece!r}")
                if ind in exps:
                    raise PolyParseError(f"repeated indeterminate in term {chunk!r}")
                exps[ind] = e
            mono = tuple(sorted(exps.items()))
            if mono in terms:
                raise PolyParseError(f"repeated monomial in {text!r}")
            terms[mono] = coeff
        return cls(terms)


def avar(i: int) -> MultiPoly:
    """The polynomial a_i."""
    return MultiPoly.variable(Indeterminate.a(i))


def bvar(j: int) -> MultiPoly:
    """The polynomial b_j."""
    return MultiPoly.variable(Indeterminate.b(j))
