"""Ideal membership oracles.

Two oracles back the case analysis of the induction:

* ``mod_membership`` decides membership in a finitely generated ideal of
  Z/n exactly.  The ideal generated by values g_1..g_t equals the ideal of
  gcd(g_1, .., g_t, n), so membership is a divisibility test and a witness
  (an explicit linear combination of the generators) falls out of extended
  gcd back-substitution.  The empty generator list denotes the zero ideal.

* ``generic_closure`` handles the indeterminate-coefficient situation,
  where no concrete values exist.  Given a generator set D drawn from the
  nonconstant coefficients a_1..a_n, b_1..b_m of an inverse pair f*g = 1,
  it computes the least set closed under the two derivation rules forced
  by the convolution identities:

      a_i enters if b_1..b_min(i,m) are all in,
      b_j enters if a_1..a_min(j,n) are all in,

  together with a well-founded derivation record for each admitted
  element, from which an explicit polynomial-identity witness can later be
  rebuilt.  Memberships reported here are eventually discharged as
  verified identities by the certificate layer; non-memberships only shape
  the search and are never load-bearing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .poly import Indeterminate
from .rings import RingHandle, xgcd


@dataclass(frozen=True)
class MembershipDecision:
    """Outcome of a membership test.

    When ``member`` is true and the oracle can produce one, ``witness``
    holds one ring coefficient per input generator (positionally), such
    that r = sum(witness[t] * generators[t]) holds exactly in the ring.
    The closure oracle leaves ``witness`` as None; its witnesses involve
    the defining relations and live in the certificate layer.
    """

    member: bool
    witness: tuple[int, ...] | None = None


def mod_membership(ring: RingHandle, generators: Sequence[int], r: int) -> MembershipDecision:
    """Decide r in (generators) over Z/n, with an explicit witness.

    The ideal equals (g) for g = gcd of the generators and the modulus, so
    r is a member iff g divides r.  The witness coefficients reproduce r
    exactly: they are the Bezout coefficients of the fold, scaled by r/g.
    """
    if not ring.is_modular:
        raise ValueError("mod_membership requires a modular ring")
    n = ring.modulus
    assert n is not None
    gens = [g % n for g in generators]
    value = r % n

    # Fold the generators into gcd(gens, n), maintaining integer Bezout
    # coefficients for the generator part (the n-multiple part vanishes
    # mod n and is not tracked).
    g = n
    coeffs = [0] * len(gens)
    for idx, gen in enumerate(gens):
        g_new, s, t = xgcd(g, gen)
        coeffs = [s * c for c in coeffs]
        coeffs[idx] = t
        g = g_new

    if value % g != 0:
        return MembershipDecision(member=False)
    scale = value // g
    witness = tuple((scale * c) % n for c in coeffs)
    return MembershipDecision(member=True, witness=witness)


@dataclass(frozen=True, order=True)
class IdealLabel:
    """A generator set D among {a_1..a_n, b_1..b_m}, as a pair of bitmasks.

    a_bits has length n and a_bits[i-1] == 1 iff a_i is a generator;
    likewise b_bits for the b side.  Labels of one problem instance form a
    finite lattice under bitwise inclusion.
    """

    a_bits: tuple[int, ...]
    b_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        for bits in (self.a_bits, self.b_bits):
            if any(bit not in (0, 1) for bit in bits):
                raise ValueError(f"label bits must be 0 or 1, got {bits}")

    @classmethod
    def root(cls, n: int, m: int) -> IdealLabel:
        """The empty generator set (the zero ideal's label)."""
        return cls((0,) * n, (0,) * m)

    @classmethod
    def from_elements(cls, n: int, m: int, elements: Iterable[Indeterminate]) -> IdealLabel:
        a_bits = [0] * n
        b_bits = [0] * m
        for ind in elements:
            bits = a_bits if ind.kind == "a" else b_bits
            if not 1 <= ind.index <= len(bits):
                raise ValueError(f"{ind} out of range for n={n}, m={m}")
            bits[ind.index - 1] = 1
        return cls(tuple(a_bits), tuple(b_bits))

    @property
    def n(self) -> int:
        return len(self.a_bits)

    @property
    def m(self) -> int:
        return len(self.b_bits)

    def has(self, ind: Indeterminate) -> bool:
        bits = self.a_bits if ind.kind == "a" else self.b_bits
        return 1 <= ind.index <= len(bits) and bits[ind.index - 1] == 1

    def add(self, ind: Indeterminate) -> IdealLabel:
        """The label with ind's bit set."""
        bits = list(self.a_bits if ind.kind == "a" else self.b_bits)
        if not 1 <= ind.index <= len(bits):
            raise ValueError(f"{ind} out of range for label {self.render()}")
        bits[ind.index - 1] = 1
        if ind.kind == "a":
            return IdealLabel(tuple(bits), self.b_bits)
        return IdealLabel(self.a_bits, tuple(bits))

    def generators(self) -> tuple[Indeterminate, ...]:
        out = [Indeterminate.a(i + 1) for i, bit in enumerate(self.a_bits) if bit]
        out.extend(Indeterminate.b(j + 1) for j, bit in enumerate(self.b_bits) if bit)
        return tuple(out)

    def issubset(self, other: IdealLabel) -> bool:
        return (
            all(x <= y for x, y in zip(self.a_bits, other.a_bits, strict=True))
            and all(x <= y for x, y in zip(self.b_bits, other.b_bits, strict=True))
        )

    def meet(self, other: IdealLabel) -> IdealLabel:
        """Bitwise intersection: the greatest lower bound in the lattice."""
        return IdealLabel(
            tuple(x & y for x, y in zip(self.a_bits, other.a_bits, strict=True)),
            tuple(x & y for x, y in zip(self.b_bits, other.b_bits, strict=True)),
        )

    def render(self) -> str:
        a_text = "".join(str(bit) for bit in self.a_bits)
        b_text = "".join(str(bit) for bit in self.b_bits)
        if self.m == 0:
            return f"({a_text})"
        return f"({a_text},{b_text})"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Derivation:
    """Why one element belongs to a closure.

    rule is "generator" for elements of D itself, or "relation" when the
    element was forced in by the convolution rule; premises lists the
    opposite-family elements the rule consumed (empty when the rule's
    premise range is empty, e.g. any a_i when m = 0).  Premises are always
    admitted strictly earlier, so derivations are well-founded.
    """

    element: Indeterminate
    rule: str
    premises: tuple[Indeterminate, ...]


@lru_cache(maxsize=None)
def generic_closure(label: IdealLabel) -> dict[Indeterminate, Derivation]:
    """Least fixed point of the derivation rules, with derivation records.

    Returns a dict (treat as read-only: results are cached) mapping each
    member of the closure to its derivation, in admission order.  The
    closure is monotone and idempotent in the generator set.
    """
    n, m = label.n, label.m
    derivs: dict[Indeterminate, Derivation] = {}
    for gen in label.generators():
        derivs[gen] = Derivation(gen, "generator", ())
    changed = True
    while changed:
        changed = False
        for i in range(1, n + 1):
            element = Indeterminate.a(i)
            if element in derivs:
                continue
            premises = tuple(Indeterminate.b(q) for q in range(1, min(i, m) + 1))
            if all(p in derivs for p in premises):
                derivs[element] = Derivation(element, "relation", premises)
                changed = True
        for j in range(1, m + 1):
            element = Indeterminate.b(j)
            if element in derivs:
                continue
            premises = tuple(Indeterminate.a(p) for p in range(1, min(j, n) + 1))
            if all(p in derivs for p in premises):
                derivs[element] = Derivation(element, "relation", premises)
                changed = True
    return derivs


def generic_membership(label: IdealLabel, element: Indeterminate) -> MembershipDecision:
    """Membership of a nonconstant coefficient, decided by the closure.

    No linear-combination witness is attached here: closure memberships
    are witnessed by polynomial identities built in the certificate layer.
    """
    return MembershipDecision(member=element in generic_closure(label))
