"""Induction digraph over ideal labels.

Given an inverse pair f*g = 1 (with concrete coefficients in Z/n, or with
indeterminate coefficients), every label D is classified:

* leaf: all of a_1..a_n lie in the ideal of D, so in particular any chosen
  nonconstant coefficient u = a_i0 does, with exponent 1;
* branch(i, j): i is the largest index with a_i outside the ideal and j the
  largest with b_j outside; the two children add a_i resp. b_j to the
  generators, and the parent's exponent is the sum of the children's.

Memoizing by label turns the underlying full binary tree into a small
acyclic digraph; labels grow strictly along edges, so construction
terminates.  The root exponent e is the number of leaves of the unfolded
tree and satisfies u^e = 0 for every choice of u.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .oracles import IdealLabel, generic_closure, mod_membership
from .poly import Indeterminate, MultiPoly, avar, bvar
from .rings import RingHandle


class NotAUnit(Exception):
    """The product f*g is not 1: carries the first violated index."""

    def __init__(self, k: int, value: object):
        expected = "1" if k == 0 else "0"
        super().__init__(f"c[{k}] = {value} (expected {expected})")
        self.k = k
        self.value = value


class InternalInconsistency(Exception):
    """Some a_i lies outside the ideal but every b_j lies inside.

    Impossible for a genuine inverse pair; reaching this means the unit
    check was skipped or violated.
    """


@dataclass(frozen=True)
class CaseTag:
    """Classification of a label: leaf, or branch(i, j) with the maximal
    indices of an a- and a b-coefficient outside the ideal."""

    i: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if (self.i is None) != (self.j is None):
            raise ValueError("branch tags need both indices")
        if self.i is not None and (self.i < 1 or self.j < 1):
            raise ValueError("branch indices start at 1")

    @classmethod
    def leaf(cls) -> CaseTag:
        return cls()

    @classmethod
    def branch(cls, i: int, j: int) -> CaseTag:
        return cls(i, j)

    @property
    def is_leaf(self) -> bool:
        return self.i is None

    def __str__(self) -> str:
        return "leaf" if self.is_leaf else f"branch({self.i},{self.j})"


@dataclass(frozen=True)
class ProblemInstance:
    """One run of the pipeline: degrees n, m plus the coefficient mode.

    Generic mode (ring is None) treats the coefficients as indeterminates
    subject only to the inverse-pair relations; concrete mode carries a
    modular ring and the coefficient lists a (length n+1) and b (length
    m+1), lowest degree first.  ``target`` optionally fixes the index i0 of
    the coefficient u = a_i0 under study; None means all of 1..n.
    """

    n: int
    m: int
    ring: RingHandle | None = None
    a: tuple[int, ...] | None = None
    b: tuple[int, ...] | None = None
    target: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")
        concrete_fields = (self.ring, self.a, self.b)
        if any(x is not None for x in concrete_fields) and not all(
            x is not None for x in concrete_fields
        ):
            raise ValueError("concrete instances need ring, a and b together")
        if self.ring is not None:
            if not self.ring.is_modular:
                raise ValueError("concrete instances run over a modular ring")
            if len(self.a) != self.n + 1 or len(self.b) != self.m + 1:
                raise ValueError("coefficient list lengths must be n+1 and m+1")
            if any(v != self.ring.canon(v) for v in self.a + self.b):
                raise ValueError("concrete coefficients must be canonical")
        if self.target is not None and not 1 <= self.target <= self.n:
            raise ValueError(f"target must lie in 1..{self.n}, got {self.target}")

    @classmethod
    def generic(cls, n: int, m: int, target: int | None = None) -> ProblemInstance:
        return cls(n=n, m=m, target=target)

    @classmethod
    def concrete(
        cls,
        modulus: int,
        f: Sequence[int],
        g: Sequence[int],
        target: int | None = None,
    ) -> ProblemInstance:
        """Build a concrete instance, reducing coefficients mod the modulus."""
        ring = RingHandle.mod(modulus)
        if len(f) < 2:
            raise ValueError("f needs a nonconstant coefficient (degree >= 1)")
        if len(g) < 1:
            raise ValueError("g needs at least its constant coefficient")
        return cls(
            n=len(f) - 1,
            m=len(g) - 1,
            ring=ring,
            a=tuple(ring.canon(v) for v in f),
            b=tuple(ring.canon(v) for v in g),
            target=target,
        )

    @property
    def is_generic(self) -> bool:
        return self.ring is None

    def targets(self) -> list[int]:
        return [self.target] if self.target is not None else list(range(1, self.n + 1))

    def value_of(self, ind: Indeterminate) -> int:
        if self.is_generic:
            raise ValueError("generic instances carry no coefficient values")
        return self.a[ind.index] if ind.kind == "a" else self.b[ind.index]

    def generator_values(self, label: IdealLabel) -> list[int]:
        return [self.value_of(ind) for ind in label.generators()]

    def coefficient_assignment(self) -> dict[Indeterminate, int]:
        """Assignment a_i -> value, b_j -> value for specializing polynomials."""
        if self.is_generic:
            raise ValueError("generic instances carry no coefficient values")
        out = {Indeterminate.a(i): v for i, v in enumerate(self.a)}
        out.update({Indeterminate.b(j): v for j, v in enumerate(self.b)})
        return out


def generic_coefficients(n: int, m: int) -> tuple[list[MultiPoly], list[MultiPoly]]:
    """The coefficient lists of f and g as indeterminate polynomials."""
    return [avar(i) for i in range(n + 1)], [bvar(j) for j in range(m + 1)]


def convolution(a: Sequence, b: Sequence, ring: RingHandle | None = None):
    """c_k = sum over i+j = k of a_i * b_j, for k = 0..n+m.

    With a ring, the inputs are ring values and the results are canonical;
    without one, the inputs are MultiPoly values.
    """
    if not a or not b:
        raise ValueError("coefficient lists must be nonempty")
    n, m = len(a) - 1, len(b) - 1
    if ring is not None:
        c = [0] * (n + m + 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                c[i + j] = ring.add(c[i + j], ring.mul(ai, bj))
        return c
    c_polys = [MultiPoly.zero() for _ in range(n + m + 1)]
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            c_polys[i + j] = c_polys[i + j] + ai * bj
    return c_polys


@lru_cache(maxsize=None)
def convolution_polys(n: int, m: int) -> tuple[MultiPoly, ...]:
    """The defining relation polynomials c_0..c_{n+m} in Z[a, b]."""
    a_polys, b_polys = generic_coefficients(n, m)
    return tuple(convolution(a_polys, b_polys))


def check_unit(c: Sequence[int]) -> None:
    """Require c_0 = 1 and c_k = 0 for k >= 1; raise NotAUnit otherwise."""
    if c[0] != 1:
        raise NotAUnit(0, c[0])
    for k in range(1, len(c)):
        if c[k] != 0:
            raise NotAUnit(k, c[k])


def case_split(
    label: IdealLabel,
    instance: ProblemInstance,
    early_stop_target: int | None = None,
) -> CaseTag:
    """Classify a label as leaf or branch(i, j) with maximal i, j.

    With ``early_stop_target`` set, the node is already a leaf once the
    studied coefficient itself lies in the ideal.
    """
    n, m = instance.n, instance.m
    if instance.is_generic:
        closure = generic_closure(label)

        def member(ind: Indeterminate) -> bool:
            return ind in closure

    else:
        ring = instance.ring
        gens = instance.generator_values(label)

        def member(ind: Indeterminate) -> bool:
            return mod_membership(ring, gens, instance.value_of(ind)).member

    if early_stop_target is not None and member(Indeterminate.a(early_stop_target)):
        return CaseTag.leaf()
    missing_a = [i for i in range(1, n + 1) if not member(Indeterminate.a(i))]
    if not missing_a:
        return CaseTag.leaf()
    missing_b = [j for j in range(1, m + 1) if not member(Indeterminate.b(j))]
    if not missing_b:
        raise InternalInconsistency(
            f"a{max(missing_a)} lies outside the ideal of {label.render()} "
            "but every b does not; the instance is not an inverse pair"
        )
    return CaseTag.branch(max(missing_a), max(missing_b))


@dataclass(frozen=True)
class DigraphNode:
    tag: CaseTag
    children: tuple[IdealLabel, ...]
    exponent: int


@dataclass
class Digraph:
    """Memoized induction structure: one node per reached label."""

    n: int
    m: int
    root: IdealLabel
    nodes: dict[IdealLabel, DigraphNode]
    generic: bool

    def edges(self) -> list[tuple[IdealLabel, IdealLabel]]:
        out = []
        for label in sorted(self.nodes):
            for child in self.nodes[label].children:
                out.append((label, child))
        return out


def grow_digraph(instance: ProblemInstance, early_stop: bool = False) -> Digraph:
    """Depth-first construction keyed by label.

    Children add one generator each, so labels strictly grow along edges
    and the recursion terminates.  Leaves carry exponent 1, branches the
    sum of their children's exponents.
    """
    early_target = None
    if early_stop:
        if instance.target is None:
            raise ValueError("early stopping needs a fixed target index")
        early_target = instance.target
    nodes: dict[IdealLabel, DigraphNode] = {}

    def build(label: IdealLabel) -> int:
        node = nodes.get(label)
        if node is not None:
            return node.exponent
        tag = case_split(label, instance, early_stop_target=early_target)
        if tag.is_leaf:
            nodes[label] = DigraphNode(tag, (), 1)
            return 1
        left = label.add(Indeterminate.a(tag.i))
        right = label.add(Indeterminate.b(tag.j))
        exponent = build(left) + build(right)
        nodes[label] = DigraphNode(tag, (left, right), exponent)
        return exponent

    root = IdealLabel.root(instance.n, instance.m)
    build(root)
    return Digraph(instance.n, instance.m, root, nodes, instance.is_generic)


def root_exponent(digraph: Digraph) -> tuple[int, dict[IdealLabel, int]]:
    """Recompute the exponent recursion from the digraph structure.

    Returns the root value together with the per-node exponent map; the
    values agree with the exponents stored at construction time.
    """
    memo: dict[IdealLabel, int] = {}

    def solve(label: IdealLabel) -> int:
        if label in memo:
            return memo[label]
        node = digraph.nodes[label]
        value = 1 if not node.children else sum(solve(c) for c in node.children)
        memo[label] = value
        return value

    for label in digraph.nodes:
        solve(label)
    return memo[digraph.root], memo


def structural_metrics(digraph: Digraph) -> dict[str, int]:
    """Size data of the digraph.

    height / shortest_path are the longest / shortest root-to-sink path
    lengths; tree_leaf_count is the leaf count of the unfolded binary tree,
    i.e. the root exponent.
    """
    longest: dict[IdealLabel, int] = {}
    shortest: dict[IdealLabel, int] = {}

    def solve(label: IdealLabel) -> None:
        if label in longest:
            return
        node = digraph.nodes[label]
        if not node.children:
            longest[label] = 0
            shortest[label] = 0
            return
        for child in node.children:
            solve(child)
        longest[label] = 1 + max(longest[c] for c in node.children)
        shortest[label] = 1 + min(shortest[c] for c in node.children)

    solve(digraph.root)
    tree_leaves, _ = root_exponent(digraph)
    leaf_count = sum(1 for node in digraph.nodes.values() if not node.children)
    return {
        "height": longest[digraph.root],
        "shortest_path": shortest[digraph.root],
        "vertex_count": len(digraph.nodes),
        "leaf_count": leaf_count,
        "tree_leaf_count": tree_leaves,
    }
