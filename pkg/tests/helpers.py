"""Brute-force oracles shared by the test suite.

Everything here is intentionally independent of the package internals:
ideals are enumerated element by element, radicals by powering, the grid
exponent by direct dynamic programming, and inverse pairs by power-series
division.  These are the reference values the implementation is checked
against.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import gcd


@lru_cache(maxsize=None)
def ideal_elements(modulus: int, generators: tuple[int, ...]) -> frozenset[int]:
    """The ideal of Z/modulus generated by the given values, enumerated as
    the closure of {0} under adding generators."""
    members = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = (x + g) % modulus
            if y not in members:
                members.add(y)
                frontier.append(y)
    return frozenset(members)


@lru_cache(maxsize=None)
def radical_elements(modulus: int, generators: tuple[int, ...]) -> frozenset[int]:
    """All x with x^e inside the ideal for some e <= modulus."""
    ideal = ideal_elements(modulus, generators)
    out = set()
    for x in range(modulus):
        for e in range(1, modulus + 1):
            if pow(x, e, modulus) in ideal:
                out.add(x)
                break
    return frozenset(out)


def grid_exponent(n: int, m: int) -> int:
    """Dynamic programming over the exponent grid: boundary cells are 1,
    interior cells are the sum of the two neighbours with one fewer
    outstanding coefficient."""
    if n == 0 or m == 0:
        return 1
    table = [[0] * (m + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        for p in range(m + 1):
            table[k][p] = 1 if k == 0 or p == 0 else table[k - 1][p] + table[k][p - 1]
    return table[n][m]


def polynomial_inverse(modulus: int, f: tuple[int, ...], max_terms: int = 64) -> tuple[int, ...] | None:
    """The inverse of f in Z/modulus[T], or None.

    Power-series division: b_0 = a_0^(-1) and
    b_k = -a_0^(-1) * sum_{i=1..min(k,n)} a_i b_{k-i}.  The series is the
    unique inverse; f is a unit in the polynomial ring iff it terminates,
    detected by deg(f) consecutive zero coefficients.
    """
    a0 = f[0] % modulus
    if gcd(a0, modulus) != 1:
        return None
    n = len(f) - 1
    inv_a0 = pow(a0, -1, modulus)
    b = [inv_a0]
    zeros = 0
    for k in range(1, max_terms + 1):
        s = sum(f[i] * b[k - i] for i in range(1, min(k, n) + 1))
        bk = (-inv_a0 * s) % modulus
        b.append(bk)
        zeros = zeros + 1 if bk == 0 else 0
        if zeros >= max(n, 1):
            break
    else:
        return None
    while b and b[-1] == 0:
        b.pop()
    if not b:
        return None
    # sanity: the convolution must be the unit vector
    conv = [0] * (len(f) + len(b) - 1)
    for i, ai in enumerate(f):
        for j, bj in enumerate(b):
            conv[i + j] = (conv[i + j] + ai * bj) % modulus
    if conv[0] != 1 or any(conv[1:]):
        return None
    return tuple(b)


def unit_pairs(modulus: int, max_deg_f: int = 3, max_deg_g: int = 3):
    """All inverse pairs (f, g) over Z/modulus with the stated true degrees.

    f runs over every coefficient list of degree 1..max_deg_f (nonzero
    leading coefficient); its inverse is unique, so this exhausts the pairs
    with deg g <= max_deg_g.
    """
    for n in range(1, max_deg_f + 1):
        for body in product(range(modulus), repeat=n - 1):
            for a0 in range(modulus):
                if gcd(a0, modulus) != 1:
                    continue
                for lead in range(1, modulus):
                    f = (a0, *body, lead)
                    g = polynomial_inverse(modulus, f)
                    if g is not None and len(g) - 1 <= max_deg_g:
                        yield f, g
