"""Independent check of the cubic ideal products: index of a lattice generated by
rational vectors, via gcd of maximal minors (no HNF shared with the C++ code)."""
import itertools
from fractions import Fraction
from math import gcd

import sympy as sp

P = [Fraction(c) for c in (-1, 7, -23, 1)]


def mulmod(a, b, p=P):
    n = len(p) - 1
    prod = [Fraction(0)] * (2 * n - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            prod[i + j] += ai * bj
    for k in range(2 * n - 2, n - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(n):
                prod[k - n + i] -= c * p[i]
    return prod[:n]


def covolume(vecs):
    """Covolume (relative to Z^n) of the lattice spanned by vecs."""
    n = len(vecs[0])
    den = 1
    for v in vecs:
        for c in v:
            den = den * c.denominator // gcd(den, c.denominator)
    ints = [[int(c * den) for c in v] for v in vecs]
    g = 0
    for rows in itertools.combinations(ints, n):
        g = gcd(g, int(sp.Matrix(rows).det()))
    return Fraction(g, den ** n)


F = Fraction
J = [[F(2), F(0), F(0)], [F(1), F(1), F(0)], [F(1), F(0), F(1)]]
Jinv = [[F(1), F(0), F(0)], [F(-1, 2), F(1, 2), F(0)], [F(1, 4), F(2, 4), F(1, 4)]]
R = [[F(1), F(0), F(0)], [F(0), F(1), F(0)], [F(1, 2), F(0), F(1, 2)]]
JJ = [mulmod(a, b) for a in J for b in Jinv]
print("[R : J J^-1] =", covolume(JJ) / covolume(R))
I = [[F(8), F(0), F(0)], [F(7), F(1), F(0)], [F(7), F(0), F(1)]]
Iinv = [[F(1), F(0), F(0)], [F(1, 2), F(1, 2), F(0)], [F(9, 16), F(2, 16), F(1, 16)]]
II = [mulmod(a, b) for a in I for b in Iinv]
print("[R : I I^-1] =", covolume(II) / covolume(R))
