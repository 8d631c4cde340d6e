"""Bol algebras by structure constants: axiom validation, morphisms,
brute-force enumeration, and the shipped fixture family.

A structure is a skew bilinear product ``x*y`` plus a trilinear bracket
``[x,y,z]`` skew in its first two arguments, subject to five identities
(tags in `validate_bol`):

  star-skew            x1*x2 + x2*x1 = 0
  bracket-skew         [x1,x2,x3] + [x2,x1,x3] = 0
  bracket-cyclic       [x1,x2,x3] + [x2,x3,x1] + [x3,x1,x2] = 0
  mixed-product        [x1,x2,y1*y2] = [x1,x2,y1]*y2 + y1*[x1,x2,y2]
                         + [y1,y2,x1*x2] - (y1*y2)*(x1*x2)
  bracket-derivation   [x1,x2,[y1,y2,y3]] = [[x1,x2,y1],y2,y3]
                         + [y1,[x1,x2,y2],y3] + [y1,y2,[x1,x2,y3]]

All identities are multilinear, so checking them on basis tuples is complete.
Full tensors are stored; skewness is validated, never assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import bruteforce
from .core import DEFAULT_ENUMERATION_BOUND, DEFAULT_RESULT_BOUND, ValidationReport
from .errors import UnsupportedEnumerationError, UsageError
from .exactlin import (Matrix, vec_add, vec_is_zero, vec_scale, vec_sub, zero_vec)

__all__ = [
    "BolAlgebra", "evaluate_products", "validate_bol", "is_morphism",
    "enumerate_automorphisms", "enumerate_bol_algebras",
    "zero_algebra", "z1", "z2", "z3", "s2", "h3",
]


@dataclass(frozen=True)
class BolAlgebra:
    """Structure constants: bil[i][j][k] and tri[i][j][k][l] index the
    coefficient of e_k in e_i*e_j and of e_l in [e_i,e_j,e_k]."""

    field: object
    dim: int
    bil: tuple
    tri: tuple

    def __post_init__(self):
        n = self.dim
        if len(self.bil) != n or any(len(r) != n or any(len(v) != n for v in r)
                                     for r in self.bil):
            raise UsageError("bilinear tensor has wrong shape")
        if len(self.tri) != n or any(
                len(r) != n or any(len(c) != n or any(len(v) != n for v in c)
                                   for c in r) for r in self.tri):
            raise UsageError("trilinear tensor has wrong shape")

    # -- evaluation ----------------------------------------------------------
    def star_basis(self, i, j) -> tuple:
        return self.bil[i][j]

    def bracket_basis(self, i, j, k) -> tuple:
        return self.tri[i][j][k]

    def star(self, x, y) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise UsageError("element has wrong dimension")
        out = zero_vec(self.field, n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    out = vec_add(out, vec_scale(xi * yj, self.bil[i][j]))
        return out

    def bracket(self, x, y, z) -> tuple:
        n = self.dim
        if len(x) != n or len(y) != n or len(z) != n:
            raise UsageError("element has wrong dimension")
        out = zero_vec(self.field, n)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, zk in enumerate(z):
                    if zk:
                        out = vec_add(out, vec_scale(c * zk, self.tri[i][j][k]))
        return out

    def is_abelian(self) -> bool:
        return (all(vec_is_zero(v) for r in self.bil for v in r)
                and all(vec_is_zero(v) for r in self.tri for c in r for v in c))

    def conjugate(self, g: Matrix) -> "BolAlgebra":
        """Structure constants in the basis given by the columns of g."""
        ginv = g.inverse()
        if ginv is None:
            raise UsageError("basis change must be invertible")
        cols = [g.col(i) for i in range(self.dim)]
        n = self.dim
        bil = tuple(tuple(ginv.apply(self.star(cols[i], cols[j]))
                          for j in range(n)) for i in range(n))
        tri = tuple(tuple(tuple(ginv.apply(self.bracket(cols[i], cols[j], cols[k]))
                                for k in range(n)) for j in range(n)) for i in range(n))
        return BolAlgebra(self.field, n, bil, tri)

    def int_arrays(self):
        """(bil, tri) as numpy residue arrays; prime fields only."""
        if not self.field.is_prime_field:
            raise UsageError("integer tensors exist only over prime fields")
        n = self.dim
        bil = np.array([[[int(c.value) for c in v] for v in r] for r in self.bil],
                       dtype=np.int64)
        tri = np.array([[[[int(c.value) for c in v] for v in row] for row in r]
                        for r in self.tri], dtype=np.int64)
        return bil, tri


def evaluate_products(a: BolAlgebra, x, y, z=None) -> tuple:
    """x*y, or [x,y,z] when z is given."""
    return a.star(x, y) if z is None else a.bracket(x, y, z)


def validate_bol(a: BolAlgebra) -> ValidationReport:
    """Check all five axioms on every basis tuple."""
    n = a.dim
    rep = ValidationReport()
    for i in range(n):
        for j in range(i, n):
            r = vec_add(a.bil[i][j], a.bil[j][i])
            if not vec_is_zero(r):
                rep.add("star-skew", (i, j), r)
            for k in range(n):
                r = vec_add(a.tri[i][j][k], a.tri[j][i][k])
                if not vec_is_zero(r):
                    rep.add("bracket-skew", (i, j, k), r)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = vec_add(vec_add(a.tri[i][j][k], a.tri[j][k][i]), a.tri[k][i][j])
                if not vec_is_zero(r):
                    rep.add("bracket-cyclic", (i, j, k), r)
    bracket_of = _linear_bracket_applier(a)
    star_of = _linear_star_applier(a)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    r = bracket_of(i, j, a.bil[k][l])
                    r = vec_sub(r, star_of(a.tri[i][j][k], l, right=True))
                    r = vec_sub(r, star_of(a.tri[i][j][l], k, right=False))
                    r = vec_sub(r, bracket_of(k, l, a.bil[i][j]))
                    r = vec_add(r, a.star(a.bil[k][l], a.bil[i][j]))
                    if not vec_is_zero(r):
                        rep.add("mixed-product", (i, j, k, l), r)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    for m in range(n):
                        r = bracket_of(i, j, a.tri[k][l][m])
                        r = vec_sub(r, _bracket_first(a, a.tri[i][j][k], l, m))
                        r = vec_sub(r, _bracket_middle(a, k, a.tri[i][j][l], m))
                        r = vec_sub(r, bracket_of(k, l, a.tri[i][j][m]))
                        if not vec_is_zero(r):
                            rep.add("bracket-derivation", (i, j, k, l, m), r)
    return rep


def _linear_bracket_applier(a):
    def apply(i, j, vec):
        out = zero_vec(a.field, a.dim)
        for q, c in enumerate(vec):
            if c:
                out = vec_add(out, vec_scale(c, a.tri[i][j][q]))
        return out
    return apply


def _linear_star_applier(a):
    def apply(vec, k, right):
        out = zero_vec(a.field, a.dim)
        for q, c in enumerate(vec):
            if c:
                out = vec_add(out, vec_scale(c, a.bil[q][k] if right else a.bil[k][q]))
        return out
    return apply


def _bracket_first(a, vec, l, m):
    out = zero_vec(a.field, a.dim)
    for q, c in enumerate(vec):
        if c:
            out = vec_add(out, vec_scale(c, a.tri[q][l][m]))
    return out


def _bracket_middle(a, k, vec, m):
    out = zero_vec(a.field, a.dim)
    for q, c in enumerate(vec):
        if c:
            out = vec_add(out, vec_scale(c, a.tri[k][q][m]))
    return out


def is_morphism(f: Matrix, a1: BolAlgebra, a2: BolAlgebra) -> bool:
    """f(x*y) = f(x)*f(y) and f([x,y,z]) = [f(x),f(y),f(z)] on all basis tuples."""
    if a1.field != a2.field or f.field != a1.field:
        raise UsageError("morphism check needs a common field")
    if f.cols != a1.dim or f.rows != a2.dim:
        raise UsageError("morphism matrix has wrong shape")
    cols = [f.col(i) for i in range(a1.dim)]
    n = a1.dim
    for i in range(n):
        for j in range(n):
            if f.apply(a1.bil[i][j]) != a2.star(cols[i], cols[j]):
                return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if f.apply(a1.tri[i][j][k]) != a2.bracket(cols[i], cols[j], cols[k]):
                    return False
    return True


def enumerate_automorphisms(a: BolAlgebra,
                            budget: int = DEFAULT_ENUMERATION_BOUND,
                            max_results: int = DEFAULT_RESULT_BOUND) -> list:
    """All invertible morphisms a -> a, in lexicographic candidate order."""
    arr = automorphism_int_arrays(a, budget)
    if arr.shape[0] > max_results:
        raise UnsupportedEnumerationError(
            f"{arr.shape[0]} automorphisms exceed the result bound {max_results}")
    return [int_matrix(a.field, g) for g in arr]


def automorphism_int_arrays(a: BolAlgebra, budget: int = DEFAULT_ENUMERATION_BOUND):
    """Automorphism matrices as a (k, n, n) integer array (prime fields)."""
    if not a.field.is_prime_field:
        raise UnsupportedEnumerationError("automorphism enumeration needs a finite field")
    bil, tri = a.int_arrays()
    return bruteforce.automorphism_arrays(bil, tri, a.field.p, budget)


def int_matrix(field, arr) -> Matrix:
    return Matrix.from_int_rows(field, [[int(v) for v in row] for row in arr])


def algebra_from_int_arrays(field, bil, tri) -> BolAlgebra:
    n = bil.shape[0]
    s = field.scalar
    return BolAlgebra(
        field, n,
        tuple(tuple(tuple(s(int(bil[i, j, k])) for k in range(n)) for j in range(n))
              for i in range(n)),
        tuple(tuple(tuple(tuple(s(int(tri[i, j, k, l])) for l in range(n))
                          for k in range(n)) for j in range(n)) for i in range(n)))


def enumerate_bol_algebras(field, dim: int, tri_zero: bool = False,
                           budget: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[BolAlgebra]:
    """All valid structures on field^dim, deduplicated by construction.

    Bounds: dim <= 2 for the full tensor space, dim <= 3 with tri_zero.
    """
    if not field.is_prime_field:
        raise UnsupportedEnumerationError("algebra enumeration needs a finite field")
    if (tri_zero and dim > 3) or (not tri_zero and dim > 2):
        raise UnsupportedEnumerationError(
            f"algebra enumeration supports dim <= {'3 with tri_zero' if tri_zero else '2'}")
    for bil, tri in bruteforce.enumerate_valid_tensors(dim, field.p, tri_zero, budget):
        yield algebra_from_int_arrays(field, bil, tri)


# ---------------------------------------------------------------------------
# fixture family

def zero_algebra(field, dim: int) -> BolAlgebra:
    z = zero_vec(field, dim)
    bil = tuple(tuple(z for _ in range(dim)) for _ in range(dim))
    tri = tuple(tuple(tuple(z for _ in range(dim)) for _ in range(dim)) for _ in range(dim))
    return BolAlgebra(field, dim, bil, tri)


def z1(field) -> BolAlgebra:
    return zero_algebra(field, 1)


def z2(field) -> BolAlgebra:
    return zero_algebra(field, 2)


def z3(field) -> BolAlgebra:
    return zero_algebra(field, 3)


def _with_bil_entry(a: BolAlgebra, i, j, vec) -> BolAlgebra:
    bil = [list(r) for r in a.bil]
    bil[i][j] = tuple(vec)
    bil[j][i] = tuple(-c for c in vec)
    return BolAlgebra(a.field, a.dim, tuple(tuple(r) for r in bil), a.tri)


def s2(field) -> BolAlgebra:
    """dim 2: e1*e2 = e1, trilinear zero."""
    e1 = (field.one, field.zero)
    return _with_bil_entry(zero_algebra(field, 2), 0, 1, e1)


def h3(field) -> BolAlgebra:
    """dim 3: e1*e2 = e3, everything else zero."""
    e3 = (field.zero, field.zero, field.one)
    return _with_bil_entry(zero_algebra(field, 3), 0, 1, e3)
