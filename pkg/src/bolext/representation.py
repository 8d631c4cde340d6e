"""Modules over a Bol algebra: the action triple (mu, theta, D), the six
module identities, the semidirect sum, and pseudoderivations.

Identity tags reported by `validate_representation`:

  rep-d-theta        D(x1,x2) + theta(x1,x2) - theta(x2,x1) = 0
  rep-d-mu           [D(x1,x2), mu(y)] = mu([x1,x2,y]) - theta(y, x1*x2)
                       + mu(x1*x2) mu(y)
  rep-theta-star     theta(x, y1*y2) = mu(y1) theta(x,y2) - mu(y2) theta(x,y1)
                       - (D(y1,y2) - mu(y1*y2)) mu(x)
  rep-d-d            [D(x1,x2), D(y1,y2)] = D([x1,x2,y1], y2) + D(y1, [x1,x2,y2])
  rep-d-theta-comm   [D(x1,x2), theta(y1,y2)] = theta([x1,x2,y1], y2)
                       + theta(y1, [x1,x2,y2])
  rep-theta-bracket  theta(x, [y1,y2,y3]) = theta(y2,y3) theta(x,y1)
                       - theta(y1,y3) theta(x,y2) + D(y1,y2) theta(x,y3)

D is stored explicitly and required skew; rep-d-theta is validated rather
than used to derive D.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import bruteforce
from .bol import BolAlgebra
from .core import DEFAULT_ENUMERATION_BOUND, ValidationReport
from .errors import UnsupportedEnumerationError, UsageError
from .exactlin import Matrix, vec_add, vec_sub, zero_vec

__all__ = [
    "Representation", "validate_representation", "semidirect_product",
    "is_pseudoderivation", "trivial_representation", "r_s2",
    "semidirect_iff_census", "IffCensus",
]


@dataclass(frozen=True)
class Representation:
    """Action data on field^module_dim: mu[i], theta[i][j], dd[i][j] are
    module_dim x module_dim matrices (images of basis tuples)."""

    field: object
    algebra_dim: int
    module_dim: int
    mu: tuple
    theta: tuple
    dd: tuple

    def __post_init__(self):
        n, m = self.algebra_dim, self.module_dim
        if len(self.mu) != n:
            raise UsageError("mu needs one matrix per algebra basis vector")
        for mat in self.mu:
            self._check(mat, m)
        for grid in (self.theta, self.dd):
            if len(grid) != n or any(len(r) != n for r in grid):
                raise UsageError("action grid has wrong shape")
            for r in grid:
                for mat in r:
                    self._check(mat, m)
        for i in range(n):
            for j in range(n):
                if not (self.dd[i][j] + self.dd[j][i]).is_zero():
                    raise UsageError("D must be alternating")

    def _check(self, mat, m):
        if not isinstance(mat, Matrix) or mat.rows != m or mat.cols != m \
                or mat.field != self.field:
            raise UsageError("action matrix has wrong shape or field")

    # linear/bilinear extensions to arbitrary coordinates
    def mu_op(self, x) -> Matrix:
        out = Matrix.zeros(self.field, self.module_dim, self.module_dim)
        for i, c in enumerate(x):
            if c:
                out = out + self.mu[i].scale(c)
        return out

    def theta_op(self, x, y) -> Matrix:
        out = Matrix.zeros(self.field, self.module_dim, self.module_dim)
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if cj:
                    out = out + self.theta[i][j].scale(ci * cj)
        return out

    def dd_op(self, x, y) -> Matrix:
        out = Matrix.zeros(self.field, self.module_dim, self.module_dim)
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if cj:
                    out = out + self.dd[i][j].scale(ci * cj)
        return out


def trivial_representation(field, algebra_dim: int, module_dim: int = 1) -> Representation:
    """All actions zero."""
    z = Matrix.zeros(field, module_dim, module_dim)
    n = algebra_dim
    return Representation(field, n, module_dim,
                          (z,) * n,
                          tuple((z,) * n for _ in range(n)),
                          tuple((z,) * n for _ in range(n)))


def r_s2(field) -> Representation:
    """One-dimensional module over the s2 fixture: mu(e2) = 1, the rest zero."""
    z = Matrix.zeros(field, 1, 1)
    one = Matrix.identity(field, 1)
    return Representation(field, 2, 1, (z, one),
                          ((z, z), (z, z)), ((z, z), (z, z)))


def _require_compatible(a: BolAlgebra, r: Representation):
    if r.algebra_dim != a.dim or r.field != a.field:
        raise UsageError("representation does not match the algebra")


def validate_representation(a: BolAlgebra, r: Representation) -> ValidationReport:
    """Check the six module identities on all basis tuples."""
    _require_compatible(a, r)
    n = a.dim
    rep = ValidationReport()

    def lin_mu(vec):
        return r.mu_op(vec)

    def theta_second(i, vec):
        # theta(e_i, vec) by linearity in the second slot
        out = Matrix.zeros(r.field, r.module_dim, r.module_dim)
        for q, c in enumerate(vec):
            if c:
                out = out + r.theta[i][q].scale(c)
        return out

    def grid_lin(grid, vec, j, first):
        # grid(vec, e_j) or grid(e_j, vec)
        out = Matrix.zeros(r.field, r.module_dim, r.module_dim)
        for q, c in enumerate(vec):
            if c:
                out = out + (grid[q][j] if first else grid[j][q]).scale(c)
        return out

    for i in range(n):
        for j in range(n):
            res = r.dd[i][j] + r.theta[i][j] - r.theta[j][i]
            if not res.is_zero():
                rep.add("rep-d-theta", (i, j), _flat(res))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = (r.dd[i][j] * r.mu[k] - r.mu[k] * r.dd[i][j]
                       - lin_mu(a.tri[i][j][k]) + theta_second(k, a.bil[i][j])
                       - lin_mu(a.bil[i][j]) * r.mu[k])
                if not res.is_zero():
                    rep.add("rep-d-mu", (i, j, k), _flat(res))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                res = (theta_second(i, a.bil[j][k])
                       - r.mu[j] * r.theta[i][k] + r.mu[k] * r.theta[i][j]
                       + (r.dd[j][k] - lin_mu(a.bil[j][k])) * r.mu[i])
                if not res.is_zero():
                    rep.add("rep-theta-star", (i, j, k), _flat(res))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    res = (r.dd[i][j] * r.dd[k][l] - r.dd[k][l] * r.dd[i][j]
                           - grid_lin(r.dd, a.tri[i][j][k], l, first=True)
                           - grid_lin(r.dd, a.tri[i][j][l], k, first=False))
                    if not res.is_zero():
                        rep.add("rep-d-d", (i, j, k, l), _flat(res))
                    res = (r.dd[i][j] * r.theta[k][l] - r.theta[k][l] * r.dd[i][j]
                           - grid_lin(r.theta, a.tri[i][j][k], l, first=True)
                           - grid_lin(r.theta, a.tri[i][j][l], k, first=False))
                    if not res.is_zero():
                        rep.add("rep-d-theta-comm", (i, j, k, l), _flat(res))
                    res = (theta_second(i, a.tri[j][k][l])
                           - r.theta[k][l] * r.theta[i][j]
                           + r.theta[j][l] * r.theta[i][k]
                           - r.dd[j][k] * r.theta[i][l])
                    if not res.is_zero():
                        rep.add("rep-theta-bracket", (i, j, k, l), _flat(res))
    return rep


def _flat(mat: Matrix) -> tuple:
    return tuple(c for row in mat.entries for c in row)


def semidirect_product(a: BolAlgebra, r: Representation) -> BolAlgebra:
    """Structure on a + module with
    (x+u)*(y+v) = x*y + mu(x)v - mu(y)u  and
    [x+u,y+v,z+w] = [x,y,z] + theta(y,z)u - theta(x,z)v + D(x,y)w.
    """
    _require_compatible(a, r)
    n, m = a.dim, r.module_dim
    d = n + m
    field = a.field
    z = zero_vec(field, d)

    def emb_b(vec):
        return tuple(vec) + zero_vec(field, m)

    def emb_v(vec):
        return zero_vec(field, n) + tuple(vec)

    bil = [[z for _ in range(d)] for _ in range(d)]
    tri = [[[z for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            bil[i][j] = emb_b(a.bil[i][j])
            for k in range(n):
                tri[i][j][k] = emb_b(a.tri[i][j][k])
    for i in range(n):
        for v in range(m):
            bil[i][n + v] = emb_v(r.mu[i].col(v))
            bil[n + v][i] = emb_v(vec_sub(zero_vec(field, m), r.mu[i].col(v)))
    for i in range(n):
        for j in range(n):
            for w in range(m):
                tri[i][j][n + w] = emb_v(r.dd[i][j].col(w))
                tri[n + w][i][j] = emb_v(r.theta[i][j].col(w))
                tri[i][n + w][j] = emb_v(vec_sub(zero_vec(field, m), r.theta[i][j].col(w)))
    return BolAlgebra(field, d,
                      tuple(tuple(row) for row in bil),
                      tuple(tuple(tuple(c) for c in row) for row in tri))


def is_pseudoderivation(f: Matrix, chi, a: BolAlgebra, r: Representation) -> bool:
    """f(x*y) = mu(x)f(y) - mu(y)f(x) + (D(x,y) - mu(x*y))(chi)  and
    f([x,y,z]) = theta(y,z)f(x) - theta(x,z)f(y) + D(x,y)f(z)."""
    _require_compatible(a, r)
    if f.rows != r.module_dim or f.cols != a.dim or len(chi) != r.module_dim:
        raise UsageError("pseudoderivation data has wrong shape")
    n = a.dim
    fe = [f.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = f.apply(a.bil[i][j])
            rhs = vec_sub(r.mu[i].apply(fe[j]), r.mu[j].apply(fe[i]))
            rhs = vec_add(rhs, (r.dd[i][j] - r.mu_op(a.bil[i][j])).apply(chi))
            if lhs != rhs:
                return False
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = f.apply(a.tri[i][j][k])
                rhs = vec_sub(r.theta[j][k].apply(fe[i]), r.theta[i][k].apply(fe[j]))
                rhs = vec_add(rhs, r.dd[i][j].apply(fe[k]))
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# exhaustive two-route census (module identities vs. semidirect axioms)

@dataclass
class IffCensus:
    algebras: int
    candidates_per_algebra: int
    valid_pairs: int
    discrepancies: list


def semidirect_iff_census(field, algebra_dim: int, module_dim: int = 1,
                          tri_zero: bool = True,
                          budget: int = DEFAULT_ENUMERATION_BOUND) -> IffCensus:
    """For every enumerated algebra and every candidate action tuple, compare
    the module-identity verdict with the axiom verdict of the semidirect sum.

    Both routes are computed independently; `discrepancies` lists (algebra
    index, candidate index) pairs where they disagree.
    """
    if not field.is_prime_field:
        raise UnsupportedEnumerationError("the census needs a finite field")
    p = field.p
    mu_b, th_b, dd_b = bruteforce.rep_param_batches(algebra_dim, module_dim, p, budget)
    total = mu_b.shape[0]
    chunk = 32768
    discrepancies = []
    n_alg = 0
    valid = 0
    for bil, tri in bruteforce.enumerate_valid_tensors(
            algebra_dim, p, tri_zero, budget):
        for start in range(0, total, chunk):
            sl = slice(start, min(start + chunk, total))
            route1 = bruteforce.validate_rep_mask(
                bil, tri, mu_b[sl], th_b[sl], dd_b[sl], p)
            bilE, triE = bruteforce.semidirect_arrays(
                bil, tri, mu_b[sl], th_b[sl], dd_b[sl], p)
            route2 = bruteforce.validate_bol_mask(bilE, triE, p)
            valid += int(route1.sum())
            if not np.array_equal(route1, route2):
                for idx in np.flatnonzero(route1 != route2):
                    discrepancies.append((n_alg, start + int(idx)))
        n_alg += 1
    return IffCensus(n_alg, total, valid, discrepancies)
