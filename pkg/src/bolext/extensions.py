"""Extensions as first-class data: short exact sequences of Bol algebras,
canonical sections, cocycle extraction, equivalence, and classification.

An extension packs the fiber V, the total algebra, the base B, an injection
matrix (columns = images of fiber basis) and a projection matrix.  Validation
tags: inj-shape, inj-morphism, inj-injective, proj-morphism, proj-surjective,
exactness, dims.
"""
from __future__ import annotations

from dataclasses import dataclass
from .bol import BolAlgebra, h3, is_morphism, z2, zero_algebra
from .cohomology import Cochain2, Cochain3, CochainCoords
from .core import (DEFAULT_ENUMERATION_BOUND, Decision, Status,
                   ValidationReport, Variant)
from .errors import (InternalConsistencyError, UnsupportedEnumerationError,
                     UsageError)
from .exactlin import (Matrix, Subspace, enumerate_vectors, kernel_basis,
                       vec_is_zero, zero_vec)
from .nonabelian import (NonAbelianCocycle, build_extension_algebra,
                         solve_equivalence, validate_nab_cocycle)
from .representation import Representation

__all__ = [
    "Extension", "Section", "validate_extension", "canonical_section",
    "make_section", "extract_cocycle", "as_extension", "semidirect_extension",
    "extensions_equivalent", "theta_map", "classify_corpus", "e_h3",
]


@dataclass(frozen=True)
class Extension:
    fiber: BolAlgebra
    total: BolAlgebra
    base: BolAlgebra
    inj: Matrix
    proj: Matrix

    @property
    def n(self):
        return self.base.dim

    @property
    def m(self):
        return self.fiber.dim

    @property
    def field(self):
        return self.base.field

    def fiber_subspace(self) -> Subspace:
        cols = [self.inj.col(j) for j in range(self.inj.cols)]
        return Subspace.from_vectors(self.field, self.total.dim, cols)

    def left_inverse(self) -> Matrix:
        """A left inverse of the injection, from its pivot rows."""
        # pivot rows of inj = pivot columns of its transpose
        _, rank, pivots = self.inj.transpose().rref()
        if rank != self.m:
            raise UsageError("injection is not injective")
        rows = sorted(pivots)
        sub = Matrix(self.field, [self.inj.entries[r] for r in rows])
        inv = sub.inverse()
        if inv is None:
            raise UsageError("injection is not injective")
        sel = Matrix(self.field, [[self.field.one if c == r else self.field.zero
                                   for c in range(self.total.dim)] for r in rows],
                     cols=self.total.dim)
        return inv * sel

    def v_coords(self, vec) -> tuple:
        """Fiber coordinates of a total-algebra value in ker(proj)."""
        if not vec_is_zero(self.proj.apply(vec)):
            raise InternalConsistencyError(
                "value expected in the kernel of the projection escapes it")
        out = self.left_inverse().apply(vec)
        if self.inj.apply(out) != tuple(vec):
            raise InternalConsistencyError("kernel value outside the injection image")
        return out


@dataclass(frozen=True)
class Section:
    """Linear right inverse of the projection (never required multiplicative)."""

    matrix: Matrix


def validate_extension(e: Extension) -> ValidationReport:
    rep = ValidationReport()
    n, m, d = e.n, e.m, e.total.dim
    if d != n + m:
        rep.add("dims", (), ())
        return rep
    if e.inj.rows != d or e.inj.cols != m or e.proj.rows != n or e.proj.cols != d:
        rep.add("inj-shape", (), ())
        return rep
    if not is_morphism(e.inj, e.fiber, e.total):
        rep.add("inj-morphism", (), ())
    if e.inj.rank() != m:
        rep.add("inj-injective", (), ())
    if not is_morphism(e.proj, e.total, e.base):
        rep.add("proj-morphism", (), ())
    if e.proj.rank() != n:
        rep.add("proj-surjective", (), ())
    if e.fiber_subspace() != kernel_basis(e.proj):
        rep.add("exactness", (), ())
    return rep


def canonical_section(e: Extension) -> Section:
    """Section through the pivot complement of ker(proj): each base basis
    vector maps to its unique preimage supported on the complement columns."""
    if not validate_extension(e).valid:
        raise UsageError("canonical section of an invalid extension")
    ker = kernel_basis(e.proj)
    pivot_cols = set()
    for row in ker.basis.entries:
        pivot_cols.add(next(i for i, a in enumerate(row) if a))
    complement = [c for c in range(e.total.dim) if c not in pivot_cols]
    sub = Matrix(e.field, [[e.proj.entries[r][c] for c in complement]
                           for r in range(e.n)])
    inv = sub.inverse()
    if inv is None:
        raise InternalConsistencyError("pivot complement does not split the projection")
    emb = Matrix(e.field, [[e.field.one if complement[r] == rr else e.field.zero
                            for r in range(len(complement))]
                           for rr in range(e.total.dim)], cols=len(complement))
    s = emb * inv
    return Section(s)


def make_section(e: Extension, matrix: Matrix) -> Section:
    if matrix.rows != e.total.dim or matrix.cols != e.n or matrix.field != e.field:
        raise UsageError("section matrix has wrong shape")
    if e.proj * matrix != Matrix.identity(e.field, e.n):
        raise UsageError("matrix is not a right inverse of the projection")
    return Section(matrix)


def extract_cocycle(e: Extension, s: Section) -> NonAbelianCocycle:
    """The quintuple carried by a section:

      nu(x,y)      = s(x)*s(y) - s(x*y)
      omega(x,y,z) = [s(x),s(y),s(z)] - s([x,y,z])
      theta(x,y)a  = [i(a), s(x), s(y)]
      D(x,y)a      = [s(x), s(y), i(a)]
      mu(x)a       = s(x)*i(a)

    all read back through the injection (values must land in ker proj).
    """
    if e.proj * s.matrix != Matrix.identity(e.field, e.n):
        raise UsageError("not a section of the projection")
    n, m = e.n, e.m
    T = e.total
    sc = [s.matrix.col(i) for i in range(n)]
    ic = [e.inj.col(a) for a in range(m)]
    linv = e.left_inverse()

    def vc(vec):
        if not vec_is_zero(e.proj.apply(vec)):
            raise InternalConsistencyError(
                "extracted value escapes the kernel of the projection")
        return linv.apply(vec)

    from .exactlin import vec_sub
    nu_entries, om_entries = {}, {}
    for i in range(n):
        for j in range(i + 1, n):
            nu_entries[(i, j)] = vc(vec_sub(T.star(sc[i], sc[j]),
                                            s.matrix.apply(e.base.bil[i][j])))
            for k in range(n):
                om_entries[(i, j, k)] = vc(vec_sub(T.bracket(sc[i], sc[j], sc[k]),
                                                   s.matrix.apply(e.base.tri[i][j][k])))
    nu = Cochain2.from_pairs(n, m, e.field, nu_entries)
    om = Cochain3.from_triples(n, m, e.field, om_entries)
    mu = tuple(Matrix.from_cols(e.field,
                                [vc(T.star(sc[i], ic[a])) for a in range(m)], rows=m)
               for i in range(n))
    theta = tuple(tuple(Matrix.from_cols(
        e.field, [vc(T.bracket(ic[a], sc[i], sc[j])) for a in range(m)], rows=m)
        for j in range(n)) for i in range(n))
    dd = tuple(tuple(Matrix.from_cols(
        e.field, [vc(T.bracket(sc[i], sc[j], ic[a])) for a in range(m)], rows=m)
        for j in range(n)) for i in range(n))
    return NonAbelianCocycle(e.base, e.fiber, nu, om, mu, theta, dd)


def as_extension(c: NonAbelianCocycle) -> Extension:
    """The glued algebra of c as an extension with the standard embedding."""
    n, m = c.n, c.m
    field = c.field
    total = build_extension_algebra(c)
    inj = Matrix.from_cols(field, [zero_vec(field, n) +
                                   tuple(field.one if t == a else field.zero
                                         for t in range(m))
                                   for a in range(m)], rows=n + m)
    proj = Matrix(field, [[field.one if cc == r else field.zero
                           for cc in range(n + m)] for r in range(n)])
    return Extension(c.fiber, total, c.base, inj, proj)


def semidirect_extension(a: BolAlgebra, r: Representation) -> Extension:
    """The split extension of a by its module (fiber taken abelian)."""
    from .representation import semidirect_product
    total = semidirect_product(a, r)
    fiber = zero_algebra(a.field, r.module_dim)
    n, m = a.dim, r.module_dim
    inj = Matrix.from_cols(a.field, [zero_vec(a.field, n) +
                                     tuple(a.field.one if t == v else a.field.zero
                                           for t in range(m))
                                     for v in range(m)], rows=n + m)
    proj = Matrix(a.field, [[a.field.one if c == rr else a.field.zero
                             for c in range(n + m)] for rr in range(n)])
    return Extension(fiber, total, a, inj, proj)


def e_h3(field) -> Extension:
    """The fixture 0 -> span(e3) -> h3 -> z2 -> 0."""
    inj = Matrix.from_int_rows(field, [[0], [0], [1]])
    proj = Matrix.from_int_rows(field, [[1, 0, 0], [0, 1, 0]])
    return Extension(zero_algebra(field, 1), h3(field), z2(field), inj, proj)


def _model_iso(e: Extension, s: Section) -> Matrix:
    """Columns s(e_1)..s(e_n), i(f_1)..i(f_m): base-plus-fiber model -> total."""
    cols = [s.matrix.col(i) for i in range(e.n)] + [e.inj.col(a) for a in range(e.m)]
    return Matrix.from_cols(e.field, cols, rows=e.total.dim)


def extensions_equivalent(e1: Extension, e2: Extension,
                          bound: int = DEFAULT_ENUMERATION_BOUND) -> Decision:
    """Search for an equivalence map between two extensions of the same base
    by the same fiber.

    The commuting constraints force the map to fix the fiber pointwise and
    cover the identity of the base, leaving only a base-to-fiber block; that
    block exists iff the extracted cocycles are equivalent, and the witness
    map is assembled from it and verified.
    """
    if e1.base != e2.base or e1.fiber != e2.fiber:
        raise UsageError("extensions must share base and fiber")
    for e in (e1, e2):
        if not validate_extension(e).valid:
            raise UsageError("equivalence of invalid extensions")
    s1, s2 = canonical_section(e1), canonical_section(e2)
    c1 = extract_cocycle(e1, s1)
    c2 = extract_cocycle(e2, s2)
    dec = solve_equivalence(c1, c2, bound)
    if dec.status is not Status.FOUND:
        return dec
    phi = dec.witness
    n, m = e1.n, e1.m
    field = e1.field
    g_rows = []
    for r in range(n):
        g_rows.append([field.one if cc == r else field.zero for cc in range(n + m)])
    for t in range(m):
        row = [-phi.entries[t][q] for q in range(n)]
        row += [field.one if v == t else field.zero for v in range(m)]
        g_rows.append(row)
    g = Matrix(field, g_rows)
    iso1 = _model_iso(e1, s1)
    iso2 = _model_iso(e2, s2)
    inv1 = iso1.inverse()
    if inv1 is None:
        raise InternalConsistencyError("model identification is singular")
    f = iso2 * g * inv1
    if not f.is_invertible() or not is_morphism(f, e1.total, e2.total) \
            or f * e1.inj != e2.inj or e2.proj * f != e1.proj:
        raise InternalConsistencyError(
            "equivalence witness failed verification; the totals carry "
            "fiber products that the cocycle data does not see")
    return Decision(Status.FOUND, witness=f)


def theta_map(e: Extension) -> NonAbelianCocycle:
    """Classifying cocycle of the extension via the canonical section."""
    if not validate_extension(e).valid:
        raise UsageError("classifying map of an invalid extension")
    return extract_cocycle(e, canonical_section(e))


def classify_corpus(base: BolAlgebra, fiber: BolAlgebra, actions=None,
                    bound: int = DEFAULT_ENUMERATION_BOUND,
                    variant: Variant = Variant.CORRECTED):
    """Enumerate all valid cocycles with the given fixed action maps over a
    prime field and partition them into equivalence classes.

    Returns (class count, list of one representative per class, valid count).
    """
    field = base.field
    if not field.is_prime_field:
        raise UnsupportedEnumerationError("classification needs a finite field")
    n, m = base.dim, fiber.dim
    if actions is None:
        z = Matrix.zeros(field, m, m)
        actions = ((z,) * n, tuple((z,) * n for _ in range(n)),
                   tuple((z,) * n for _ in range(n)))
    mu, theta, dd = actions
    coords = CochainCoords(n, m, field)
    total = field.p ** coords.total
    if total > bound:
        raise UnsupportedEnumerationError(
            f"{total} cocycle candidates exceed the bound {bound}")
    if field.p ** (n * m) > bound:
        raise UnsupportedEnumerationError(
            "equivalence search space exceeds the bound")
    reps = []
    valid_count = 0
    for vec in enumerate_vectors(field, coords.total):
        nu, om = coords.decode(vec)
        cand = NonAbelianCocycle(base, fiber, nu, om, mu, theta, dd)
        if not validate_nab_cocycle(cand, variant).valid:
            continue
        valid_count += 1
        for rep_c, members in reps:
            dec = solve_equivalence(cand, rep_c, bound)
            if dec.status is Status.UNDECIDED:
                raise UnsupportedEnumerationError("equivalence undecided at bound")
            if dec.found:
                members.append(cand)
                break
        else:
            reps.append((cand, [cand]))
    return len(reps), [r for r, _ in reps], valid_count
