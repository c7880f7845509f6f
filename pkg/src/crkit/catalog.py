"""Classical matrix algebras and the shipped classification instances.

Builders produce structure constants over Q or Q(i) from sparse matrix
models with coordinate read-off (no generic solving in construction).
Each catalog entry packages an orbit model with the invariants the
classification asserts for it; verify_entry recomputes everything
derivable and diffs it against that record.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .algebra import (
    LieAlgebra,
    abelian as real_abelian,
    derived_subalgebra,
    direct_sum,
    full_space,
    heisenberg,
    is_abelian,
    is_nilpotent,
    killing_signature,
    product_space,
    radical,
)
from .complexify import (
    OrbitModel,
    anticanonical_fibration,
    complex_to_real,
    induced_cr_pair,
    realify,
)
from .cr import check_cr_pair, cr_type, levi_form, levi_signature
from .errors import InputError, InternalError
from .linalg import left_nullspace, rref
from .scalars import QI, QQ, GaussianRational, is_zero, to_gaussian

F = Fraction
G = GaussianRational
GI = GaussianRational(0, 1)


# ---------------------------------------------------------------------------
# sparse matrices: {(row, col): scalar}
# ---------------------------------------------------------------------------

def mat_commutator(a, b):
    out = {}

    def mul_into(x, y, sign):
        y_rows = {}
        for (r, c), v in y.items():
            y_rows.setdefault(r, []).append((c, v))
        for (r, c), v in x.items():
            for c2, w in y_rows.get(c, ()):
                key = (r, c2)
                out[key] = out.get(key, G(0)) + sign * v * w

    mul_into(a, b, G(1))
    mul_into(b, a, G(-1))
    return {k: v for k, v in out.items() if v}


def mat_apply(mat, vec):
    n = len(vec)
    out = [G(0)] * n
    for (r, c), v in mat.items():
        x = vec[c]
        if x:
            out[r] = out[r] + v * x
    return tuple(out)


def _algebra_from_matrices(mats, coords, names, field):
    """Structure constants from basis matrices plus a coordinate read-off."""
    dim = len(mats)
    brackets = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            row = {}
            for k, c in enumerate(coords(mat_commutator(mats[a], mats[b]))):
                if not is_zero(c):
                    row[k] = c
            if row:
                brackets[(a, b)] = row
    return LieAlgebra(dim, field, names, brackets)


def _partial_sums_diag(mat, n):
    """Coefficients of H_0..H_{n-2} for a traceless diagonal part."""
    sums = []
    acc = G(0)
    for a in range(n - 1):
        acc = acc + mat.get((a, a), G(0))
        sums.append(acc)
    return sums


# ---------------------------------------------------------------------------
# sl(n), su(p, q), u(n), so(n)
# ---------------------------------------------------------------------------

def sl_basis_names(n):
    names = [f"E{a}{b}" for a in range(n) for b in range(n) if a != b]
    names += [f"H{a}" for a in range(n - 1)]
    return tuple(names)


def sl_basis_matrices(n):
    mats = [
        {(a, b): G(1)}
        for a in range(n)
        for b in range(n)
        if a != b
    ]
    for a in range(n - 1):
        mats.append({(a, a): G(1), (a + 1, a + 1): G(-1)})
    return mats


def sl_coords(mat, n):
    """Coordinates of a traceless matrix in the E/H basis of sl(n)."""
    out = []
    for a in range(n):
        for b in range(n):
            if a != b:
                out.append(mat.get((a, b), G(0)))
    out.extend(_partial_sums_diag(mat, n))
    return tuple(out)


@lru_cache(maxsize=None)
def build_sl_complex(n):
    """sl(n, C) over Q(i), on the elementary/coroot basis."""
    if n < 2:
        raise InputError("sl needs n >= 2")
    return _algebra_from_matrices(
        sl_basis_matrices(n), lambda m: sl_coords(m, n), sl_basis_names(n), QI
    )


@lru_cache(maxsize=None)
def build_sl_real(n):
    """sl(n, R): same structure constants over Q."""
    c = build_sl_complex(n)
    brackets = {}
    for key, row in c.brackets.items():
        out = {}
        for k, v in row.items():
            g = to_gaussian(v)
            if g.im != 0:
                raise InternalError("sl structure constants must be rational")
            out[k] = g.re
        brackets[key] = out
    return LieAlgebra(c.dim, QQ, c.names, brackets)


@lru_cache(maxsize=None)
def build_sl_complex_as_real(n):
    """The realification of sl(n, C): a real algebra of dimension 2(n^2 - 1)."""
    return realify(build_sl_complex(n))


def su_signs(p, q):
    return [1] * p + [-1] * q


def su_basis_matrices(p, q):
    """Anti-hermitian traceless matrices for the signature-(p, q) form.

    Basis: i H_a for the traceless diagonal, then for each a < b the pair
    A_ab = E_ba - s E_ab and B_ab = i (E_ba + s E_ab) with s the product of
    the signature signs at a and b.
    """
    n = p + q
    eps = su_signs(p, q)
    mats = []
    for a in range(n - 1):
        mats.append({(a, a): GI, (a + 1, a + 1): -GI})
    for a in range(n):
        for b in range(a + 1, n):
            s = G(eps[a] * eps[b])
            mats.append({(b, a): G(1), (a, b): -s})
            mats.append({(b, a): GI, (a, b): GI * s})
    return mats


def su_names(p, q):
    n = p + q
    names = [f"iH{a}" for a in range(n - 1)]
    for a in range(n):
        for b in range(a + 1, n):
            names.append(f"A{a}{b}")
            names.append(f"B{a}{b}")
    return tuple(names)


def su_coords(mat, n):
    """Read off su(p, q) coordinates; imaginary parts must cancel exactly."""
    out = []
    for c in _partial_sums_diag(mat, n):
        g = to_gaussian(c)
        if g.re != 0:
            raise InternalError("diagonal of an anti-hermitian matrix must be imaginary")
        out.append(g.im)
    for a in range(n):
        for b in range(a + 1, n):
            g = to_gaussian(mat.get((b, a), G(0)))
            out.append(g.re)
            out.append(g.im)
    return tuple(out)


@lru_cache(maxsize=None)
def build_su(p, q=0):
    """su(p, q) over Q, in the standard anti-hermitian matrix model."""
    n = p + q
    if n < 2 or p < 0 or q < 0:
        raise InputError("su needs p, q >= 0 and p + q >= 2")
    return _algebra_from_matrices(
        su_basis_matrices(p, q), lambda m: su_coords(m, n), su_names(p, q), QQ
    )


@lru_cache(maxsize=None)
def build_u(n):
    """u(n) = su(n) plus the central line of i * identity."""
    if n < 1:
        raise InputError("u needs n >= 1")
    if n == 1:
        return LieAlgebra(1, QQ, ("iI",), {})
    su = build_su(n, 0)
    centre = LieAlgebra(1, QQ, ("iI",), {})
    return direct_sum(su, centre, names=tuple(list(su.names) + ["iI"]))


def so_basis_matrices(n):
    return [
        {(a, b): G(1), (b, a): G(-1)}
        for a in range(n)
        for b in range(a + 1, n)
    ]


def so_coords(mat, n):
    out = []
    for a in range(n):
        for b in range(a + 1, n):
            g = to_gaussian(mat.get((a, b), G(0)))
            if g.im != 0:
                raise InternalError("so coordinates must be real")
            out.append(g.re)
    return tuple(out)


@lru_cache(maxsize=None)
def build_so(n):
    """so(n) over Q on the elementary antisymmetric basis."""
    if n < 2:
        raise InputError("so needs n >= 2")
    names = tuple(f"R{a}{b}" for a in range(n) for b in range(a + 1, n))
    return _algebra_from_matrices(
        so_basis_matrices(n), lambda m: so_coords(m, n), names, QQ
    )


# ---------------------------------------------------------------------------
# sp(2m, C) and sp(p, q)
# ---------------------------------------------------------------------------

def sp_complex_basis_matrices(m):
    """Block basis for sp(2m, C): X = [[A, B], [C, -A^T]] with B, C symmetric."""
    mats = []
    for a in range(m):
        for b in range(m):
            mats.append({(a, b): G(1), (m + b, m + a): G(-1)})
    for a in range(m):
        for b in range(a, m):
            if a == b:
                mats.append({(a, m + a): G(1)})
            else:
                mats.append({(a, m + b): G(1), (b, m + a): G(1)})
    for a in range(m):
        for b in range(a, m):
            if a == b:
                mats.append({(m + a, a): G(1)})
            else:
                mats.append({(m + a, b): G(1), (m + b, a): G(1)})
    return mats


def sp_complex_coords(mat, m):
    out = []
    for a in range(m):
        for b in range(m):
            out.append(mat.get((a, b), G(0)))
    for a in range(m):
        for b in range(a, m):
            out.append(mat.get((a, m + b), G(0)))
    for a in range(m):
        for b in range(a, m):
            out.append(mat.get((m + a, b), G(0)))
    return tuple(out)


def sp_names(m):
    names = [f"A{a}{b}" for a in range(m) for b in range(m)]
    names += [f"B{a}{b}" for a in range(m) for b in range(a, m)]
    names += [f"C{a}{b}" for a in range(m) for b in range(a, m)]
    return tuple(names)


@lru_cache(maxsize=None)
def build_sp_complex(m):
    """sp(2m, C) over Q(i), dimension m(2m + 1)."""
    if m < 1:
        raise InputError("sp needs m >= 1")
    return _algebra_from_matrices(
        sp_complex_basis_matrices(m), lambda x: sp_complex_coords(x, m), sp_names(m), QI
    )


def sp_real_basis_matrices(p, q):
    """sp(p, q) = sp(2m, C) ∩ u(eps, eps): the quaternionic unitary algebra.

    Blocks X = [[A, B], [C, D]] with D = -A^T (symplectic) and
    C = -eps conj(B) eps forced by anti-hermitianness for diag(eps, eps);
    free parameters are A anti-hermitian w.r.t. eps (m^2 real) and B
    symmetric complex (m(m+1) real), totalling m(2m+1).
    """
    m = p + q
    eps = su_signs(p, q)
    mats = []

    def embed(a_block, b_block):
        out = {}

        def add(key, v):
            out[key] = out.get(key, G(0)) + v

        for (r, c), v in a_block.items():
            add((r, c), v)
            add((m + c, m + r), -v)  # D = -A^T
        for (r, c), v in b_block.items():
            add((r, m + c), v)
            add((m + r, c), -G(eps[r] * eps[c]) * to_gaussian(v).conjugate())
        return {k: v for k, v in out.items() if v}

    for a in range(m):
        mats.append(embed({(a, a): GI}, {}))
    for a in range(m):
        for b in range(a + 1, m):
            s = G(eps[a] * eps[b])
            mats.append(embed({(b, a): G(1), (a, b): -s}, {}))
            mats.append(embed({(b, a): GI, (a, b): GI * s}, {}))
    for a in range(m):
        for b in range(a, m):
            if a == b:
                mats.append(embed({}, {(a, a): G(1)}))
                mats.append(embed({}, {(a, a): GI}))
            else:
                mats.append(embed({}, {(a, b): G(1), (b, a): G(1)}))
                mats.append(embed({}, {(a, b): GI, (b, a): GI}))
    return mats


def sp_real_coords(mat, p, q):
    """Read off (A diag, A offdiag, B) coordinates of a sp(p, q) matrix."""
    m = p + q
    out = []
    for a in range(m):
        g = to_gaussian(mat.get((a, a), G(0)))
        if g.re != 0:
            raise InternalError("sp diagonal must be imaginary")
        out.append(g.im)
    for a in range(m):
        for b in range(a + 1, m):
            g = to_gaussian(mat.get((b, a), G(0)))
            out.append(g.re)
            out.append(g.im)
    for a in range(m):
        for b in range(a, m):
            g = to_gaussian(mat.get((a, m + b), G(0)))
            out.append(g.re)
            out.append(g.im)
    return tuple(out)


@lru_cache(maxsize=None)
def build_sp(p, q):
    """sp(p, q) over Q: the quaternionic unitary algebra, dim (p+q)(2(p+q)+1)."""
    if p < 0 or q < 0 or p + q < 1:
        raise InputError("sp needs p, q >= 0 with p + q >= 1")
    m = p + q
    names = tuple(f"sp{k}" for k in range(m * (2 * m + 1)))
    return _algebra_from_matrices(
        sp_real_basis_matrices(p, q), lambda x: sp_real_coords(x, p, q), names, QQ
    )


# ---------------------------------------------------------------------------
# stabilizers and embeddings
# ---------------------------------------------------------------------------

def line_stabilizer_rows(basis_mats, v):
    """Complex rows (in algebra coordinates) of {xi : xi . v in C v}."""
    dim = len(basis_mats)
    rows = [mat_apply(m, v) for m in basis_mats]
    rows.append(tuple(-to_gaussian(x) for x in v))
    relations = left_nullspace(rows)
    sol = [rel[:dim] for rel in relations]
    return rref(sol)[0]


def matrices_to_realified_rows(mats, coords_fn):
    """Realified ambient coordinates of matrices via a complex read-off."""
    return [complex_to_real(coords_fn(m)) for m in mats]


# ---------------------------------------------------------------------------
# taxonomy of fibration fibers
# ---------------------------------------------------------------------------

TAXONOMY_TAGS = (
    "torus-principal",
    "linear-C*",
    "root-removed",
    "rank1-symmetric",
    "rank2-symmetric",
    "SL_m-series",
    "Sp-series",
    "SO9-Spin7",
)


@dataclass(frozen=True)
class TaxonContext:
    center_acts: bool = False
    unipotent_radical_acts: bool = False
    series_tag: str | None = None
    sphere_base: bool = False
    c_fiber_rule: bool = False


@dataclass(frozen=True)
class FiberTaxon:
    tag: str
    fiber_dim: int
    base_dim: int
    context: TaxonContext


def classify_fiber(fiber: LieAlgebra, context: TaxonContext, base_dim=0) -> FiberTaxon:
    """Coarse-invariant match of a fibration fiber against the taxonomy rows.

    Computable rows are decided by exact invariants (dimension, abelian /
    nilpotent / perfect, radical dimension); the symmetric-space and series
    rows need a supplied series tag since the shipped instances never
    produce them and algebra isomorphism testing is out of scope.
    """
    if context.series_tag is not None:
        if context.series_tag not in TAXONOMY_TAGS:
            raise InputError(f"unknown taxonomy tag {context.series_tag!r}")
        return FiberTaxon(context.series_tag, fiber.dim, base_dim, context)
    if fiber.dim == 0:
        return FiberTaxon("point", 0, base_dim, context)
    if context.unipotent_radical_acts and is_nilpotent(fiber):
        return FiberTaxon("root-removed", fiber.dim, base_dim, context)
    if is_abelian(fiber):
        if fiber.dim == 2:
            return FiberTaxon("torus-principal", 2, base_dim, context)
        if fiber.dim == 1:
            return FiberTaxon("linear-C*", 1, base_dim, context)
        return FiberTaxon("outside-taxonomy", fiber.dim, base_dim, context)
    perfect = derived_subalgebra(fiber).dim == fiber.dim
    if perfect and fiber.dim == 3 and radical(fiber).dim == 0:
        return FiberTaxon("Sp-series", 3, base_dim, context)
    return FiberTaxon("outside-taxonomy", fiber.dim, base_dim, context)


# ---------------------------------------------------------------------------
# catalog entries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Expected:
    """Classification-asserted invariants; None means "not asserted"."""

    codim: int | None = None
    cr_type: tuple | None = None
    m_dim: int | None = None
    levi_signature_unordered: frozenset | None = None
    levi_degenerate_domain: bool | None = None
    fiber_dim: int | None = None
    fiber_tag: str | None = None
    degenerate_fibration: bool | None = None
    orbit_dim: int | None = None


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    family: str
    params: tuple
    model: OrbitModel
    expected: Expected
    pi1: tuple | None = None  # ((rank, torsion), (rank, torsion), known_surjective)
    compact_group: bool = False
    kahler: bool = False
    taxon_context: TaxonContext = field(default_factory=TaxonContext)
    notes: tuple = ()

    @cached_property
    def fibration(self):
        return anticanonical_fibration(self.model)

    @cached_property
    def cr_pair(self):
        return induced_cr_pair(self.model)

    @cached_property
    def taxon(self):
        return classify_fiber(
            self.fibration.fiber_algebra, self.taxon_context, self.fibration.base_dim
        )


# -- builders ---------------------------------------------------------------

@lru_cache(maxsize=None)
def quadric_orbit(p, q):
    """Closed orbit of the signature-(p, q) unitary algebra on isotropic lines."""
    if p < 1 or q < 1:
        raise InputError("quadric needs p, q >= 1")
    n1 = p + q
    ambient = build_sl_complex(n1)
    real_rows = matrices_to_realified_rows(
        su_basis_matrices(p, q), lambda m: sl_coords(m, n1)
    )
    v = [G(0)] * n1
    v[0] = G(1)
    v[p] = G(1)  # isotropic: +1 - 1 = 0
    iso = line_stabilizer_rows(sl_basis_matrices(n1), tuple(v))
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=build_su(p, q), name=f"quadric({p},{q})"
    )
    n = 2 * n1 - 3
    l = n1 - 2
    return CatalogEntry(
        name=f"quadric({p},{q})",
        family="quadric",
        params=(p, q),
        model=model,
        expected=Expected(
            codim=1,
            cr_type=(n, l, 1),
            m_dim=0,
            levi_signature_unordered=frozenset({p - 1, q - 1}),
            levi_degenerate_domain=(l == 0),
            fiber_dim=0,
            fiber_tag="point",
            degenerate_fibration=False,
        ),
        pi1=((1, ()), (1, ()), True),
        compact_group=False,
        notes=("isotropic-line hypersurface orbit of the mixed-signature form",),
    )


@lru_cache(maxsize=None)
def sp_quadric_orbit(p, q):
    """The same quadric orbit under the smaller quaternionic unitary algebra."""
    if p < 1 or q < 1:
        raise InputError("sp quadric needs p, q >= 1")
    m = p + q
    ambient = build_sp_complex(m)
    real_rows = matrices_to_realified_rows(
        sp_real_basis_matrices(p, q), lambda x: sp_complex_coords(x, m)
    )
    v = [G(0)] * (2 * m)
    v[0] = G(1)
    v[p] = G(1)
    iso = line_stabilizer_rows(sp_complex_basis_matrices(m), tuple(v))
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=build_sp(p, q), name=f"sp_quadric({p},{q})"
    )
    n = 4 * m - 3
    return CatalogEntry(
        name=f"sp_quadric({p},{q})",
        family="sp_quadric",
        params=(p, q),
        model=model,
        expected=Expected(
            codim=1,
            cr_type=(n, 2 * m - 2, 1),
            m_dim=0,
            levi_signature_unordered=frozenset({2 * p - 1, 2 * q - 1}),
            levi_degenerate_domain=False,
            fiber_dim=0,
            fiber_tag="point",
            degenerate_fibration=False,
            orbit_dim=n,
        ),
        pi1=((1, ()), (1, ()), True),
        compact_group=False,
        notes=("quaternionic form acting transitively on the quadric hypersurface",),
    )


@lru_cache(maxsize=None)
def real_projective_orbit():
    """The real points of the projective plane as the closed orbit of sl(3, R)."""
    ambient = build_sl_complex(3)
    nreal = 8
    real_rows = []
    for a in range(nreal):
        row = [F(0)] * 16
        row[a] = F(1)
        real_rows.append(tuple(row))
    v = (G(1), G(0), G(0))
    iso = line_stabilizer_rows(sl_basis_matrices(3), v)
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=build_sl_real(3), name="p2r"
    )
    return CatalogEntry(
        name="p2r",
        family="p2r",
        params=(),
        model=model,
        expected=Expected(
            codim=2,
            cr_type=(2, 0, 2),
            m_dim=0,
            levi_degenerate_domain=True,
            fiber_dim=0,
            fiber_tag="point",
            degenerate_fibration=False,
        ),
        pi1=((0, ()), (1, ()), False),
        compact_group=False,
        notes=(
            "totally real plane orbit; for the preimage of SO3(R) the homotopy "
            "criterion does guarantee a globalization",
        ),
    )


def _conjugate_transpose_coords(n1):
    """Complex coordinate map of xi -> -conj(xi)^T on the sl basis, as columns."""
    mats = sl_basis_matrices(n1)
    cols = []
    for m in mats:
        out = {(c, r): -to_gaussian(v).conjugate() for (r, c), v in m.items()}
        cols.append(sl_coords(out, n1))
    return cols


@lru_cache(maxsize=None)
def twisted_diagonal_orbit(n):
    """Closed orbit of the antiholomorphically twisted diagonal on P_n x P_n*."""
    if n < 1:
        raise InputError("twisted diagonal needs n >= 1")
    n1 = n + 1
    sl = build_sl_complex(n1)
    ambient = direct_sum(sl, sl)
    dim = sl.dim
    phi_cols = _conjugate_transpose_coords(n1)

    real_rows = []
    for a in range(dim):
        # basis matrix b_a -> (b_a, -conj(b_a)^T)
        first = [G(0)] * dim
        first[a] = G(1)
        real_rows.append(complex_to_real(tuple(first) + tuple(phi_cols[a])))
    for a in range(dim):
        # i b_a -> (i b_a, -conj(i b_a)^T) = (i b_a, i conj(b_a)^T)
        first = [G(0)] * dim
        first[a] = GI
        second = tuple(-GI * c for c in phi_cols[a])
        real_rows.append(complex_to_real(tuple(first) + second))

    e0 = [G(0)] * n1
    e0[0] = G(1)
    e1 = [G(0)] * n1
    e1[1] = G(1)
    p_v = line_stabilizer_rows(sl_basis_matrices(n1), tuple(e0))
    p_u = line_stabilizer_rows(sl_basis_matrices(n1), tuple(e1))
    zero = (G(0),) * dim
    iso = [tuple(z) + zero for z in p_v] + [zero + tuple(z) for z in p_u]

    model = OrbitModel(
        ambient,
        real_rows,
        iso,
        real_algebra=build_sl_complex_as_real(n1),
        name=f"twisted({n})",
    )
    return CatalogEntry(
        name=f"twisted({n})",
        family="twisted",
        params=(n,),
        model=model,
        expected=Expected(
            codim=2,
            cr_type=(4 * n - 2, 2 * n - 2, 2),
            m_dim=0,
            fiber_dim=0,
            fiber_tag="point",
            degenerate_fibration=False,
        ),
        pi1=None,
        compact_group=False,
        notes=("orbit of the full complex special linear algebra as a real form",),
    )


def _su2_block_rows(total_cplx, offset):
    """Realified rows of su(2) placed in an sl2 block of a product ambient."""
    rows = []
    for m in su_basis_matrices(2, 0):
        z = [G(0)] * total_cplx
        for k, c in enumerate(sl_coords(m, 2)):
            z[offset + k] = c
        rows.append(complex_to_real(tuple(z)))
    return rows


def _unit_real_row(total_cplx, index, imaginary=False):
    z = [G(0)] * total_cplx
    z[index] = GI if imaginary else G(1)
    return complex_to_real(tuple(z))


@lru_cache(maxsize=None)
def torus_bundle_entry():
    """Compact model: (S^1)^2-principal over a product of projective lines."""
    sl = build_sl_complex(2)
    ambient = direct_sum(sl, sl)
    real_rows = _su2_block_rows(6, 0) + _su2_block_rows(6, 3)
    # raising-root lines in both factors: the nilradical of a borel pair
    iso = [
        (G(1), G(0), G(0), G(0), G(0), G(0)),
        (G(0), G(0), G(0), G(1), G(0), G(0)),
    ]
    real_algebra = direct_sum(build_su(2, 0), build_su(2, 0))
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=real_algebra, name="su2xsu2_torus"
    )
    return CatalogEntry(
        name="su2xsu2_torus",
        family="compact-spherical",
        params=(),
        model=model,
        expected=Expected(
            codim=2,
            m_dim=0,
            fiber_dim=2,
            fiber_tag="torus-principal",
            degenerate_fibration=False,
        ),
        pi1=((2, ()), (2, ()), True),
        compact_group=True,
        taxon_context=TaxonContext(center_acts=True),
        notes=("torus-principal compact model over a rational base",),
    )


@lru_cache(maxsize=None)
def hopf_circle_entry():
    """Compact model: an S^1 x S^1 bundle built on su(2) plus a circle factor."""
    sl = build_sl_complex(2)
    ambient = direct_sum(sl, complex_abelian(1))
    real_rows = _su2_block_rows(4, 0) + [_unit_real_row(4, 3, imaginary=True)]
    iso = [(G(1), G(0), G(0), G(0))]
    real_algebra = direct_sum(build_su(2, 0), real_abelian(1))
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=real_algebra, name="su2xs1_hopf"
    )
    return CatalogEntry(
        name="su2xs1_hopf",
        family="compact-spherical",
        params=(),
        model=model,
        expected=Expected(
            codim=2,
            m_dim=0,
            fiber_dim=2,
            fiber_tag="torus-principal",
            degenerate_fibration=False,
        ),
        pi1=((2, ()), (2, ()), True),
        compact_group=True,
        taxon_context=TaxonContext(center_acts=True),
        notes=("circle-extended hypersurface model of the projective line",),
    )


@lru_cache(maxsize=None)
def sl2_uz_entry():
    """Compact model around the discrete-unipotent quotient of sl(2, C).

    The isotropy algebra is the graph line pairing the e-root with the
    extra central direction; the discrete subgroup itself is invisible at
    algebra level and the entry carries only the identity-component data.
    """
    sl = build_sl_complex(2)
    ambient = direct_sum(sl, complex_abelian(1))
    real_rows = _su2_block_rows(4, 0) + [_unit_real_row(4, 3, imaginary=True)]
    iso = [(G(1), G(0), G(0), G(1))]
    real_algebra = direct_sum(build_su(2, 0), real_abelian(1))
    model = OrbitModel(
        ambient, real_rows, iso, real_algebra=real_algebra, name="sl2_uz"
    )
    return CatalogEntry(
        name="sl2_uz",
        family="compact-spherical",
        params=(),
        model=model,
        expected=Expected(
            codim=2,
            m_dim=0,
            fiber_dim=1,
            fiber_tag="linear-C*",
            degenerate_fibration=False,
        ),
        pi1=((0, ()), (1, ()), False),
        compact_group=True,
        taxon_context=TaxonContext(center_acts=True, c_fiber_rule=True),
        notes=(
            "unipotent-integral quotient model; the plane fiber refibers over a "
            "projective line with affine-quadric fibers",
        ),
    )


def complex_abelian(k):
    """Abelian complex algebra of dimension k."""
    return LieAlgebra(k, QI, tuple(f"z{t}" for t in range(k)), {})


@lru_cache(maxsize=None)
def heisenberg_solv_entry():
    """Parallelizable compact solvmanifold model of codimension two."""
    heis_c = heisenberg(field=QI)
    ambient = direct_sum(heis_c, complex_abelian(2))
    real = realify(ambient)
    rows = [real.basis_vector(k) for k in (0, 1, 2, 5, 6, 7, 3, 9)]
    real_algebra = direct_sum(realify(heis_c), real_abelian(2))
    model = OrbitModel(ambient, rows, [], real_algebra=real_algebra, name="heis_solv")
    return CatalogEntry(
        name="heis_solv",
        family="parallelizable",
        params=(),
        model=model,
        expected=Expected(
            codim=2,
            m_dim=6,
            degenerate_fibration=True,
        ),
        pi1=((0, ()), (0, ()), True),
        compact_group=False,
        kahler=True,
        notes=("complexified nilmanifold data with a totally real torus factor",),
    )


@lru_cache(maxsize=None)
def complex_torus_entry():
    """Complex parallelizable model: the whole ambient is the real subalgebra."""
    ambient = complex_abelian(2)
    real = realify(ambient)
    rows = [real.basis_vector(k) for k in range(4)]
    model = OrbitModel(ambient, rows, [], real_algebra=real_abelian(4), name="c2_torus")
    return CatalogEntry(
        name="c2_torus",
        family="parallelizable",
        params=(),
        model=model,
        expected=Expected(
            codim=0,
            m_dim=4,
            degenerate_fibration=True,
        ),
        pi1=((0, ()), (0, ()), True),
        compact_group=True,
        kahler=True,
        notes=("compact complex torus data",),
    )


# ---------------------------------------------------------------------------
# roster and lookup
# ---------------------------------------------------------------------------

ROSTER = (
    "quadric(1,1)",
    "quadric(2,1)",
    "quadric(2,2)",
    "quadric(3,1)",
    "sp_quadric(1,1)",
    "twisted(1)",
    "twisted(2)",
    "p2r",
    "su2xsu2_torus",
    "su2xs1_hopf",
    "sl2_uz",
    "heis_solv",
    "c2_torus",
)


def _parse_params(text, arity, name):
    inner = text.strip()
    if not (inner.startswith("(") and inner.endswith(")")):
        raise InputError(f"bad parameters for {name}: {text!r}")
    parts = [p.strip() for p in inner[1:-1].split(",")]
    if len(parts) != arity:
        raise InputError(f"{name} takes {arity} parameters")
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad integer parameters {text!r}") from exc


def get_entry(name: str) -> CatalogEntry:
    """Look up or construct a catalog entry by name (parametrized allowed)."""
    plain = {
        "p2r": real_projective_orbit,
        "su2xsu2_torus": torus_bundle_entry,
        "su2xs1_hopf": hopf_circle_entry,
        "sl2_uz": sl2_uz_entry,
        "heis_solv": heisenberg_solv_entry,
        "c2_torus": complex_torus_entry,
    }
    key = name.strip()
    if key in plain:
        return plain[key]()
    for prefix, builder in (("sp_quadric", sp_quadric_orbit), ("quadric", quadric_orbit)):
        if key.startswith(prefix):
            p, q = _parse_params(key[len(prefix):], 2, prefix)
            return builder(p, q)
    if key.startswith("twisted"):
        (n,) = _parse_params(key[len("twisted"):], 1, "twisted")
        return twisted_diagonal_orbit(n)
    raise InputError(f"unknown catalog entry {name!r}")


def catalog_entries():
    return [get_entry(name) for name in ROSTER]


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class VerifyRow:
    name: str
    expected: object
    computed: object

    @property
    def match(self):
        return self.expected == self.computed


@dataclass
class VerificationReport:
    entry_name: str
    rows: list

    @property
    def ok(self):
        return all(r.match for r in self.rows)

    def mismatches(self):
        return [r for r in self.rows if not r.match]


def verify_entry(entry: CatalogEntry, expected: Expected | None = None) -> VerificationReport:
    """Recompute every derivable invariant and diff it against the record."""
    exp = expected if expected is not None else entry.expected
    rows = []
    model = entry.model

    if exp.codim is not None:
        rows.append(VerifyRow("codim", exp.codim, model.codim))

    pair = entry.cr_pair
    t = cr_type(pair)
    if exp.cr_type is not None:
        rows.append(VerifyRow("cr_type", exp.cr_type, (t.n, t.l, t.k)))
    rows.append(VerifyRow("cr_type_codim_consistent", model.codim, t.k))
    rows.append(VerifyRow("cr_axioms", True, check_cr_pair(pair).ok))

    if exp.m_dim is not None:
        rows.append(VerifyRow("m_dim", exp.m_dim, model.m.dim))

    levi = levi_form(pair)
    if exp.levi_degenerate_domain is not None:
        rows.append(
            VerifyRow("levi_degenerate_domain", exp.levi_degenerate_domain, levi.degenerate_domain)
        )
    if exp.levi_signature_unordered is not None:
        if levi.degenerate_domain:
            computed = frozenset({0})
        else:
            codir = [F(0)] * levi.value_dim
            codir[0] = F(1)
            sig = levi_signature(pair, tuple(codir))
            computed = frozenset({sig.normalized[0], sig.normalized[1]})
        rows.append(
            VerifyRow("levi_signature_unordered", exp.levi_signature_unordered, computed)
        )

    fib = entry.fibration
    if exp.degenerate_fibration is not None:
        rows.append(VerifyRow("degenerate_fibration", exp.degenerate_fibration, fib.degenerate))
    if exp.fiber_dim is not None:
        rows.append(VerifyRow("fiber_dim", exp.fiber_dim, fib.fiber_dim))
    if exp.fiber_tag is not None:
        rows.append(VerifyRow("fiber_tag", exp.fiber_tag, entry.taxon.tag))

    if exp.orbit_dim is not None:
        rows.append(VerifyRow("orbit_dim", exp.orbit_dim, model.real_sub.dim - model.h.dim))

    if entry.compact_group:
        g = model.real_algebra
        r = radical(g)
        r_abelian = product_space(g, r, r).dim == 0
        r_central = product_space(g, full_space(g), r).dim == 0
        rows.append(VerifyRow("radical_abelian", True, r_abelian))
        rows.append(VerifyRow("radical_central", True, r_central))

    return VerificationReport(entry.name, rows)


def is_noncompact_simple_entry(entry: CatalogEntry) -> bool:
    """Semisimple real subalgebra with an indefinite Killing form."""
    g = entry.model.real_algebra
    if radical(g).dim != 0:
        return False
    pos, neg, zero = killing_signature(g)
    return pos != 0


def export_model(entry: CatalogEntry) -> dict:
    """Orbit-model file payload for an entry (see fileio for the format)."""
    from .fileio import algebra_payload, orbit_payload

    return orbit_payload(entry.model)
