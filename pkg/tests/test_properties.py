"""Structural properties checked on randomized exact data."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from crkit.algebra import (
    derived_series,
    heisenberg,
    is_subalgebra,
    killing_form,
    normalizer_subalgebra,
    quotient_algebra,
    radical,
    sl2,
    span,
    validate,
)
from crkit.catalog import build_sl_real, build_su, catalog_entries, get_entry
from crkit.complexify import j_apply
from crkit.cr import levi_form
from crkit.globalize import condition_c_check, invariant_factors

from .support import random_solvable

F = Fraction

ALGEBRAS = [sl2(), heisenberg(), build_su(2, 1), build_sl_real(3)]

coeffs = st.integers(min_value=-4, max_value=4)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_bracket_bilinear_and_antisymmetric(data):
    L = data.draw(st.sampled_from(ALGEBRAS))
    x = tuple(data.draw(coeffs) for _ in range(L.dim))
    y = tuple(data.draw(coeffs) for _ in range(L.dim))
    z = tuple(data.draw(coeffs) for _ in range(L.dim))
    a = data.draw(coeffs)
    xy = L.bracket(x, y)
    assert xy == tuple(-v for v in L.bracket(y, x))
    lin = L.bracket(tuple(a * xi + zi for xi, zi in zip(x, z)), y)
    expect = tuple(a * u + w for u, w in zip(xy, L.bracket(z, y)))
    assert lin == expect


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_jacobi_on_random_vectors(data):
    L = data.draw(st.sampled_from(ALGEBRAS))
    x, y, z = (tuple(data.draw(coeffs) for _ in range(L.dim)) for _ in range(3))
    total = [0] * L.dim
    for (a, b, c) in ((x, y, z), (y, z, x), (z, x, y)):
        v = L.bracket(L.bracket(a, b), c)
        total = [t + w for t, w in zip(total, v)]
    assert not any(total)


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_killing_invariance_property(data):
    L = data.draw(st.sampled_from(ALGEBRAS))
    k = killing_form(L)
    x, y, z = (tuple(data.draw(coeffs) for _ in range(L.dim)) for _ in range(3))
    assert k.evaluate(L.bracket(z, x), y) + k.evaluate(x, L.bracket(z, y)) == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=5), st.integers(min_value=0, max_value=10**6))
def test_random_solvable_radical_is_everything(n, seed):
    rng = random.Random(seed)
    L = random_solvable(rng, n)
    assert validate(L).ok
    r = radical(L)
    assert r.dim == L.dim
    assert derived_series(L)[-1].dim == 0


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_normalizer_contains_any_subalgebra(data):
    L = data.draw(st.sampled_from(ALGEBRAS))
    # random elements generate a subalgebra via closure
    from crkit.algebra import subalgebra_closure

    vecs = [tuple(data.draw(coeffs) for _ in range(L.dim)) for _ in range(2)]
    s = subalgebra_closure(L, span(L, vecs))
    assert is_subalgebra(L, s)
    n = normalizer_subalgebra(L, s)
    assert n.contains_space(s)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_quotient_by_derived_validates(seed):
    rng = random.Random(seed)
    L = random_solvable(rng, 4)
    from crkit.algebra import derived_subalgebra

    d = derived_subalgebra(L)
    q, _ = quotient_algebra(L, d)
    assert validate(q).ok


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(min_value=2, max_value=60), max_size=4),
    st.lists(st.integers(min_value=2, max_value=60), max_size=4),
    st.integers(min_value=0, max_value=6),
    st.integers(min_value=0, max_value=6),
)
def test_condition_c_fail_iff_rank_drop(t1, t2, r1, r2):
    result = condition_c_check((r1, tuple(t1)), (r2, tuple(t2)))
    assert (result == "fail") == (r1 < r2)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=2, max_value=80), max_size=5))
def test_invariant_factors_divisor_chain(torsion):
    chain = invariant_factors(tuple(torsion))
    prod = 1
    for c in chain:
        prod *= c
    target = 1
    for t in torsion:
        target *= t
    assert prod == target
    for a, b in zip(chain, chain[1:]):
        assert b % a == 0


# ---------------------------------------------------------------------------
# cross-module invariants on the catalog
# ---------------------------------------------------------------------------

def test_catalog_models_m_is_ideal_and_j_stable():
    for e in catalog_entries():
        model = e.model
        m = model.m
        for v in m.rows:
            assert m.contains(j_apply(v))
        for x in model.real_sub.rows:
            for v in m.rows:
                assert m.contains(model.ambient_real.bracket(x, v))


def test_catalog_ncr_between_h_and_normalizer():
    # recompute the sandwich h <= n_cr <= n(h) for a few entries directly
    from crkit.complexify import cr_normalizer_algebra

    for name in ("quadric(2,1)", "sl2_uz", "su2xsu2_torus", "heis_solv"):
        e = get_entry(name)
        ncr = cr_normalizer_algebra(e.model)
        assert ncr.contains_space(e.model.h)


def test_catalog_levi_raw_antisymmetry():
    for name in ("quadric(2,1)", "su2xs1_hopf", "twisted(1)"):
        e = get_entry(name)
        rep = levi_form(e.cr_pair)
        for mat in rep.form_matrices:
            n = len(mat)
            for i in range(n):
                for j in range(n):
                    assert mat[i][j] == -mat[j][i]


def test_catalog_cr_type_matches_codim():
    from crkit.cr import cr_type

    for e in catalog_entries():
        t = cr_type(e.cr_pair)
        assert t.k == e.model.codim
        assert t.k + 2 * t.l == t.n


def test_levi_kernel_equals_joint_codirection_radical():
    from crkit.linalg import left_nullspace, intersect_spaces

    for name in ("quadric(2,2)", "su2xsu2_torus"):
        e = get_entry(name)
        rep = levi_form(e.cr_pair)
        radicals = None
        for mat in rep.completed_matrices:
            rad = left_nullspace(mat)
            radicals = rad if radicals is None else intersect_spaces(radicals, rad)
        dim = len(radicals) if radicals else 0
        assert rep.kernel.dim == dim
