from fractions import Fraction

import pytest

from crkit.algebra import (
    abelian,
    derived_series,
    heisenberg,
    killing_form,
    radical,
    sl2,
    span,
    validate,
)
from crkit.complexify import (
    OrbitModel,
    anticanonical_fibration,
    apply_complex_matrix_to_model,
    complex_to_real,
    complexify,
    complexify_algebra,
    cr_normalizer_algebra,
    fiber_globalization_check,
    induced_cr_pair,
    j_apply,
    max_complex_ideal,
    nilpotent_automorphism,
    product_model,
    realify,
    real_to_complex,
)
from crkit.cr import check_cr_pair
from crkit.errors import InputError, StructureError
from crkit.linalg import rank
from crkit.scalars import QI, GaussianRational, I

F = Fraction
G = GaussianRational


def gz(*vals):
    return tuple(G(v) for v in vals)


# ---------------------------------------------------------------------------
# complexification / realification
# ---------------------------------------------------------------------------

def test_complexify_abelian():
    c = complexify(abelian(2))
    assert c.g_hat.dim == 2 and c.g_hat.field == QI
    assert not c.g_hat.brackets
    assert c.realified.dim == 4


def test_complexify_rejects_complex_input():
    with pytest.raises(InputError):
        complexify_algebra(complexify_algebra(abelian(1)))


def test_complexify_sl2_killing_scales_consistently():
    L = sl2()
    c = complexify(L)
    k_real = killing_form(L)
    k_cplx = killing_form(c.g_hat)
    for i in range(3):
        for j in range(3):
            assert k_cplx.matrix[i][j] == G(k_real.matrix[i][j])


def test_complexify_heisenberg_preserves_series_lengths():
    L = heisenberg()
    c = complexify(L)
    assert len(derived_series(L)) == len(derived_series(c.g_hat))


def test_realified_brackets():
    c = complexify(sl2())
    r = c.realified
    assert validate(r).ok
    # [e_h, i e_e] = i [h, e] = 2 i e
    h = r.basis_vector(0)
    ie = r.basis_vector(4)
    out = r.bracket(h, ie)
    assert out == (F(0), F(0), F(0), F(0), F(2), F(0))
    # [i e_e, i e_f] = -[e, f] = -h
    assert r.bracket(r.basis_vector(4), r.basis_vector(5))[0] == F(-1)


def test_realify_roundtrip_coordinates():
    z = gz(1, 0) + (G(2, -3),)
    v = complex_to_real((z[0], z[2]))
    assert real_to_complex(v) == (G(1), G(2, -3))
    assert j_apply(v) == complex_to_real((I * G(1), I * G(2, -3)))


def test_double_complexification_doubles_radical_dimension():
    # realify then complexify: dimension doubles; radical dimension doubles
    for L in (sl2(), heisenberg()):
        re = realify(complexify_algebra(L))
        again = complexify_algebra(re)
        assert again.dim == 2 * L.dim
        assert radical(again).dim == 2 * radical(L).dim


# ---------------------------------------------------------------------------
# orbit model fixtures
# ---------------------------------------------------------------------------

def su2_rows():
    """su(2) inside realified sl2(C): i*h, e - f, i*(e + f)."""
    return [
        (F(0),) * 3 + (F(1), F(0), F(0)),
        (F(0), F(1), F(-1), F(0), F(0), F(0)),
        (F(0),) * 4 + (F(1), F(1)),
    ]


def su2_model():
    ambient = complexify_algebra(sl2())
    return OrbitModel(ambient, su2_rows(), [], name="su2-in-sl2")


def full_sl2_model(iso_rows):
    ambient = complexify_algebra(sl2())
    real = realify(ambient)
    rows = [real.basis_vector(k) for k in range(6)]
    return OrbitModel(ambient, rows, iso_rows, real_algebra=real)


def circle_model():
    """S^1 inside C^*: one-dimensional abelian ambient, real line i R."""
    ambient = abelian(1, field=QI)
    return OrbitModel(ambient, [(F(0), F(1))], [], name="circle")


def mixed_model():
    """(complex sl2) + (real line) inside sl2(C) + C."""
    from crkit.algebra import direct_sum

    ambient = direct_sum(complexify_algebra(sl2()), abelian(1, field=QI))
    real = realify(ambient)
    rows = []
    for k in (0, 1, 2):          # sl2 real directions
        rows.append(real.basis_vector(k))
    for k in (4, 5, 6):          # sl2 imaginary directions
        rows.append(real.basis_vector(k))
    rows.append(real.basis_vector(3))  # the real line in the C factor
    return OrbitModel(ambient, rows, [], name="mixed")


# ---------------------------------------------------------------------------
# maximal complex ideal
# ---------------------------------------------------------------------------

def test_m_zero_for_real_form():
    model = su2_model()
    assert max_complex_ideal(model).dim == 0
    # totally real 3-dim orbit in a 3-complex-dimensional ambient
    assert model.codim == 3


def test_m_everything_for_complex_g():
    model = full_sl2_model([])
    assert max_complex_ideal(model).dim == 6


def test_m_mixed_case_is_sl2_summand():
    model = mixed_model()
    m = max_complex_ideal(model)
    assert m.dim == 6
    # the C-factor directions are not in m
    assert not m.contains(model.ambient_real.basis_vector(3))
    assert not m.contains(model.ambient_real.basis_vector(7))


def test_genericity_violation_rejected():
    ambient = complexify_algebra(abelian(2))
    with pytest.raises(StructureError):
        OrbitModel(ambient, [(F(1), F(0), F(0), F(0))], [])


def test_non_subalgebra_isotropy_rejected():
    ambient = complexify_algebra(sl2())
    real = realify(ambient)
    rows = [real.basis_vector(k) for k in range(6)]
    with pytest.raises(StructureError):
        OrbitModel(ambient, rows, [gz(0, 1, 0), gz(0, 0, 1)])  # span(e, f) not closed


# ---------------------------------------------------------------------------
# CR normalizer and fibration
# ---------------------------------------------------------------------------

def test_normalizer_discrete_isotropy_is_everything():
    model = circle_model()
    ncr = cr_normalizer_algebra(model)
    assert ncr == model.real_sub
    rep = anticanonical_fibration(model)
    assert rep.degenerate
    assert rep.base_dim == 0
    assert rep.fiber_dim == 1
    assert rep.isotropy_discrete_proxy is True


def test_normalizer_of_borel_is_borel():
    model = full_sl2_model([gz(1, 0, 0), gz(0, 1, 0)])  # borel span(h, e)
    ncr = cr_normalizer_algebra(model)
    assert ncr.dim == 4
    assert ncr == model.isotropy_real
    rep = anticanonical_fibration(model)
    assert not rep.degenerate
    assert rep.base_dim == 2
    assert rep.fiber_dim == 0  # j = h here


def test_fibration_report_record_shape():
    rep = anticanonical_fibration(circle_model())
    rec = rep.as_record()
    assert rec["degenerate"] is True
    assert rec["dim_fiber"] == 1 and rec["dim_base"] == 0 and rec["h_dim"] == 0
    assert rec["caveats"]


# ---------------------------------------------------------------------------
# fiber globalization facts
# ---------------------------------------------------------------------------

def heis_solv_model():
    """Realified complex Heisenberg plus a real 2-torus direction pair."""
    from crkit.algebra import direct_sum

    ambient = direct_sum(heisenberg(field=QI), abelian(2, field=QI))
    real = realify(ambient)
    rows = []
    for k in (0, 1, 2):
        rows.append(real.basis_vector(k))       # heis real parts
    for k in (5, 6, 7):
        rows.append(real.basis_vector(k))       # heis imaginary parts
    rows.append(real.basis_vector(3))           # first C factor: real line
    rows.append(real.basis_vector(9))           # second C factor: i R line
    return OrbitModel(ambient, rows, [], name="heis-solv")


def test_fiber_globalization_heis_solvmanifold():
    model = heis_solv_model()
    assert model.codim == 2
    rep = fiber_globalization_check(model)
    assert rep.ok
    assert rep.by_name("codim-at-most-2").ok
    assert rep.by_name("ambient-dim-bound").ok
    assert rep.by_name("semisimple-part-in-m").ok
    assert rep.by_name("radical-alignment").ok


def test_fiber_globalization_complex_g_trivial():
    model = full_sl2_model([])
    rep = fiber_globalization_check(model)
    assert rep.ok


def test_fiber_globalization_violation_detected():
    # su(2) real form of sl2(C): m = 0, dim_C ambient = 3 > 0 + 2
    rep = fiber_globalization_check(su2_model())
    assert not rep.by_name("ambient-dim-bound").ok


def test_fiber_globalization_requires_degenerate():
    model = full_sl2_model([gz(1, 0, 0), gz(0, 1, 0)])
    with pytest.raises(StructureError):
        fiber_globalization_check(model)


# ---------------------------------------------------------------------------
# induced CR pair, products, perturbations
# ---------------------------------------------------------------------------

def test_induced_pair_on_circle_model():
    pair = induced_cr_pair(circle_model())
    rep = check_cr_pair(pair)
    assert rep.ok


def test_induced_pair_on_mixed_model():
    pair = induced_cr_pair(mixed_model())
    assert check_cr_pair(pair).ok
    from crkit.cr import cr_type

    t = cr_type(pair)
    assert t.n == 7 and t.l == 3 and t.k == 1


def test_product_model_codim_additive():
    a = circle_model()
    b = heis_solv_model()
    prod = product_model(a, b)
    assert prod.codim == a.codim + b.codim
    assert prod.m.dim == a.m.dim + b.m.dim


def test_nilpotent_automorphism_preserves_model():
    ambient = complexify_algebra(sl2())
    x = gz(0, 1, 0)  # ad e is nilpotent
    mat = nilpotent_automorphism(ambient, x)
    model = su2_model()
    moved = apply_complex_matrix_to_model(model, mat)
    assert moved.codim == model.codim
    assert moved.m.dim == model.m.dim


def test_nilpotent_automorphism_rejects_semisimple():
    ambient = complexify_algebra(sl2())
    with pytest.raises(InputError):
        nilpotent_automorphism(ambient, gz(1, 0, 0))  # ad h not nilpotent
