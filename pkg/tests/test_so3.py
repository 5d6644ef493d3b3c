from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import b_vectors, ni_basis, ni_specs, random_scalar, scalars
from so3lie import catalog, linalg, riemann, so3
from so3lie.exterior import KForm, basis_forms, hodge, wedge
from so3lie.liealg import LieAlgebraSpec
from so3lie.scalars import ONE, ZERO, Scalar

N = 5


def ni_quartic_at(spec: LieAlgebraSpec, x) -> Scalar:
    """``(nabla_X TT)(X,X,X) = -3 TT(nabla_X X, X, X)`` for left-invariant X."""
    lc = riemann.levi_civita(spec, check=False)
    return so3.tensor_value(so3.canonical_T(), lc.covariant(x, x), x, x) * -3


def test_structure_axioms():
    ok, why = so3.check_structure_axioms(so3.canonical_T())
    assert ok, why


@given(st.lists(scalars(), min_size=N, max_size=N))
def test_cubic_is_determinant(x):
    # TT(X,X,X) is a fixed multiple of det of the trace-free symmetric matrix of X
    rep = so3.matrix_rep5(x)
    assert sum((rep[i][i] for i in range(3)), ZERO) == ZERO
    assert so3.tensor_value(so3.canonical_T(), x, x, x) == so3.det3(rep) * so3.DET_FACTOR


def test_E_forms_eigenvectors_of_T_hat():
    lam = so3.T_hat_eigenvalue()
    for E in so3.E_forms():
        assert so3.T_hat(E) == E * lam
    # the orthogonal complement is the other eigenspace
    assert lam != ZERO


def test_E_coordinates():
    E1, E2, E3 = so3.E_forms()
    assert so3.E_coordinates(E1 * 2 - E3) == [Scalar(2), ZERO, Scalar(-1)]
    assert so3.E_coordinates(KForm.basis(N, 1, 2)) is None


@given(scalars(), scalars(), scalars())
def test_pure3_forms(a, b, c):
    E1, E2, E3 = so3.E_forms()
    star_T = E1 * a + E2 * b + E3 * c
    T = hodge(star_T)
    expect = so3.TorsionType.ZERO if not (a or b or c) else so3.TorsionType.PURE3
    assert so3.torsion_type_of(T) == expect


@given(st.lists(scalars(), min_size=10, max_size=10))
def test_type_splits_by_module(coeffs):
    # project a random 2-form onto the complement of span E, then classify its dual 3-form
    f = KForm(N, 2, {k: v for k, v in zip([next(iter(b.coeffs)) for b in basis_forms(N, 2)], coeffs)})
    Es = so3.E_forms()
    gram = [[so3.pairing(Ea, Eb) for Eb in Es] for Ea in Es]
    rhs = [so3.pairing(f, Ea) for Ea in Es]
    sol, _ = linalg.solve(gram, rhs)
    proj = f
    for s, E in zip(sol, Es):
        proj = proj - E * s
    T7 = hodge(proj)
    if T7.is_zero():
        return
    assert so3.torsion_type_of(T7) == so3.TorsionType.PURE7
    T = hodge(f)
    if not T.is_zero() and any(sol) and not proj.is_zero():
        assert so3.torsion_type_of(T) == so3.TorsionType.GENERIC


def test_ni_audit():
    audit = so3.audit_ni_system()
    assert audit.direct_rank == 25 and audit.printed_rank == 25
    assert len(audit.spurious_in_printed) == 4
    assert len(audit.missing_from_printed) == 6
    assert not audit.equal
    assert so3.audit_ni_system(so3.reconciled_ni_system()).equal
    assert len(ni_basis()) == 25


@settings(max_examples=60)
@given(b_vectors(0.1))
def test_ni_linear_system_matches_quartic(b):
    spec = LieAlgebraSpec.from_b(b)
    ni = not so3.ni_violations(spec)
    rng = random.Random(1)
    values = [ni_quartic_at(spec, [random_scalar(rng) for _ in range(N)]) for _ in range(12)]
    assert ni == all(v == ZERO for v in values)


@given(ni_specs())
def test_ni_grid_points(spec):
    assert so3.ni_check(spec)[0]
    rng = random.Random(2)
    assert ni_quartic_at(spec, [random_scalar(rng) for _ in range(N)]) == ZERO


@given(ni_specs())
def test_torsion_two_ways(spec):
    assert so3.solve_torsion(spec) == so3.printed_torsion(spec)


@settings(max_examples=100)
@given(ni_specs())
def test_characteristic_connection(spec):
    T = so3.characteristic_torsion(spec)
    conn = so3.characteristic_connection(spec, T)
    assert conn.is_metric()
    assert so3.preserves_tensor(conn)
    assert so3.gamma_proportionalities_hold(conn)
    # with de(X,Y) = -e([X,Y]) the connection nabla - T/2 has torsion -T
    assert so3.torsion_tensor_form(conn, spec) == -T


@given(st.lists(scalars(), min_size=10, max_size=10))
def test_sigma_even_in_T(coeffs):
    T = sum((f * c for f, c in zip(basis_forms(N, 3), coeffs)), KForm.zero(N, 3))
    assert so3.sigma_T(-T) == so3.sigma_T(T)
    assert so3.sigma_T(T * 2) == so3.sigma_T(T) * 4


def test_non_ni_rejected():
    b = [ZERO] * 50
    b[0] = ONE  # de1 = e12
    spec = LieAlgebraSpec.from_b(b)
    assert so3.ni_violations(spec)
    with pytest.raises(so3.NotNearlyIntegrable):
        so3.characteristic_torsion(spec)


def test_abelian_model():
    spec = LieAlgebraSpec.abelian(5)
    assert so3.characteristic_torsion(spec).is_zero()
    F, model = so3.F_constant(spec)
    assert F == ZERO and model == so3.Model.R5
    assert so3.torsion_type(spec) == so3.TorsionType.ZERO


def test_F_needs_torsion_free():
    spec = catalog.build("ST-2", {"a": 1})
    with pytest.raises(ValueError):
        so3.F_constant(spec)


@pytest.mark.parametrize("values", catalog.sample(catalog.get("NC-5"), 3))
def test_nc5_parallel_with_negative_sigma(values):
    # the actual torsion of the characteristic connection is -T, and dT' = 2 sigma_T' for T' = -T
    spec = catalog.build("NC-5", values)
    T = so3.characteristic_torsion(spec)
    assert so3.parallel_torsion_check(spec)
    assert so3.dT(spec, T) == so3.sigma_T(T) * -2
    assert so3.dT(spec, -T) == so3.sigma_T(-T) * 2


@pytest.mark.parametrize("name", ["ST-2", "ST-4"])
def test_strong_parallel_families(name):
    for values in catalog.sample(catalog.get(name), 3):
        spec = catalog.build(name, values)
        T = so3.characteristic_torsion(spec)
        assert so3.parallel_torsion_check(spec)
        assert so3.dT(spec, T).is_zero() and so3.sigma_T(T).is_zero()


def test_parallel_vectors():
    assert so3.parallel_vectors(catalog.build("ST-3", {"a": 1})).dim == 0
    # every vector is parallel for the flat connection of the abelian algebra
    assert so3.parallel_vectors(LieAlgebraSpec.abelian(5)).dim == 5


def test_so3_conditions_imply_coclosed():
    for values in catalog.sample(catalog.get("NS-1"), 3):
        spec = catalog.build("NS-1", values)
        assert so3.so3_conditions_check(spec)
        assert so3.costar_dT(spec).is_zero()
        assert so3.ricci_symmetry_check(spec)
        assert so3.connection_forms(spec).is_zero()
        assert so3.is_harmonic(spec)


def test_wedge_and_pairing_criteria_agree_on_basis():
    # torsion_type_of raises ConventionError if the two Pure7 criteria disagree
    types = {so3.torsion_type_of(T) for T in basis_forms(N, 3)}
    assert so3.TorsionType.ZERO not in types
    assert all(not wedge(hodge(E), E).is_zero() for E in so3.E_forms())
