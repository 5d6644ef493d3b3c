from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import b_vectors, basis_changes, change_basis, lie_algebras, random_lie_bases
from so3lie import liealg, linalg
from so3lie.exterior import KForm
from so3lie.liealg import LieAlgebraSpec, Subspace, b_index
from so3lie.scalars import ONE, ZERO, Scalar


def s3() -> LieAlgebraSpec:
    return LieAlgebraSpec(3, (KForm.zero(3, 2), KForm.zero(3, 2), KForm.basis(3, 1, 3)))


def unit_b(idx: int, value=ONE) -> LieAlgebraSpec:
    b = [ZERO] * 50
    b[idx - 1] = Scalar.coerce(value)
    return LieAlgebraSpec.from_b(b)


def test_s3_bracket_sign():
    e1, e3 = [ONE, ZERO, ZERO], [ZERO, ZERO, ONE]
    assert list(s3().bracket(e1, e3)) == [ZERO, ZERO, -ONE]
    assert s3().d_form(KForm.basis(3, 1)).is_zero()
    assert s3().d_form(KForm.basis(3, 1, 3)).is_zero()


def test_b_indexing():
    assert b_index(1, 2, 5) == 7
    assert b_index(4, 3, 5) == 39
    assert unit_b(7).d[0] == KForm.basis(5, 2, 5)
    assert unit_b(39).d[3] == KForm.basis(5, 3, 5)
    assert unit_b(50).d[4] == KForm.basis(5, 4, 5)


@given(b_vectors())
def test_b_round_trip(b):
    spec = LieAlgebraSpec.from_b(b)
    assert list(spec.b) == b
    assert LieAlgebraSpec.from_json(spec.to_json()) == spec


@given(b_vectors())
def test_d_squared_zero_iff_jacobi(b):
    spec = LieAlgebraSpec.from_b(b)
    d2 = all(spec.d_form(spec.d_form(KForm.basis(5, i))).is_zero() for i in range(1, 6))
    ok, cert = liealg.jacobi_check(spec)
    assert d2 == ok == liealg.jacobi_identity_holds(spec)
    assert ok == (not cert)


@settings(max_examples=200)
@given(lie_algebras())
def test_random_bases_stay_lie(spec):
    assert liealg.jacobi_identity_holds(spec)
    assert liealg.jacobi_check(spec)[0]


@settings(max_examples=50)
@given(st.sampled_from(random_lie_bases()), basis_changes())
def test_invariants_do_not_depend_on_basis(base, P):
    spec = change_basis(base, P)
    assert [s.dim for s in liealg.derived_series(spec)] == [s.dim for s in liealg.derived_series(base)]
    assert liealg.center(spec).dim == liealg.center(base).dim
    assert linalg.signature(liealg.killing_form(spec)) == linalg.signature(liealg.killing_form(base))
    assert liealg.is_solvable(spec) == liealg.is_solvable(base)


@pytest.mark.parametrize("idx", range(1, 51))
def test_single_coefficient_specs(idx):
    # one nonzero coefficient: Jacobi decided by d^2 on every basis 1-form
    spec = unit_b(idx)
    d2 = all(spec.d_form(spec.d_form(KForm.basis(5, i))).is_zero() for i in range(1, 6))
    assert d2 == liealg.jacobi_identity_holds(spec)


def test_so3_killing_form_negative_definite():
    spec = liealg.so3(0, 3)
    assert linalg.signature(liealg.killing_form(spec)) == (0, 3, 0)
    assert liealg.derived_series(spec)[-1].dim == 3
    assert liealg.is_solvable(spec) == (False, None)


def test_heisenberg_series():
    # de5 = -e12 gives [e1,e2] = e5
    spec = LieAlgebraSpec(5, (KForm.zero(5, 2),) * 4 + (-KForm.basis(5, 1, 2),))
    assert [s.dim for s in liealg.derived_series(spec)] == [5, 1, 0]
    assert liealg.is_solvable(spec) == (True, 2)
    assert [s.dim for s in liealg.lower_central_series(spec)] == [5, 1, 0]
    assert liealg.is_nilpotent(spec)
    assert liealg.center(spec).dim == 3


def test_direct_sum_and_symmetric_pair():
    spec = liealg.direct_sum(liealg.so3(0, 3), LieAlgebraSpec.abelian(2))
    assert spec.dim == 5 and liealg.jacobi_identity_holds(spec)
    assert liealg.center(spec) == Subspace.coordinate(5, [4, 5])
    h, p = liealg.h_subspace(), liealg.p_subspace()
    assert h.dim == 3 and p.dim == 2 and p.contains([ZERO, ZERO, ONE, ZERO, ZERO])


def test_jacobi_failure_certificate():
    # de1 = e34, de5 = e12 gives d(de5) = e234
    z = KForm.zero(5, 2)
    spec = LieAlgebraSpec(5, (KForm.basis(5, 3, 4), z, z, z, KForm.basis(5, 1, 2)))
    ok, cert = liealg.jacobi_check(spec)
    assert not ok and cert
    assert not liealg.jacobi_identity_holds(spec)
    with pytest.raises(liealg.JacobiError):
        liealg.require_jacobi(spec)


def test_from_json_validation():
    with pytest.raises(ValueError):
        LieAlgebraSpec.from_json({"dim": 4, "d": []})
    with pytest.raises(ValueError):
        LieAlgebraSpec.from_json({"dim": 5})
    with pytest.raises(ValueError):
        LieAlgebraSpec.from_json({"dim": 5, "d": [[{"ij": [1, 9], "c": [[1, 1], [0, 1]]}]] + [[]] * 4})
