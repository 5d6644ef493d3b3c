"""The 8-dimensional SU(3) layer on products ``l + k`` and the hypo / half-flat tests."""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import so3
from .exterior import KForm, wedge
from .liealg import LieAlgebraSpec, direct_sum, jacobi_identity_holds
from .liealg import so3 as so3_algebra
from .poly import Poly, cubic_form
from .riemann import ConventionError, geodesic_condition, levi_civita
from .scalars import ONE, R3, ZERO, Scalar

N8 = 8
HALF = Scalar(1) / 2

# components beyond the 5-dimensional tensor (1-based, up to symmetrisation)
EXTRA_COMPONENTS = {
    (1, 6, 6): -HALF,
    (1, 7, 7): -HALF,
    (1, 8, 8): ONE,
    (4, 6, 6): R3 / 2,
    (4, 7, 7): -R3 / 2,
    (2, 6, 7): R3 / 2,
    (3, 6, 8): -R3 / 2,
    (5, 7, 8): R3 / 2,
}


@lru_cache(maxsize=None)
def _ttilde():
    comps = dict(so3._T_COMPONENTS)
    comps.update(EXTRA_COMPONENTS)
    t = so3.symmetric_tensor(N8, comps)
    return tuple(tuple(tuple(r) for r in m) for m in t)


def ttilde():
    """Components ``t~[i][j][k]`` (0-based) of the SU(3) tensor on R^8."""
    return [[list(r) for r in m] for m in _ttilde()]


# -- complex entries as (real, imaginary) pairs ---------------------------------

def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _csub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def cdet3(m):
    """Determinant of a 3x3 matrix of (re, im) pairs."""
    t0 = _cmul(m[0][0], _csub(_cmul(m[1][1], m[2][2]), _cmul(m[1][2], m[2][1])))
    t1 = _cmul(m[0][1], _csub(_cmul(m[1][0], m[2][2]), _cmul(m[1][2], m[2][0])))
    t2 = _cmul(m[0][2], _csub(_cmul(m[1][0], m[2][1]), _cmul(m[1][1], m[2][0])))
    return _cadd(_csub(t0, t1), t2)


def matrix_rep8(x: Sequence) -> list[list[tuple]]:
    """The trace-free 3x3 matrix of ``x in R^8``; entries are (re, im) pairs.

    Works for Scalar or Poly coordinates.
    """
    if len(x) != N8:
        raise ValueError("matrix_rep8 needs 8 coordinates")
    x1, x2, x3, x4, x5, x6, x7, x8 = x
    zero = x1 * 0
    return [
        [(x1 - x4 * R3, zero), (x2 * R3, x8 * R3), (x3 * R3, x7 * R3)],
        [(x2 * R3, -(x8 * R3)), (x1 + x4 * R3, zero), (x5 * R3, x6 * R3)],
        [(x3 * R3, -(x7 * R3)), (x5 * R3, -(x6 * R3)), (x1 * -2, zero)],
    ]


def det8(x: Sequence[Scalar]) -> Scalar:
    re, im = cdet3(matrix_rep8([Scalar.coerce(v) for v in x]))
    if im:
        raise ConventionError("determinant of a Hermitian matrix has an imaginary part")
    return re


def is_hermitian(m) -> bool:
    return all(m[i][j][0] == m[j][i][0] and m[i][j][1] == -m[j][i][1] for i in range(3) for j in range(3))


def det_identity_defect() -> Poly:
    """``TT~(X,X,X) - 1/2 det(X~)`` as a polynomial in 8 variables (zero when consistent)."""
    xs = Poly.variables(N8)
    re, im = cdet3(matrix_rep8(xs))
    if not im.is_zero():
        raise ConventionError("symbolic determinant has an imaginary part")
    return cubic_form(ttilde(), xs) - re * HALF


def restriction_defect() -> Poly:
    """``TT~(X,X,X) - TT(X,X,X)`` on ``R^5 = {x6 = x7 = x8 = 0}``."""
    xs = Poly.variables(5)
    zero = Poly(5)
    return cubic_form(ttilde(), xs + [zero, zero, zero]) - cubic_form(so3.canonical_T(), xs)


# -- psi ---------------------------------------------------------------------

def _lift(f: KForm, n: int = N8) -> KForm:
    return KForm(n, f.k, f.coeffs)


def psi() -> KForm:
    """``E1^e6 + E2^e7 + E3^e8 + e678``."""
    out = KForm.basis(N8, 6, 7, 8)
    for a, E in enumerate(so3.E_forms()):
        out = out + wedge(_lift(E), KForm.basis(N8, 6 + a))
    return out


def act_on_form(A: Sequence[Sequence[Scalar]], f: KForm) -> KForm:
    """Derivation action of the matrix ``A`` (acting on vectors) on a form."""
    n = f.n
    out = KForm.zero(n, f.k)
    for idx, c in f.items():
        for pos, i in enumerate(idx):
            for j in range(1, n + 1):
                a = A[i - 1][j - 1]
                if not a:
                    continue
                new = idx[:pos] + (j,) + idx[pos + 1:]
                if len(set(new)) < len(new):
                    continue
                out = out + KForm(n, f.k, {new: -a * c})
    return out


def rotation_generators() -> list[list[list[Scalar]]]:
    """``E_a`` as 5x5 matrices extended by the rotation of ``e6, e7, e8`` about ``e_{5+a}``."""
    gens = []
    for a, E in enumerate(so3.E_forms()):
        m5 = so3.form_matrix(E)
        A = [[ZERO] * N8 for _ in range(N8)]
        for i in range(5):
            for j in range(5):
                A[i][j] = m5[i][j]
        b, c = [5 + (a + 1) % 3, 5 + (a + 2) % 3]
        A[b][c] = -ONE
        A[c][b] = ONE
        gens.append(A)
    return gens


def psi_isotropy_holds() -> bool:
    p = psi()
    return all(act_on_form(A, p).is_zero() for A in rotation_generators())


# -- products ------------------------------------------------------------------

class Factor(str, Enum):
    ABELIAN3 = "abelian3"
    SO3 = "so3"


@dataclass(frozen=True)
class ProductSpec:
    base: LieAlgebraSpec
    factor: Factor

    def algebra(self) -> LieAlgebraSpec:
        if self.factor == Factor.SO3:
            k = so3_algebra(0, 3)
        else:
            k = LieAlgebraSpec.abelian(3)
        return direct_sum(self.base, k)


def ni_quartic(spec: LieAlgebraSpec, point: Sequence) -> Poly | Scalar:
    """``TT~(nabla_X X, X, X)`` at ``point`` (Scalars or Polys) on an 8-dimensional algebra."""
    G = levi_civita(spec).gamma
    n = spec.dim
    xs = list(point)
    nab = []
    for k in range(n):
        s = None
        for i in range(n):
            for j in range(n):
                g = G[i][j][k]
                if g:
                    term = xs[i] * xs[j] * g
                    s = term if s is None else s + term
        nab.append(s if s is not None else xs[0] * 0)
    t = ttilde()
    total = xs[0] * 0
    for a in range(n):
        if isinstance(nab[a], Poly) and nab[a].is_zero() or (not isinstance(nab[a], Poly) and not nab[a]):
            continue
        for b in range(n):
            for c in range(n):
                v = t[a][b][c]
                if v:
                    total = total + nab[a] * xs[b] * xs[c] * v
    return total


def _is_zero(v) -> bool:
    return v.is_zero() if isinstance(v, Poly) else not v


def ni8_check(p: ProductSpec, deep: bool = False, seed: int = 0) -> bool:
    """NI of the product via the geodesic criterion on the base, cross-checked on the product.

    The default cross-check expands ``TT~(nabla X~, X~, X~)`` for ``X~ = X + Y`` with
    a random rational ``X`` in ``l`` and symbolic ``Y`` in ``k``; ``deep`` expands
    the full quartic in 8 variables.
    """
    # restricting to Y = 0 shows that an NI product needs an NI base
    base_ni, _ = so3.ni_check(p.base)
    criterion = base_ni and geodesic_condition(levi_civita(p.base))
    prod = p.algebra()
    if deep:
        point = Poly.variables(N8)
    else:
        rng = random.Random(seed)
        ys = Poly.variables(3)
        point = [Poly.const(3, Scalar(rng.randint(-9, 9), 0) / rng.randint(1, 4)) for _ in range(5)] + ys
    direct = _is_zero(ni_quartic(prod, point))
    if direct != criterion:
        raise ConventionError(f"geodesic criterion says {criterion}, direct expansion says {direct}")
    return criterion


def psi_closed(p: ProductSpec) -> bool:
    return p.algebra().d_form(psi()).is_zero()


def su3_block(p: ProductSpec, deep: bool = False) -> dict:
    return {"ni8": ni8_check(p, deep), "factor": p.factor.value, "psi_closed": psi_closed(p)}


# -- hypo and half-flat -----------------------------------------------------------

def su2_forms(n: int = 5) -> tuple[KForm, KForm, KForm, KForm]:
    """``alpha = e5``, ``w1 = e12+e34``, ``w2 = e13+e42``, ``w3 = e14+e23``."""
    e = lambda *i: KForm.basis(n, *i)  # noqa: E731
    return e(5), e(1, 2) + e(3, 4), e(1, 3) - e(2, 4), e(1, 4) + e(2, 3)


def hypo_check(spec: LieAlgebraSpec) -> bool:
    if spec.dim != 5:
        raise ValueError("hypo structures live in dimension 5")
    alpha, w1, w2, w3 = su2_forms()
    d = spec.d_form
    return d(w1).is_zero() and d(wedge(w2, alpha)).is_zero() and d(wedge(w3, alpha)).is_zero()


def extend_closed(spec: LieAlgebraSpec) -> LieAlgebraSpec:
    """``spec + R e6`` with ``de6 = 0``."""
    return direct_sum(spec, LieAlgebraSpec.abelian(1))


def halfflat_forms(n: int = 6) -> tuple[KForm, KForm]:
    alpha, w1, w2, w3 = su2_forms(n)
    e6 = KForm.basis(n, 6)
    omega = w3 + wedge(alpha, e6)
    psi_plus = wedge(w2, alpha) - wedge(w1, e6)
    return omega, psi_plus


def halfflat_check(spec: LieAlgebraSpec) -> bool:
    """``d psi_+ = 0`` and ``d(omega ^ omega) = 0`` on a 6-dimensional algebra."""
    if spec.dim == 5:
        spec = extend_closed(spec)
    if spec.dim != 6:
        raise ValueError("half-flat test needs a 6-dimensional algebra")
    if spec.d[5]:
        raise ValueError("e6 must be closed")
    if not jacobi_identity_holds(spec):
        raise ValueError("not a Lie algebra")
    omega, psi_plus = halfflat_forms()
    d = spec.d_form
    return d(psi_plus).is_zero() and d(wedge(omega, omega)).is_zero()
