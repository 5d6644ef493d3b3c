"""Hypothesis strategies and independent reference computations shared by the tests."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from hypothesis import strategies as st

from so3lie import linalg, so3
from so3lie.exterior import KForm
from so3lie.liealg import LieAlgebraSpec
from so3lie.scalars import ONE, ZERO, Scalar

SMALL = [Fraction(n, d) for n in range(-4, 5) for d in (1, 2, 3)]


def rationals(lo: int = -6, hi: int = 6, max_den: int = 5):
    return st.builds(Fraction, st.integers(lo, hi), st.integers(1, max_den))


def scalars():
    return st.builds(Scalar, rationals(), rationals())


def nonzero_scalars():
    return scalars().filter(bool)


def kforms(n: int, k: int, max_terms: int = 6):
    keys = list(combinations(range(1, n + 1), k))
    return st.dictionaries(st.sampled_from(keys), scalars(), max_size=min(max_terms, len(keys))).map(
        lambda c: KForm(n, k, c))


def vectors(n: int):
    return st.lists(scalars(), min_size=n, max_size=n)


def b_vectors(density: float = 0.15):
    """Sparse random 50-vectors; most are not Lie algebras."""
    entry = st.one_of(st.just(ZERO), st.sampled_from([ONE, -ONE, Scalar(2), Scalar(0, 1), Scalar(1, 2) / 3]))
    return st.lists(
        st.tuples(st.floats(0, 1), entry).map(lambda t: t[1] if t[0] < density else ZERO),
        min_size=50, max_size=50)


# -- change of basis -------------------------------------------------------------

def invert(m: list[list[Scalar]]) -> list[list[Scalar]]:
    n = len(m)
    cols = []
    for j in range(n):
        rhs = [ONE if i == j else ZERO for i in range(n)]
        sol, kernel = linalg.solve(m, rhs)
        assert sol is not None and not kernel
        cols.append(sol)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def change_basis(spec: LieAlgebraSpec, P: list[list[Scalar]]) -> LieAlgebraSpec:
    """The same Lie algebra in the basis ``f_i = sum_j P[j][i] e_j``."""
    n = spec.dim
    Q = invert(P)
    c = spec.structure_constants
    forms = [dict() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        # [f_i, f_j] in e-coordinates
        v = [ZERO] * n
        for a in range(n):
            if not P[a][i]:
                continue
            for b in range(n):
                if not P[b][j]:
                    continue
                f = P[a][i] * P[b][j]
                for m in range(n):
                    if c[a][b][m]:
                        v[m] = v[m] + f * c[a][b][m]
        for k in range(n):
            w = sum((Q[k][m] * v[m] for m in range(n)), ZERO)
            if w:
                forms[k][(i + 1, j + 1)] = -w
    return LieAlgebraSpec(n, tuple(KForm(n, 2, f) for f in forms))


@st.composite
def basis_changes(draw, n: int = 5):
    """Unipotent upper-triangular matrices with small entries, times a permutation."""
    perm = draw(st.permutations(range(n)))
    U = [[ONE if i == j else (Scalar(draw(st.sampled_from(SMALL))) if j > i else ZERO) for j in range(n)]
         for i in range(n)]
    return [U[perm[i]] for i in range(n)]


def lie_algebras(bases: list[LieAlgebraSpec] | None = None):
    """Random Lie algebras: a base algebra in a random basis."""
    return st.builds(change_basis, st.sampled_from(bases or random_lie_bases()), basis_changes())


# -- NI grid --------------------------------------------------------------------

@lru_cache(maxsize=None)
def ni_basis() -> tuple[tuple[Scalar, ...], ...]:
    rows = [r for _, r in so3.direct_ni_system()]
    return tuple(tuple(v) for v in linalg.nullspace(rows, 50))


@st.composite
def ni_specs(draw, values=(-2, -1, 0, 1, 2)):
    """Grid points of the NI subspace (not necessarily Lie algebras)."""
    basis = ni_basis()
    coeffs = draw(st.lists(st.sampled_from(values), min_size=len(basis), max_size=len(basis)))
    b = [ZERO] * 50
    for c, v in zip(coeffs, basis):
        if c:
            b = [x + y * c for x, y in zip(b, v)]
    return LieAlgebraSpec.from_b(b)


# -- independent Ricci oracle ------------------------------------------------------

def besse_ricci(spec: LieAlgebraSpec) -> list[list[Scalar]]:
    """Ricci of a left-invariant metric from the bracket alone (orthonormal frame).

    ``Ric(X,X) = -1/2 sum|[X,e_i]|^2 - 1/2 B(X,X) + 1/4 sum_{ij} g([e_i,e_j],X)^2 - g([H,X],X)``
    with ``g(H,X) = tr ad_X``; off-diagonal entries by polarisation.
    """
    n = spec.dim
    c = spec.structure_constants
    half, quarter = ONE / 2, ONE / 4
    E = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    H = [sum((c[x][i][i] for i in range(n)), ZERO) for x in range(n)]

    def ad(x):
        return [[sum((x[a] * c[a][j][k] for a in range(n)), ZERO) for j in range(n)] for k in range(n)]

    def q(x):
        A = ad(x)
        t1 = sum((A[k][j] * A[k][j] for j in range(n) for k in range(n)), ZERO)
        killing = sum((A[i][j] * A[j][i] for i in range(n) for j in range(n)), ZERO)
        t3 = sum(((sum((c[i][j][k] * x[k] for k in range(n)), ZERO)) ** 2
                  for i in range(n) for j in range(n)), ZERO)
        hx = spec.bracket(H, x)
        t4 = sum((hx[k] * x[k] for k in range(n)), ZERO)
        return -half * t1 - half * killing + quarter * t3 - t4

    out = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        out[i][i] = q(E[i])
    for i in range(n):
        for j in range(i + 1, n):
            s = [a + b for a, b in zip(E[i], E[j])]
            out[i][j] = out[j][i] = (q(s) - out[i][i] - out[j][j]) * half
    return out


# -- seeded generators (plain random, for fixed-count suites) ----------------------

def random_scalar(rng) -> Scalar:
    return Scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 5)), Fraction(rng.randint(-3, 3), rng.randint(1, 3)))


def random_form(rng, n: int, k: int, terms: int = 4) -> KForm:
    keys = list(combinations(range(1, n + 1), k))
    return KForm(n, k, {rng.choice(keys): random_scalar(rng) for _ in range(terms)})


def random_basis_change(rng, n: int = 5) -> list[list[Scalar]]:
    perm = list(range(n))
    rng.shuffle(perm)
    U = [[ONE if i == j else (Scalar(rng.choice(SMALL)) if j > i else ZERO) for j in range(n)] for i in range(n)]
    return [U[perm[i]] for i in range(n)]


@lru_cache(maxsize=None)
def _lie_bases() -> tuple[LieAlgebraSpec, ...]:
    from so3lie import catalog, liealg

    out = [LieAlgebraSpec.abelian(5), liealg.direct_sum(liealg.so3(0, 3), LieAlgebraSpec.abelian(2))]
    for e in catalog.entries():
        if e.buildable:
            out.extend(catalog.build(e, v) for v in catalog.sample(e, 1))
    return tuple(out)


def random_lie_bases() -> list[LieAlgebraSpec]:
    """One instance of every buildable catalog entry plus a few standard algebras."""
    return list(_lie_bases())
