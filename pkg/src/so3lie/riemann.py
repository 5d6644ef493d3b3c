"""Left-invariant Riemannian geometry for the metric ``g = sum (e^i)^2``.

Curvature convention: ``R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z -
nabla_[X,Y] Z`` and ``Ric(X,Y) = sum_i g(R(e_i,X)Y, e_i)``; with these a
round sphere has positive Ricci curvature.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .exterior import Vector, unit
from .liealg import (
    H_INDICES,
    P_INDICES,
    LieAlgebraSpec,
    Subspace,
    h_subspace,
    is_symmetric_pair,
    p_subspace,
    require_jacobi,
)
from .scalars import ZERO, R3, Scalar

Tensor4 = list[list[list[list[Scalar]]]]
Matrix = list[list[Scalar]]


class ConventionError(AssertionError):
    """Two independent formulations of the same quantity disagree."""


@dataclass(frozen=True)
class Connection:
    """Left-invariant connection: ``gamma[i][j][k] = g(nabla_{e_i} e_j, e_k)`` (0-based)."""

    dim: int
    gamma: tuple[tuple[tuple[Scalar, ...], ...], ...]

    @classmethod
    def from_array(cls, gamma) -> Connection:
        return cls(len(gamma), tuple(tuple(tuple(r) for r in m) for m in gamma))

    def covariant(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        """``nabla_X Y`` for left-invariant X, Y."""
        n = self.dim
        out = [ZERO] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                f = x[i] * y[j]
                row = self.gamma[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + f * row[k]
        return tuple(out)

    def matrix(self, i: int) -> Matrix:
        """Matrix of ``nabla_{e_i}``: entry ``[k][j] = e^k(nabla_{e_i} e_j)``."""
        n = self.dim
        return [[self.gamma[i][j][k] for j in range(n)] for k in range(n)]

    def is_metric(self) -> bool:
        n = self.dim
        return all(
            self.gamma[i][j][k] + self.gamma[i][k][j] == ZERO
            for i in range(n) for j in range(n) for k in range(n)
        )

    def torsion(self, spec: LieAlgebraSpec) -> list[list[list[Scalar]]]:
        """``g(nabla_X Y - nabla_Y X - [X,Y], Z)`` on basis triples."""
        n = self.dim
        c = spec.structure_constants
        return [[[self.gamma[i][j][k] - self.gamma[j][i][k] - c[i][j][k] for k in range(n)]
                 for j in range(n)] for i in range(n)]


def levi_civita(spec: LieAlgebraSpec, check: bool = True) -> Connection:
    """Koszul formula ``2g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y)``."""
    if check:
        require_jacobi(spec)
    n = spec.dim
    c = spec.structure_constants
    half = Scalar(1, 0) / 2
    gamma = [[[(c[i][j][k] - c[j][k][i] + c[k][i][j]) * half for k in range(n)]
              for j in range(n)] for i in range(n)]
    return Connection.from_array(gamma)


def curvature(conn: Connection, spec: LieAlgebraSpec) -> Tensor4:
    """``R[i][j][k][l] = g(R(e_i,e_j)e_k, e_l)``."""
    n = conn.dim
    G = conn.gamma
    c = spec.structure_constants
    R = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(n):
                    t = ZERO
                    for m in range(n):
                        # nabla_i nabla_j e_k = sum_m G[j][k][m] nabla_i e_m
                        a = G[j][k][m]
                        if a:
                            b = G[i][m][l]
                            if b:
                                t = t + a * b
                        a = G[i][k][m]
                        if a:
                            b = G[j][m][l]
                            if b:
                                t = t - a * b
                        a = c[i][j][m]
                        if a:
                            b = G[m][k][l]
                            if b:
                                t = t - a * b
                    R[i][j][k][l] = t
                    R[j][i][k][l] = -t
    return R


def ricci(conn: Connection, spec: LieAlgebraSpec, R: Tensor4 | None = None) -> Matrix:
    """``Ric(e_a, e_b) = sum_i g(R(e_i, e_a) e_b, e_i)``."""
    if R is None:
        R = curvature(conn, spec)
    n = conn.dim
    out = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            t = ZERO
            for i in range(n):
                t = t + R[i][a][b][i]
            out[a][b] = t
    return out


def sectional(R: Tensor4, i: int, j: int) -> Scalar:
    """Sectional curvature of the plane ``e_i, e_j`` (1-based, orthonormal)."""
    return R[i - 1][j - 1][j - 1][i - 1]


def first_bianchi_holds(R: Tensor4) -> bool:
    n = len(R)
    return all(
        R[i][j][k][l] + R[j][k][i][l] + R[k][i][j][l] == ZERO
        for i in range(n) for j in range(n) for k in range(n) for l in range(n)
    )


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def _project(v: Sequence[Scalar], indices: Sequence[int]) -> Vector:
    keep = {i - 1 for i in indices}
    return tuple(x if i in keep else ZERO for i, x in enumerate(v))


def k_p_bracket(spec: LieAlgebraSpec) -> Scalar:
    """``-g(e_5, [[e_3, e_5]_h, e_3]_p)``."""
    e3, e5 = unit(5, 3), unit(5, 5)
    inner = _project(spec.bracket(e3, e5), H_INDICES)
    outer = _project(spec.bracket(inner, e3), P_INDICES)
    return -outer[4]


def k_p_polynomial(spec: LieAlgebraSpec) -> Scalar:
    b = spec.bmap()
    half = Scalar(1, 0) / 2
    return (b[9] * (half * b[6] + half * b[13] - b[9] - R3 * b[47])
            - b[19] * b[45] + b[39] * b[48])


def k_p(spec: LieAlgebraSpec) -> Scalar:
    """Curvature of the base surface ``L/H`` for the plane ``p = span{e_3, e_5}``.

    The bracket expression is authoritative; on NI algebras the closed-form
    b-polynomial is evaluated as well and the two must agree.
    """
    if spec.dim != 5:
        raise ValueError("k_p needs a 5-dimensional algebra")
    a = k_p_bracket(spec)
    if not _is_ni(spec):
        return a
    b = k_p_polynomial(spec)
    if a != b:
        raise ConventionError(f"k(p) formulations disagree: {a} vs {b}")
    return a


def base_ricci(spec: LieAlgebraSpec, h: Subspace | None = None, p: Subspace | None = None) -> tuple[Matrix, Scalar]:
    """Quadratic form ``Ric(X,X) = -sum_a g([X,[X,e_a]_p]_h, e_a)`` on h, and its trace.

    ``h`` and ``p`` default to ``span{e1,e2,e4}`` and ``span{e3,e5}``; ``(l, p)``
    must be a symmetric pair.
    """
    h = h or h_subspace()
    p = p or p_subspace()
    if not is_symmetric_pair(spec, p, h):
        raise ValueError("(l, p) is not a symmetric pair")
    hb = [unit(5, i) for i in H_INDICES]

    def q(x, y, ea):
        # polarisation of X -> g([X,[X,e_a]_p]_h, e_a)
        inner = _project(spec.bracket(y, ea), P_INDICES)
        outer = _project(spec.bracket(x, inner), H_INDICES)
        return sum((o * w for o, w in zip(outer, ea)), ZERO)

    m = len(hb)
    form = [[ZERO] * m for _ in range(m)]
    half = Scalar(1, 0) / 2
    for s in range(m):
        for t in range(m):
            val = ZERO
            for ea in hb:
                val = val - (q(hb[s], hb[t], ea) + q(hb[t], hb[s], ea)) * half
            form[s][t] = val
    trace = sum((form[i][i] for i in range(m)), ZERO)
    return form, trace


def geodesic_condition(conn: Connection) -> bool:
    """``nabla_X X = 0`` for all X, i.e. ``Gamma^k_ij + Gamma^k_ji = 0``."""
    n = conn.dim
    G = conn.gamma
    return all(G[i][j][k] + G[j][i][k] == ZERO for i in range(n) for j in range(i, n) for k in range(n))


def bracket_totally_skew(spec: LieAlgebraSpec) -> bool:
    """``g([X,Y],Z)`` totally skew (equivalently ad_X skew for all X)."""
    c = spec.structure_constants
    n = spec.dim
    return all(c[i][j][k] + c[i][k][j] == ZERO for i in range(n) for j in range(n) for k in range(n))


def _inclusions(conn: Connection, rules) -> bool:
    """``rules``: (directions, source, target) triples for ``nabla_dir source in target``."""
    for dirs, src, tgt in rules:
        for i in dirs:
            for j in src:
                for k in range(conn.dim):
                    if (k + 1) not in tgt and conn.gamma[i - 1][j - 1][k]:
                        return False
    return True


H, P = H_INDICES, P_INDICES
SPLIT_RULES = ((H, H, H), (H, P, P), (P, H, P), (P, P, H))
INVERSE_RULES = ((H, H, P), (H, P, H), (P, H, H), (P, P, P))
LC_SPLIT_COEFFS = (7, 8, 10, 12, 15, 17, 23, 29, 35, 37, 38, 40, 43, 49)


def _is_ni(spec: LieAlgebraSpec) -> bool:
    # the closed-form coefficient tests below are only valid on NI algebras
    from .so3 import ni_violations

    return spec.dim == 5 and not ni_violations(spec)


def lc_split_check(spec: LieAlgebraSpec) -> bool:
    """Levi-Civita preserves h, p along h and swaps them along p.

    Runs the inclusion test on the connection and, for NI algebras, the
    vanishing test on the listed b-coefficients; they must agree.
    """
    intrinsic = _inclusions(levi_civita(spec, check=False), SPLIT_RULES)
    if not _is_ni(spec):
        return intrinsic
    b = spec.bmap()
    printed = all(not b[i] for i in LC_SPLIT_COEFFS)
    if intrinsic != printed:
        raise ConventionError(f"LC split tests disagree: inclusion={intrinsic}, coefficients={printed}")
    return intrinsic


def inverse_lc_check(spec: LieAlgebraSpec) -> bool:
    """Levi-Civita swaps h, p along h and preserves them along p."""
    return _inclusions(levi_civita(spec, check=False), INVERSE_RULES)


def is_flat(R: Tensor4) -> bool:
    return not any(v for a in R for b in a for c in b for v in c)
