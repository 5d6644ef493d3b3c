"""The irreducible SO(3) structure on R^5 and its characteristic connection.

The structure is the symmetric 3-tensor ``TT`` (``canonical_T``).  An
algebra is nearly integrable (NI) when ``TT(nabla_X X, X, X) = 0`` for all
X; it then carries a unique metric connection
``nabla~ = nabla - 1/2 T`` preserving ``TT`` whose torsion ``T`` is a 3-form.

Wherever a closed-form coefficient formula exists (NI linear system,
torsion, connection 1-forms, flatness, split conditions) it is evaluated
next to the intrinsic computation and the two are required to agree.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations

from . import linalg
from .exterior import KForm, contract, e, hodge, one_form, unit, wedge
from .liealg import PAIRS, LieAlgebraSpec, Subspace
from .poly import Poly
from .riemann import (
    SPLIT_RULES,
    Connection,
    ConventionError,
    Matrix,
    _inclusions,
    curvature,
    is_symmetric,
    levi_civita,
    ricci,
)
from .scalars import ONE, R3, ZERO, Scalar

HALF = Scalar(1) / 2
N = 5


class NotNearlyIntegrable(ValueError):
    """The algebra violates the NI linear system; carries the violated functionals."""

    def __init__(self, violations):
        self.violations = violations
        shown = "; ".join(f"{label} = {value}" for label, value in violations[:3])
        super().__init__(f"structure is not nearly integrable: {shown}")


# -- the tensor ---------------------------------------------------------------

_T_COMPONENTS = {
    (1, 1, 1): Scalar(-1),
    (1, 2, 2): Scalar(1),
    (1, 4, 4): Scalar(1),
    (1, 3, 3): Scalar(-1, 0) / 2,
    (1, 5, 5): Scalar(-1, 0) / 2,
    (4, 3, 3): -R3 / 2,
    (4, 5, 5): R3 / 2,
    (2, 3, 5): R3 / 2,
}


def symmetric_tensor(n: int, components: dict[tuple[int, int, int], Scalar]):
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for (i, j, k), v in components.items():
        for a, b, c in {(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)}:
            t[a - 1][b - 1][c - 1] = v
    return t


@lru_cache(maxsize=None)
def _canonical():
    return tuple(tuple(tuple(r) for r in m) for m in symmetric_tensor(N, _T_COMPONENTS))


def canonical_T():
    """Components ``t[i][j][k]`` (0-based) of the SO(3) tensor in the adapted frame."""
    return [[list(r) for r in m] for m in _canonical()]


def tensor_value(t, x, y, z) -> Scalar:
    n = len(t)
    total = ZERO
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            for k in range(n):
                c = t[i][j][k]
                if c and z[k]:
                    total = total + c * x[i] * y[j] * z[k]
    return total


def matrix_rep5(x: Sequence[Scalar]) -> list[list[Scalar]]:
    """The trace-free symmetric 3x3 matrix attached to ``x in R^5``."""
    x1, x2, x3, x4, x5 = (Scalar.coerce(v) for v in x)
    s = R3.inv()
    return [
        [x1 * s - x4, x2, x3],
        [x2, x1 * s + x4, x5],
        [x3, x5, -2 * x1 * s],
    ]


def det3(m) -> Scalar | Poly:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


# T(X,X,X) = DET_FACTOR * det(matrix_rep5(X)); fixed by X = e_1: -1 = c * (-2/(3 sqrt 3))
DET_FACTOR = 3 * R3 / 2


def check_structure_axioms(t) -> tuple[bool, str | None]:
    """Symmetry, trace-freeness and ``(TT_X)^2 X = g(X,X) X`` as polynomial identities."""
    n = len(t)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = t[i][j][k]
                if not (v == t[i][k][j] == t[j][i][k]):
                    return False, "i) symmetry"
    for i in range(n):
        if sum((t[i][j][j] for j in range(n)), ZERO):
            return False, "ii) trace-free"
    xs = Poly.variables(n)
    norm = sum((x * x for x in xs[1:]), xs[0] * xs[0])
    # (TT_X)(v)_j = sum_{k} t[i][j][k] x_i v_k
    tx = [[sum((xs[i] * t[i][j][k] for i in range(n) if t[i][j][k]), Poly(n)) for k in range(n)]
          for j in range(n)]
    v = [sum((tx[j][k] * xs[k] for k in range(n)), Poly(n)) for j in range(n)]
    w = [sum((tx[j][k] * v[k] for k in range(n)), Poly(n)) for j in range(n)]
    if any(not (w[j] - norm * xs[j]).is_zero() for j in range(n)):
        return False, "iii) cubic identity"
    return True, None


# -- the E-forms and the module splitting ------------------------------------

def E_forms() -> tuple[KForm, KForm, KForm]:
    E1 = e(N, 1, 5) * R3 + e(N, 2, 3) + e(N, 4, 5)
    E2 = e(N, 1, 3) * R3 + e(N, 2, 5) + e(N, 3, 4)
    E3 = e(N, 2, 4) * 2 + e(N, 3, 5)
    return E1, E2, E3


def form_matrix(f: KForm) -> list[list[Scalar]]:
    """Skew matrix of a 2-form: ``m[i][j] = f(e_i, e_j)``."""
    n = f.n
    m = [[ZERO] * n for _ in range(n)]
    for (i, j), v in f.items():
        m[i - 1][j - 1] = v
        m[j - 1][i - 1] = -v
    return m


def matrix_form(m) -> KForm:
    n = len(m)
    return KForm(n, 2, {(i + 1, j + 1): m[i][j] for i, j in combinations(range(n), 2) if m[i][j]})


def _pair_vec(f: KForm) -> list[Scalar]:
    return [f[p] for p in PAIRS]


def E_coordinates(f: KForm) -> list[Scalar] | None:
    """Coefficients ``(c1,c2,c3)`` with ``f = sum c_a E_a``, or None."""
    v = _pair_vec(f)
    Es = [_pair_vec(E) for E in E_forms()]
    rows = [[Es[a][p] for a in range(3)] for p in range(10)]
    sol, kernel = linalg.solve(rows, v)
    return sol


def T_hat(f: KForm) -> KForm:
    """``TT^(e^i ^ e^k) = 4 sum t_ijm t_klm e^j ^ e^l`` extended linearly."""
    t = canonical_T()
    out = KForm.zero(N, 2)
    for (i, k), v in f.items():
        coeffs: dict = {}
        for j in range(N):
            for l in range(N):
                if j == l:
                    continue
                s = ZERO
                for m in range(N):
                    a, b = t[i - 1][j][m], t[k - 1][l][m]
                    if a and b:
                        s = s + a * b
                if s:
                    coeffs[(j + 1, l + 1)] = coeffs.get((j + 1, l + 1), ZERO) + s * 4
        out = out + KForm(N, 2, coeffs) * v
    return out


def pairing(alpha: KForm, beta: KForm) -> Scalar:
    """``<alpha, beta> = *(TT^(alpha) ^ *beta)``."""
    return hodge(wedge(T_hat(alpha), hodge(beta)))[()]


def T_hat_eigenvalue() -> Scalar:
    """The common eigenvalue of ``TT^`` on ``span{E1,E2,E3}``."""
    values = set()
    for E in E_forms():
        img = T_hat(E)
        (key, v), *_ = E.items()
        lam = img[key] / v
        if img != E * lam:
            raise ConventionError("E-form is not an eigenvector of TT^")
        values.add(lam)
    if len(values) != 1:
        raise ConventionError(f"E-forms have different eigenvalues {values}")
    return values.pop()


# -- near integrability -------------------------------------------------------

def _quartic_ni_poly(spec: LieAlgebraSpec) -> Poly:
    """``TT(nabla_X X, X, X)`` with ``g(nabla_X X, e_k) = -g([X, e_k], X)``."""
    xs = Poly.variables(N)
    c = spec.structure_constants
    t = canonical_T()
    y = []
    for k in range(N):
        acc = Poly(N)
        for i in range(N):
            for j in range(N):
                v = c[i][k][j]
                if v:
                    acc = acc - xs[i] * xs[j] * v
        y.append(acc)
    total = Poly(N)
    for k in range(N):
        if y[k].is_zero():
            continue
        for a in range(N):
            for b in range(N):
                v = t[k][a][b]
                if v:
                    total = total + y[k] * xs[a] * xs[b] * v
    return total


def _unit_b(alpha: int) -> LieAlgebraSpec:
    b = [ZERO] * 50
    b[alpha - 1] = ONE
    return LieAlgebraSpec.from_b(b)


@lru_cache(maxsize=None)
def _direct_rows() -> tuple[tuple[tuple[int, ...], tuple[Scalar, ...]], ...]:
    """Quartic monomial -> linear functional on b-space, from the direct expansion."""
    polys = [_quartic_ni_poly(_unit_b(a)) for a in range(1, 51)]
    monos = sorted({m for p in polys for m in p.terms}, reverse=True)
    return tuple((m, tuple(p.coefficient(m) for p in polys)) for m in monos)


def direct_ni_system() -> list[tuple[str, list[Scalar]]]:
    """The NI condition as linear functionals on ``(b_1..b_50)``, one per monomial."""
    return [("coeff of " + _mono_name(m), list(row)) for m, row in _direct_rows()]


def _mono_name(m) -> str:
    return "*".join(f"l{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(m) if p)


# Printed linear system, each entry ``lhs - rhs`` as a function of b (1-based).
PRINTED_NI_SYSTEM: tuple[tuple[str, object], ...] = (
    ("b1 = 0", lambda b: b[1]),
    ("b11 = 0", lambda b: b[11]),
    ("b3 = 0", lambda b: b[3]),
    ("b33 = 0", lambda b: b[33]),
    ("b20 = -b37", lambda b: b[20] + b[37]),
    ("b13 + b31 = 0", lambda b: b[13] + b[31]),
    ("b2 = r3(b23 + b8)", lambda b: b[2] - R3 * (b[23] + b[8])),
    ("b4 = r3(-b43 + b10)", lambda b: b[4] - R3 * (b[10] - b[43])),
    ("b22 = r3 b28", lambda b: b[22] - R3 * b[28]),
    ("b44 = r3 b50", lambda b: b[44] - R3 * b[50]),
    ("b21 + b12 = r3 b17", lambda b: b[21] + b[12] - R3 * b[17]),
    ("b14 + b41 = r3 b15", lambda b: b[14] + b[41] - R3 * b[15]),
    ("b4 = r3(b5 - b21)", lambda b: b[4] - R3 * (b[5] - b[21])),
    ("b2 = r3(b7 - b41)", lambda b: b[2] - R3 * (b[7] - b[41])),
    ("2b22 + r3 b16 = 2r3(b19 + b27)", lambda b: 2 * b[22] + R3 * b[16] - 2 * R3 * (b[19] + b[27])),
    ("2b44 - r3 b16 = 2r3(b45 - b19)", lambda b: 2 * b[44] - R3 * b[16] - 2 * R3 * (b[45] - b[19])),
    ("2b29 + b17 = b26 + b18", lambda b: 2 * b[29] + b[17] - b[26] - b[18]),
    ("2b29 + b40 = b26 + b35", lambda b: 2 * b[29] + b[40] - b[26] - b[35]),
    ("2b49 - b15 - b37 = b46", lambda b: 2 * b[49] - b[15] - b[37] - b[46]),
    ("b28 + b50 = b45 + b27", lambda b: b[28] + b[50] - b[45] - b[27]),
    ("b24 + b42 = r3(b25 + b47)", lambda b: b[24] + b[42] - R3 * (b[25] + b[47])),
    ("b48 - b30 = b47 - b25", lambda b: b[48] - b[30] - b[47] + b[25]),
    ("2(b24 + b9) = 2r3 b25 + b13 + b6", lambda b: 2 * (b[24] + b[9]) - 2 * R3 * b[25] - b[13] - b[6]),
    ("2(b42 - b9) = 2r3 b47 - (b13 + b6)", lambda b: 2 * (b[42] - b[9]) - 2 * R3 * b[47] + b[13] + b[6]),
    ("2(b39 + b30 - b25) = b36", lambda b: 2 * (b[39] + b[30] - b[25]) - b[36]),
    ("b35 + b17 = b40 + b18", lambda b: b[35] + b[17] - b[40] - b[18]),
    ("2(b48 + b39 - b47) = b36", lambda b: 2 * (b[48] + b[39] - b[47]) - b[36]),
    ("b38 = -b15", lambda b: b[38] + b[15]),
    ("r3(b40 + b18 - b35) = b21 + b12", lambda b: R3 * (b[40] + b[18] - b[35]) - b[21] - b[12]),
    ("b32 = -b23 - r3 b15", lambda b: b[32] + b[23] + R3 * b[15]),
)


def _functional(fn) -> list[Scalar]:
    row = []
    for a in range(1, 51):
        b = {i: (ONE if i == a else ZERO) for i in range(1, 51)}
        row.append(Scalar.coerce(fn(b)))
    return row


# The printed list carries the relation b38 = -b15, which is not a consequence
# of NI (no characteristic torsion exists on its solution space).  These four
# printed equations are replaced by the four direct functionals below.
SPURIOUS_PRINTED = (
    "b20 = -b37",
    "2b49 - b15 - b37 = b46",
    "b38 = -b15",
    "b32 = -b23 - r3 b15",
)
CORRECTIONS: tuple[tuple[str, object], ...] = (
    ("b15 = b20 - b46 + 2b49", lambda b: b[15] - b[20] + b[46] - 2 * b[49]),
    ("b37 = b38 - b46 + 2b49", lambda b: b[37] - b[38] + b[46] - 2 * b[49]),
    ("b32 = -b23 + r3 b38", lambda b: b[32] + b[23] - R3 * b[38]),
    ("b34 = r3 b40 - b43", lambda b: b[34] - R3 * b[40] + b[43]),
)
RECONCILED_NI_SYSTEM = tuple(
    (label, fn) for label, fn in PRINTED_NI_SYSTEM if label not in SPURIOUS_PRINTED
) + CORRECTIONS


def printed_ni_system() -> list[tuple[str, list[Scalar]]]:
    return [(label, _functional(fn)) for label, fn in PRINTED_NI_SYSTEM]


def reconciled_ni_system() -> list[tuple[str, list[Scalar]]]:
    return [(label, _functional(fn)) for label, fn in RECONCILED_NI_SYSTEM]


@dataclass
class NIAudit:
    """Comparison of the printed NI system with the direct quartic expansion."""

    direct_rank: int
    printed_rank: int
    missing_from_printed: list[str]  # direct functionals not implied by the printed system
    spurious_in_printed: list[str]  # printed equations not implied by NI
    equal: bool


def audit_ni_system(printed=None) -> NIAudit:
    direct = direct_ni_system()
    printed = printed_ni_system() if printed is None else printed
    d_red, d_piv = linalg.rref([r for _, r in direct], 50)
    p_red, p_piv = linalg.rref([r for _, r in printed], 50)
    missing = [lbl for lbl, r in direct if not linalg.in_span(p_red, p_piv, r)]
    spurious = [lbl for lbl, r in printed if not linalg.in_span(d_red, d_piv, r)]
    return NIAudit(len(d_piv), len(p_piv), missing, spurious, d_red == p_red)


def ni_violations(spec: LieAlgebraSpec) -> list[tuple[str, Scalar]]:
    b = spec.b
    out = []
    for label, row in direct_ni_system():
        v = sum((x * y for x, y in zip(row, b) if x and y), ZERO)
        if v:
            out.append((label, v))
    return out


def ni_check(spec: LieAlgebraSpec) -> tuple[bool, list[tuple[str, Scalar]]]:
    """NI test: direct quartic expansion and the reconciled linear system must agree."""
    if spec.dim != N:
        raise ValueError("the SO(3) structure lives on 5-dimensional algebras")
    violations = ni_violations(spec)
    bm = spec.bmap()
    listed = [(label, Scalar.coerce(fn(bm))) for label, fn in RECONCILED_NI_SYSTEM]
    listed_bad = [(label, v) for label, v in listed if v]
    if (not violations) != (not listed_bad):
        raise ConventionError(
            f"NI tests disagree: direct violations {violations[:2]}, listed violations {listed_bad[:2]}"
        )
    return not violations, violations


def require_ni(spec: LieAlgebraSpec) -> None:
    ok, violations = ni_check(spec)
    if not ok:
        raise NotNearlyIntegrable(violations)


# -- characteristic torsion and connection ------------------------------------

def printed_torsion(spec: LieAlgebraSpec) -> KForm:
    b = spec.bmap()
    r3_6, r3_3 = R3 / 6, R3 / 3
    coeffs = {
        (1, 2, 3): b[43] - b[10] + b[12],
        (1, 2, 4): -b[6],
        (1, 2, 5): R3 * b[15] - b[7],
        # printed as r3 b15 - b8, which agrees only under the spurious b38 = -b15
        (1, 3, 4): -R3 * b[38] - b[8],
        (1, 3, 5): b[24] - R3 * b[47] - HALF * b[13] - HALF * b[6],
        (1, 4, 5): R3 * b[40] - b[10],
        (2, 3, 4): 2 * b[29] - b[17] - b[35],
        (2, 3, 5): b[28] - b[50] - b[19],
        (2, 4, 5): b[37] - b[15] - 2 * b[49],
        (3, 4, 5): r3_6 * b[13] + r3_6 * b[6] - r3_3 * b[9] - r3_3 * b[24] + b[39] - b[47],
    }
    return KForm(N, 3, coeffs)


TRIPLES = tuple(combinations(range(1, N + 1), 3))


def _connection_from_torsion(lc: Connection, T: KForm) -> Connection:
    """``Gamma~[i][j][k] = Gamma[i][j][k] - 1/2 T(e_i, e_j, e_k)``."""
    n = lc.dim
    g = [[[lc.gamma[i][j][k] - HALF * T[(i + 1, j + 1, k + 1)] for k in range(n)]
          for j in range(n)] for i in range(n)]
    return Connection.from_array(g)


def _so3_projector():
    """Functionals vanishing exactly on ``span{E1,E2,E3}`` inside skew 5x5 matrices."""
    Es = [_pair_vec(E) for E in E_forms()]
    # orthogonal complement (w.r.t. the coefficient dot product) of span E
    return linalg.nullspace(Es, 10)


def solve_torsion(spec: LieAlgebraSpec) -> KForm | None:
    """The unique 3-form T with ``nabla - 1/2 T`` preserving TT, or None.

    Unknowns are the ten coefficients of T; the equations require every
    matrix ``nabla~_{e_i}`` to lie in ``so(3) = span{E1,E2,E3}``.
    """
    lc = levi_civita(spec, check=False)
    perp = _so3_projector()
    rows, rhs = [], []
    for i in range(N):
        # matrix entry (k, j) of nabla~_{e_i} as 2-form coefficient on pair (k, j)
        for w in perp:
            row = [ZERO] * len(TRIPLES)
            const = ZERO
            for p, (k, j) in enumerate(PAIRS):
                if not w[p]:
                    continue
                # Gamma^k_j(e_i) = g(nabla_{e_i} e_j, e_k)
                const = const + w[p] * lc.gamma[i][j - 1][k - 1]
                for t_idx, tri in enumerate(TRIPLES):
                    f = KForm(N, 3, {tri: ONE})[(i + 1, j, k)]
                    if f:
                        row[t_idx] = row[t_idx] - w[p] * f * HALF
            rows.append(row)
            rhs.append(-const)
    sol, kernel = linalg.solve(rows, rhs)
    if sol is None or kernel:
        return None
    return KForm(N, 3, {tri: v for tri, v in zip(TRIPLES, sol)})


def characteristic_torsion(spec: LieAlgebraSpec) -> KForm:
    """Characteristic torsion; the linear solve and the printed formula must agree."""
    require_ni(spec)
    T = solve_torsion(spec)
    if T is None:
        raise ConventionError("NI algebra without a unique characteristic torsion")
    printed = printed_torsion(spec)
    if T != printed:
        raise ConventionError(f"torsion formulations disagree: {T.to_text()} vs {printed.to_text()}")
    return T


def characteristic_connection(spec: LieAlgebraSpec, T: KForm | None = None) -> Connection:
    if T is None:
        T = characteristic_torsion(spec)
    return _connection_from_torsion(levi_civita(spec, check=False), T)


def preserves_tensor(conn: Connection, t=None) -> bool:
    """``(nabla_X TT) = 0`` componentwise for every frame direction."""
    t = t or canonical_T()
    n = conn.dim
    G = conn.gamma
    for x in range(n):
        for a in range(n):
            for b in range(a, n):
                for c in range(b, n):
                    s = ZERO
                    for m in range(n):
                        if G[x][a][m] and t[m][b][c]:
                            s = s + G[x][a][m] * t[m][b][c]
                        if G[x][b][m] and t[a][m][c]:
                            s = s + G[x][b][m] * t[a][m][c]
                        if G[x][c][m] and t[a][b][m]:
                            s = s + G[x][c][m] * t[a][b][m]
                    if s:
                        return False
    return True


def torsion_tensor_form(conn: Connection, spec: LieAlgebraSpec) -> KForm | None:
    """The torsion of ``conn`` as a 3-form, or None if it is not totally skew."""
    tor = conn.torsion(spec)
    n = conn.dim
    T = KForm(n, 3, {(i + 1, j + 1, k + 1): tor[i][j][k] for i, j, k in combinations(range(n), 3)})
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if tor[i][j][k] != T[(i + 1, j + 1, k + 1)]:
                    return None
    return T


# -- connection 1-forms and curvature -----------------------------------------

@dataclass(frozen=True)
class ConnectionForms:
    gamma1: KForm
    gamma2: KForm
    gamma3: KForm

    def __iter__(self):
        return iter((self.gamma1, self.gamma2, self.gamma3))

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self)


def _gamma_entry(conn: Connection, k: int, j: int) -> KForm:
    """The 1-form ``Gamma^k_j = g(nabla~ e_j, e_k)`` (1-based)."""
    return one_form([conn.gamma[i][j - 1][k - 1] for i in range(N)])


def printed_connection_forms(spec: LieAlgebraSpec) -> ConnectionForms:
    b = spec.bmap()
    # e^4 coefficient printed as b15, equal to -b38 only under the spurious b38 = -b15
    g2 = one_form([-(b[23] + b[8]), -b[17], -b[28], -b[38], -b[47]])
    g1 = one_form([b[43] - b[10], -b[15], R3.inv() * (-b[9] + HALF * b[13] + HALF * b[6] - b[24]),
                   -b[40], -b[50]])
    g3 = one_form([-HALF * (b[6] + b[13]), b[45] - b[50] - b[19], -b[29], b[47] - b[39] - b[48], -b[49]])
    return ConnectionForms(g1, g2, g3)


def connection_forms(spec: LieAlgebraSpec, conn: Connection | None = None) -> ConnectionForms:
    """``gamma^1 = Gamma^2_3``, ``gamma^2 = Gamma^2_5``, ``gamma^3 = Gamma^3_5``.

    The intrinsic 1-forms are checked against the proportionalities that
    make ``Gamma = sum gamma^a E_a`` and against the printed formulas.
    """
    conn = conn or characteristic_connection(spec)
    g1 = _gamma_entry(conn, 2, 3)
    g2 = _gamma_entry(conn, 2, 5)
    g3 = _gamma_entry(conn, 3, 5)
    forms = ConnectionForms(g1, g2, g3)
    if not gamma_proportionalities_hold(conn):
        raise ConventionError("characteristic connection is not so(3)-valued")
    printed = printed_connection_forms(spec)
    if printed != forms:
        raise ConventionError("connection forms disagree with the closed-form expressions")
    return forms


def gamma_proportionalities_hold(conn: Connection) -> bool:
    """``Gamma = gamma^1 E1 + gamma^2 E2 + gamma^3 E3`` entry by entry."""
    g1 = _gamma_entry(conn, 2, 3)
    g2 = _gamma_entry(conn, 2, 5)
    g3 = _gamma_entry(conn, 3, 5)
    E = [form_matrix(x) for x in E_forms()]
    for k in range(1, N + 1):
        for j in range(1, N + 1):
            expected = g1 * E[0][k - 1][j - 1] + g2 * E[1][k - 1][j - 1] + g3 * E[2][k - 1][j - 1]
            if _gamma_entry(conn, k, j) != expected:
                return False
    return True


FLATNESS_CONDITIONS = (
    lambda b: b[43] - b[10], lambda b: b[23] + b[8], lambda b: b[15], lambda b: b[17],
    lambda b: b[29], lambda b: b[40], lambda b: b[49], lambda b: b[28], lambda b: b[47],
    lambda b: b[50], lambda b: b[45] - b[19], lambda b: b[48] + b[39], lambda b: b[13] + b[6],
    lambda b: b[24] + b[9], lambda b: b[38],
)


def flatness_check(spec: LieAlgebraSpec) -> bool:
    """``nabla~ = 0``: the closed-form coefficient list and ``gamma = 0`` must agree."""
    forms = connection_forms(spec)
    b = spec.bmap()
    printed = all(not Scalar.coerce(f(b)) for f in FLATNESS_CONDITIONS)
    if printed != forms.is_zero():
        raise ConventionError(f"flatness tests disagree: coefficients={printed}, gamma={forms.is_zero()}")
    return printed


def so3_curvature(spec: LieAlgebraSpec, forms: ConnectionForms | None = None) -> tuple[KForm, KForm, KForm]:
    """``r^1 = d g1 + g2^g3``, ``r^2 = d g2 + g3^g1``, ``r^3 = d g3 + g1^g2``."""
    g1, g2, g3 = forms or connection_forms(spec)
    d = spec.d_form
    return (d(g1) + wedge(g2, g3), d(g2) + wedge(g3, g1), d(g3) + wedge(g1, g2))


def curvature_E_components(conn: Connection, spec: LieAlgebraSpec) -> tuple[KForm, KForm, KForm] | None:
    """Decompose the curvature 2-form of ``conn`` as ``sum K^a E_a``; None if not so(3)-valued."""
    R = curvature(conn, spec)
    comps = [dict(), dict(), dict()]
    for i, j in combinations(range(N), 2):
        # matrix entry (k, l) of R(e_i, e_j) is g(R(e_i,e_j) e_l, e_k)
        m = [[R[i][j][l][k] for l in range(N)] for k in range(N)]
        co = E_coordinates(matrix_form(m))
        if co is None:
            return None
        for a in range(3):
            if co[a]:
                comps[a][(i + 1, j + 1)] = co[a]
    return tuple(KForm(N, 2, c) for c in comps)


class Model(str, Enum):
    R5 = "R5"
    SL3R_QUOTIENT = "SL3R_quotient"
    SU3_QUOTIENT = "SU3_quotient"


def F_constant(spec: LieAlgebraSpec) -> tuple[Scalar, Model]:
    """The constant F with ``r^j = F E_j`` for torsion-free structures, and its model space."""
    T = characteristic_torsion(spec)
    if T:
        raise ValueError("F is only defined for torsion-free structures")
    rs = so3_curvature(spec)
    Es = E_forms()
    F = None
    for r, E in zip(rs, Es):
        (key, v), *_ = E.items()
        f = r[key] / v
        if r != E * f:
            raise ConventionError(f"curvature {r.to_text()} is not proportional to {E.to_text()}")
        if F is not None and f != F:
            raise ConventionError(f"curvature components give different constants {F}, {f}")
        F = f
    s = F.sign()
    model = Model.R5 if s == 0 else (Model.SL3R_QUOTIENT if s < 0 else Model.SU3_QUOTIENT)
    return F, model


# -- torsion type -------------------------------------------------------------

class TorsionType(str, Enum):
    ZERO = "Zero"
    PURE3 = "Pure3"
    PURE7 = "Pure7"
    GENERIC = "Generic"


def torsion_type_of(T: KForm) -> TorsionType:
    if T.is_zero():
        return TorsionType.ZERO
    Es = E_forms()
    pure7 = all(wedge(T, E).is_zero() for E in Es)
    by_pairing = all(not pairing(hodge(T), E) for E in Es)
    if pure7 != by_pairing:
        raise ConventionError("wedge and pairing criteria for the 7-dimensional module disagree")
    if pure7:
        return TorsionType.PURE7
    if E_coordinates(hodge(T)) is not None:
        return TorsionType.PURE3
    return TorsionType.GENERIC


def torsion_type(spec: LieAlgebraSpec) -> TorsionType:
    return torsion_type_of(characteristic_torsion(spec))


# -- exterior invariants of T -------------------------------------------------

SIGMA_FACTOR = HALF  # sigma_T = SIGMA_FACTOR * sum_i (e_i _| T)^2


def sigma_T(T: KForm) -> KForm:
    out = KForm.zero(T.n, 2 * (T.k - 1))
    for i in range(1, T.n + 1):
        c = contract(unit(T.n, i), T)
        out = out + wedge(c, c)
    return out * SIGMA_FACTOR


def dT(spec: LieAlgebraSpec, T: KForm | None = None) -> KForm:
    return spec.d_form(T if T is not None else characteristic_torsion(spec))


def costar_dT(spec: LieAlgebraSpec, T: KForm | None = None) -> KForm:
    """``d(*T)``."""
    return spec.d_form(hodge(T if T is not None else characteristic_torsion(spec)))


def is_harmonic(spec: LieAlgebraSpec) -> bool:
    T = characteristic_torsion(spec)
    return dT(spec, T).is_zero() and costar_dT(spec, T).is_zero()


# -- parallel objects ---------------------------------------------------------

def covariant_derivative_form(conn: Connection, T: KForm) -> list[KForm]:
    """``nabla~_{e_i} T`` for each i, as 3-forms."""
    n = conn.dim
    out = []
    for i in range(n):
        # (nabla_i T)(a,b,c) = -T(nabla_i e_a, b, c) - ...
        coeffs = {}
        for tri in combinations(range(1, n + 1), T.k):
            s = ZERO
            for pos in range(T.k):
                for m in range(1, n + 1):
                    g = conn.gamma[i][tri[pos] - 1][m - 1]
                    if g:
                        idx = tri[:pos] + (m,) + tri[pos + 1:]
                        v = T[idx]
                        if v:
                            s = s - g * v
            if s:
                coeffs[tri] = s
        out.append(KForm(n, T.k, coeffs))
    return out


def parallel_torsion_check(spec: LieAlgebraSpec) -> bool:
    T = characteristic_torsion(spec)
    conn = characteristic_connection(spec, T)
    return all(f.is_zero() for f in covariant_derivative_form(conn, T))


def parallel_vectors(spec: LieAlgebraSpec, conn: Connection | None = None) -> Subspace:
    """Kernel of ``xi -> nabla~ xi`` (5 unknowns, 25 equations)."""
    conn = conn or characteristic_connection(spec)
    n = conn.dim
    rows = []
    for i in range(n):
        for k in range(n):
            rows.append([conn.gamma[i][j][k] for j in range(n)])
    return Subspace.span(n, linalg.nullspace(rows, n))


# -- characteristic Ricci -----------------------------------------------------

def characteristic_ricci(spec: LieAlgebraSpec, conn: Connection | None = None) -> Matrix:
    conn = conn or characteristic_connection(spec)
    return ricci(conn, spec)


def ricci_symmetry_check(spec: LieAlgebraSpec) -> bool:
    return is_symmetric(characteristic_ricci(spec))


def ricci_relation_variants(spec: LieAlgebraSpec) -> list[str]:
    """Which readings of ``Ric~ = Ric + s1/2 *d*T + s2/4 S`` hold exactly.

    ``S`` is the single-index sum ``sum_i g(T(X,e_i),T(Y,e_i))`` or the
    double-index sum ``sum_{i,j} g(T(X,e_i),T(Y,e_j))``.
    """
    T = characteristic_torsion(spec)
    ric_c = characteristic_ricci(spec)
    ric = ricci(levi_civita(spec, check=False), spec)
    sds = hodge(costar_dT(spec, T))

    def txy(x, i):
        # vector T(e_x, e_i, .)
        return [T[(x + 1, i + 1, k + 1)] for k in range(N)]

    single = [[sum((sum((p * q for p, q in zip(txy(x, i), txy(y, i))), ZERO) for i in range(N)), ZERO)
               for y in range(N)] for x in range(N)]
    double = [[sum((sum((p * q for p, q in zip(txy(x, i), txy(y, j))), ZERO)
                    for i in range(N) for j in range(N)), ZERO)
               for y in range(N)] for x in range(N)]
    out = []
    for name, S in (("single", single), ("double", double)):
        for s1 in (1, -1):
            for s2 in (1, -1):
                ok = all(
                    ric_c[x][y] == ric[x][y] + s1 * HALF * sds[(x + 1, y + 1)] + s2 * S[x][y] / 4
                    for x in range(N) for y in range(N)
                )
                if ok:
                    out.append(f"{name}:{'+' if s1 > 0 else '-'}{'+' if s2 > 0 else '-'}")
    return out


# -- split conditions ---------------------------------------------------------

SO3_CONDITION_FUNCTIONALS = (
    lambda b: b[43] - b[10], lambda b: b[23] + b[8], lambda b: b[15], lambda b: b[17],
    lambda b: b[29], lambda b: b[38], lambda b: b[40], lambda b: b[49],
)


def so3_conditions_check(spec: LieAlgebraSpec, conn: Connection | None = None) -> bool:
    """``nabla~_h`` preserves h and p, ``nabla~_p`` swaps them; two formulations must agree."""
    conn = conn or characteristic_connection(spec)
    intrinsic = _inclusions(conn, SPLIT_RULES)
    b = spec.bmap()
    printed = all(not Scalar.coerce(f(b)) for f in SO3_CONDITION_FUNCTIONALS)
    if intrinsic != printed:
        raise ConventionError(f"split-condition tests disagree: inclusion={intrinsic}, coefficients={printed}")
    return intrinsic


__all__ = [name for name in dir() if not name.startswith("_")]
