"""Lie algebras given by their structure equations ``de^k``.

Conventions:

* ``e^k([e_i, e_j]) = -de^k(e_i, e_j)``, so ``de^3 = e^{13}`` means
  ``[e_1, e_3] = -e_3``.
* For ``dim == 5`` the fifty numbers ``b_1..b_50`` are laid out ten per
  row: ``b_{10(k-1)+p}`` is the coefficient of the ``p``-th pair of
  ``PAIRS`` in ``de^k``.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from . import linalg
from .exterior import KForm, Vector, unit, wedge
from .scalars import ONE, ZERO, Scalar

PAIRS: tuple[tuple[int, int], ...] = tuple(combinations(range(1, 6), 2))
H_INDICES = (1, 2, 4)
P_INDICES = (3, 5)


class JacobiError(ValueError):
    """Raised when an operation needs ``d^2 = 0`` and the algebra violates it."""

    def __init__(self, certificate):
        self.certificate = certificate
        head = ", ".join(f"d(de^{k})[{','.join(map(str, idx))}]={c}" for k, idx, c in certificate[:4])
        super().__init__(f"structure equations violate the Jacobi identity: {head}")


def b_index(k: int, i: int, j: int) -> int:
    """1-based b-number of the coefficient of ``e^{ij}`` in ``de^k``."""
    return 10 * (k - 1) + PAIRS.index((i, j)) + 1


@dataclass(frozen=True, eq=False)
class LieAlgebraSpec:
    """Structure equations ``d[k] = de^{k+1}`` on ``R^dim``."""

    dim: int
    d: tuple[KForm, ...]

    def __post_init__(self):
        if len(self.d) != self.dim:
            raise ValueError(f"expected {self.dim} differentials, got {len(self.d)}")
        for f in self.d:
            if f.n != self.dim or f.k != 2:
                raise ValueError("each de^k must be a 2-form on R^dim")
        object.__setattr__(self, "d", tuple(self.d))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebraSpec):
            return NotImplemented
        return self.dim == other.dim and self.d == other.d

    def __hash__(self):
        return hash((self.dim, self.d))

    @classmethod
    def from_b(cls, b: Sequence) -> LieAlgebraSpec:
        if len(b) != 50:
            raise ValueError(f"b-vector needs 50 entries, got {len(b)}")
        rows = []
        for k in range(5):
            rows.append(KForm(5, 2, {PAIRS[p]: Scalar.coerce(b[10 * k + p]) for p in range(10)}))
        return cls(5, tuple(rows))

    @classmethod
    def abelian(cls, dim: int) -> LieAlgebraSpec:
        return cls(dim, tuple(KForm.zero(dim, 2) for _ in range(dim)))

    @cached_property
    def b(self) -> tuple[Scalar, ...]:
        if self.dim != 5:
            raise ValueError("b-vector is only defined in dimension 5")
        return tuple(self.d[k][pair] for k in range(5) for pair in PAIRS)

    def bmap(self) -> dict[int, Scalar]:
        """``{1: b_1, ..., 50: b_50}``."""
        return {i + 1: v for i, v in enumerate(self.b)}

    @cached_property
    def structure_constants(self) -> list[list[list[Scalar]]]:
        """``c[i][j][k] = e^k([e_i, e_j])`` with 0-based indices."""
        n = self.dim
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for k, form in enumerate(self.d):
            for (i, j), v in form.items():
                c[i - 1][j - 1][k] = -v
                c[j - 1][i - 1][k] = v
        return c

    def bracket(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise ValueError(f"vectors must have length {n}")
        c = self.structure_constants
        out = [ZERO] * n
        for i in range(n):
            if not x[i]:
                continue
            for j in range(n):
                if not y[j]:
                    continue
                f = x[i] * y[j]
                row = c[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + f * row[k]
        return tuple(out)

    def d_form(self, u: KForm) -> KForm:
        """Exterior derivative of a left-invariant form."""
        if u.n != self.dim:
            raise ValueError(f"dimension mismatch: {u.n} vs {self.dim}")
        out = KForm.zero(self.dim, u.k + 1)
        for idx, v in u.items():
            out = out + _d_monomial(self, idx) * v
        return out

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "d": [[{"ij": list(idx), "c": v.to_json()} for idx, v in f.items()] for f in self.d],
        }

    @classmethod
    def from_json(cls, obj: dict) -> LieAlgebraSpec:
        try:
            dim = obj["dim"]
        except (KeyError, TypeError):
            raise ValueError("algebra spec needs a 'dim' field") from None
        if dim not in (5, 6, 8):
            raise ValueError(f"unsupported dimension {dim}")
        spec_d = spec_b = None
        if "d" in obj:
            rows = obj["d"]
            if len(rows) != dim:
                raise ValueError(f"'d' must have {dim} rows")
            forms = []
            for row in rows:
                coeffs: dict = {}
                for term in row:
                    ij = tuple(term["ij"])
                    if len(ij) != 2 or any(not isinstance(i, int) or not 1 <= i <= dim for i in ij):
                        raise ValueError(f"bad index pair {ij!r}")
                    forms_coeff = Scalar.from_json(term["c"])
                    f = KForm(dim, 2, {ij: forms_coeff})
                    for key, v in f.coeffs.items():
                        coeffs[key] = coeffs.get(key, ZERO) + v
                forms.append(KForm(dim, 2, coeffs))
            spec_d = cls(dim, tuple(forms))
        if "b" in obj:
            if dim != 5:
                raise ValueError("'b' is only allowed for dim 5")
            spec_b = cls.from_b([Scalar.from_json(x) for x in obj["b"]])
        if spec_d is None and spec_b is None:
            raise ValueError("algebra spec needs 'd' or 'b'")
        if spec_d is not None and spec_b is not None and spec_d != spec_b:
            raise ValueError("'d' and 'b' disagree")
        return spec_d if spec_d is not None else spec_b

    def __repr__(self) -> str:
        return f"LieAlgebraSpec({self.dim}, ({', '.join(f.to_text() for f in self.d)}))"


def _d_monomial(spec: LieAlgebraSpec, idx: tuple[int, ...]) -> KForm:
    n = spec.dim
    if not idx:
        return KForm.zero(n, 1)
    head = spec.d[idx[0] - 1]
    if len(idx) == 1:
        return head
    rest = KForm.basis(n, *idx[1:])
    first = KForm.basis(n, idx[0])
    return wedge(head, rest) - wedge(first, _d_monomial(spec, idx[1:]))


def d(spec: LieAlgebraSpec, u: KForm) -> KForm:
    return spec.d_form(u)


def bracket(spec: LieAlgebraSpec, x: Sequence[Scalar], y: Sequence[Scalar]) -> Vector:
    return spec.bracket(x, y)


def jacobi_check(spec: LieAlgebraSpec) -> tuple[bool, list[tuple[int, tuple[int, ...], Scalar]]]:
    """``d(de^k) = 0`` for all k; otherwise every nonzero coefficient."""
    cert = []
    for k, form in enumerate(spec.d, start=1):
        for idx, v in spec.d_form(form).items():
            cert.append((k, idx, v))
    return not cert, cert


def jacobi_identity_holds(spec: LieAlgebraSpec) -> bool:
    """The cyclic sum ``[x,[y,z]] + ...`` on all basis triples."""
    n = spec.dim
    basis = [unit(n, i) for i in range(1, n + 1)]
    for i, j, k in combinations(range(n), 3):
        x, y, z = basis[i], basis[j], basis[k]
        t1 = spec.bracket(x, spec.bracket(y, z))
        t2 = spec.bracket(y, spec.bracket(z, x))
        t3 = spec.bracket(z, spec.bracket(x, y))
        if any(a + b + c for a, b, c in zip(t1, t2, t3)):
            return False
    return True


def require_jacobi(spec: LieAlgebraSpec) -> None:
    ok, cert = jacobi_check(spec)
    if not ok:
        raise JacobiError(cert)


@dataclass(frozen=True)
class Subspace:
    """A subspace of R^n kept in reduced row echelon form."""

    n: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, n: int, vectors: Sequence[Sequence[Scalar]]) -> Subspace:
        vecs = [list(v) for v in vectors]
        red, piv = linalg.rref(vecs, n) if vecs else ([], [])
        return cls(n, tuple(tuple(r) for r in red), tuple(piv))

    @classmethod
    def coordinate(cls, n: int, indices: Sequence[int]) -> Subspace:
        return cls.span(n, [unit(n, i) for i in indices])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[Scalar]) -> bool:
        return linalg.in_span(self.basis, self.pivots, v)

    def coordinates(self, v: Sequence[Scalar]) -> list[Scalar] | None:
        return linalg.coordinates(self.basis, self.pivots, v)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.basis == other.basis


def bracket_span(spec: LieAlgebraSpec, a: Subspace, b: Subspace) -> Subspace:
    vecs = [spec.bracket(x, y) for x in a.basis for y in b.basis]
    return Subspace.span(spec.dim, vecs)


def derived_series(spec: LieAlgebraSpec) -> list[Subspace]:
    """``g^0 = g, g^{i+1} = [g^i, g^i]`` until it reaches 0 or stabilises."""
    require_jacobi(spec)
    g = Subspace.coordinate(spec.dim, range(1, spec.dim + 1))
    series = [g]
    while g.dim:
        nxt = bracket_span(spec, g, g)
        if nxt.dim == g.dim:
            break
        series.append(nxt)
        g = nxt
    return series


def commutator_dim(spec: LieAlgebraSpec) -> int:
    require_jacobi(spec)
    g = Subspace.coordinate(spec.dim, range(1, spec.dim + 1))
    return bracket_span(spec, g, g).dim


def is_solvable(spec: LieAlgebraSpec) -> tuple[bool, int | None]:
    """Solvability and the step length (index at which the series vanishes)."""
    series = derived_series(spec)
    if series[-1].dim == 0:
        return True, len(series) - 1
    return False, None


def lower_central_series(spec: LieAlgebraSpec) -> list[Subspace]:
    require_jacobi(spec)
    full = Subspace.coordinate(spec.dim, range(1, spec.dim + 1))
    g = full
    series = [g]
    while g.dim:
        nxt = bracket_span(spec, full, g)
        if nxt.dim == g.dim:
            break
        series.append(nxt)
        g = nxt
    return series


def is_nilpotent(spec: LieAlgebraSpec) -> bool:
    return lower_central_series(spec)[-1].dim == 0


def center(spec: LieAlgebraSpec) -> Subspace:
    require_jacobi(spec)
    n = spec.dim
    c = spec.structure_constants
    # x in center iff sum_i x_i c[i][j][k] = 0 for all j, k
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return Subspace.span(n, linalg.nullspace(rows, n))


def killing_form(spec: LieAlgebraSpec, sub: Subspace | None = None) -> list[list[Scalar]]:
    """Killing form of ``sub`` as a Lie algebra in its own right (``sub`` closed under bracket)."""
    n = spec.dim
    if sub is None:
        sub = Subspace.coordinate(n, range(1, n + 1))
    m = sub.dim

    def ad(x):
        cols = []
        for y in sub.basis:
            co = sub.coordinates(spec.bracket(x, y))
            if co is None:
                raise ValueError("subspace is not closed under the bracket")
            cols.append(co)
        return [[cols[j][i] for j in range(m)] for i in range(m)]

    ads = [ad(x) for x in sub.basis]
    out = [[ZERO] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            t = ZERO
            A, B = ads[a], ads[b]
            for i in range(m):
                for j in range(m):
                    if A[i][j] and B[j][i]:
                        t = t + A[i][j] * B[j][i]
            out[a][b] = out[b][a] = t
    return out


def _check_complement(spec: LieAlgebraSpec, a: Subspace, b: Subspace) -> None:
    if a.dim + b.dim != spec.dim or Subspace.span(spec.dim, list(a.basis) + list(b.basis)).dim != spec.dim:
        raise ValueError("subspaces are not complementary")


def is_subalgebra(spec: LieAlgebraSpec, s: Subspace) -> bool:
    return s.contains_subspace(bracket_span(spec, s, s))


def is_symmetric_pair(spec: LieAlgebraSpec, m: Subspace, q: Subspace) -> bool:
    """``[m,m] in m``, ``[m,q] in q``, ``[q,q] in m``."""
    _check_complement(spec, m, q)
    return (
        m.contains_subspace(bracket_span(spec, m, m))
        and q.contains_subspace(bracket_span(spec, m, q))
        and m.contains_subspace(bracket_span(spec, q, q))
    )


def is_ad_invariant(spec: LieAlgebraSpec, p: Subspace, h: Subspace) -> bool:
    """``ad(h) p in p``."""
    _check_complement(spec, p, h)
    return p.contains_subspace(bracket_span(spec, h, p))


def h_subspace(n: int = 5) -> Subspace:
    return Subspace.coordinate(n, H_INDICES)


def p_subspace(n: int = 5) -> Subspace:
    return Subspace.coordinate(n, P_INDICES)


def load(path) -> LieAlgebraSpec:
    with open(path) as fh:
        return LieAlgebraSpec.from_json(json.load(fh))


def direct_sum(a: LieAlgebraSpec, b: LieAlgebraSpec) -> LieAlgebraSpec:
    n = a.dim + b.dim
    forms = []
    for f in a.d:
        forms.append(KForm(n, 2, f.coeffs))
    for f in b.d:
        forms.append(KForm(n, 2, {(i + a.dim, j + a.dim): v for (i, j), v in f.items()}))
    return LieAlgebraSpec(n, tuple(forms))


def so3(offset: int = 0, n: int = 3) -> LieAlgebraSpec:
    """so(3) with ``[e_1,e_2]=e_3`` cyclic, embedded at ``offset`` in R^n."""
    forms = [KForm.zero(n, 2) for _ in range(n)]
    i, j, k = offset + 1, offset + 2, offset + 3
    forms[i - 1] = KForm.basis(n, j, k) * -ONE
    forms[j - 1] = KForm.basis(n, k, i) * -ONE
    forms[k - 1] = KForm.basis(n, i, j) * -ONE
    return LieAlgebraSpec(n, tuple(forms))
