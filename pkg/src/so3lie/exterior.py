"""Exterior algebra of R^n with Q(sqrt 3) coefficients.

Forms live in an orthonormal oriented coframe ``e^1..e^n`` with volume form
``e^{1..n}``.  A :class:`KForm` stores coefficients on strictly increasing
multi-indices (1-based) and never stores zeros, so equality is structural.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from itertools import combinations

from .scalars import ONE, ZERO, Scalar, ScalarLike

MultiIndex = tuple[int, ...]
Vector = tuple[Scalar, ...]


def sort_sign(indices: Sequence[int]) -> tuple[int, MultiIndex]:
    """Sign of the sorting permutation, 0 if an index repeats."""
    idx = list(indices)
    if len(set(idx)) != len(idx):
        return 0, ()
    s = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            s = -s
            j -= 1
    return s, tuple(idx)


class KForm:
    """A homogeneous alternating k-form on R^n."""

    __slots__ = ("n", "k", "_c")

    def __init__(self, n: int, k: int, coeffs: Mapping[Sequence[int], ScalarLike] | None = None) -> None:
        if not 0 <= k:
            raise ValueError(f"negative degree {k}")
        self.n = n
        self.k = k
        c: dict[MultiIndex, Scalar] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != k:
                raise ValueError(f"multi-index {key} has wrong length for a {k}-form")
            if any(not 1 <= i <= n for i in key):
                raise ValueError(f"multi-index {key} out of range for n={n}")
            s, key = sort_sign(key)
            if s == 0:
                continue
            v = Scalar.coerce(value)
            total = c.get(key, ZERO) + (v if s > 0 else -v)
            if total:
                c[key] = total
            else:
                c.pop(key, None)
        self._c = c

    @classmethod
    def _raw(cls, n: int, k: int, c: dict[MultiIndex, Scalar]) -> KForm:
        f = cls.__new__(cls)
        f.n, f.k, f._c = n, k, c
        return f

    @classmethod
    def zero(cls, n: int, k: int) -> KForm:
        return cls._raw(n, k, {})

    @classmethod
    def basis(cls, n: int, *indices: int) -> KForm:
        """``e^{i1} ^ ... ^ e^{ik}`` (indices need not be sorted)."""
        return cls(n, len(indices), {indices: ONE})

    @classmethod
    def constant(cls, n: int, c: ScalarLike) -> KForm:
        return cls(n, 0, {(): c})

    @property
    def coeffs(self) -> dict[MultiIndex, Scalar]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, key: Sequence[int]) -> Scalar:
        s, key = sort_sign(key)
        if s == 0:
            return ZERO
        v = self._c.get(key, ZERO)
        return v if s > 0 else -v

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KForm):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.n, self.k, frozenset(self._c.items())))

    def _check(self, other: KForm) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: KForm) -> KForm:
        if not isinstance(other, KForm):
            return NotImplemented
        self._check(other)
        if self.k != other.k:
            raise ValueError(f"cannot add a {self.k}-form and a {other.k}-form")
        c = dict(self._c)
        for key, v in other._c.items():
            t = c.get(key, ZERO) + v
            if t:
                c[key] = t
            else:
                c.pop(key, None)
        return KForm._raw(self.n, self.k, c)

    def __neg__(self) -> KForm:
        return KForm._raw(self.n, self.k, {key: -v for key, v in self._c.items()})

    def __sub__(self, other: KForm) -> KForm:
        return self + (-other)

    def __mul__(self, s: ScalarLike) -> KForm:
        if isinstance(s, KForm):
            return NotImplemented
        s = Scalar.coerce(s)
        if not s:
            return KForm.zero(self.n, self.k)
        return KForm._raw(self.n, self.k, {key: v * s for key, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, s: ScalarLike) -> KForm:
        return self * Scalar.coerce(s).inv()

    def __xor__(self, other: KForm) -> KForm:
        return wedge(self, other)

    def to_text(self) -> str:
        """``c*e{i,j,k}`` terms joined by ``+`` in lexicographic multi-index order."""
        if not self._c:
            return "0"
        terms = []
        for key, v in self.items():
            c = v.to_text()
            if not v.is_rational():
                c = f"({c})"
            terms.append(f"{c}*e{{{','.join(map(str, key))}}}")
        return "+".join(terms)

    def to_json(self) -> list[dict]:
        return [{"idx": list(key), "c": v.to_json()} for key, v in self.items()]

    def __repr__(self) -> str:
        return f"KForm(n={self.n}, k={self.k}, {self.to_text()})"


def e(n: int, *indices: int) -> KForm:
    return KForm.basis(n, *indices)


def one_form(coeffs: Sequence[ScalarLike]) -> KForm:
    return KForm(len(coeffs), 1, {(i + 1,): c for i, c in enumerate(coeffs)})


def vector(n: int, *pairs: tuple[int, ScalarLike]) -> Vector:
    v = [ZERO] * n
    for i, c in pairs:
        v[i - 1] = v[i - 1] + Scalar.coerce(c)
    return tuple(v)


def unit(n: int, i: int) -> Vector:
    """The frame vector ``e_i`` (1-based)."""
    return vector(n, (i, ONE))


def wedge(u: KForm, v: KForm) -> KForm:
    u._check(v)
    n, k = u.n, u.k + v.k
    if k > n:
        return KForm.zero(n, k)
    c: dict[MultiIndex, Scalar] = {}
    for ku, cu in u._c.items():
        for kv, cv in v._c.items():
            s, key = sort_sign(ku + kv)
            if s == 0:
                continue
            p = cu * cv
            t = c.get(key, ZERO) + (p if s > 0 else -p)
            if t:
                c[key] = t
            else:
                c.pop(key, None)
    return KForm._raw(n, k, c)


def wedge_all(forms: Iterable[KForm]) -> KForm:
    forms = list(forms)
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def hodge(u: KForm) -> KForm:
    """Hodge star with ``e^I ^ *e^I = e^{1..n}``."""
    n = u.n
    c = {}
    for key, v in u._c.items():
        comp = tuple(i for i in range(1, n + 1) if i not in key)
        s, _ = sort_sign(key + comp)
        c[comp] = v if s > 0 else -v
    return KForm._raw(n, n - u.k, c)


def contract(x: Sequence[ScalarLike], u: KForm) -> KForm:
    """Interior product ``x _| u``: fills the first slot of ``u``."""
    if len(x) != u.n:
        raise ValueError(f"dimension mismatch: vector of length {len(x)} on n={u.n}")
    if u.k == 0:
        return KForm.zero(u.n, 0)
    c: dict[MultiIndex, Scalar] = {}
    for key, v in u._c.items():
        for pos, i in enumerate(key):
            xi = Scalar.coerce(x[i - 1])
            if not xi:
                continue
            rest = key[:pos] + key[pos + 1:]
            p = xi * v
            t = c.get(rest, ZERO) + (p if pos % 2 == 0 else -p)
            if t:
                c[rest] = t
            else:
                c.pop(rest, None)
    return KForm._raw(u.n, u.k - 1, c)


def evaluate(u: KForm, *xs: Sequence[ScalarLike]) -> Scalar:
    """Full alternating evaluation ``u(x1, ..., xk)``."""
    if len(xs) != u.k:
        raise ValueError(f"{u.k}-form evaluated on {len(xs)} vectors")
    for x in xs:
        if len(x) != u.n:
            raise ValueError(f"dimension mismatch: vector of length {len(x)} on n={u.n}")
    # successive contraction: u(x1,..,xk) = (xk _| ... x1 _| u)
    f = u
    for x in xs:
        f = contract(x, f)
    return f[()]


def basis_forms(n: int, k: int) -> list[KForm]:
    return [KForm.basis(n, *idx) for idx in combinations(range(1, n + 1), k)]


def volume(n: int) -> KForm:
    return KForm.basis(n, *range(1, n + 1))


def parity(perm: Sequence[int]) -> int:
    return sort_sign(perm)[0]


__all__ = [
    "KForm",
    "MultiIndex",
    "Vector",
    "basis_forms",
    "contract",
    "e",
    "evaluate",
    "hodge",
    "one_form",
    "parity",
    "sort_sign",
    "unit",
    "vector",
    "volume",
    "wedge",
    "wedge_all",
]
