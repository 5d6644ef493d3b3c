"""Multivariate polynomials with Q(sqrt 3) coefficients.

Just enough to expand cubic and quartic identities in the frame
coordinates and read off every monomial coefficient.
"""

from __future__ import annotations

from collections.abc import Sequence

from .scalars import ZERO, Scalar, ScalarLike

Monomial = tuple[int, ...]


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, Scalar] | None = None) -> None:
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        """The i-th coordinate (0-based)."""
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): Scalar(1)})

    @classmethod
    def const(cls, nvars: int, c: ScalarLike) -> Poly:
        return cls(nvars, {(0,) * nvars: Scalar.coerce(c)})

    @classmethod
    def variables(cls, nvars: int) -> list[Poly]:
        return [cls.var(nvars, i) for i in range(nvars)]

    def __add__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (Scalar, int)):
                other = Poly.const(self.nvars, other)
            else:
                return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, ZERO) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        out = Poly(self.nvars)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self) -> Poly:
        out = Poly(self.nvars)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            t: dict[Monomial, Scalar] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    s = t.get(m, ZERO) + c1 * c2
                    if s:
                        t[m] = s
                    else:
                        t.pop(m, None)
            out = Poly(self.nvars)
            out.terms = t
            return out
        if isinstance(other, (Scalar, int)):
            s = Scalar.coerce(other)
            return Poly(self.nvars, {m: c * s for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def coefficient(self, monomial: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(monomial), ZERO)

    def evaluate(self, point: Sequence[ScalarLike]) -> Scalar:
        total = ZERO
        for m, c in self.terms.items():
            v = c
            for x, p in zip(point, m):
                if p:
                    v = v * Scalar.coerce(x) ** p
            total = total + v
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(m) if p)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return "Poly(" + " + ".join(parts) + ")"


def cubic_form(t, xs: Sequence) -> Poly | Scalar:
    """``sum t[i][j][k] x_i x_j x_k`` for a 3-index array ``t``."""
    n = len(t)
    total = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                c = t[i][j][k]
                if c:
                    term = xs[i] * xs[j] * xs[k] * c
                    total = term if total is None else total + term
    if total is None:
        return Poly(len(xs)) if isinstance(xs[0], Poly) else ZERO
    return total
