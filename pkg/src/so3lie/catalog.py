"""The classified families as data, with builders and a verifier.

Entries live in ``data/catalog.json``.  A ``family`` entry is stored in the
adapted frame and its ``expected`` block lists invariants of the SO(3)
structure; a ``normal_form`` entry is a simplified basis in which only
Lie-algebra fingerprints are meaningful.  ``unrepresentable`` entries need
constants outside Q(sqrt 3) and cannot be instantiated.
"""

from __future__ import annotations

import fnmatch
import json
import random
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Any

from . import liealg, linalg, riemann, so3, su3
from .expr import ExpressionError, evaluate, evaluate_form, evaluate_scalar
from .exterior import KForm
from .liealg import LieAlgebraSpec
from .scalars import Scalar


class ConstraintViolation(ValueError):
    """Parameter values outside the domain of a family."""


class UnknownEntry(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    kind: str
    group: str
    where: str
    params: tuple[str, ...]
    nonzero: tuple[str, ...]
    derived: tuple[tuple[str, str], ...]
    d: tuple[str, ...]
    expected: Mapping[str, Any] = field(default_factory=dict)
    fingerprint: Mapping[str, Any] = field(default_factory=dict)

    @classmethod
    def from_json(cls, obj: dict) -> CatalogEntry:
        return cls(
            id=obj["id"],
            kind=obj["kind"],
            group=obj.get("group", ""),
            where=obj.get("where", ""),
            params=tuple(obj.get("params", ())),
            nonzero=tuple(obj.get("nonzero", ())),
            derived=tuple((n, e) for n, e in obj.get("derived", ())),
            d=tuple(obj["d"]),
            expected=dict(obj.get("expected", {})),
            fingerprint=dict(obj.get("fingerprint", {})),
        )

    def to_json(self) -> dict:
        return {
            "id": self.id, "kind": self.kind, "group": self.group, "where": self.where,
            "params": list(self.params), "nonzero": list(self.nonzero),
            "derived": [list(p) for p in self.derived], "d": list(self.d),
            "expected": dict(self.expected), "fingerprint": dict(self.fingerprint),
        }

    @property
    def buildable(self) -> bool:
        return self.kind != "unrepresentable"


@lru_cache(maxsize=None)
def _entries() -> tuple[CatalogEntry, ...]:
    text = resources.files("so3lie").joinpath("data/catalog.json").read_text()
    return tuple(CatalogEntry.from_json(o) for o in json.loads(text)["entries"])


def entries() -> list[CatalogEntry]:
    return list(_entries())


def get(entry_id: str) -> CatalogEntry:
    for e in _entries():
        if e.id == entry_id:
            return e
    raise UnknownEntry(entry_id)


def select(pattern: str | None = None) -> list[CatalogEntry]:
    """Entries whose id matches a shell pattern (all entries for None)."""
    if pattern is None:
        return entries()
    return [e for e in _entries() if fnmatch.fnmatchcase(e.id, pattern)]


# -- building --------------------------------------------------------------------

def environment(entry: CatalogEntry, values: Mapping[str, Any]) -> dict[str, Scalar]:
    """Parameter values plus derived quantities, after checking the domain."""
    missing = [p for p in entry.params if p not in values]
    extra = [k for k in values if k not in entry.params]
    if missing or extra:
        raise ConstraintViolation(f"{entry.id}: expected parameters {list(entry.params)}, got {sorted(values)}")
    env = {k: Scalar.coerce(v) for k, v in values.items()}
    for cond in entry.nonzero:
        if not evaluate_scalar(cond, env):
            raise ConstraintViolation(f"{entry.id}: {cond} must be nonzero")
    for name, text in entry.derived:
        try:
            env[name] = evaluate_scalar(text, env)
        except ZeroDivisionError:
            raise ConstraintViolation(f"{entry.id}: {name} = {text} is undefined") from None
    return env


def build(entry: CatalogEntry | str, values: Mapping[str, Any] | None = None, **kw) -> LieAlgebraSpec:
    entry = get(entry) if isinstance(entry, str) else entry
    if not entry.buildable:
        raise ConstraintViolation(f"{entry.id} has no representative over Q(sqrt 3)")
    env = environment(entry, {**(values or {}), **kw})
    try:
        return LieAlgebraSpec(5, tuple(evaluate_form(t, env, 5, 2) for t in entry.d))
    except ZeroDivisionError:
        raise ConstraintViolation(f"{entry.id}: structure equations undefined at {values}") from None


VALUE_POOL = tuple(Scalar(n, 0) / d for n in (-3, -2, -1, 1, 2, 3) for d in (1, 2, 3))


def sample(entry: CatalogEntry, count: int = 5, seed: int = 0) -> list[dict[str, Scalar]]:
    """``count`` admissible rational assignments (the empty one for parameter-free entries)."""
    if not entry.params:
        return [{}]
    rng = random.Random(f"{entry.id}:{seed}")
    out: list[dict[str, Scalar]] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 1000 * count:
            raise RuntimeError(f"could not sample admissible parameters for {entry.id}")
        values = {p: rng.choice(VALUE_POOL) for p in entry.params}
        try:
            environment(entry, values)
        except (ConstraintViolation, ZeroDivisionError):
            continue
        out.append(values)
    return out


# -- observables ------------------------------------------------------------------

def fingerprint(spec: LieAlgebraSpec) -> dict[str, Any]:
    series = liealg.derived_series(spec)
    solvable, step = liealg.is_solvable(spec)
    l1 = series[1] if len(series) > 1 else series[0]
    sig = list(linalg.signature(liealg.killing_form(spec, l1))) if l1.dim else [0, 0, 0]
    return {
        "derived_series_dims": [s.dim for s in series],
        "commutator_dim": liealg.commutator_dim(spec),
        "l1_dim": l1.dim,
        "l2_dim": series[2].dim if len(series) > 2 else l1.dim,
        "solvable_step": step if solvable else None,
        "center_dim": liealg.center(spec).dim,
        "killing_signature_l1": sig,
    }


def _observe(spec: LieAlgebraSpec, key: str):
    if key in ("torsion", "dT", "d_star_T", "torsion_type", "parallel_torsion", "gamma_zero",
               "so3_conditions", "ricci_char", "F_sign", "model", "parallel_vectors_dim",
               "parallel_vectors_min_dim", "harmonic"):
        so3.require_ni(spec)
    if key == "torsion":
        return so3.characteristic_torsion(spec)
    if key == "dT":
        return so3.dT(spec)
    if key == "d_star_T":
        return so3.costar_dT(spec)
    if key == "torsion_type":
        return so3.torsion_type(spec).value
    if key == "k_p":
        return riemann.k_p(spec)
    if key == "F_sign":
        return so3.F_constant(spec)[0].sign()
    if key == "model":
        return so3.F_constant(spec)[1].value
    if key == "parallel_torsion":
        return so3.parallel_torsion_check(spec)
    if key in ("parallel_vectors_dim", "parallel_vectors_min_dim"):
        return so3.parallel_vectors(spec).dim
    if key == "gamma_zero":
        return so3.connection_forms(spec).is_zero()
    if key == "so3_conditions":
        return so3.so3_conditions_check(spec)
    if key == "harmonic":
        return so3.is_harmonic(spec)
    if key == "ricci_lc":
        return riemann.ricci(riemann.levi_civita(spec), spec)
    if key == "ricci_char":
        return so3.characteristic_ricci(spec)
    if key == "base_ricci_trace":
        return riemann.base_ricci(spec)[1]
    if key == "hypo":
        return su3.hypo_check(spec)
    if key == "halfflat":
        return su3.halfflat_check(spec)
    raise KeyError(f"unknown expected field {key!r}")


def _expected_value(key: str, raw, env: Mapping[str, Scalar]):
    if key in ("torsion", "dT", "d_star_T"):
        return evaluate_form(raw, env, 5, 3 if key == "torsion" else 4 if key == "dT" else 3)
    if key in ("k_p", "base_ricci_trace"):
        return evaluate_scalar(raw, env)
    if key in ("ricci_lc", "ricci_char"):
        return [[evaluate_scalar(x, env) for x in row] for row in raw]
    return raw


def _show(v) -> str:
    if isinstance(v, (Scalar, KForm)):
        return v.to_text()
    if isinstance(v, list):
        return "[" + ", ".join(_show(x) for x in v) + "]"
    return str(v)


@dataclass
class FieldResult:
    field: str
    expected: Any
    actual: Any
    ok: bool

    def line(self) -> str:
        mark = "ok" if self.ok else "MISMATCH"
        return f"{self.field}: {mark} expected {_show(self.expected)} got {_show(self.actual)}"


@dataclass
class VerifyResult:
    entry: str
    values: dict[str, Scalar]
    fields: list[FieldResult]
    status: str = "checked"

    @property
    def passed(self) -> bool:
        return self.status == "checked" and all(f.ok for f in self.fields)

    @property
    def failed(self) -> bool:
        # unrepresentable entries are reported but do not count as failures
        return self.status == "checked" and not self.passed

    def failures(self) -> list[FieldResult]:
        return [f for f in self.fields if not f.ok]

    def summary(self) -> str:
        vals = ", ".join(f"{k}={v}" for k, v in sorted(self.values.items()))
        head = f"{self.entry}({vals})"
        if self.status != "checked":
            return f"{head}: {self.status}"
        if self.passed:
            return f"{head}: pass ({len(self.fields)} fields)"
        return f"{head}: FAIL " + "; ".join(f.line() for f in self.failures())


def verify(entry: CatalogEntry | str, values: Mapping[str, Any] | None = None) -> VerifyResult:
    """Build the entry at ``values`` and compare every stated field exactly.

    Family entries additionally must satisfy Jacobi and the NI system;
    normal forms only Jacobi.
    """
    entry = get(entry) if isinstance(entry, str) else entry
    values = dict(values or {})
    if not entry.buildable:
        return VerifyResult(entry.id, values, [], status="unrepresentable over Q(sqrt 3)")
    env = environment(entry, values)
    spec = build(entry, values)
    results: list[FieldResult] = []
    jac, _ = liealg.jacobi_check(spec)
    results.append(FieldResult("jacobi", True, jac, jac))
    if not jac:
        return VerifyResult(entry.id, values, results)
    if entry.kind == "family":
        ni, _ = so3.ni_check(spec)
        results.append(FieldResult("ni", True, ni, ni))
        if not ni:
            return VerifyResult(entry.id, values, results)
    for key, raw in entry.expected.items():
        exp = _expected_value(key, raw, env)
        try:
            act = _observe(spec, key)
        except (riemann.ConventionError, so3.NotNearlyIntegrable, ValueError, ExpressionError) as exc:
            results.append(FieldResult(key, exp, f"error: {exc}", False))
            continue
        ok = act >= exp if key == "parallel_vectors_min_dim" else act == exp
        results.append(FieldResult(key, exp, act, ok))
    if entry.fingerprint:
        fp = fingerprint(spec)
        for key, exp in entry.fingerprint.items():
            results.append(FieldResult(f"fingerprint.{key}", exp, fp[key], fp[key] == exp))
    return VerifyResult(entry.id, values, results)


def verify_samples(entry: CatalogEntry | str, count: int = 5, seed: int = 0) -> list[VerifyResult]:
    entry = get(entry) if isinstance(entry, str) else entry
    if not entry.buildable:
        return [verify(entry)]
    return [verify(entry, v) for v in sample(entry, count, seed)]


def verify_all(pattern: str | None = None, count: int = 5, seed: int = 0) -> list[VerifyResult]:
    chosen = select(pattern)
    if not chosen:
        raise UnknownEntry(f"no catalog entry matches {pattern!r}")
    out: list[VerifyResult] = []
    for e in chosen:
        out.extend(verify_samples(e, count, seed))
    return out


def dump(entry: CatalogEntry | str, values: Mapping[str, Any] | None = None) -> dict:
    """A standalone algebra-spec document for one instance of the entry."""
    entry = get(entry) if isinstance(entry, str) else entry
    if values is None:
        values = sample(entry, 1)[0] if entry.buildable else {}
    return build(entry, values).to_json()


def ids(items: Iterable[CatalogEntry]) -> list[str]:
    return [e.id for e in items]


__all__ = [
    "CatalogEntry", "ConstraintViolation", "FieldResult", "UnknownEntry", "VerifyResult",
    "build", "dump", "entries", "environment", "evaluate", "fingerprint", "get", "sample",
    "select", "verify", "verify_all", "verify_samples",
]
