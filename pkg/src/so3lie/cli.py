"""Command-line entry point: ``so3lie <command> ...``."""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from . import catalog, liealg, so3, su3
from .expr import ExpressionError, evaluate_scalar
from .liealg import LieAlgebraSpec
from .report import analyze
from .scalars import ZERO, Scalar

DEFAULT_SEARCH_CAP = 200_000


class UsageError(Exception):
    """Bad input: reported on stderr with exit code 2."""


# -- input ---------------------------------------------------------------------

def load_spec(path: str) -> LieAlgebraSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc.msg}, line {exc.lineno})") from None
    try:
        return LieAlgebraSpec.from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def parse_values(text: str) -> list[Scalar]:
    """Comma-separated scalar expressions such as ``0,1,-1,1/2,r3/2``; duplicates dropped."""
    out: list[Scalar] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            v = evaluate_scalar(item, {})
        except (ExpressionError, ZeroDivisionError) as exc:
            raise UsageError(f"bad value {item!r}: {exc}") from None
        if v not in out:
            out.append(v)
    return out


@dataclass(frozen=True)
class SupportPattern:
    """Free parameters, each spread over b-coordinates with fixed coefficients."""

    params: tuple[tuple[tuple[int, Scalar], ...], ...]

    @classmethod
    def from_json(cls, obj: Any) -> SupportPattern:
        """``{"support": [6, {"5": -1, "12": 1}, ...]}``; a bare index is ``{index: 1}``."""
        if isinstance(obj, dict):
            obj = obj.get("support")
        if not isinstance(obj, list):
            raise ValueError("support pattern needs a 'support' list")
        params = []
        for item in obj:
            if isinstance(item, int) and not isinstance(item, bool):
                item = {str(item): 1}
            if not isinstance(item, dict) or not item:
                raise ValueError(f"bad support item {item!r}")
            terms = []
            for key, coeff in item.items():
                idx = int(key)
                if not 1 <= idx <= 50:
                    raise ValueError(f"b-index {idx} out of range")
                terms.append((idx, Scalar.from_json(coeff)))
            params.append(tuple(sorted(terms)))
        return cls(tuple(params))

    def b_vector(self, point: tuple[Scalar, ...]) -> list[Scalar]:
        b = [ZERO] * 50
        for value, terms in zip(point, self.params):
            for idx, coeff in terms:
                b[idx - 1] = b[idx - 1] + coeff * value
        return b


def load_support(path: str) -> SupportPattern:
    try:
        return SupportPattern.from_json(json.loads(Path(path).read_text()))
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


# -- search --------------------------------------------------------------------

FILTERS = ("pure7", "pure3", "strong", "parallel")


def _passes(spec: LieAlgebraSpec, flt: str | None) -> bool:
    if flt is None:
        return True
    T = so3.characteristic_torsion(spec)
    if flt == "pure7":
        return so3.torsion_type_of(T) == so3.TorsionType.PURE7
    if flt == "pure3":
        return so3.torsion_type_of(T) == so3.TorsionType.PURE3
    if flt == "strong":
        return so3.dT(spec, T).is_zero()
    return so3.parallel_torsion_check(spec)


def _search_chunk(args) -> list[tuple[tuple, dict]]:
    pattern, values, flt, first_values = args
    found = []
    rest = [values] * (len(pattern.params) - 1)
    for head in first_values:
        for tail in itertools.product(*rest):
            point = (head,) + tail
            spec = LieAlgebraSpec.from_b(pattern.b_vector(point))
            if so3.ni_violations(spec) or not liealg.jacobi_identity_holds(spec):
                continue
            if not _passes(spec, flt):
                continue
            found.append((tuple((v.a, v.b) for v in spec.b), spec.to_json()))
    return found


def search(pattern: SupportPattern, values: list[Scalar], flt: str | None = None,
           cap: int = DEFAULT_SEARCH_CAP, jobs: int = 1) -> list[dict]:
    """Grid search; results sorted by b-vector, independent of ``jobs``."""
    if not values or not pattern.params:
        return []
    size = len(values) ** len(pattern.params)
    if size > cap:
        raise UsageError(f"search space has {size} points, above the cap of {cap}")
    chunks = [(pattern, values, flt, [v]) for v in values]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_search_chunk, chunks))
    else:
        parts = [_search_chunk(c) for c in chunks]
    hits = sorted((h for part in parts for h in part), key=lambda h: h[0])
    return [spec for _, spec in hits]


# -- commands ------------------------------------------------------------------

def _emit(obj: Any, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(obj)


def cmd_analyze(args) -> int:
    spec = load_spec(args.file)
    report = analyze(spec)
    if args.require_jacobi and not report.jacobi:
        print(f"{args.file}: Jacobi identity fails", file=sys.stderr)
        for k, idx, v in report.jacobi_certificate:
            print(f"  d(de^{k}) component {idx}: {Scalar.from_json(v).to_text()}", file=sys.stderr)
        return 1
    out = report.to_json()
    if args.deep and report.jacobi and spec.dim == 5:
        out["su3"] = {f.value: su3.su3_block(su3.ProductSpec(spec, f), deep=True) for f in su3.Factor}
    if args.format == "json":
        _emit(out)
    else:
        text = report.to_text()
        if "su3" in out:
            text += "\nsu3: " + json.dumps(out["su3"], sort_keys=True)
        print(text)
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        for e in catalog.entries():
            print(f"{e.id}\t{e.kind}\t{e.group}\t{e.where}")
        return 0
    if args.action == "dump":
        if not args.target:
            raise UsageError("catalog dump needs an entry id")
        try:
            entry = catalog.get(args.target)
        except catalog.UnknownEntry:
            raise UsageError(f"unknown catalog entry {args.target!r}") from None
        if not entry.buildable:
            raise UsageError(f"{entry.id} has no representative over Q(sqrt 3)")
        values = None
        if args.param:
            values = {}
            for item in args.param:
                name, _, text = item.partition("=")
                values[name] = evaluate_scalar(text, {})
        try:
            _emit(catalog.dump(entry, values))
        except catalog.ConstraintViolation as exc:
            raise UsageError(str(exc)) from None
        return 0
    try:
        results = catalog.verify_all(args.target, count=args.samples, seed=args.seed)
    except catalog.UnknownEntry:
        raise UsageError(f"no catalog entry matches {args.target!r}") from None
    failed = 0
    for r in results:
        mark = "PASS" if r.passed else "FAIL" if r.failed else "SKIP"
        print(f"{mark}\t{r.summary()}")
        failed += r.failed
    print(f"{len(results)} checks, {failed} failed", file=sys.stderr)
    return 1 if failed else 0


def cmd_search(args) -> int:
    pattern = load_support(args.support)
    values = parse_values(args.values)
    hits = search(pattern, values, args.filter, cap=args.cap, jobs=args.jobs)
    out = []
    for h in hits:
        b = LieAlgebraSpec.from_json(h).b
        out.append({"support_b": {str(i + 1): v.to_text() for i, v in enumerate(b) if v}, "spec": h})
    _emit(out)
    return 0


def cmd_su3(args) -> int:
    spec = load_spec(args.file)
    if spec.dim != 5:
        raise UsageError("su3 needs a 5-dimensional base algebra")
    liealg.require_jacobi(spec)
    _emit(su3.su3_block(su3.ProductSpec(spec, su3.Factor(args.factor)), deep=args.deep))
    return 0


def cmd_hypo(args) -> int:
    spec = load_spec(args.file)
    try:
        _emit({"hypo": su3.hypo_check(spec)})
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def cmd_halfflat(args) -> int:
    spec = load_spec(args.file)
    try:
        _emit({"halfflat": su3.halfflat_check(spec)})
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="so3lie", description="SO(3) structures on 5-dimensional Lie algebras")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for an algebra spec")
    a.add_argument("file")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.add_argument("--require-jacobi", action="store_true", help="exit nonzero when Jacobi fails")
    a.add_argument("--deep", action="store_true", help="add the SU(3) product checks with full expansion")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("catalog", help="list, dump or verify catalog entries")
    c.add_argument("action", choices=("list", "dump", "verify"))
    c.add_argument("target", nargs="?", help="entry id (dump) or shell pattern (verify)")
    c.add_argument("--param", action="append", metavar="NAME=VALUE", help="parameter value for dump")
    c.add_argument("--samples", type=int, default=5)
    c.add_argument("--seed", type=int, default=0)
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("search", help="grid search over a support pattern")
    s.add_argument("--support", required=True, help="JSON support pattern file")
    s.add_argument("--values", required=True, help="comma-separated values, e.g. 0,1,-1,r3/2")
    s.add_argument("--filter", choices=FILTERS)
    s.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP, help="largest grid to enumerate")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_search)

    u = sub.add_parser("su3", help="nearly integrable SU(3) test on the 8-dimensional product")
    u.add_argument("file")
    u.add_argument("--factor", choices=[f.value for f in su3.Factor], default="abelian3")
    u.add_argument("--deep", action="store_true")
    u.set_defaults(func=cmd_su3)

    h = sub.add_parser("hypo", help="hypo test for the standard SU(2) forms")
    h.add_argument("file")
    h.set_defaults(func=cmd_hypo)

    f = sub.add_parser("halfflat", help="half-flat test on the extension by a closed e6")
    f.add_argument("file")
    f.set_defaults(func=cmd_halfflat)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"so3lie: {exc}", file=sys.stderr)
        return 2
    except liealg.JacobiError as exc:
        print(f"so3lie: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
