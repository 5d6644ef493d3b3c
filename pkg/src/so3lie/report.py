"""One-shot analysis of an algebra: every invariant the engine computes."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from . import liealg, riemann, so3
from .exterior import KForm
from .liealg import LieAlgebraSpec, Subspace
from .scalars import Scalar


@dataclass
class AnalysisReport:
    jacobi: bool
    ni: bool
    torsion: KForm | None = None
    torsion_type: str | None = None
    dT: KForm | None = None
    d_star_T: KForm | None = None
    sigma_T: KForm | None = None
    gamma: tuple[KForm, KForm, KForm] | None = None
    curvature_r: tuple[KForm, KForm, KForm] | None = None
    F: Scalar | None = None
    model: str | None = None
    k_p: Scalar | None = None
    ricci_lc: list[list[Scalar]] | None = None
    ricci_char: list[list[Scalar]] | None = None
    parallel_torsion: bool | None = None
    parallel_vectors: Subspace | None = None
    so3_conditions: bool | None = None
    symmetric_pair_h: bool | None = None
    symmetric_pair_p: bool | None = None
    derived_series_dims: list[int] | None = None
    jacobi_certificate: list = field(default_factory=list)
    ni_certificate: list = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {k: _encode(v) for k, v in sorted(asdict_shallow(self).items())}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def to_text(self) -> str:
        lines = []
        for k, v in sorted(asdict_shallow(self).items()):
            lines.append(f"{k}: {_text(v)}")
        return "\n".join(lines)


def asdict_shallow(r: AnalysisReport) -> dict[str, Any]:
    # dataclasses.asdict would deep-copy KForms into dicts
    return {k: getattr(r, k) for k in r.__dataclass_fields__}


def _encode(v):
    if isinstance(v, (Scalar, KForm)):
        return v.to_json()
    if isinstance(v, Subspace):
        return {"dim": v.dim, "basis": [[x.to_json() for x in b] for b in v.basis]}
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    return v


def _text(v) -> str:
    if isinstance(v, (Scalar, KForm)):
        return v.to_text()
    if isinstance(v, Subspace):
        return f"dim {v.dim}: " + "; ".join("(" + ", ".join(x.to_text() for x in b) + ")" for b in v.basis)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    return str(v)


def _symmetric_pair_flags(spec: LieAlgebraSpec) -> tuple[bool, bool]:
    """``(h subalgebra with [h,p] in p, [p,p] in h)`` for the adapted splitting."""
    h, p = liealg.h_subspace(), liealg.p_subspace()
    reductive = liealg.is_subalgebra(spec, h) and liealg.is_ad_invariant(spec, p, h)
    pp = liealg.bracket_span(spec, p, p)
    return reductive, h.contains_subspace(pp)


def analyze(spec: LieAlgebraSpec) -> AnalysisReport:
    """Full report.  Non-Jacobi and non-NI inputs are findings, not errors."""
    ok, cert = liealg.jacobi_check(spec)
    if not ok:
        return AnalysisReport(jacobi=False, ni=False, jacobi_certificate=[_cert(c) for c in cert])
    dims = [s.dim for s in liealg.derived_series(spec)]
    if spec.dim != 5:
        return AnalysisReport(jacobi=True, ni=False, derived_series_dims=dims)
    lc = riemann.levi_civita(spec)
    report = AnalysisReport(
        jacobi=True,
        ni=False,
        k_p=riemann.k_p(spec),
        ricci_lc=riemann.ricci(lc, spec),
        derived_series_dims=dims,
    )
    report.symmetric_pair_h, report.symmetric_pair_p = _symmetric_pair_flags(spec)
    ni, violations = so3.ni_check(spec)
    report.ni = ni
    if not ni:
        report.ni_certificate = [[label, v.to_json()] for label, v in violations]
        return report
    T = so3.characteristic_torsion(spec)
    conn = so3.characteristic_connection(spec, T)
    forms = so3.connection_forms(spec, conn)
    report.torsion = T
    report.torsion_type = so3.torsion_type_of(T).value
    report.dT = so3.dT(spec, T)
    report.d_star_T = so3.costar_dT(spec, T)
    report.sigma_T = so3.sigma_T(T)
    report.gamma = tuple(forms)
    report.curvature_r = so3.so3_curvature(spec, forms)
    if T.is_zero():
        F, model = so3.F_constant(spec)
        report.F, report.model = F, model.value
    report.ricci_char = so3.characteristic_ricci(spec, conn)
    report.parallel_torsion = all(f.is_zero() for f in so3.covariant_derivative_form(conn, T))
    report.parallel_vectors = so3.parallel_vectors(spec, conn)
    report.so3_conditions = so3.so3_conditions_check(spec, conn)
    return report


def _cert(c):
    k, idx, v = c
    return [k, list(idx), v.to_json()]
