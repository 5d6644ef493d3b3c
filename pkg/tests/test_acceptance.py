"""The eleven acceptance criteria, each checked exactly and reported as one PASS/FAIL line."""

from __future__ import annotations

import random
from itertools import combinations

from conftest import ACCEPTANCE_LINES
from helpers import change_basis, ni_basis, random_basis_change, random_form, random_lie_bases, random_scalar
from so3lie import catalog, liealg, linalg, riemann, so3, su3
from so3lie.exterior import KForm, basis_forms, contract, hodge, unit, volume, wedge
from so3lie.expr import evaluate_form, evaluate_scalar
from so3lie.liealg import LieAlgebraSpec
from so3lie.scalars import ONE, R3, ZERO, Scalar

SAMPLES = 5


def report(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def form(text: str, k: int) -> KForm:
    return evaluate_form(text, {}, 5, k)


def families(pattern: str) -> list[catalog.CatalogEntry]:
    return [e for e in catalog.select(pattern) if e.kind == "family"]


def instances(entry: catalog.CatalogEntry, count: int = SAMPLES):
    for values in catalog.sample(entry, count):
        yield values, catalog.build(entry, values)


# -- 1 ---------------------------------------------------------------------------

def test_criterion_1_example_reproduction():
    from so3lie.report import analyze

    spec = catalog.build("X-L27")
    r = analyze(spec)
    printed_ricci = [
        ["-141/32", "0", "0", "-99/32*r3", "0"],
        ["0", "-27/8", "0", "0", "0"],
        ["0", "0", "-27/8", "0", "0"],
        ["-99/32*r3", "0", "0", "-99/32*r3", "0"],
        ["0", "0", "0", "0", "-15/2"],
    ]
    printed_ricci = [[evaluate_scalar(x, {}) for x in row] for row in printed_ricci]
    checks = {
        "T": r.torsion == form("r3/4*e123 - r3*e145 - 3/4*e234", 3),
        "dT": r.dT == form("-3/2*e2345 - 3/2*r3*e1235", 4),
        "d*T": r.d_star_T is not None and r.d_star_T.is_zero(),
        "type": r.torsion_type == "Pure7",
        "ricci": r.ricci_lc == printed_ricci,
        "base_ricci_trace": riemann.base_ricci(spec)[1] == ZERO,
    }
    bad = [k for k, v in checks.items() if not v]
    detail = "X-L27 all items exact" if not bad else f"X-L27 mismatches: {', '.join(bad)}"
    if "ricci" in bad:
        diffs = [f"({i + 1},{j + 1}) computed {r.ricci_lc[i][j]} printed {printed_ricci[i][j]}"
                 for i in range(5) for j in range(5) if r.ricci_lc[i][j] != printed_ricci[i][j]]
        detail += " [" + "; ".join(diffs) + "]"
    report(1, not bad, detail)


# -- 2 ---------------------------------------------------------------------------

CLAIM_FIELDS = ("torsion", "dT", "k_p", "torsion_type")


def test_criterion_2_catalog_replay():
    chosen = [e for e in families("TF-*") + families("ST-*") + families("NC-*")]
    assert {"ST-3", "NC-4", "ST-4-c0", "ST-1"} <= {e.id for e in chosen}
    failures, checked = [], 0
    for entry in chosen:
        claims = [k for k in CLAIM_FIELDS if k in entry.expected]
        if not claims:
            continue
        runs = catalog.verify_samples(entry, count=SAMPLES)
        assert len(runs) >= SAMPLES
        for res in runs:
            for f in res.fields:
                if f.field in ("jacobi", "ni") + tuple(claims):
                    checked += 1
                    if not f.ok:
                        failures.append(f"{entry.id}.{f.field}")
    # spot checks written out directly
    for values, spec in instances(catalog.get("ST-3")):
        a = Scalar.coerce(values["a"])
        checked += 2
        if so3.characteristic_torsion(spec) != form("e135", 3) * (R3 * a):
            failures.append("ST-3.torsion(direct)")
        if riemann.k_p(spec) != -3 * a * a:
            failures.append("ST-3.k_p(direct)")
    for values, spec in instances(catalog.get("NC-4")):
        a, b, c = (Scalar.coerce(values[k]) for k in "abc")
        checked += 1
        if so3.dT(spec) != form("e2345", 4) * ((2 * a * c + R3 * b * b + R3 * c * c) ** 2 / (c * c)):
            failures.append("NC-4.dT(direct)")
    for name in ("ST-4-c0", "ST-1"):
        for _, spec in instances(catalog.get(name)):
            checked += 1
            if so3.torsion_type(spec) != so3.TorsionType.PURE7:
                failures.append(f"{name}.Pure7(direct)")
    distinct = sorted(set(failures))
    detail = f"{checked} claims checked over {len(chosen)} families"
    if distinct:
        detail += f"; failing: {', '.join(distinct)}"
    report(2, not failures, detail)


# -- 3 ---------------------------------------------------------------------------

def test_criterion_3_torsion_free_structure():
    expected_sign = {"TF-1": -1, "TF-2": -1, "TF-3": -1, "TF-4": 0}
    bad = []
    for name, sign in expected_sign.items():
        for values, spec in instances(catalog.get(name)):
            assert so3.characteristic_torsion(spec).is_zero()
            r = so3.so3_curvature(spec)
            F, _ = so3.F_constant(spec)
            if any(r[j] != E * F for j, E in enumerate(so3.E_forms())) or F.sign() != sign:
                bad.append(f"{name}{values}")
    report(3, not bad, "r^j = F E_j with F<0 for TF-1..3 and F=0 for TF-4" if not bad else f"failing {bad}")


# -- 4 ---------------------------------------------------------------------------

def test_criterion_4_linear_system_audit():
    printed = so3.audit_ni_system()
    reconciled = so3.audit_ni_system(so3.reconciled_ni_system())
    direct_rows = [r for _, r in so3.direct_ni_system()]
    rec_rows = [r for _, r in so3.reconciled_ni_system()]
    same = linalg.same_row_space(direct_rows, rec_rows, 50)
    detail = (f"direct rank {printed.direct_rank}, printed rank {printed.printed_rank}, "
              f"printed equal={printed.equal} ({len(printed.spurious_in_printed)} spurious, "
              f"{len(printed.missing_from_printed)} missing functionals reported); "
              f"reconciled equal={reconciled.equal and same}")
    report(4, reconciled.equal and same, detail)


# -- 5 ---------------------------------------------------------------------------

def test_criterion_5_characteristic_connection_axioms():
    rng = random.Random(5)
    basis = ni_basis()
    tally = {"metric": 0, "preserves": 0, "torsion=T": 0, "gamma": 0}
    n = 100
    for _ in range(n):
        b = [ZERO] * 50
        for v in basis:
            c = rng.choice((-2, -1, 0, 0, 1, 2))
            if c:
                b = [x + y * c for x, y in zip(b, v)]
        spec = LieAlgebraSpec.from_b(b)
        assert not so3.ni_violations(spec)
        T = so3.characteristic_torsion(spec)
        conn = so3.characteristic_connection(spec, T)
        tally["metric"] += conn.is_metric()
        tally["preserves"] += so3.preserves_tensor(conn)
        tally["torsion=T"] += so3.torsion_tensor_form(conn, spec) == T
        tally["gamma"] += so3.gamma_proportionalities_hold(conn)
    ok = all(v == n for v in tally.values())
    report(5, ok, f"{n} NI specs: " + ", ".join(f"{k} {v}/{n}" for k, v in tally.items()))


# -- 6 ---------------------------------------------------------------------------

def test_criterion_6_coclosedness():
    under, bad = 0, []
    for entry in catalog.entries():
        if not entry.buildable:
            continue
        for values, spec in instances(entry):
            if not liealg.jacobi_identity_holds(spec) or so3.ni_violations(spec):
                continue
            if not so3.so3_conditions_check(spec):
                continue
            under += 1
            if not so3.costar_dT(spec).is_zero() or not so3.ricci_symmetry_check(spec):
                bad.append(f"{entry.id}{values}")
    ns = 0
    for entry in families("NS-*"):
        for values, spec in instances(entry):
            ns += 1
            if not so3.connection_forms(spec).is_zero() or not so3.is_harmonic(spec):
                bad.append(f"{entry.id}{values} (gamma/harmonic)")
    report(6, not bad and under > 0,
           f"{under} instances under SO(3) conditions, {ns} non-symmetric instances"
           + (f"; failing {bad}" if bad else ""))


# -- 7 ---------------------------------------------------------------------------

def test_criterion_7_parallel_torsion():
    bad = []
    for name in ("ST-2", "ST-4"):
        for values, spec in instances(catalog.get(name)):
            T = so3.characteristic_torsion(spec)
            if not so3.parallel_torsion_check(spec):
                bad.append(f"{name} not parallel")
            if so3.dT(spec, T) != so3.sigma_T(T) * 2:
                bad.append(f"{name} dT != 2 sigma_T")
    nc = [e for e in families("NC-*")]
    for entry in nc:
        for values, spec in instances(entry):
            if so3.parallel_torsion_check(spec):
                bad.append(f"{entry.id} parallel")
    summary = sorted({f"{b} ({bad.count(b)}/{SAMPLES})" for b in bad})
    report(7, not bad, f"ST-2, ST-4 and {len(nc)} NC families" + (f"; failing {', '.join(summary)}" if bad else ""))


# -- 8 ---------------------------------------------------------------------------

def test_criterion_8_holonomy_lists():
    bad = []
    hol = families("HOL-*")
    for entry in hol:
        for values, spec in instances(entry):
            if so3.parallel_vectors(spec).dim == 0:
                bad.append(f"{entry.id}{values}")
    for values, spec in instances(catalog.get("ST-3")):
        if so3.parallel_vectors(spec).dim != 0:
            bad.append(f"ST-3{values} has parallel vectors")
    report(8, not bad, f"{len(hol)} holonomy families with nonzero kernel, ST-3 kernel zero"
           if not bad else f"failing {bad}")


# -- 9 ---------------------------------------------------------------------------

def test_criterion_9_su3_layer():
    checks = {"det identity": su3.det_identity_defect().is_zero()}
    l1 = catalog.build("MAIN-l1")
    checks["MAIN-l1 x SO(3)"] = su3.ni8_check(su3.ProductSpec(l1, su3.Factor.SO3), deep=True)
    ns7 = catalog.get("NS-7")
    assert dict(ns7.derived)["b37"] == "0"
    for values, spec in instances(ns7, 2):
        for f in su3.Factor:
            checks[f"NS-7{values} x {f.value}"] = su3.ni8_check(su3.ProductSpec(spec, f), deep=True)
    for name in ("MAIN-l3", "NC-5"):
        entry = catalog.get(name)
        spec = catalog.build(entry, catalog.sample(entry, 1)[0])
        for f in su3.Factor:
            checks[f"{name} x {f.value} rejected"] = not su3.ni8_check(su3.ProductSpec(spec, f), deep=True)
    bad = [k for k, v in checks.items() if not v]
    report(9, not bad, f"{len(checks)} checks" + (f"; failing {bad}" if bad else ""))


# -- 10 --------------------------------------------------------------------------

def test_criterion_10_hypo_halfflat():
    bad = []
    for values, spec in instances(catalog.get("HYPO")):
        if not su3.hypo_check(spec) or not so3.is_harmonic(spec):
            bad.append(f"HYPO{values}")
    for values, spec in instances(catalog.get("HALFFLAT")):
        if not su3.halfflat_check(spec):
            bad.append(f"HALFFLAT{values}")
    report(10, not bad, "HYPO hypo and harmonic, HALFFLAT extension half-flat" if not bad else f"failing {bad}")


# -- 11 --------------------------------------------------------------------------

RANDOM_CASES = 200


def _field_laws(rng) -> bool:
    x, y, z = (random_scalar(rng) for _ in range(3))
    ok = (x + y) + z == x + (y + z) and (x * y) * z == x * (y * z)
    ok &= x + y == y + x and x * y == y * x and x * (y + z) == x * y + x * z
    ok &= x + ZERO == x and x * ONE == x and x - x == ZERO
    if x:
        ok &= x * x.inv() == ONE
    return ok


def _form_identities(rng) -> bool:
    n = 5
    k, l_ = rng.randint(0, n), rng.randint(0, n)
    a, b = random_form(rng, n, k), random_form(rng, n, l_)
    c = random_form(rng, n, rng.randint(0, n))
    v = [random_scalar(rng) for _ in range(n)]
    ok = (a ^ b) ^ c == a ^ (b ^ c)
    ok &= (a ^ b) == (b ^ a) * (-1) ** (k * l_)
    ok &= hodge(hodge(a)) == a * (-1) ** (k * (n - k))
    if k + l_ > 0:
        # contraction is an antiderivation; it kills functions
        first = (contract(v, a) ^ b) if k else KForm.zero(n, k + l_ - 1)
        second = (a ^ contract(v, b)) if l_ else KForm.zero(n, k + l_ - 1)
        ok &= contract(v, a ^ b) == first + second * (-1) ** k
    return ok


def _exhaustive_forms() -> bool:
    n = 5
    vol = volume(n)
    ok = True
    for k in range(n + 1):
        basis = basis_forms(n, k)
        for u in basis:
            for w in basis:
                expect = vol if u == w else KForm.zero(n, n)
                ok &= (u ^ hodge(w)) == expect
            for i in range(1, n + 1):
                ei = KForm.basis(n, i)
                # i_v(e^i ^ u) + e^i ^ i_v u = u for v = e_i
                rest = (ei ^ contract(unit(n, i), u)) if k else KForm.zero(n, k)
                ok &= contract(unit(n, i), ei ^ u) + rest == u
    for (i, j) in combinations(range(1, n + 1), 2):
        ok &= wedge(KForm.basis(n, i), KForm.basis(n, j)) == -wedge(KForm.basis(n, j), KForm.basis(n, i))
    return ok


def _exhaustive_scalars() -> bool:
    pool = [Scalar(a, b) for a in (-2, -1, 0, 1, 2) for b in (-1, 0, 1)]
    ok = True
    for x in pool:
        for y in pool:
            ok &= x * y == y * x and (x - y) + y == x
            if y:
                ok &= (x / y) * y == x
    return ok


def _d2_matches_jacobi(spec: LieAlgebraSpec) -> bool:
    d2 = all(spec.d_form(spec.d_form(KForm.basis(spec.dim, i))).is_zero() for i in range(1, spec.dim + 1))
    return d2 == liealg.jacobi_identity_holds(spec) == liealg.jacobi_check(spec)[0]


def test_criterion_11_property_suites():
    rng = random.Random(11)
    ok = {}
    ok["field laws"] = _exhaustive_scalars() and all(_field_laws(rng) for _ in range(RANDOM_CASES))
    ok["wedge/hodge/contraction"] = _exhaustive_forms() and all(_form_identities(rng) for _ in range(RANDOM_CASES))

    # d^2 = 0 <=> Jacobi: every single-coefficient spec, then random sparse ones
    jac_fail = 0
    d2 = True
    for idx in range(50):
        b = [ZERO] * 50
        b[idx] = ONE
        d2 &= _d2_matches_jacobi(LieAlgebraSpec.from_b(b))
    for _ in range(RANDOM_CASES):
        b = [rng.choice((ONE, -ONE, R3, Scalar(1, 0) / 2)) if rng.random() < 0.1 else ZERO for _ in range(50)]
        spec = LieAlgebraSpec.from_b(b)
        d2 &= _d2_matches_jacobi(spec)
        jac_fail += not liealg.jacobi_identity_holds(spec)
    bases = random_lie_bases()
    for _ in range(RANDOM_CASES // 4):
        spec = change_basis(rng.choice(bases), random_basis_change(rng))
        d2 &= _d2_matches_jacobi(spec) and liealg.jacobi_identity_holds(spec)
    ok["d^2=0 <=> Jacobi"] = d2

    # first Bianchi for Levi-Civita: every basis algebra, then random bases of them
    bianchi = True
    for spec in bases:
        lc = riemann.levi_civita(spec)
        bianchi &= riemann.first_bianchi_holds(riemann.curvature(lc, spec))
    for _ in range(RANDOM_CASES):
        spec = change_basis(rng.choice(bases), random_basis_change(rng))
        lc = riemann.levi_civita(spec)
        bianchi &= riemann.first_bianchi_holds(riemann.curvature(lc, spec))
    ok["first Bianchi (Levi-Civita)"] = bianchi
    bad = [k for k, v in ok.items() if not v]
    report(11, not bad, f"{len(ok)} suites, exhaustive basis cases plus >= {RANDOM_CASES} random instances each"
           + (f"; failing {bad}" if bad else "") + f" (random Jacobi failures exercised: {jac_fail})")

