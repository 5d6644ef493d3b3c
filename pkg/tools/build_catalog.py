"""Regenerate src/so3lie/data/catalog.json from the family table below."""

from __future__ import annotations

import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "so3lie" / "data" / "catalog.json"
ENTRIES: list[dict] = []


def entry(id, d, params=(), nonzero=(), derived=(), expected=None, fingerprint=None,
          where="", kind="family", group=""):
    ENTRIES.append({
        "id": id,
        "kind": kind,
        "group": group,
        "where": where,
        "params": list(params),
        "nonzero": list(nonzero),
        "derived": [list(p) for p in derived],
        "d": list(d),
        "expected": expected or {},
        "fingerprint": fingerprint or {},
    })


# -- symmetric pairs, torsion-free -------------------------------------------
TF = "symmetric pair, torsion-free"
entry("TF-1", ["0", "2*a*e24", "a*(r3*e13+e34+2*e25)", "0", "a*(r3*e15+e45)"], ["a"], ["a"],
      expected={"torsion": "0", "F_sign": -1, "model": "SL3R_quotient", "k_p": "0"},
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="torsion-free list, solution 1", group=TF)
entry("TF-2", ["0", "(-a**2+b**2)/a*e24", "b*e45+(a**2+b**2)/(2*a)*(e34+r3*e13)+b**2/a*e25", "2*b*e24",
               "(a**2+b**2)/(2*a)*(e45+r3*e15)+b*e34+a*e23"], ["a", "b"], ["a"],
      expected={"torsion": "0", "F_sign": -1, "model": "SL3R_quotient", "k_p": "0"},
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="torsion-free list, solution 2", group=TF)
entry("TF-3", ["0", "a*(e24+e35)", "a/2*(r3*e13+e34)+b*(r3*e15+e23)", "b*(2*e24+2*e35)",
               "b*(r3*e13+e25)-a/2*(r3*e15+e45)"], ["a", "b"], ["a**2+b**2"],
      expected={"torsion": "0", "F_sign": -1, "model": "SL3R_quotient", "k_p": "0"},
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="torsion-free list, solution 3", group=TF)
entry("TF-4", ["0", "a*e14", "a/2*e15", "-a*e12", "-a/2*e13"], ["a"], ["a"],
      expected={"torsion": "0", "F_sign": 0, "model": "R5", "k_p": "0"},
      fingerprint={"commutator_dim": 4, "solvable_step": 2},
      where="torsion-free list, solution 4", group=TF)

# -- symmetric pairs, strong torsion ------------------------------------------
ST = "symmetric pair, strong torsion"
entry("ST-1", ["0", "-2*a*e24", "a*(r3*e13+e34)+b*(r3*e15+e23)", "-2*b*e24", "b*(r3*e13+e25)-a*(r3*e15+e45)"],
      ["a", "b"], ["a"],
      expected={"torsion": "2*(a*e2+b*e4)*e35", "dT": "0", "k_p": "0", "torsion_type": "Pure7"},
      fingerprint={"commutator_dim": 3, "solvable_step": 2},
      where="strong torsion lemma, family 1 (normal form I)", group=ST)
entry("ST-2", ["-a*e24", "a*e14", "0", "-a*e12", "0"], ["a"], ["a"],
      expected={"torsion": "a*e124", "dT": "0", "k_p": "0", "parallel_torsion": True},
      fingerprint={"commutator_dim": 3, "center_dim": 2, "killing_signature_l1": [0, 3, 0]},
      where="strong torsion lemma, family 2", group=ST)
entry("ST-3", ["r3*a*e35", "0", "2*a*e45+a*e23", "2*a*e24", "-a*e25"], ["a"], ["a"],
      expected={"torsion": "r3*a*e135", "dT": "0", "k_p": "-3*a**2", "parallel_vectors_dim": 0},
      fingerprint={"commutator_dim": 4, "solvable_step": 3},
      where="strong torsion lemma, family 3", group=ST)
entry("ST-4", ["-c*e35", "a*e35", "c*e15-a*e25+b*e45", "-b*e35", "-c*e13+a*e23+b*e34"],
      ["a", "b", "c"], ["a**2+b**2+c**2"],
      expected={"torsion": "(c*e1-a*e2+b*e4)*e35", "dT": "0", "k_p": "-a**2-b**2-c**2",
                "parallel_torsion": True},
      fingerprint={"commutator_dim": 3, "center_dim": 2, "killing_signature_l1": [0, 3, 0]},
      where="strong torsion lemma, family 4 (normal form IV)", group=ST)
entry("ST-4-c0", ["0", "a*e35", "-a*e25+b*e45", "-b*e35", "a*e23+b*e34"],
      ["a", "b"], ["a**2+b**2"],
      expected={"torsion": "(-a*e2+b*e4)*e35", "torsion_type": "Pure7", "parallel_torsion": True},
      where="strong torsion lemma, normal form IV with c = 0", group=ST)

# -- symmetric pairs, non-closed torsion ---------------------------------------
NC = "symmetric pair, non-closed torsion"
entry("NC-1", ["2*r3*a*e24", "0", "-a*e23-2*a*e45", "-2*a*e24", "a*e25"], ["a"], ["a"],
      expected={"torsion": "-2*r3*a*(e124+e135)", "dT": "12*a**2*e2345", "k_p": "0",
                "parallel_torsion": False},
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="non-closed torsion lemma, family 1", group=NC)
entry("NC-2", ["2*r3*a*e24", "0", "-a*e23", "2*a*e24", "a*e25+2*a*e34"], ["a"], ["a"],
      expected={"torsion": "-2*r3*a*(e124+e135)", "dT": "12*a**2*e2345", "k_p": "0",
                "parallel_torsion": False},
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="non-closed torsion lemma, family 2", group=NC)
entry("NC-3", ["3*a*e24", "a*e14", "a/2*e15-r3/2*a*e23-r3/2*a*e45", "-a*e12",
               "-a/2*e13+r3/2*a*e25+r3/2*a*e34"], ["a"], ["a"],
      expected={"torsion": "-3*a*(e124+e135)", "dT": "9*a**2*e2345", "k_p": "0",
                "parallel_torsion": False},
      fingerprint={"commutator_dim": 5},
      where="non-closed torsion lemma, family 3", group=NC)
NC4 = ["(2*a*c+r3*b**2+r3*c**2)/c*e24+a*e35", "-2*b*e24", "-(b**2+c**2)/(2*c)*e23-b*e25-b**2/c*e45",
       "(c**2-b**2)/c*e24", "b*e23+(b**2+c**2)/(2*c)*e25+c*e34"]
entry("NC-4", NC4, ["a", "b", "c"], ["c"],
      expected={"torsion": "-(2*a*c+r3*b**2+r3*c**2)/c*e124-(a*c+r3*b**2+r3*c**2)/c*e135",
                "dT": "(2*a*c+r3*b**2+r3*c**2)**2/c**2*e2345", "k_p": "-a**2", "parallel_torsion": False},
      fingerprint={"solvable_step": 3},
      where="non-closed torsion lemma, family 4", group=NC)
entry("NC-4-P3", NC4, ["b", "c"], ["c"], derived=[["a", "-(b**2+c**2)/(r3*c)"]],
      expected={"torsion_type": "Pure3"},
      where="non-closed torsion lemma, family 4 on the locus -r3*a*c = b**2+c**2", group=NC)
NC5 = ["-2*(b**2+c**2)/a*e24-(b**2+c**2+a**2)/a*e35", "-2*b*e24", "a*e15-b*e25+c*e45", "2*c*e24",
       "-a*e13+b*e23+c*e34"]
entry("NC-5", NC5, ["a", "b", "c"], ["a", "b**2+c**2"],
      expected={"torsion": "2*(b**2+c**2)/a*e124+(b**2+c**2+a**2)/a*e135",
                "dT": "4*(b**2+c**2)*(a**2+b**2+c**2)/a**2*e2345",
                "k_p": "-((b**2+c**2)/a+1)", "parallel_torsion": False},
      fingerprint={"commutator_dim": 4, "l2_dim": 3},
      where="non-closed torsion lemma, family 5", group=NC)
# rational points of a**2 = 3*(b**2+c**2)
entry("NC-5-P3", NC5, ["a", "t"], ["a"],
      derived=[["b", "a/r3*(1-t**2)/(1+t**2)"], ["c", "a/r3*2*t/(1+t**2)"]],
      expected={"torsion_type": "Pure3"},
      where="non-closed torsion lemma, family 5 on the locus a**2 = 3*(b**2+c**2)", group=NC)

# -- normal forms (fingerprints only) -------------------------------------------
NF = "normal form"
SO3R2 = {"commutator_dim": 3, "center_dim": 2, "killing_signature_l1": [0, 3, 0]}
entry("ST-I", ["0", "-2*e24", "(e13+e34)+m*(e15+e23)", "-2*m*e24", "m*(e13+e25)-(e15+e45)"], ["m"],
      fingerprint={"commutator_dim": 3, "solvable_step": 2},
      where="strong torsion lemma, normal form I", kind="normal_form", group=NF)
# printed with +e14 in de2, which is so(2,1)+R2; strong family 2 at a = -1 has -e14
entry("ST-II", ["e24", "-e14", "0", "e12", "0"], fingerprint=SO3R2,
      where="strong torsion lemma, normal form II", kind="normal_form", group=NF)
entry("ST-III", ["e35", "0", "2*e45+e23", "2*e24", "-e25"],
      fingerprint={"commutator_dim": 4, "solvable_step": 3},
      where="strong torsion lemma, normal form III", kind="normal_form", group=NF)
entry("ST-IV", ["-c*e35", "a*e35", "c*e15-a*e25+b*e45", "-b*e35", "-c*e13+a*e23+b*e34"],
      ["a", "b", "c"], ["a**2+b**2+c**2"], fingerprint=SO3R2,
      where="strong torsion lemma, normal form IV", kind="normal_form", group=NF)
entry("NC-I", ["e24", "0", "-e23", "2*e24", "e25+2*e34"],
      fingerprint={"commutator_dim": 3, "solvable_step": 3},
      where="non-closed torsion lemma, normal form I", kind="normal_form", group=NF)
entry("NC-II", ["6*e24", "2*e14", "e15-r3*e23-r3*e45", "-2*e12", "-e13+r3*e25+r3*e34"],
      fingerprint={"commutator_dim": 5},
      where="non-closed torsion lemma, normal form II", kind="normal_form", group=NF)
entry("NC-III", ["(2*c+r3*(b**2+1))*e24+c*e35", "-2*b*e24", "-(b**2+1)/2*e23-b*e25-b**2*e45",
                 "(1-b**2)*e24", "b*e23+(b**2+1)/2*e25+e34"], ["b", "c"],
      fingerprint={"solvable_step": 3},
      where="non-closed torsion lemma, normal form III", kind="normal_form", group=NF)
entry("NC-IV", ["-2*(b**2+c**2)*e24-(b**2+c**2+1)*e35", "-2*b*e24", "e15-b*e25+c*e45", "2*c*e24",
                "-e13+b*e23+c*e34"], ["b", "c"], ["b**2+c**2"],
      fingerprint={"commutator_dim": 4, "l2_dim": 3},
      where="non-closed torsion lemma, normal form IV", kind="normal_form", group=NF)

# -- U(1) holonomy lists --------------------------------------------------------
HOL = "reduced holonomy"
HOLX = {"parallel_vectors_min_dim": 1}
entry("HOL-a1", ["-b24*e35", "0", "b24*e15+b48*e45", "-b48*e35", "-b24*e13+b48*e34"], ["b24", "b48"],
      ["b24**2+b48**2"], expected=HOLX, where="holonomy list (a), item 1", group=HOL)
entry("HOL-a2", ["-b24*e35", "b45*e35", "b24*e15-b45*e25+b48*e45", "-b48*e35", "-b24*e13+b45*e23+b48*e34"],
      ["b24", "b45", "b48"], ["b24**2+b45**2+b48**2"], expected=HOLX,
      where="holonomy list (a), item 2", group=HOL)
entry("HOL-a3", ["b6*e24", "-b6*e14", "0", "b6*e12", "0"], ["b6"], ["b6"], expected=HOLX,
      where="holonomy list (a), item 3", group=HOL)
entry("HOL-a4", ["0", "2*b24*e14", "b24*e15", "-2*b24*e12", "-b24*e13"], ["b24"], ["b24"], expected=HOLX,
      where="holonomy list (a), item 4", group=HOL)
entry("HOL-a5", ["b6*e24+b9*e35", "-2*b45*e24", "b24*e15-b45*e25+b48*e45", "2*b48*e24",
                 "-b24*e13+b45*e23+b48*e34"], ["b24", "b45", "b48"], ["b24", "b45**2+b48**2"],
      derived=[["b6", "-2*(b45**2+b48**2)/b24"], ["b9", "-(b45**2+b48**2+b24**2)/b24"]], expected=HOLX,
      where="holonomy list (a), item 5", group=HOL)
entry("HOL-b1", ["b9*e35", "0", "-b9*e15", "0", "b9*e13"], ["b9"], ["b9"], expected=HOLX,
      where="holonomy list (b), item 1", group=HOL)
entry("HOL-b2", ["b6*e24", "-b6*e14", "0", "b6*e12", "0"], ["b6"], ["b6"], expected=HOLX,
      where="holonomy list (b), item 2", group=HOL)
entry("HOL-b3", ["0", "0", "b48*e45", "-b48*e35", "b48*e34"], ["b48"], ["b48"], expected=HOLX,
      where="holonomy list (b), item 3", group=HOL)
entry("HOL-b4", ["0", "b45*e35", "-b45*e25", "0", "b45*e23"], ["b45"], ["b45"], expected=HOLX,
      where="holonomy list (b), item 4", group=HOL)
entry("HOL-b5", ["0", "b19*e35", "-b19*e25+b48*e45", "-b48*e35", "b19*e23+b48*e34"], ["b19", "b48"],
      ["b19**2+b48**2"], expected=HOLX, where="holonomy list (b), item 5", group=HOL)

# -- non-symmetric pairs --------------------------------------------------------
NS_D = ["-b12*e23+b6*e24+b7*e25+b8*e34+b9*e35+b10*e45",
        "b12*e13-b6*e14-b7*e15+b35*e34+b19*e35-b37*e45",
        "-b12*e12-b8*e14-b9*e15-b35*e24-b19*e25-b39*e45",
        "b6*e12+b8*e13-b10*e15+b35*e23+b37*e25+b39*e35",
        "b7*e12+b9*e13+b10*e14+b19*e23-b37*e24-b39*e34"]
NS_P = ["b6", "b7", "b8", "b9", "b10", "b12", "b19", "b35", "b37", "b39"]
NSX = {"gamma_zero": True, "dT": "0", "d_star_T": "0", "so3_conditions": True}
NSF = {"l1_dim": 3, "l2_dim": 3}


def ns(id, free, derived, nonzero, where, extra=None):
    named = set(free) | {n for n, _ in derived}
    zeros = [[p, "0"] for p in NS_P if p not in named]
    entry(id, NS_D, free, nonzero, zeros + [list(x) for x in derived],
          expected={**NSX, **(extra or {})}, fingerprint=NSF, where=where, group="non-symmetric pair")


ns("NS-1", ["b7", "b8", "b9", "b10", "b12", "b19", "b39"],
   [["b6", "-(-b7*b8+b12*b10)/b9"], ["b37", "(b7*b39-b19*b10)/b9"], ["b35", "-(-b19*b8+b12*b39)/b9"]],
   ["b9"], "non-symmetric theorem, branch 1")
ns("NS-2", ["b6", "b7", "b10", "b12", "b19", "b37"],
   [["b35", "-(-b6*b19+b12*b37)/b7"], ["b8", "b12*b10/b7"], ["b39", "b19*b10/b7"]],
   ["b7"], "non-symmetric theorem, branch 2")
ns("NS-3", ["b6", "b8", "b10", "b37", "b39"], [["b35", "(-b8*b37+b6*b39)/b10"]],
   ["b10"], "non-symmetric theorem, branch 3")
ns("NS-4", ["b6", "b8", "b12", "b35", "b37"], [["b19", "b12*b37/b6"], ["b39", "b8*b37/b6"]],
   ["b6"], "non-symmetric theorem, branch 4")
ns("NS-5", ["b8", "b12", "b35", "b39"], [["b19", "b12*b39/b8"]], ["b8"], "non-symmetric theorem, branch 5")
ns("NS-6", ["b19", "b35", "b37", "b39"], [], ["b19**2+b35**2+b37**2+b39**2"],
   "non-symmetric theorem, branch 6")
ns("NS-7", ["b12", "b19", "b35"], [], ["b12**2+b19**2+b35**2"], "non-symmetric theorem, branch 7 with b37 = 0")
ns("NS-7b", ["b19", "b35", "b37"], [], ["b19**2+b35**2+b37**2"],
   "non-symmetric theorem, branch 7 with b12 = 0")
P7 = {"torsion_type": "Pure7"}
# the pure-type condition from T^E2 = 0 is b7 + b8 = -r3*b37; branches re-solved with that sign
ns("NS-P7-1", ["b8", "b9", "b35"],
   [["b10", "0"], ["b6", "-2*b9"], ["b12", "-r3*b35"], ["b39", "r3/(6*b9)*(b8**2-2*b9**2)"],
    ["b37", "-r3/(3*b8)*(b8**2-2*b9**2)"], ["b19", "b35*(4*b9**2-b8**2)/(2*b8*b9)"], ["b7", "-2*b9**2/b8"]],
   ["b8", "b9"], "pure-type corollary, branch 1 (at b10 = 0)", P7)
ns("NS-P7-2", ["b9", "b10", "b37"],
   [["b6", "-2*b9"], ["b19", "b37*(b10**2-4*b9**2)/(2*b9*b10)"], ["b39", "r3/(6*b9)*(2*b9**2-b10**2)"],
    ["b35", "-r3/(3*b10)*(2*b9**2-b10**2)"], ["b12", "2*b9**2/b10"], ["b7", "-r3*b37"]],
   ["b9", "b10"], "pure-type corollary, branch 2", P7)
# needs b10**2 = 2*b9**2 and b37**2 = 2*b19**2: only the abelian point is rational
ENTRIES.append({
    "id": "NS-P7-3", "kind": "unrepresentable", "group": "non-symmetric pair",
    "where": "pure-type corollary, branch 3",
    "params": ["b9", "b19"], "nonzero": [],
    "derived": [["b8", "0"], ["b35", "0"], ["b39", "0"], ["b6", "-2*b9"], ["b10", "r2*b9"], ["b12", "b10"],
                ["b37", "-r2*b19"], ["b7", "-r3*b37"]],
    "d": NS_D, "expected": {**NSX, **P7}, "fingerprint": NSF,
})
ns("NS-P7-4", ["b19", "b37"], [["b12", "0"], ["b35", "0"], ["b7", "-r3*b37"]], [],
   "pure-type corollary, branch 4 with b35 = 0", P7)
ns("NS-P7-4b", ["b19", "b35"], [["b12", "-r3*b35"], ["b37", "0"], ["b7", "0"]], [],
   "pure-type corollary, branch 4 with b37 = 0", P7)
ns("NS-P7-5", ["b19", "b39"], [], [], "pure-type corollary, branch 5", P7)

# -- explicit example -----------------------------------------------------------
entry("X-L27", ["-3/4*e15+3*r3/4*e23-r3/4*e45", "e25", "r3*e12-e24-e35", "-5*r3/4*e15-9/4*e23-5/4*e45", "0"],
      expected={"torsion": "r3/4*e123-r3*e145-3/4*e234", "dT": "-3/2*(e2345+r3*e1235)", "d_star_T": "0",
                "torsion_type": "Pure7", "base_ricci_trace": "0",
                "ricci_lc": [["-141/32", "0", "0", "-99/32*r3", "0"], ["0", "-27/8", "0", "0", "0"],
                             ["0", "0", "-27/8", "0", "0"], ["-99/32*r3", "0", "0", "-99/32*r3", "0"],
                             ["0", "0", "0", "0", "-15/2"]]},
      fingerprint={"l1_dim": 4, "solvable_step": 4},
      where="explicit pure-type example with non-closed torsion", group="example")

# -- hypo family ------------------------------------------------------------------
entry("HYPO", ["b7*e25-b37*e35-b45*e45", "-b7*e15+b45*e35-b37*e45", "b37*e15-b45*e25+q*e45",
               "b45*e15+b37*e25-q*e35", "b7*e12-b37*e24-b45*e14-b37*e13+b45*e23+q*e34"],
      ["b7", "b37", "b45"], ["b7"], derived=[["q", "(b37**2+b45**2)/b7"]],
      expected={"torsion": "-b7*e125+b37*e135+b45*e145-b45*e235+b37*e245-q*e345", "dT": "0",
                "d_star_T": "0", "hypo": True},
      where="hypo example family", group="hypo")
entry("HALFFLAT", NS_D, ["b7", "b37", "b45"], ["b7"],
      derived=[["b6", "0"], ["b8", "0"], ["b12", "0"], ["b35", "0"], ["b10", "-b45"], ["b9", "-b37"],
               ["b39", "-(b37**2+b45**2)/b7"], ["b19", "b45"]],
      expected={"gamma_zero": True, "halfflat": True},
      where="half-flat proposition: flatness plus the listed relations, with b39 = -(b37**2+b45**2)/b7", group="hypo")

# -- main theorem normal forms ------------------------------------------------------
entry("MAIN-l1", ["-e24", "e14", "0", "-e12", "0"], fingerprint=SO3R2,
      where="main theorem, first normal form (built from strong family 2 at a = 1)",
      kind="normal_form", group="main theorem")
entry("MAIN-l1-b", ["-e35", "e35", "e15-e25+e45", "-e35", "-e13+e23+e34"], fingerprint=SO3R2,
      where="main theorem, first normal form (built from strong family 4 at a = b = c = 1)",
      kind="normal_form", group="main theorem")
entry("MAIN-l2", ["2*e12", "e14", "e15-e23", "2*e24", "e25+e34"], fingerprint={"commutator_dim": 5},
      where="main theorem, second normal form", kind="normal_form", group="main theorem")
entry("MAIN-l3", ["-e24", "e14", "0", "-e12", "e35"],
      fingerprint={"commutator_dim": 4, "center_dim": 0, "killing_signature_l1": [0, 3, 1]},
      where="main theorem, third normal form", kind="normal_form", group="main theorem")

OUT.parent.mkdir(parents=True, exist_ok=True)
OUT.write_text(json.dumps({"entries": ENTRIES}, indent=1) + "\n")
print(f"wrote {len(ENTRIES)} entries to {OUT}")
