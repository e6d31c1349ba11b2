"""The acceptance battery behind ``hopfgrade suite``.

Every check returns ``{"name", "status", "details", "witness"}``; a failing
check always carries a witness.  Checks are independent and may run
concurrently; the assembled report is sorted by name.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from math import comb

from .algebra import (
    BaseField,
    group_algebra,
    matrix_algebra,
    truncated_polynomial_algebra,
)
from .catalog import (
    COCYCLE_EXAMPLES,
    GRADING_CATALOG,
    example_cocycle,
    example_symmetric_set,
    shapiro_cases,
)
from .cohomology import FinAb, shapiro_embedding
from .galois_pi import (
    binary_tetrahedral_action,
    canonical_map_check,
    d_star_algebra,
    isotypic_multiplicities,
    pi_bound_check,
    subalgebra_monotonicity_harness,
    torus_action,
)
from .grading import (
    _qab,
    build_quaternion_example,
    default_alpha,
    default_beta,
    nonsplit_search,
    quaternion_identities,
    verify_grading,
)
from .groups import (
    Subgroup,
    all_subgroups,
    builtin_group,
    character_degrees,
    min_abelian_index,
)
from .hopf_twist import (
    HopfData,
    coproduct_properties,
    module_algebra_check,
    perturbed_twist,
    swap_legs,
    verify_twist,
)
from .yang_baxter import (
    SizeMismatch,
    hilbert_coeffs,
    quadratic_algebra,
    search_bijective_cocycles,
)


def _result(name, failures, details):
    return {"name": name, "status": "fail" if failures else "pass", "details": details,
            "witness": failures[0] if failures else None}


def oracle_min_abelian_index(G) -> int:
    """Least index over all subgroups that are normal and abelian (brute force)."""
    best = None
    for members in all_subgroups(G):
        H = Subgroup(G, members)
        if H.is_normal and H.is_abelian:
            best = H.index if best is None else min(best, H.index)
    return best


def check_grading_criterion(quick=False, seed=0):
    failures, values = [], {}
    expected = {"Q8": 2, "S4": 6, "A4": 3}
    for name in GRADING_CATALOG:
        G = builtin_group(name)
        v = min_abelian_index(G)
        values[name] = v
        if v != oracle_min_abelian_index(G):
            failures.append({"group": name, "computed": v, "oracle": oracle_min_abelian_index(G)})
        want = expected.get(name, 1 if G.is_abelian() else None)
        if want is not None and v != want:
            failures.append({"group": name, "computed": v, "expected": want})
    return _result("c1_min_abelian_index", failures, {"values": values})


def check_shapiro(quick=False, seed=0):
    failures, details = [], {}
    for name, G, A in shapiro_cases():
        emb = shapiro_embedding(G, A)
        bad = emb.hom.multiplicative_violation()
        details[name] = {"target_order": emb.target.order, "m": emb.m, "exponent": emb.exponent,
                         "injective": emb.hom.injective, "residual_zero": emb.residual_zero,
                         "products_checked": G.order ** 2}
        if bad is not None or not emb.hom.injective or not emb.residual_zero:
            failures.append({"case": name, "multiplicative_violation": repr(bad)})
    want = {"Q8/<i>": 32, "S3/A3": 18}
    for name, order in want.items():
        if details[name]["target_order"] != order:
            failures.append({"case": name, "target_order": details[name]["target_order"], "expected": order})
    return _result("c2_shapiro_embedding", failures, details)


def nonsplit_controls():
    """Equations that do have solutions: alpha a square, and beta a square."""
    a2 = _qab({(2, 0): 1})
    b2 = _qab({(0, 2): 1})
    return {"alpha=a^2": (a2, default_beta()), "beta=b^2": (default_alpha(), b2)}


def check_quaternion(quick=False, seed=0):
    failures = []
    GA = build_quaternion_example()
    assoc = GA.algebra.associativity_violation()
    if assoc is not None:
        failures.append({"associativity": list(assoc)})
    cert = verify_grading(GA, 4)
    if not cert.ok:
        failures.append({"grading": cert.witness})
    ids = quaternion_identities(GA.algebra)
    for k, ok in ids.items():
        if not ok:
            failures.append({"identity": k})
    res = nonsplit_search(6)
    if res.status != "no_solution":
        failures.append({"nonsplit": res.status})
    controls = {}
    for k, (al, be) in nonsplit_controls().items():
        r = nonsplit_search(6, al, be)
        controls[k] = r.to_json()["witness"]
        if not r.found:
            failures.append({"control": k, "status": r.status})
    details = {"triples": GA.algebra.dim ** 3, "graded_pairs": len(cert.pairs),
               "identities": ids, "nonsplit_status": res.status, "descent_rounds": len(res.steps),
               "controls": controls}
    return _result("c3_quaternion_example", failures, details)


def check_galois(quick=False, seed=0):
    failures, details = [], {}
    for n in (2, 3):
        act = torus_action(n)
        rep = canonical_map_check(act, seed=seed)
        iso = isotypic_multiplicities(act)
        details[f"torus{n}"] = {"canonical_map": rep.to_json(), "multiplicities": iso["multiplicities"]}
        if not (rep.bijective and rep.dim_over_fixed == rep.group_order == n * n):
            failures.append({"torus": n, "report": rep.to_json()})
        if any(m != 1 for m in iso["multiplicities"]):
            failures.append({"torus": n, "multiplicities": iso["multiplicities"]})
    iso = isotypic_multiplicities(torus_action(2, "x"))
    details["torus2_x_only"] = iso
    if any(m != 1 for m in iso["multiplicities"]):
        failures.append({"torus2_x_only": iso["multiplicities"]})
    rep = canonical_map_check(binary_tetrahedral_action(), seed=seed)
    details["binary_tetrahedral"] = rep.to_json()
    if rep.bijective or rep.dim_over_fixed != 4 or rep.group_order != 24:
        failures.append({"binary_tetrahedral": rep.to_json()})
    return _result("c4_galois_canonical_map", failures, details)


def check_dstar(quick=False, seed=0):
    failures = []
    S3 = builtin_group("S3")
    values = {
        "Mat3": d_star_algebra(matrix_algebra(3), seed=seed),
        "QQ[t]/(t^2)": d_star_algebra(truncated_polynomial_algebra(2), seed=seed),
        "QQ(zeta3)S3": d_star_algebra(group_algebra(S3, BaseField(3)), seed=seed),
    }
    want = {"Mat3": 3, "QQ[t]/(t^2)": 1, "QQ(zeta3)S3": max(character_degrees(S3))}
    for k, v in want.items():
        if values[k] != v:
            failures.append({"algebra": k, "computed": repr(values[k]), "expected": v})
    trials = 40 if quick else 200
    rep = subalgebra_monotonicity_harness(trials, seed)
    if not rep.ok:
        failures.append({"harness": rep.violations[0]})
    return _result("c5_dstar", failures, {"values": values, "harness_trials": trials,
                                          "harness_violations": len(rep.violations)})


def check_ybe(quick=False, seed=0):
    failures, details = [], {}
    for key in ("Z4/Z2xZ2", "S3/Z6"):
        group, factors = COCYCLE_EXAMPLES[key]
        found = search_bijective_cocycles(builtin_group(group), FinAb(factors))
        details[f"cocycles {key}"] = len(found)
        if not found:
            failures.append({"search": key})
    mism = search_bijective_cocycles(builtin_group("Z2"), FinAb((3,)))
    details["mismatch"] = mism.error
    if mism or mism.error != SizeMismatch.__name__:
        failures.append({"mismatch": details["mismatch"]})
    plan = {"S3/Z6": 3, "Z4/Z2xZ2": 4, "Z4/Z4": 4, "Z2": 4, "Z4/Z2xZ2-full": 2 if quick else 3}
    for key, N in plan.items():
        X = example_symmetric_set(key)
        if not all(X.flags.values()):
            failures.append({"symmetric_set": key, "flags": X.flags})
        h = hilbert_coeffs(quadratic_algebra(X), N)
        want = [comb(X.size + n - 1, n) for n in range(N + 1)]
        details[f"hilbert {key}"] = h
        if h != want:
            failures.append({"hilbert": key, "computed": h, "expected": want})
    return _result("c6_yang_baxter", failures, details)


def check_twists(quick=False, seed=0):
    failures, details = [], {}
    for key in ("trivial", "Z2", "Z4/Z2xZ2", "S3/Z6"):
        H = HopfData(example_cocycle(key))
        rep = verify_twist(H)
        details[f"twist {key}"] = {"ok": rep.ok, "residual_terms": rep.residual_terms, "gamma_order": H.n}
        if not rep.ok:
            failures.append({"twist": key, "witness": rep.witness})
    H = HopfData(example_cocycle("S3/Z6"))
    ctrl = verify_twist(H, perturbed_twist(H))
    details["perturbed control"] = ctrl.to_json()
    if ctrl.twist_equation:
        failures.append({"control": "perturbed twist passed the twist equation"})
    # informational: the undeformed coproduct is cocommutative, so the leg flip of a twist is a twist
    swapped = verify_twist(H, swap_legs(H.J))
    details["leg-swap"] = {"twist_equation": swapped.twist_equation, "ok": swapped.ok}
    props = coproduct_properties(H)
    details["S3 coproduct"] = props.to_json()
    if not props.coassociative or props.cocommutative:
        failures.append({"coproduct": props.to_json()})
    H4 = HopfData(example_cocycle("Z4/Z2xZ2"))
    X = example_symmetric_set("Z4/Z2xZ2")
    ma = module_algebra_check(H4, X, N=3)
    neg = module_algebra_check(H4, X, N=3, product="commutative")
    details["module algebra"] = ma.to_json()
    details["module algebra control"] = neg.to_json()
    if not ma.ok or neg.ok:
        failures.append({"module_algebra": ma.to_json(), "control": neg.to_json()})
    return _result("c7_twists", failures, details)


def check_pi_bound(quick=False, seed=0):
    failures, details = [], {}
    for key in ("Z4/Z2xZ2", "S3/Z6"):
        rep = pi_bound_check(example_cocycle(key), seed=seed)
        details[key] = rep.to_json()
        if not rep.ok:
            failures.append({"cocycle": key, "report": rep.to_json()})
    return _result("c8_pi_bound", failures, details)


CHECKS = {
    "c1_min_abelian_index": check_grading_criterion,
    "c2_shapiro_embedding": check_shapiro,
    "c3_quaternion_example": check_quaternion,
    "c4_galois_canonical_map": check_galois,
    "c5_dstar": check_dstar,
    "c6_yang_baxter": check_ybe,
    "c7_twists": check_twists,
    "c8_pi_bound": check_pi_bound,
}


def run_suite(quick: bool = False, seed: int = 0, jobs: int = 1, timing: bool = False, only=None) -> dict:
    names = sorted(only or CHECKS)

    def one(name):
        t0 = time.perf_counter()
        try:
            out = CHECKS[name](quick=quick, seed=seed)
        except Exception as exc:  # a crash is a failing check with the error as witness
            out = {"name": name, "status": "fail", "details": {}, "witness": {"error": repr(exc)}}
        if timing:
            out["timing_ms"] = round((time.perf_counter() - t0) * 1000)
        return out

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            checks = list(pool.map(one, names))
    else:
        checks = [one(n) for n in names]
    checks.sort(key=lambda c: c["name"])
    return {"command": "suite", "inputs": {"quick": quick, "seed": seed}, "checks": checks}
