"""Command-line front end.

Every command prints one JSON report on stdout and a short summary on
stderr.  Exit status: 0 when all checks pass, 1 when a check fails, 2 on a
usage or input-parsing error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .algebra import FinDimAlgebra
from .cohomology import FinAb, shapiro_embedding
from .exact.cyclotomic import Cyclotomic
from .galois_pi import (
    Bounds,
    binary_tetrahedral_action,
    canonical_map_check,
    d_star_algebra,
    fixed_subalgebra,
    fixed_subalgebra_is_subalgebra,
    isotypic_multiplicities,
    pi_bound_check,
    torus_action,
)
from .grading import (
    build_quaternion_example,
    nonsplit_search,
    quantum_torus,
    quaternion_identities,
    torus_grading,
    verify_grading,
)
from .groups import (
    Subgroup,
    builtin_group,
    can_grade,
    min_abelian_index,
    normal_abelian_subgroups,
    parse_catalog,
    parse_cycles,
)
from .hopf_twist import (
    HopfData,
    coproduct_properties,
    perturbed_twist,
    swap_legs,
    verify_twist,
)
from .suite import nonsplit_controls, run_suite
from .yang_baxter import (
    BijCocycle,
    build_symmetric_set,
    certify,
    faithfulness_check,
    hilbert_coeffs,
    polynomial_dims,
    quadratic_algebra,
    search_bijective_cocycles,
)


class InputError(ValueError):
    """Bad input file or argument value; reported with exit status 2."""


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, Cyclotomic):
        return repr(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, Bounds):
        return {"lower": x.lower, "upper": x.upper}
    if hasattr(x, "to_json"):
        return x.to_json()
    return repr(x)


def dumps(report: dict) -> str:
    """Canonical serialization: sorted keys, so parse-and-reserialize is idempotent."""
    return json.dumps(report, sort_keys=True, indent=2, default=_jsonable)


def check(name: str, ok: bool, witness=None) -> dict:
    out = {"name": name, "status": "pass" if ok else "fail"}
    if not ok:
        out["witness"] = witness if witness is not None else "check failed"
    return out


# -- input helpers --------------------------------------------------------------------

def _group(args, name: str):
    if args.catalog:
        try:
            with open(args.catalog) as fh:
                groups = parse_catalog(fh.read())
        except (OSError, KeyError, ValueError) as exc:
            raise InputError(f"cannot read catalog {args.catalog}: {exc}") from exc
        if name in groups:
            return groups[name]
    try:
        return builtin_group(name)
    except KeyError as exc:
        raise InputError(str(exc)) from exc


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _cocycle(args) -> BijCocycle:
    data = _load_json(args.cocycle)
    if isinstance(data, dict) and "cocycles" in data:
        try:
            data = data["cocycles"][args.index]
        except IndexError as exc:
            raise InputError(f"no cocycle at index {args.index}") from exc
    try:
        return BijCocycle.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid cocycle file: {exc}") from exc


def _phi(text: str | None, c: BijCocycle):
    """'1;5' or '1,0;0,1' -> list of A-elements; None means S = A."""
    if text is None:
        return c.A.elements()
    out = []
    for item in text.split(";"):
        try:
            vals = tuple(int(v) for v in item.split(","))
        except ValueError as exc:
            raise InputError(f"bad phi entry {item!r}") from exc
        if len(vals) != c.A.rank:
            raise InputError(f"phi entry {item!r} needs {c.A.rank} coordinates")
        out.append(c.A.norm(vals))
    return out


def _symmetric_set(args):
    c = _cocycle(args)
    phi = _phi(args.phi, c)
    return c, build_symmetric_set(c, range(len(phi)), dict(enumerate(phi)))


# -- commands -------------------------------------------------------------------------

def cmd_grade_check(args):
    G = _group(args, args.group)
    ok = can_grade(G, args.degree)
    indices = sorted({H.index for H in normal_abelian_subgroups(G)})
    result = {"can_grade": ok, "group_order": G.order, "degree": args.degree,
              "normal_abelian_indices": indices}
    return [check("can_grade", ok, {"normal_abelian_indices": indices})], result


def cmd_min_degree(args):
    G = _group(args, args.group)
    return [check("computed", True)], {"min_degree": min_abelian_index(G), "group_order": G.order}


def cmd_embed(args):
    G = _group(args, args.group)
    if args.subgroup:
        try:
            gens = [parse_cycles(g, G.degree) for g in args.subgroup.split("|")]
        except (ValueError, IndexError) as exc:
            raise InputError(f"bad subgroup generators: {exc}") from exc
        A = Subgroup(G, G.closure(gens))
    else:
        subs = normal_abelian_subgroups(G)
        A = min(subs, key=lambda H: (H.index, sorted(H.members)))
    emb = shapiro_embedding(G, A)
    bad = emb.hom.multiplicative_violation()
    checks = [
        check("multiplicative", bad is None, repr(bad)),
        check("injective", emb.hom.injective, {"kernel_size": len(emb.hom.kernel())}),
        check("coboundary_residual_zero", emb.residual_zero),
    ]
    result = {"group_order": G.order, "subgroup_order": len(A.members), "quotient_order": emb.extension.H.order,
              "exponent": emb.exponent, "m": emb.m, "target_order": emb.target.order,
              "products_checked": G.order ** 2}
    return checks, result


def cmd_ybe(args):
    if args.ybe_cmd == "search":
        G = _group(args, args.group)
        try:
            factors = [int(x) for x in args.abelian.split(",") if x.strip()]
        except ValueError as exc:
            raise InputError(f"bad invariant factors {args.abelian!r}") from exc
        found = search_bijective_cocycles(G, FinAb(factors))
        payload = {"cocycles": [c.to_json() for c in found]}
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(dumps(payload))
        checks = [check("found", bool(found), {"error": found.error} if found.error else "no cocycle")]
        return checks, {"count": len(found), "error": found.error, **payload}
    c, X = _symmetric_set(args)
    if args.ybe_cmd == "certify":
        rep = certify(X)
        faith = faithfulness_check(X)
        checks = [check("ybe", rep.ybe, rep.witnesses["ybe"]),
                  check("involutive", rep.involutive, rep.witnesses["involutive"]),
                  check("nondegenerate", rep.nondegenerate, rep.witnesses["nondegenerate"]),
                  check("faithful", faith.ok, faith.to_json())]
        R = [[x, y, u, v] for (x, y), (u, v) in sorted(X.R.items())]
        return checks, {"size": X.size, "flags": X.flags, "faithfulness": faith.to_json(), "R": R,
                        "triples_checked": X.size ** 3}
    # hilbert
    certify(X)
    B = quadratic_algebra(X, orientation=args.orientation)
    h = hilbert_coeffs(B, args.maxdeg)
    poly = polynomial_dims(X.size, args.maxdeg)
    return [check("polynomial_growth", h == poly, {"computed": h, "expected": poly})], {
        "size": X.size, "relations": len(B.relations), "orientation": args.orientation,
        "hilbert": h, "polynomial": poly}


def cmd_twist(args):
    c = _cocycle(args)
    H = HopfData(c)
    if args.twist_cmd == "build":
        terms = [{"left": repr(H.elements[a]), "right": repr(H.elements[b]), "coeff": repr(v)}
                 for (a, b), v in sorted(H.J.items())]
        rep = verify_twist(H)
        return [check("twist", rep.ok, rep.witness)], {"gamma_order": H.n, "terms": terms}
    J = H.J
    if args.control == "perturbed":
        J = perturbed_twist(H)
    elif args.control == "leg-swap":
        J = swap_legs(H.J)
    rep = verify_twist(H, J)
    checks = [check("invertible", rep.invertible, rep.witness.get("invertible")),
              check("twist_equation", rep.twist_equation, rep.witness.get("twist_equation")),
              check("counit", rep.counit, rep.witness.get("counit"))]
    result = {"gamma_order": H.n, "control": args.control, "twist": rep.to_json()}
    if args.control == "none":
        props = coproduct_properties(H)
        checks.append(check("coassociative", props.coassociative, props.coassociativity_witness))
        result["coproduct"] = props.to_json()
    return checks, result


def cmd_example(args):
    GA = build_quaternion_example()
    assoc = GA.algebra.associativity_violation()
    cert = verify_grading(GA, args.bound)
    ids = quaternion_identities(GA.algebra)
    ns = nonsplit_search(args.bound)
    checks = [check("associativity", assoc is None, assoc),
              check("grading", cert.ok, cert.witness)]
    checks += [check(f"identity {k}", v) for k, v in sorted(ids.items())]
    checks.append(check("nonsplit", ns.status == "no_solution", ns.to_json()))
    controls = {}
    for k, (al, be) in nonsplit_controls().items():
        r = nonsplit_search(args.bound, al, be)
        controls[k] = r.to_json()
        checks.append(check(f"control {k} has a witness", r.found, r.to_json()))
    return checks, {"certificate": cert.to_json(), "nonsplit": ns.to_json(), "controls": controls}


def cmd_torus(args):
    n = args.n
    cert = verify_grading(torus_grading(n), args.bound)
    T = quantum_torus(n)
    zdim = T.center_dimension()
    checks = [check("grading", cert.ok, cert.witness), check("center_is_scalars", zdim == 1, {"center_dim": zdim})]
    return checks, {"n": n, "certificate": cert.to_json(), "center_dim": zdim}


def _galois_report(act, seed):
    fixed = fixed_subalgebra(act)
    rep = canonical_map_check(act, seed=seed)
    checks = [check("action", act.violation() is None, repr(act.violation())),
              check("fixed_subalgebra_closed", fixed_subalgebra_is_subalgebra(act, fixed))]
    result = {"canonical_map": rep.to_json(), "fixed_dim": len(fixed)}
    return checks, rep, result


def cmd_galois(args):
    if args.galois_cmd == "torus":
        act = torus_action(args.n)
        checks, rep, result = _galois_report(act, args.seed)
        iso = isotypic_multiplicities(act)
        checks.append(check("hopf_galois", rep.bijective and rep.dim_over_fixed == rep.group_order, rep.to_json()))
        checks.append(check("regular_representation", iso["regular"], iso))
        result["isotypic"] = iso
        return checks, result
    act = binary_tetrahedral_action()
    checks, rep, result = _galois_report(act, args.seed)
    # the expected outcome: dim over D^G is 4 < |G| = 24, so the map cannot be bijective
    checks.append(check("not_hopf_galois", not rep.bijective and rep.dim_over_fixed < rep.group_order,
                        rep.to_json()))
    return checks, result


def cmd_pidegree(args):
    rep = pi_bound_check(_cocycle(args), seed=args.seed)
    return [check("character_degrees_consistent", rep.consistent, rep.to_json()),
            check("bound", rep.max_degree <= rep.bound, rep.to_json())], rep.to_json()


def cmd_dstar(args):
    data = _load_json(args.algebra)
    try:
        alg = FinDimAlgebra.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid algebra file: {exc}") from exc
    assoc = alg.associativity_violation()
    d = d_star_algebra(alg, seed=args.seed)
    checks = [check("associative", assoc is None, assoc), check("unit", alg.unit_violation() is None)]
    return checks, {"dim": alg.dim, "d_star": d, "exact": not isinstance(d, Bounds)}


# -- parser and entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--catalog", help="group catalog file (name <label>; degree <n>; gens <cycles>)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--timing", action="store_true", help="include wall-clock milliseconds in the report")

    p = argparse.ArgumentParser(prog="hopfgrade", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("grade-check", parents=[common], help="can G faithfully grade a degree-d division algebra")
    s.add_argument("--group", required=True)
    s.add_argument("--degree", type=int, required=True)

    s = sub.add_parser("min-degree", parents=[common], help="least degree G can grade")
    s.add_argument("--group", required=True)

    s = sub.add_parser("embed", parents=[common], help="embed G into Fun(H, Z/n)^m x| H")
    s.add_argument("--group", required=True)
    s.add_argument("--subgroup", help="generators of a normal abelian subgroup, cycles separated by '|'")

    s = sub.add_parser("ybe", help="bijective 1-cocycles and the Yang-Baxter pipeline")
    ysub = s.add_subparsers(dest="ybe_cmd", required=True)
    y = ysub.add_parser("search", parents=[common])
    y.add_argument("--group", required=True)
    y.add_argument("--abelian", required=True, help="invariant factors, e.g. 2,2")
    y.add_argument("--out", help="write the cocycles to this file")
    for name in ("certify", "hilbert"):
        y = ysub.add_parser(name, parents=[common])
        y.add_argument("--cocycle", required=True)
        y.add_argument("--index", type=int, default=0, help="which cocycle of a search file")
        y.add_argument("--phi", help="values of phi on S, e.g. '1;5' or '1,0'; default S = A")
        if name == "hilbert":
            y.add_argument("--maxdeg", type=int, default=3)
            y.add_argument("--orientation", choices=["standard", "reversed"], default="standard")

    s = sub.add_parser("twist", help="build and verify the twist of a cocycle")
    tsub = s.add_subparsers(dest="twist_cmd", required=True)
    for name in ("build", "verify"):
        t = tsub.add_parser(name, parents=[common])
        t.add_argument("--cocycle", required=True)
        t.add_argument("--index", type=int, default=0)
        if name == "verify":
            t.add_argument("--control", choices=["none", "perturbed", "leg-swap"], default="none")

    s = sub.add_parser("example", help="worked examples")
    esub = s.add_subparsers(dest="example_cmd", required=True)
    e = esub.add_parser("quaternion", parents=[common])
    e.add_argument("--bound", type=int, default=4)

    s = sub.add_parser("torus", parents=[common], help="grading and center of the quantum torus")
    s.add_argument("n", type=int)
    s.add_argument("--bound", type=int, default=2)

    s = sub.add_parser("galois", help="canonical-map checks")
    gsub = s.add_subparsers(dest="galois_cmd", required=True)
    g = gsub.add_parser("torus", parents=[common])
    g.add_argument("--n", type=int, required=True)
    gsub.add_parser("quaternions-2T", parents=[common])

    s = sub.add_parser("pidegree", parents=[common], help="character degrees of Gamma against |G|^2")
    s.add_argument("--cocycle", required=True)
    s.add_argument("--index", type=int, default=0)

    s = sub.add_parser("dstar", parents=[common], help="largest irreducible dimension of an algebra")
    s.add_argument("--algebra", required=True)

    s = sub.add_parser("suite", parents=[common], help="run the acceptance battery")
    s.add_argument("--quick", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    return p


COMMANDS = {
    "grade-check": cmd_grade_check,
    "min-degree": cmd_min_degree,
    "embed": cmd_embed,
    "ybe": cmd_ybe,
    "twist": cmd_twist,
    "example": cmd_example,
    "torus": cmd_torus,
    "galois": cmd_galois,
    "pidegree": cmd_pidegree,
    "dstar": cmd_dstar,
}


def _inputs(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("timing",)}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    t0 = time.perf_counter()
    try:
        if args.command == "suite":
            report = run_suite(args.quick, args.seed, max(args.jobs, 1), args.timing)
        else:
            checks, result = COMMANDS[args.command](args)
            report = {"command": args.command, "inputs": _inputs(args), "checks": checks, "result": result}
    except InputError as exc:
        print(f"hopfgrade: error: {exc}", file=stderr)
        return 2
    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000)
    print(dumps(report), file=stdout)
    failed = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    print(f"{report['command']}: {len(report['checks'])} checks, {len(failed)} failed"
          + (f" ({', '.join(failed)})" if failed else ""), file=stderr)
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())
