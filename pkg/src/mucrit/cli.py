"""Command-line frontend: verification bundles, lemma-level checks, and the
search subcommands, with text/json/csv reports.

Exit codes: 0 all checks passed or search completed clean; 1 a verification
failed or an unexpected witness appeared (the counterexample is serialized in
the report); 2 usage or configuration errors.

JSON reports are versioned ("schema": "mucrit/1"), key-sorted, and carry no
timing or thread-count data, so a fixed configuration and seed produce
byte-identical output at any parallelism level.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .fp import FpSet, binom_mod, is_prime, roots_of_unity
from .hp import (
    criticality,
    factorization_check,
    fractional_transform,
    hp_coeffs,
    lemma9_check,
    power_sum_vanishing,
    relation_x,
    relation_y,
    vandermonde_solve,
)
from .poly import FpPoly, from_roots
from .residues import (
    FORM_NAMES,
    RationalForm,
    lemma_form_identity,
    sum_residues_check,
)
from .search import (
    SearchBudgetExceeded,
    SearchResult,
    diffset_search,
    levson_scan,
    problem1_scan,
    problem2_scan,
    sumset_search,
    threefold_check,
)
from .stepanov import (
    alpha11_obstruction,
    gamma_cross_check,
    identity_catalog_run_all,
    lemma5_lemma6_numeric,
    lemma13_symbolic,
    rat2_check,
    rat3_check,
)
from .symm import complete_homogeneous, minimal_indices, power_sums_int

SCHEMA = "mucrit/1"

F41_SET = (0, 1, 9, 32, 40)


@dataclass
class RunConfig:
    command: str
    params: Dict[str, object]
    threads: int = 1
    seed: int = 0
    fmt: str = "text"
    out: Optional[str] = None


# ---------------------------------------------------------------------------
# report helpers

def _fe(v: int, p: int) -> Dict[str, str]:
    return {"value": str(v % p), "mod": str(p)}


def _set(S) -> Dict[str, object]:
    return {"mod": str(S.p), "elems": [str(v) for v in S.elems]}


def _search_report(res: SearchResult) -> Dict[str, object]:
    return {
        "kind": res.kind,
        "p": res.p,
        "d": res.d,
        "witnesses": [[list(part) if isinstance(part, tuple) else part for part in w] for w in res.witnesses],
        "counts": dict(res.counts),
        "verdicts": list(res.verdicts),
        "violations": list(res.violations),
    }


# ---------------------------------------------------------------------------
# verification bundles

def run_verify_f41() -> Tuple[bool, Dict[str, object]]:
    p, d = 41, 20
    A = FpSet(p, F41_SET)
    rep = criticality(A, -A, d)
    fact = factorization_check(A, -A, d)
    c_expected = binom_mod(24, 20, p)
    ps = power_sums_int(A, 5)
    rat_ok = all(rat2_check(A, a) and rat3_check(A, a) for a in A)
    prod_ok = all(
        _problem2_product(A, a) == p - 1 for a in A
    )
    diffs = A.diffset(A)
    mu = roots_of_unity(p, d)
    strict = diffs.mask & ~(mu.mask | 1) == 0 and diffs.mask != (mu.mask | 1)
    n, m = minimal_indices(A)
    l56 = lemma5_lemma6_numeric(A, d)
    checks = {
        "critical_with_overlap_5": rep.critical and rep.overlap == 5,
        "size_identity_5x5_eq_20_plus_5": len(A) * len(A) == d + rep.overlap,
        "factorization_exact": fact.ok,
        "leading_constant_is_binom_24_20": fact.C == c_expected,
        "power_sums_1_2_3_vanish": ps[1] == ps[2] == ps[3] == 0,
        "rat2_rat3_everywhere": rat_ok,
        "product_condition_everywhere": prod_ok,
        "difference_set_strictly_inside": strict,
        "minimal_index_n_4_m_absent": n == 4 and m is None,
        "recentered_vanishing": bool(l56.recentered_vanishing_ok),
    }
    report = {
        "set": _set(A),
        "d": d,
        "C": _fe(fact.C.v, p),
        "checks": checks,
    }
    return all(checks.values()), report


def _problem2_product(A: FpSet, a: int) -> int:
    p = A.p
    alpha = len(A)
    prod = 1
    for x in A:
        if x != a:
            prod = prod * pow((a - x) % p, alpha, p) % p
    return prod


def run_verify_identities() -> Tuple[bool, Dict[str, object]]:
    catalog = identity_catalog_run_all()
    l13 = lemma13_symbolic()
    a11 = alpha11_obstruction()
    checks = dict(catalog)
    checks.update(
        {
            "lemma13_display1": l13.display1_ok,
            "lemma13_display2": l13.display2_ok,
            "lemma13_final_congruence_poly": l13.final_ok,
            "lemma13_alpha7_collapse": l13.alpha7_collapse_ok,
            "alpha11_reduction_chain": (
                a11.fpp_square_identity_ok
                and a11.fpf3_identity_ok
                and a11.final_reduction_ok
            ),
            "gamma_cross_check_p19": gamma_cross_check(19, 3, 3, 9),
        }
    )
    report = {
        "checks": checks,
        "xi5_value": f"{a11.xi5_value.numerator}/{a11.xi5_value.denominator}",
    }
    return all(checks.values()), report


def _random_subset(rng: random.Random, p: int, size: int, avoid=()) -> FpSet:
    pool = [x for x in range(p) if x not in avoid]
    return FpSet(p, rng.sample(pool, size))


def _random_split_form(rng: random.Random, p: int) -> RationalForm:
    n_roots = rng.randint(1, 4)
    roots = rng.sample(range(p), n_roots)
    den = FpPoly.one(p)
    for r in roots:
        mult = rng.randint(1, 2)
        den = den * from_roots(FpSet(p, [r]), mult)
    num = FpPoly(p, [rng.randrange(p) for _ in range(rng.randint(1, den.degree + 2))])
    if num.is_zero():
        num = FpPoly.one(p)
    return RationalForm(num, den)


def run_verify_residues(
    seed: int, primes: List[int], instances: int, form_instances: int
) -> Tuple[bool, Dict[str, object]]:
    rng = random.Random(seed)
    failures: List[str] = []
    checked = 0
    for p in primes:
        for _ in range(instances):
            form = _random_split_form(rng, p)
            res = sum_residues_check(form)
            checked += 1
            if res.status != "zero":
                failures.append(f"total residue {res.status} for {form!r}")
    form_checked = 0
    for p in primes:
        for which in FORM_NAMES:
            for _ in range(form_instances):
                k = rng.randint(0, 6)
                B = _random_subset(rng, p, rng.randint(2, 6))
                A = None
                if which in ("omega11", "psi", "omega21"):
                    avoid = {(-b) % p for b in B}
                    A = _random_subset(rng, p, rng.randint(2, 6), avoid=avoid)
                rep = lemma_form_identity(which, A, B, k, mode="general")
                form_checked += 1
                if not rep.ok:
                    failures.append(
                        f"{which} general identity failed at p={p}, k={k}, "
                        f"A={None if A is None else A.elems}, B={B.elems}"
                    )
    report = {
        "random_forms_checked": checked,
        "named_form_instances": form_checked,
        "failures": failures,
    }
    return not failures, report


# ---------------------------------------------------------------------------
# lemma-level checks

def _pair_f13() -> Tuple[FpSet, FpSet]:
    # the canonical recentered decomposition of mu_4 over F_13
    return FpSet(13, (3, 10)), FpSet(13, (2, 11))


def _vanishing_power_sum_set(p: int, k: int, c: int, with_zero: bool) -> FpSet:
    """c * mu_k (optionally with 0 adjoined): p_l = 0 for 0 < l < k."""
    mu = roots_of_unity(p, k)
    vals = [c * u % p for u in mu]
    if with_zero:
        vals.append(0)
    return FpSet(p, vals)


def _check_lemma1(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    p = 97
    ok = True
    for _ in range(25):
        A = _random_subset(rng, p, rng.randint(2, 7))
        cs = hp_coeffs(A)
        alpha = len(A)
        moments = all(
            cs.moment(m) == (1 if m == alpha - 1 else 0) for m in range(alpha)
        )
        vander = vandermonde_solve(A)
        explicit_eq = all(cs.c[a] == vander[a] for a in A)
        t = rng.randrange(p)
        shifted = hp_coeffs(A.translate(t))
        shift_ok = all(shifted.c[(a + t) % p] == cs.c[a] for a in A)
        ok = ok and moments and explicit_eq and shift_ok
    return ok, {"sets": 25, "p": p}


def _check_lemma2(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    p = 97
    ok = True
    for _ in range(25):
        A = _random_subset(rng, p, rng.randint(2, 6))
        cs = hp_coeffs(A)
        alpha = len(A)
        for m in range(0, 6):
            lhs = sum(cs.c[a].v * pow(a, m + alpha - 1, p) for a in A) % p
            if lhs != complete_homogeneous(A, m).v:
                ok = False
    return ok, {"sets": 25, "p": p}


def _check_lemma3(rng) -> Tuple[bool, Dict[str, object]]:
    ok1 = power_sum_vanishing(FpSet(13, (0, 1, 10)), -FpSet(13, (0, 1, 10)), 6)
    A, B = _pair_f13()
    ok2 = power_sum_vanishing(A, B, 4)
    return ok1 and ok2, {"cases": ["F13 difference set", "F13 mu_4 pair"]}


def _check_lemma4(rng) -> Tuple[bool, Dict[str, object]]:
    A41 = FpSet(41, F41_SET)
    ok1 = factorization_check(A41, -A41, 20).ok
    A13 = FpSet(13, (0, 1, 10))
    ok2 = factorization_check(A13, -A13, 6).ok
    A, B = _pair_f13()
    ok3 = factorization_check(A, B, 4).ok
    return ok1 and ok2 and ok3, {"cases": 3}


def _check_lemma5(rng) -> Tuple[bool, Dict[str, object]]:
    rep = lemma5_lemma6_numeric(FpSet(41, F41_SET), 20)
    exempt = lemma5_lemma6_numeric(FpSet(13, (0, 1, 10)), 6)
    ok = bool(rep.recentered_vanishing_ok) and exempt.exempt
    return ok, {"f41_recentered_ok": rep.recentered_vanishing_ok, "f13_exempt": exempt.exempt}


def _check_lemma6(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    ok = True
    for t in (7, 15, 33):
        rep = lemma5_lemma6_numeric(FpSet(41, F41_SET).translate(t), 20)
        ok = ok and bool(rep.p2_identity_ok) and bool(rep.p3_identity_ok)
    return ok, {"shifts": [7, 15, 33]}


def _check_lemma7(rng) -> Tuple[bool, Dict[str, object]]:
    A = FpSet(41, F41_SET)
    ok = True
    for a in A:
        out = fractional_transform(A, a)
        ok = ok and len(out) == len(A)
    return ok, {"transforms": len(A)}


def _check_lemma8(rng) -> Tuple[bool, Dict[str, object]]:
    A, B = _pair_f13()
    p = A.p
    nA, _ = minimal_indices(A)
    nB, _ = minimal_indices(B)
    pa = power_sums_int(A, nA)[nA]
    pb = power_sums_int(B, nB)[nB]
    ok = nA == nB and (len(A) * pb + len(B) * pa) % p == 0
    return ok, {"n": nA}


def _check_lemma9(rng) -> Tuple[bool, Dict[str, object]]:
    A, B = _pair_f13()
    reports = [lemma9_check(A, B, b) for b in B]
    ok = all(
        r.identity_ok and r.coeff_relation_ok and r.c0_product_ok for r in reports
    )
    return ok, {"signs": [r.sign for r in reports]}


def _check_lemma10(rng) -> Tuple[bool, Dict[str, object]]:
    A, B = _pair_f13()
    ok = True
    for b in B:
        ok = ok and relation_x(A, B, b)[2] and relation_y(A, B, b)[2]
    for a in A:
        ok = ok and relation_x(B, A, a)[2] and relation_y(B, A, a)[2]
    return ok, {"pair": [list(A.elems), list(B.elems)]}


def _check_lemma11(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    ok = True
    for p in (41, 97):
        for _ in range(50):
            res = sum_residues_check(_random_split_form(rng, p))
            ok = ok and res.status == "zero"
    return ok, {"instances": 100}


def _check_lemma12(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    p = 97
    ok = True
    for _ in range(10):
        k = rng.randint(0, 5)
        B = _random_subset(rng, p, rng.randint(2, 6))
        ok = ok and lemma_form_identity("omega20", None, B, k, "general").ok
        avoid = {(-b) % p for b in B}
        A = _random_subset(rng, p, rng.randint(2, 6), avoid=avoid)
        ok = ok and lemma_form_identity("omega11", A, B, k, "general").ok
    # specialized instances on vanishing-power-sum sets
    for k, with_zero in ((2, True), (3, False), (4, True)):
        B = _vanishing_power_sum_set(p, k, 5, with_zero)
        rep = lemma_form_identity("omega20", None, B, k, "specialized")
        ok = ok and rep.ok
    A = _vanishing_power_sum_set(p, 2, 3, False)
    B = _vanishing_power_sum_set(p, 2, 5, False)
    if not set((-a) % p for a in A) & set(B.elems):
        ok = ok and lemma_form_identity("omega11", A, B, 2, "specialized").ok
    return ok, {"p": p}


def _check_lemma13(rng) -> Tuple[bool, Dict[str, object]]:
    rep = lemma13_symbolic()
    return rep.ok, {
        "display1": rep.display1_ok,
        "display2": rep.display2_ok,
        "final": rep.final_ok,
        "alpha7": rep.alpha7_collapse_ok,
    }


def _check_lemma14(rng: random.Random) -> Tuple[bool, Dict[str, object]]:
    p = 97
    ok = True
    for k, c in ((2, 5), (4, 7)):
        B = _vanishing_power_sum_set(p, k, c, False)
        ok = ok and lemma_form_identity("omega30", None, B, k, "specialized").ok
    for _ in range(10):
        B = _random_subset(rng, p, rng.randint(2, 6))
        ok = ok and lemma_form_identity("omega30", None, B, rng.randint(0, 5), "general").ok
    return ok, {"p": p}


def _check_lemma15(rng) -> Tuple[bool, Dict[str, object]]:
    A, B = _pair_f13()
    rep = lemma_form_identity("psi", A, B, 2, "specialized")
    return rep.ok, {"failures": list(rep.hypothesis_failures)}


def _check_lemma16(rng) -> Tuple[bool, Dict[str, object]]:
    A, B = _pair_f13()
    rep = lemma_form_identity("omega21", A, B, 2, "specialized")
    return rep.ok, {"failures": list(rep.hypothesis_failures)}


def _check_lemma17(rng) -> Tuple[bool, Dict[str, object]]:
    cat = identity_catalog_run_all()
    keys = ("lemma17_two_congruence_difference", "lemma17_nm_sum_formula")
    return all(cat[k] for k in keys), {k: cat[k] for k in keys}


LEMMA_CHECKS = {
    1: _check_lemma1,
    2: _check_lemma2,
    3: _check_lemma3,
    4: _check_lemma4,
    5: _check_lemma5,
    6: _check_lemma6,
    7: _check_lemma7,
    8: _check_lemma8,
    9: _check_lemma9,
    10: _check_lemma10,
    11: _check_lemma11,
    12: _check_lemma12,
    13: _check_lemma13,
    14: _check_lemma14,
    15: _check_lemma15,
    16: _check_lemma16,
    17: _check_lemma17,
}


# ---------------------------------------------------------------------------
# formatting and dispatch

def _emit(cfg: RunConfig, ok: bool, report: Dict[str, object]) -> None:
    doc = {
        "schema": SCHEMA,
        "command": cfg.command,
        "params": cfg.params,
        "seed": cfg.seed,
        "ok": ok,
        "report": report,
    }
    if cfg.fmt == "json":
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    elif cfg.fmt == "csv":
        rows = ["key,value"]
        for key, val in sorted(_flatten(doc).items()):
            sval = json.dumps(val) if not isinstance(val, str) else val
            sval = sval.replace('"', '""')
            rows.append(f'{key},"{sval}"')
        text = "\n".join(rows) + "\n"
    else:
        lines = [f"[{cfg.command}] {'PASS' if ok else 'FAIL'}"]
        for key, val in sorted(_flatten(report).items()):
            lines.append(f"  {key} = {val}")
        text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten(obj, prefix: str = "") -> Dict[str, object]:
    out: Dict[str, object] = {}
    if isinstance(obj, dict):
        for k, v in obj.items():
            out.update(_flatten(v, f"{prefix}{k}." if prefix else f"{k}."))
    elif isinstance(obj, (list, tuple)):
        out[prefix.rstrip(".")] = json.dumps(obj)
    else:
        out[prefix.rstrip(".")] = obj
    return out


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--out", default=None, help="write the report to a file")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(
        prog="mucrit",
        description="verification bundles and exhaustive searches for "
        "multiplicative-subgroup additive structure",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-f41", parents=[common])
    sub.add_parser("verify-identities", parents=[common])
    vr = sub.add_parser("verify-residues", parents=[common])
    vr.add_argument("--primes", default="41,97,10007")
    vr.add_argument("--instances", type=int, default=1000)
    vr.add_argument("--form-instances", type=int, default=100)

    se = sub.add_parser("search")
    ssub = se.add_subparsers(dest="kind", required=True)
    for kind in ("diffset", "sumset", "threefold"):
        sp = ssub.add_parser(kind, parents=[common])
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--d", type=int, required=True)
        if kind in ("sumset", "threefold"):
            sp.add_argument("--max-p", type=int, default=128)
        if kind == "sumset":
            sp.add_argument("--node-budget", type=int, default=50_000_000)
    lv = ssub.add_parser("levson", parents=[common])
    lv.add_argument("--alpha-max", type=int, default=3000)
    p1 = ssub.add_parser("problem1", parents=[common])
    p1.add_argument("--p", type=int, required=True)
    p1.add_argument("--alpha-max", type=int, default=5)
    p1.add_argument("--max-p", type=int, default=64)
    p2 = ssub.add_parser("problem2", parents=[common])
    p2.add_argument("--p", type=int, required=True)
    p2.add_argument("--d", type=int, required=True)
    p2.add_argument("--max-p", type=int, default=64)

    ck = sub.add_parser("check", parents=[common])
    ck.add_argument("target", help="lemma<N> for N in 1..17")
    return ap


def run(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _dispatch(ns)
    except (ValueError, ZeroDivisionError, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(ns: argparse.Namespace) -> int:
    if ns.command == "verify-f41":
        cfg = RunConfig("verify-f41", {}, ns.threads, ns.seed, ns.format, ns.out)
        ok, report = run_verify_f41()
        _emit(cfg, ok, report)
        return 0 if ok else 1
    if ns.command == "verify-identities":
        cfg = RunConfig("verify-identities", {}, ns.threads, ns.seed, ns.format, ns.out)
        ok, report = run_verify_identities()
        _emit(cfg, ok, report)
        return 0 if ok else 1
    if ns.command == "verify-residues":
        primes = [int(x) for x in ns.primes.split(",") if x]
        for p in primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        params = {
            "primes": primes,
            "instances": ns.instances,
            "form_instances": ns.form_instances,
        }
        cfg = RunConfig("verify-residues", params, ns.threads, ns.seed, ns.format, ns.out)
        ok, report = run_verify_residues(ns.seed, primes, ns.instances, ns.form_instances)
        _emit(cfg, ok, report)
        return 0 if ok else 1
    if ns.command == "search":
        return _dispatch_search(ns)
    if ns.command == "check":
        if not ns.target.startswith("lemma"):
            raise ValueError(f"unknown check target {ns.target!r}")
        try:
            num = int(ns.target[5:])
        except ValueError:
            raise ValueError(f"unknown check target {ns.target!r}")
        if num not in LEMMA_CHECKS:
            raise ValueError(f"no check registered for lemma {num}")
        rng = random.Random(ns.seed)
        ok, detail = LEMMA_CHECKS[num](rng)
        cfg = RunConfig(f"check-lemma{num}", {}, ns.threads, ns.seed, ns.format, ns.out)
        _emit(cfg, ok, detail)
        return 0 if ok else 1
    raise ValueError(f"unknown command {ns.command!r}")


def _dispatch_search(ns: argparse.Namespace) -> int:
    kind = ns.kind
    if kind == "diffset":
        res = diffset_search(ns.p, ns.d, threads=ns.threads)
        params = {"p": ns.p, "d": ns.d}
    elif kind == "sumset":
        res = sumset_search(
            ns.p, ns.d, threads=ns.threads, max_p=ns.max_p, node_budget=ns.node_budget
        )
        params = {"p": ns.p, "d": ns.d, "max_p": ns.max_p, "node_budget": ns.node_budget}
    elif kind == "threefold":
        res = threefold_check(ns.p, ns.d, threads=ns.threads, max_p=ns.max_p)
        params = {"p": ns.p, "d": ns.d, "max_p": ns.max_p}
    elif kind == "levson":
        res = levson_scan(ns.alpha_max, threads=ns.threads)
        params = {"alpha_max": ns.alpha_max}
    elif kind == "problem1":
        res = problem1_scan(ns.p, ns.alpha_max, threads=ns.threads, max_p=ns.max_p)
        params = {"p": ns.p, "alpha_max": ns.alpha_max, "max_p": ns.max_p}
    elif kind == "problem2":
        res = problem2_scan(ns.p, ns.d, threads=ns.threads, max_p=ns.max_p)
        params = {"p": ns.p, "d": ns.d, "max_p": ns.max_p}
    else:
        raise ValueError(f"unknown search kind {kind!r}")
    cfg = RunConfig(f"search-{kind}", params, ns.threads, ns.seed, ns.format, ns.out)
    ok = not res.violations
    _emit(cfg, ok, _search_report(res))
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
