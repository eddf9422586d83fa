"""Verification suites behind ``lrsnake verify``.

Every suite returns a JSON-ready report
``{suite, params, instances, failures, elapsed_ms, seed}`` and passes
exactly when ``failures`` is empty.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from . import birational as bir
from .lr import lr_coeff, lr_family, verify_main_theorem, LRQuery
from .oracles import lr_skew_tableaux
from .semifield import QPLUS, TROPICAL
from .symmetric import (
    expand_in_schur_basis,
    h_minus,
    h_plus,
    ominus_identities,
    schur_laurent,
    verify_jacobi_trudi,
    verify_pieri,
    verify_shift_and_inverse,
)
from .tropical import PhiParams, reproduce_counterexamples, sweep_tropical
from .tuples import (
    IntTuple,
    RSetParams,
    enumerate_R,
    format_tuple,
    ominus,
    partitions_in_box,
    partitions_of,
    snakes_in_box,
)

SUITES = ("main", "birational", "tropical", "pieri", "ominus", "jt", "rmatrix", "counterexamples")
MAX_FAILURES = 50


class _Report:
    def __init__(self, suite: str, params: dict, seed=None):
        self.suite, self.params, self.seed = suite, params, seed
        self.instances = 0
        self.failures: list = []
        self.total_failures = 0
        self._start = time.perf_counter()

    def fail(self, item: dict) -> None:
        self.total_failures += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(item)

    def absorb(self, entries: list[dict], **context) -> None:
        for e in entries:
            self.instances += 1
            if not e["pass"]:
                self.fail({**context, **e})

    def done(self, **extra) -> dict:
        out = {
            "suite": self.suite,
            "params": self.params,
            "instances": self.instances,
            "failures": self.failures,
            "elapsed_ms": int((time.perf_counter() - self._start) * 1000),
            "seed": self.seed,
        }
        if self.total_failures > len(self.failures):
            out["failures_truncated"] = self.total_failures
        out.update(extra)
        return out


# -- main theorem ------------------------------------------------------------


def _main_chunk(args) -> tuple[int, list]:
    n, a, b, max_mu1, margin, check_R = args
    instances, bad = 0, []
    for mu in sorted(partitions_in_box(n, max_mu1)):
        rep = verify_main_theorem(PhiParams(n, a, b, mu), margin=margin, check_R=check_R)
        instances += rep["instances"]
        if not rep["pass"]:
            rep.pop("elapsed_ms")
            bad.append(rep)
    return instances, bad


def run_main(ns=(2, 3, 4), max_ab: int = 3, max_mu1: int = 4, margin: int = 1, check_R: bool = True, jobs: int = 1) -> dict:
    """Main-theorem sweep, optionally cross-checking every coefficient against the R-set formula."""
    rep = _Report("main", {"n": list(ns), "max_ab": max_ab, "max_mu1": max_mu1, "margin": margin, "check_R": check_R})
    chunks = [(n, a, b, max_mu1, margin, check_R) for n in ns for a in range(max_ab + 1) for b in range(max_ab + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_main_chunk, chunks))
    else:
        results = [_main_chunk(c) for c in chunks]
    for count, bad in results:
        rep.instances += count
        for b in bad:
            rep.fail(b)
    return rep.done()


def run_lr_oracle(max_size: int = 5, ns=(1, 2, 3, 4)) -> dict:
    """lr_coeff against LR skew-tableau counting, for all |mu|, |nu| <= max_size."""
    rep = _Report("lr-oracle", {"max_size": max_size, "n": list(ns)})
    for n in ns:
        shapes = [p for s in range(max_size + 1) for p in partitions_of(s, n)]
        for mu in shapes:
            for nu in shapes:
                fam = lr_family(mu, nu)
                for lam in partitions_of(sum(mu) + sum(nu), n):
                    rep.instances += 1
                    got = fam.get(lam, 0)
                    want = lr_skew_tableaux(lam, mu, nu)
                    if got != want:
                        rep.fail({"mu": format_tuple(mu), "nu": format_tuple(nu), "lambda": format_tuple(lam), "lr": got, "oracle": want})
    return rep.done()


# -- birational, over Q+ ------------------------------------------------------


def _random_tuple(rng: random.Random, n: int) -> tuple:
    return tuple(QPLUS.random(rng) for _ in range(n))


def run_birational(ns=(2, 3, 4, 5), samples: int = 1000, seed: int = 0) -> dict:
    """Random Q+ points: full theorem, equal-product case, t-table steps, R-matrix and gauges."""
    rep = _Report("birational", {"n": list(ns), "samples": samples}, seed)
    for n in ns:
        rng = random.Random(f"{seed}:{n}")
        for s in range(samples):
            u, x, g = (_random_tuple(rng, n) for _ in range(3))
            ctx = bir.BirationalContext(QPLUS, u)
            where = {"n": n, "sample": s}
            rep.absorb(bir.check_full_theorem(ctx, x), **where)
            rep.absorb([bir.check_equal_case(ctx, x)], **where)
            rep.absorb(bir.check_t_recurrences(ctx, x), **where)
            rep.absorb(bir.check_cyclic_product(QPLUS, x), **where)
            rep.absorb(bir.check_r_matrix(ctx, x, g), **where)
    return rep.done()


def run_rmatrix(ns=(2, 3, 4, 5), samples: int = 100, seed: int = 0, lo: int = -2, hi: int = 2) -> dict:
    """R-matrix identities on random Q+ points and on an exhaustive tropical grid."""
    rep = _Report("rmatrix", {"n": list(ns), "samples": samples, "lo": lo, "hi": hi}, seed)
    for n in ns:
        rng = random.Random(f"{seed}:rmatrix:{n}")
        for s in range(samples):
            u, x, g = (_random_tuple(rng, n) for _ in range(3))
            rep.absorb(bir.check_r_matrix(bir.BirationalContext(QPLUS, u), x, g), n=n, sample=s)
    for n in (2, 3):
        box = list(product(range(lo, hi + 1), repeat=n))
        for u in box:
            ctx = bir.BirationalContext(TROPICAL, u)
            for x in box:
                rep.absorb(bir.check_r_matrix(ctx, x, (1,) * n), n=n, u=list(u), x=list(x))
    return rep.done()


# -- tropical -----------------------------------------------------------------


def run_tropical(ns=(2, 3, 4), lo: int = -3, hi: int = 3) -> dict:
    rep = _Report("tropical", {"n": list(ns), "lo": lo, "hi": hi})
    res = sweep_tropical(ns, lo, hi, max_failures=MAX_FAILURES)
    rep.instances = res["instances"]
    rep.failures = res["failures"]
    rep.total_failures = sum(res["failure_counts"].values())
    return rep.done(failure_counts=res["failure_counts"])


def run_counterexamples(max_g: int = 5) -> dict:
    rep = _Report("counterexamples", {"max_g": max_g})
    res = reproduce_counterexamples(max_g)
    for e in res["n3_family"]:
        rep.instances += 1
        if not e["pass"]:
            rep.fail({"case": "n3", **e})
    for e in res["n4_instance"]:
        rep.instances += 1
        if not e["pass"]:
            rep.fail({"case": "n4", **e})
    if not res["n4_solutions_distinct"]:
        rep.fail({"case": "n4", "reason": "solutions coincide"})
    return rep.done(
        reproductions={
            "n3_family": [{k: e[k] for k in ("g", "k", "y")} for e in res["n3_family"]],
            "n4_instance": {"u": res["n4_instance"][0]["u"], "x": res["n4_instance"][0]["x"], "y": [e["y"] for e in res["n4_instance"]]},
            "n4_f_u_of_x": res["n4_f_u_of_x"],
        }
    )


# -- Laurent-polynomial identities ---------------------------------------------


def run_pieri(ns=(2, 3), lo: int = -2, hi: int = 4, kmin: int = -1, kmax: int = 6) -> dict:
    rep = _Report("pieri", {"n": list(ns), "lo": lo, "hi": hi, "k": [kmin, kmax]})
    for n in ns:
        for lam in snakes_in_box(n, lo, hi):
            for k in range(kmin, kmax + 1):
                for sign in ("plus", "minus"):
                    r = verify_pieri(lam, k, sign)
                    rep.absorb([r])
    return rep.done()


def check_R_formula(mu, a: int, b: int) -> list[dict]:
    """h_a^- h_b^+ s-bar_mu against sum over gamma of |R_{mu,a,b}(gamma)| s-bar_gamma."""
    n = len(mu)
    exp = expand_in_schur_basis(h_minus(a, n) * h_plus(b, n) * schur_laurent(mu))
    out = []
    # any gamma with a nonempty R-set lies in this box
    for gamma in snakes_in_box(n, mu[-1] - a, mu[0] + b):
        count = len(enumerate_R(RSetParams(IntTuple(mu), gamma, a, b)))
        coeff = exp.get(gamma, 0)
        if count or coeff:
            out.append(
                {"check": "R-formula", "params": {"mu": format_tuple(mu), "a": a, "b": b, "gamma": format_tuple(gamma)},
                 "pass": count == coeff, "terms": [coeff, count]}
            )
    return out


def run_ominus(ns=(2, 3, 4), max_ab: int = 4, r_ns=(2, 3), r_max_ab: int = 2, r_lo: int = -2, r_hi: int = 2) -> dict:
    """b (-) a identities, shift and inversion of s-bar, and the R-set expansion formula."""
    rep = _Report("ominus", {"n": list(ns), "max_ab": max_ab, "r_n": list(r_ns), "r_max_ab": r_max_ab})
    for n in ns:
        for a in range(max_ab + 1):
            for b in range(max_ab + 1):
                rep.absorb(ominus_identities(a, b, n))
                rep.absorb(verify_shift_and_inverse(ominus(b, a, n), range(-2, 3)))
    for n in r_ns:
        for mu in snakes_in_box(n, r_lo, r_hi):
            for a in range(r_max_ab + 1):
                for b in range(r_max_ab + 1):
                    rep.absorb(check_R_formula(mu, a, b))
    return rep.done()


def run_jt(max_n: int = 4, max_entry: int = 3) -> dict:
    """Jacobi-Trudi for every (p, q) with p + q <= n <= max_n."""
    rep = _Report("jt", {"max_n": max_n, "max_entry": max_entry})
    for n in range(2, max_n + 1):
        for p in range(n + 1):
            for q in range(n + 1 - p):
                for av in partitions_in_box(p, max_entry) if p else [()]:
                    for bv in partitions_in_box(q, max_entry) if q else [()]:
                        rep.absorb([verify_jacobi_trudi(tuple(av), tuple(bv), n)])
    return rep.done()


def run_suite(name: str, **kw) -> dict:
    """Dispatch by suite name; unknown names raise KeyError."""
    runners = {
        "main": run_main,
        "birational": run_birational,
        "tropical": run_tropical,
        "pieri": run_pieri,
        "ominus": run_ominus,
        "jt": run_jt,
        "rmatrix": run_rmatrix,
        "counterexamples": run_counterexamples,
    }
    if name not in runners:
        raise KeyError(name)
    return runners[name](**kw)


def lr_query(mu, nu, lam) -> int:
    return lr_coeff(LRQuery(mu, nu, lam))
