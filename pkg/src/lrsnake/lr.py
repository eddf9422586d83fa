"""Littlewood-Richardson coefficients and the c^omega_{alpha,mu} = c^{phi(omega)}_{beta,mu} check."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .symmetric import _signed_perms, expand_in_schur_basis, schur_laurent
from .tropical import PhiParams, phi_batch
from .tuples import (
    IntTuple,
    RSetParams,
    Snake,
    enumerate_R,
    format_tuple,
    is_partition,
    partitions_in_box,
    partitions_of,
    shift,
    size,
    staircase,
)


@dataclass(frozen=True)
class LRQuery:
    mu: Snake
    nu: Snake
    lam: IntTuple

    def __post_init__(self):
        mu, nu, lam = Snake(self.mu), Snake(self.nu), IntTuple(self.lam)
        if not (mu.is_partition and nu.is_partition):
            raise ValueError("mu and nu must be partitions")
        if not len(mu) == len(nu) == len(lam):
            raise ValueError("mu, nu and lambda must have the same length")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "lam", lam)


def lr_family(mu: Sequence[int], nu: Sequence[int], method: str = "alternant") -> dict[Snake, int]:
    """All nonzero c^lam_{mu,nu}, keyed by lam in Par[n].

    ``method="expand"`` multiplies s-bar_mu by s-bar_nu in the Laurent ring
    and peels the product into Schur polynomials.  ``method="alternant"``
    (the default) computes a_{mu+rho} * s-bar_nu instead and reads off the
    coefficients of x^{lam+rho} for strictly decreasing exponents, which is
    the same expansion carried out in the alternant basis.
    """
    mu, nu = Snake(mu), Snake(nu)
    if len(mu) != len(nu):
        raise ValueError("dimension mismatch")
    if not (mu.is_partition and nu.is_partition):
        raise ValueError("mu and nu must be partitions")
    if method == "expand":
        fam = expand_in_schur_basis(schur_laurent(mu) * schur_laurent(nu))
    elif method == "alternant":
        fam = _family_via_alternant(mu, nu)
    else:
        raise ValueError(f"unknown method {method!r}")
    for lam, c in fam.items():
        if c < 0 or not is_partition(lam):
            raise ArithmeticError(f"invalid LR coefficient {c} at {tuple(lam)}")
    return dict(fam)


def _family_via_alternant(mu: Snake, nu: Snake) -> dict[Snake, int]:
    # the alternant goes on the larger shape: fewer monomials to scan
    if size(mu) < size(nu):
        mu, nu = nu, mu
    n = len(mu)
    rho = staircase(n)
    top = [m + r for m, r in zip(mu, rho)]
    s = schur_laurent(nu)
    acc: dict = {}
    for w, sgn in _signed_perms(n):
        shifted = [0] * n
        for i, v in enumerate(top):
            shifted[w[i]] = v
        for e, c in s.terms.items():
            f = [a + b for a, b in zip(shifted, e)]
            if all(f[i] > f[i + 1] for i in range(n - 1)):
                key = tuple(v - r for v, r in zip(f, rho))
                acc[key] = acc.get(key, 0) + sgn * c
    return {Snake(k): v for k, v in acc.items() if v}


def lr_coeff(q: LRQuery, method: str = "alternant") -> int:
    if not is_partition(q.lam):
        return 0
    return lr_family(q.mu, q.nu, method).get(Snake(q.lam), 0)


def lr_via_R(params: PhiParams, lam: Sequence[int]) -> int:
    """|R_{mu,a,b}(lam - a)| - |R_{mu,a-1,b-1}(lam - a)|."""
    gamma = shift(IntTuple(lam), -params.a)
    mu = IntTuple(params.mu)
    big = enumerate_R(RSetParams(mu, gamma, params.a, params.b))
    small = enumerate_R(RSetParams(mu, gamma, params.a - 1, params.b - 1))
    return len(big) - len(small)


def margin_box(stratum: list[Snake], margin: int = 1) -> list[IntTuple]:
    """The stratum together with every tuple within ``margin`` of it in each entry."""
    seen = set()
    out = []
    if not stratum:
        return out
    n = len(stratum[0])
    offsets = list(product(range(-margin, margin + 1), repeat=n))
    for om in stratum:
        for d in offsets:
            t = tuple(o + e for o, e in zip(om, d))
            if t not in seen:
                seen.add(t)
                out.append(IntTuple(t))
    return out


def verify_main_theorem(
    params: PhiParams,
    margin: int = 1,
    check_R: bool = False,
    method: str = "alternant",
    max_failures: int = 20,
) -> dict:
    """Check c^omega_{alpha,mu} = c^{phi(omega)}_{beta,mu} over the degree stratum and a margin."""
    start = time.perf_counter()
    alpha, beta, mu, n = params.alpha, params.beta, params.mu, params.n
    fam_a = lr_family(alpha, mu, method)
    fam_b = lr_family(beta, mu, method)
    total = size(alpha) + size(mu)
    stratum = list(partitions_of(total, n))
    omegas = margin_box(stratum, margin) if margin > 0 else [IntTuple(s) for s in stratum]
    images = phi_batch(params, np.array(omegas, dtype=np.int64))

    failures = []
    r_failures = []
    for om, im in zip(omegas, images):
        im = tuple(int(v) for v in im)
        lhs = fam_a.get(tuple(om), 0)
        rhs = fam_b.get(im, 0)
        if lhs != rhs and len(failures) < max_failures:
            failures.append({"omega": format_tuple(om), "phi": format_tuple(im), "lhs": lhs, "rhs": rhs})
        if check_R:
            via_r = lr_via_R(params, om)
            if via_r != lhs and len(r_failures) < max_failures:
                r_failures.append({"omega": format_tuple(om), "lr": lhs, "via_R": via_r})

    support_a = list(fam_a)
    support_imgs = phi_batch(params, np.array(support_a, dtype=np.int64)) if support_a else np.zeros((0, n))
    img_set = {tuple(int(v) for v in row) for row in support_imgs}
    injective = len(img_set) == len(support_a)
    onto = img_set == {tuple(k) for k in fam_b}
    multiset = Counter(fam_a.values()) == Counter(fam_b.values())

    report = {
        "params": {"n": n, "a": params.a, "b": params.b, "mu": format_tuple(mu)},
        "alpha": format_tuple(alpha),
        "beta": format_tuple(beta),
        "instances": len(omegas),
        "stratum_size": len(stratum),
        "support_size": len(fam_a),
        "multiset_equal": multiset,
        "phi_injective_on_support": injective,
        "phi_support_onto": onto,
        "failures": failures,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }
    if check_R:
        report["R_failures"] = r_failures
    report["pass"] = not failures and not r_failures and multiset and injective and onto
    return report


def sweep_main(
    ns=(2, 3, 4),
    max_ab: int = 3,
    max_mu1: int = 4,
    margin: int = 1,
    check_R: bool = False,
) -> dict:
    start = time.perf_counter()
    reports = []
    instances = 0
    for n in ns:
        for a in range(max_ab + 1):
            for b in range(max_ab + 1):
                for mu in sorted(partitions_in_box(n, max_mu1)):
                    rep = verify_main_theorem(PhiParams(n, a, b, mu), margin=margin, check_R=check_R)
                    instances += rep["instances"]
                    if not rep["pass"]:
                        reports.append(rep)
    return {
        "instances": instances,
        "failures": reports,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }

