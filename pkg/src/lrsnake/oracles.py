"""Tableau-counting oracles, kept independent of the alternant machinery.

Used only to cross-check: Schur polynomials as sums over semistandard
tableaux, and Littlewood-Richardson coefficients as counts of LR skew
tableaux (row-weak, column-strict, reverse reading word a lattice word).
"""

from __future__ import annotations

from typing import Sequence

from .laurent import LaurentPoly


def _strip(part: Sequence[int]) -> list[int]:
    return [v for v in part if v > 0]


def schur_by_tableaux(lam: Sequence[int], n: int) -> LaurentPoly:
    """s_lam(x_1..x_n) = sum over SSYT T of shape lam with entries <= n of x^T."""
    if any(v < 0 for v in lam):
        raise ValueError("shape must be a partition")
    shape = _strip(lam)
    if len(shape) > n:
        return LaurentPoly.zero(n)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid: dict = {}
    content = [0] * n
    terms: dict = {}

    def rec(idx: int) -> None:
        if idx == len(cells):
            key = tuple(content)
            terms[key] = terms.get(key, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[(r, c - 1)])
        if r > 0:
            lo = max(lo, grid[(r - 1, c)] + 1)
        for v in range(lo, n + 1):
            grid[(r, c)] = v
            content[v - 1] += 1
            rec(idx + 1)
            content[v - 1] -= 1
        grid.pop((r, c), None)

    rec(0)
    return LaurentPoly(n, terms)


def lr_skew_tableaux(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = _strip(lam), _strip(mu), _strip(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    if len(mu) > len(lam) or any(m > l for m, l in zip(mu, lam)):
        return 0
    mu = mu + [0] * (len(lam) - len(mu))
    # reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r] - 1, mu[r] - 1, -1)]
    k = len(nu)
    grid: dict = {}
    count = [0] * (k + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return int(all(count[i + 1] == nu[i] for i in range(k)))
        r, c = cells[idx]
        hi = k
        if (r, c + 1) in grid:
            hi = min(hi, grid[(r, c + 1)])
        lo = 1
        if r > 0 and (r - 1, c) in grid:
            lo = grid[(r - 1, c)] + 1
        total = 0
        for v in range(lo, hi + 1):
            if count[v] >= nu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            grid[(r, c)] = v
            count[v] += 1
            total += rec(idx + 1)
            count[v] -= 1
            del grid[(r, c)]
        return total

    return rec(0)
