"""Alternants, Schur Laurent polynomials and the identities they satisfy."""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .laurent import LaurentPoly, NotDivisible
from .tuples import Snake, format_tuple, is_snake, ominus, shift, size, staircase


class NotInSchurSpan(ValueError):
    """The polynomial is not a finite integer combination of Schur Laurent polynomials."""


def _sign(perm: Sequence[int]) -> int:
    inv = sum(1 for i, j in combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def _signed_perms(n: int) -> tuple:
    return tuple((p, _sign(p)) for p in permutations(range(n)))


def alternant(lam: Sequence[int]) -> LaurentPoly:
    """sum over w in S_n of sign(w) x_{w(1)}^{lam_1} ... x_{w(n)}^{lam_n}."""
    lam = tuple(lam)
    n = len(lam)
    terms: dict = {}
    for w, sgn in _signed_perms(n):
        e = [0] * n
        for i, v in enumerate(lam):
            e[w[i]] = v
        e = tuple(e)
        terms[e] = terms.get(e, 0) + sgn
    return LaurentPoly(n, terms)


def x_pi_power(d: int, n: int) -> LaurentPoly:
    """(x_1 x_2 ... x_n)^d."""
    return LaurentPoly.monomial([d] * n)


def vandermonde_factors(n: int) -> list[LaurentPoly]:
    """The factors x_i - x_j, i < j, whose product is a_rho."""
    return [
        LaurentPoly.variable(n, i) - LaurentPoly.variable(n, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]


@lru_cache(maxsize=4096)
def _schur_cached(lam: tuple) -> LaurentPoly:
    n = len(lam)
    p = alternant(tuple(v + r for v, r in zip(lam, staircase(n))))
    for f in vandermonde_factors(n):
        try:
            p = p.divexact(f)
        except NotDivisible as exc:  # pragma: no cover - would contradict exact divisibility
            raise ArithmeticError(f"a_(lam+rho) not divisible by {f} for lam={lam}") from exc
    return p


def schur_laurent(lam: Sequence[int]) -> LaurentPoly:
    """s-bar_lam = a_{lam+rho} / a_rho for a snake lam."""
    lam = tuple(int(v) for v in lam)
    if not is_snake(lam):
        raise ValueError(f"{lam} is not a snake")
    return _schur_cached(lam)


def clear_schur_cache() -> None:
    _schur_cached.cache_clear()


def _weak_compositions(k: int, n: int) -> Iterator[tuple]:
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in _weak_compositions(k - first, n - 1):
            yield (first,) + rest


@lru_cache(maxsize=512)
def h_plus(k: int, n: int) -> LaurentPoly:
    """Complete homogeneous symmetric polynomial of degree k; zero for k < 0."""
    if k < 0:
        return LaurentPoly.zero(n)
    return LaurentPoly(n, {e: 1 for e in _weak_compositions(k, n)})


@lru_cache(maxsize=512)
def h_minus(k: int, n: int) -> LaurentPoly:
    """h_plus(k) with every variable inverted."""
    return h_plus(k, n).invert_variables()


class SchurExpansion(dict):
    """Mapping snake -> nonzero integer coefficient."""

    def to_json_obj(self) -> dict:
        return {format_tuple(k): str(v) for k, v in sorted(self.items(), reverse=True)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "SchurExpansion":
        return cls({Snake(int(p) for p in k.split(",")): int(v) for k, v in json.loads(text).items()})

    def reconstruct(self, n: int) -> LaurentPoly:
        total = LaurentPoly.zero(n)
        for lam, c in self.items():
            total = total + schur_laurent(lam) * c
        return total


def expand_in_schur_basis(P: LaurentPoly) -> SchurExpansion:
    """Write P as an integer combination of s-bar's by peeling off lex-leading terms."""
    out = SchurExpansion()
    cap = 10 * max(1, len(P))
    steps = 0
    rem = P
    while rem:
        steps += 1
        if steps > cap:
            raise NotInSchurSpan("iteration cap exceeded")
        e, c = rem.leading()
        if not is_snake(e):
            raise NotInSchurSpan(f"leading exponent {e} is not weakly decreasing")
        lam = Snake(e)
        out[lam] = out.get(lam, 0) + c
        if not out[lam]:
            del out[lam]
        rem = rem - schur_laurent(lam) * c
    return out


# -- horizontal strips -------------------------------------------------------


def strips_above(lam: Sequence[int], k: int) -> Iterator[Snake]:
    """Snakes mu with mu -> lam and |mu| - |lam| = k."""
    n = len(lam)
    if k < 0:
        return

    def rec(i: int, prefix: list[int], left: int) -> Iterator[Snake]:
        if i == n:
            if left == 0:
                yield Snake(prefix)
            return
        hi = lam[i] + left if i == 0 else lam[i - 1]
        for v in range(lam[i], min(hi, lam[i] + left) + 1):
            prefix.append(v)
            yield from rec(i + 1, prefix, left - (v - lam[i]))
            prefix.pop()

    yield from rec(0, [], k)


def strips_below(lam: Sequence[int], k: int) -> Iterator[Snake]:
    """Snakes mu with lam -> mu and |lam| - |mu| = k."""
    n = len(lam)
    if k < 0:
        return

    def rec(i: int, prefix: list[int], left: int) -> Iterator[Snake]:
        if i == n:
            if left == 0:
                yield Snake(prefix)
            return
        lo = lam[i] - left if i == n - 1 else lam[i + 1]
        for v in range(max(lo, lam[i] - left), lam[i] + 1):
            prefix.append(v)
            yield from rec(i + 1, prefix, left - (lam[i] - v))
            prefix.pop()

    yield from rec(0, [], k)


def _report(check: str, params: dict, lhs: LaurentPoly, rhs: LaurentPoly) -> dict:
    return {"check": check, "params": params, "pass": lhs == rhs, "terms": [len(lhs), len(rhs)]}


def verify_pieri(lam: Sequence[int], k: int, sign: str = "plus") -> dict:
    """Compare h_k^{+-} * s-bar_lam with the sum over horizontal strips."""
    lam = Snake(lam)
    n = len(lam)
    if sign == "plus":
        lhs = h_plus(k, n) * schur_laurent(lam)
        shapes = list(strips_above(lam, k))
    elif sign == "minus":
        lhs = h_minus(k, n) * schur_laurent(lam)
        shapes = list(strips_below(lam, k))
    else:
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    rhs = LaurentPoly.zero(n)
    for mu in shapes:
        rhs = rhs + schur_laurent(mu)
    rep = _report(f"pieri-{sign}", {"lambda": format_tuple(lam), "k": k}, lhs, rhs)
    rep["shapes"] = [format_tuple(m) for m in shapes]
    return rep


def ominus_identities(a: int, b: int, n: int) -> list[dict]:
    """The three identities around b (-) a; requires a, b >= 0 and n >= 2."""
    if a < 0 or b < 0 or n < 2:
        raise ValueError("need a, b >= 0 and n >= 2")
    params = {"a": a, "b": b, "n": n}
    prod_ab = h_minus(a, n) * h_plus(b, n)
    prod_prev = h_minus(a - 1, n) * h_plus(b - 1, n)

    rhs = LaurentPoly.zero(n)
    for k in range(min(a, b) + 1):
        rhs = rhs + schur_laurent(ominus(b - k, a - k, n))
    out = [_report("ominus-h", params, prod_ab, rhs)]

    s = schur_laurent(ominus(b, a, n))
    out.append(_report("ominus-s", params, s, prod_ab - prod_prev))

    alpha = (a + b,) + (a,) * (n - 2) + (0,)
    out.append(_report("ominus-alpha", params, schur_laurent(alpha), x_pi_power(a, n) * (prod_ab - prod_prev)))
    return out


def _det(M: list[list[LaurentPoly]], n: int) -> LaurentPoly:
    size_ = len(M)
    if size_ == 0:
        return LaurentPoly.one(n)
    if size_ == 1:
        return M[0][0]
    total = LaurentPoly.zero(n)
    for j in range(size_):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * _det(minor, n)
        total = total + term if j % 2 == 0 else total - term
    return total


def jacobi_trudi_matrix(a_vec: Sequence[int], b_vec: Sequence[int], n: int) -> list[list[LaurentPoly]]:
    p, q = len(a_vec), len(b_vec)
    if p + q > n:
        raise ValueError(f"p + q = {p + q} exceeds n = {n}")
    for part in (a_vec, b_vec):
        if not (is_snake(part) and all(v >= 0 for v in part)):
            raise ValueError(f"{tuple(part)} is not a partition")
    M = []
    for i in range(1, p + q + 1):
        row = []
        for j in range(1, p + q + 1):
            if i <= p:
                row.append(h_minus(a_vec[p - i] + i - j, n))
            else:
                row.append(h_plus(b_vec[i - p - 1] - i + j, n))
        M.append(row)
    return M


def jacobi_trudi(a_vec: Sequence[int], b_vec: Sequence[int], n: int) -> LaurentPoly:
    """Determinant of the mixed h^-/h^+ matrix attached to b (-) a."""
    return _det(jacobi_trudi_matrix(a_vec, b_vec, n), n)


def bminus_a(a_vec: Sequence[int], b_vec: Sequence[int], n: int) -> Snake:
    """The snake (b_1, ..., b_q, 0, ..., 0, -a_p, ..., -a_1)."""
    p, q = len(a_vec), len(b_vec)
    return Snake(tuple(b_vec) + (0,) * (n - p - q) + tuple(-v for v in reversed(a_vec)))


def verify_jacobi_trudi(a_vec: Sequence[int], b_vec: Sequence[int], n: int) -> dict:
    lhs = jacobi_trudi(a_vec, b_vec, n)
    rhs = schur_laurent(bminus_a(a_vec, b_vec, n))
    return _report("jacobi-trudi", {"a": list(a_vec), "b": list(b_vec), "n": n}, lhs, rhs)


def verify_shift_and_inverse(lam: Sequence[int], ds: Iterable[int]) -> list[dict]:
    """s-bar_{lam+d} = x_Pi^d s-bar_lam and s-bar_{lam^dual}(x) = s-bar_lam(1/x)."""
    lam = Snake(lam)
    n = len(lam)
    s = schur_laurent(lam)
    out = []
    for d in ds:
        out.append(
            _report("schur-shift", {"lambda": format_tuple(lam), "d": d}, schur_laurent(shift(lam, d)), x_pi_power(d, n) * s)
        )
    dual = tuple(-v for v in reversed(lam))
    out.append(_report("schur-inverse", {"lambda": format_tuple(lam)}, schur_laurent(dual), s.invert_variables()))
    return out
