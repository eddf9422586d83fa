"""The birational involution f_u, its t-table, and the birational R-matrix.

Everything here is generic over a :class:`~lrsnake.semifield.Semifield`.
Tuples are Python sequences of length n holding semifield elements; the
mathematical index i (1-based, extended n-periodically) lives at position
``(i - 1) % n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Sequence

from .semifield import Semifield


def _at(seq: Sequence[Any], i: int):
    return seq[(i - 1) % len(seq)]


@dataclass(frozen=True)
class BirationalContext:
    K: Semifield
    u: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        if not self.u:
            raise ValueError("u must be a nonempty tuple")
        for v in self.u:
            self.K.check(v)

    @property
    def n(self) -> int:
        return len(self.u)

    def u_at(self, i: int):
        return _at(self.u, i)


class TTable:
    """Values t_{r,j} for 0 <= r <= n-1, indexed cyclically in j."""

    def __init__(self, rows: list[list[Any]]):
        self.rows = rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __call__(self, r: int, j: int):
        return self.rows[r][j % self.n]


def _check_x(ctx: BirationalContext, x: Sequence[Any]) -> tuple:
    x = tuple(x)
    if len(x) != ctx.n:
        raise ValueError(f"expected an {ctx.n}-tuple, got length {len(x)}")
    for v in x:
        ctx.K.check(v)
    return x


def t_table(ctx: BirationalContext, x: Sequence[Any]) -> TTable:
    """Build the t-table row by row.

    Uses ``t_{r+1,j} = u_{j+r+1} t_{r,j} + x_{j+1} ... x_{j+r+1}``, so the
    whole table costs O(n^2) semifield operations.
    """
    K, n = ctx.K, ctx.n
    x = _check_x(ctx, x)
    one = K.one()
    rows = [[one] * n]
    # xprod[j] = x_{j+1} x_{j+2} ... x_{j+r} for the current r
    xprod = [one] * n
    for r in range(n - 1):
        prev = rows[-1]
        nxt = []
        for j in range(n):
            xprod[j] = K.mul(xprod[j], _at(x, j + r + 1))
            nxt.append(K.add(K.mul(ctx.u_at(j + r + 1), prev[j]), xprod[j]))
        rows.append(nxt)
    return TTable(rows)


def t_entry_by_definition(ctx: BirationalContext, x: Sequence[Any], r: int, j: int):
    """``sum_{k=0}^{r} (x_{j+1}...x_{j+k}) (u_{j+k+1}...u_{j+r})`` term by term."""
    K = ctx.K
    return K.sum(
        K.mul(
            K.prod(_at(x, j + i) for i in range(1, k + 1)),
            K.prod(ctx.u_at(j + i) for i in range(k + 1, r + 1)),
        )
        for k in range(r + 1)
    )


def _y_from(ctx: BirationalContext, x: tuple, top) -> list:
    # top(j) must return t_{n-1,j}
    K, n = ctx.K, ctx.n
    y = []
    for i in range(1, n + 1):
        num = K.mul(ctx.u_at(i - 1), top(i - 1))
        den = K.mul(_at(x, i + 1), top(i + 1))
        y.append(K.mul(ctx.u_at(i), K.div(num, den)))
    return y


def f_u(ctx: BirationalContext, x: Sequence[Any]) -> list:
    """y_i = u_i * (u_{i-1} t_{n-1,i-1}) / (x_{i+1} t_{n-1,i+1})."""
    x = _check_x(ctx, x)
    t = t_table(ctx, x)
    last = ctx.n - 1
    return _y_from(ctx, x, lambda j: t(last, j))


def f_u_via_back_formula(ctx: BirationalContext, x: Sequence[Any]) -> list:
    """Same map, with every q_j summed straight from its definition."""
    x = _check_x(ctx, x)
    n = ctx.n
    q = [t_entry_by_definition(ctx, x, n - 1, j) for j in range(n)]
    return _y_from(ctx, x, lambda j: q[j % n])


def kappa(K: Semifield, a: Sequence[Any], b: Sequence[Any], i: int):
    n = len(a)
    return K.sum(
        K.mul(
            K.prod(_at(b, p) for p in range(i + 1, j + 1)),
            K.prod(_at(a, p) for p in range(j + 1, i + n)),
        )
        for j in range(i, i + n)
    )


def r_matrix(K: Semifield, a: Sequence[Any], b: Sequence[Any]) -> tuple[list, list]:
    """The birational R-matrix ``(a, b) -> (a', b')``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    for v in a + b:
        K.check(v)
    n = len(a)
    kap = [kappa(K, a, b, i) for i in range(n)]

    def k_at(i):
        return kap[i % n]

    a_new = [K.div(K.mul(_at(a, i - 1), k_at(i - 1)), k_at(i)) for i in range(1, n + 1)]
    b_new = [K.div(K.mul(_at(b, i + 1), k_at(i + 1)), k_at(i)) for i in range(1, n + 1)]
    return a_new, b_new


# -- identity checks ---------------------------------------------------------


def _entry(K: Semifield, identity: str, lhs, rhs, ok: bool | None = None) -> dict:
    if ok is None:
        ok = K.equal(lhs, rhs)
    if isinstance(lhs, (list, tuple)):
        ls = "(" + ", ".join(_fmt(K, v) for v in lhs) + ")"
        rs = "(" + ", ".join(_fmt(K, v) for v in rhs) + ")"
    else:
        ls, rs = _fmt(K, lhs), _fmt(K, rhs)
    return {"identity": identity, "instance": K.name, "pass": bool(ok), "lhs": ls, "rhs": rs}


def _fmt(K: Semifield, v) -> str:
    if hasattr(v, "shape") and getattr(v, "shape", ()) != ():
        return f"<batch of {v.shape[0]}>"
    return K.format(v)


def _tuple_equal(K: Semifield, xs, ys) -> bool:
    return all(K.equal(a, b) for a, b in zip(xs, ys))


def _tuple_entry(K: Semifield, identity: str, lhs, rhs) -> dict:
    return _entry(K, identity, list(lhs), list(rhs), ok=_tuple_equal(K, lhs, rhs))


def check_full_theorem(ctx: BirationalContext, x: Sequence[Any]) -> list[dict]:
    """Involution, product rule, the n local identities and the global identity."""
    K, n, u = ctx.K, ctx.n, ctx.u
    x = _check_x(ctx, x)
    y = f_u(ctx, x)
    out = [_tuple_entry(K, "involution", f_u(ctx, y), x)]
    out.append(
        _entry(
            K,
            "product",
            K.mul(K.prod(y), K.prod(x)),
            K.pow(K.prod(u), 2),
        )
    )
    for i in range(1, n + 1):

        def local(z):
            return K.mul(
                K.add(ctx.u_at(i), _at(z, i)),
                K.add(K.inv(ctx.u_at(i + 1)), K.inv(_at(z, i + 1))),
            )

        out.append(_entry(K, f"local[{i}]", local(x), local(y)))
    lhs = K.prod(K.div(K.add(u[i], x[i]), x[i]) for i in range(n))
    rhs = K.prod(K.div(K.add(u[i], y[i]), u[i]) for i in range(n))
    out.append(_entry(K, "global", lhs, rhs))
    return out


def check_t_recurrences(ctx: BirationalContext, x: Sequence[Any]) -> list[dict]:
    """The t-table step identities, including the one linking t and t'."""
    K, n = ctx.K, ctx.n
    x = _check_x(ctx, x)
    t = t_table(ctx, x)
    y = f_u(ctx, x)
    tp = t_table(ctx, y)
    out = []
    for j in range(n):
        out.append(_entry(K, f"t0[{j}]", t(0, j), K.one()))
        for r in range(n - 1):
            lhs = K.add(
                K.mul(_at(x, j), t(r, j)),
                K.prod(ctx.u_at(j + i) for i in range(r + 1)),
            )
            out.append(_entry(K, f"step-x[{r},{j}]", lhs, t(r + 1, j - 1)))
            lhs = K.add(
                K.mul(ctx.u_at(j + r + 1), t(r, j)),
                K.prod(_at(x, j + i) for i in range(1, r + 2)),
            )
            out.append(_entry(K, f"step-u[{r},{j}]", lhs, t(r + 1, j)))
        for r in range(n):
            out.append(_entry(K, f"definition[{r},{j}]", t(r, j), t_entry_by_definition(ctx, x, r, j)))
        i = j
        lhs = K.add(
            K.mul(_at(x, i + 1), t(n - 1, i + 1)),
            K.mul(ctx.u_at(i - 1), t(n - 1, i - 1)),
        )
        out.append(_entry(K, f"top-row[{i}]", lhs, K.mul(K.add(_at(x, i), ctx.u_at(i)), t(n - 1, i))))
        lhs = K.div(K.mul(tp(n - 1, j), ctx.u_at(j)), K.prod(ctx.u))
        rhs = K.div(K.mul(t(n - 1, j + 1), _at(x, j + 1)), K.prod(x))
        out.append(_entry(K, f"dual-table[{j}]", lhs, rhs))
    return out


def check_cyclic_product(K: Semifield, x: Sequence[Any]) -> list[dict]:
    n = len(x)
    base = K.prod(x)
    return [
        _entry(K, f"cyclic-product[{k}]", K.prod(_at(x, k + i) for i in range(1, n + 1)), base)
        for k in range(-n, n + 1)
    ]


def check_r_matrix(ctx: BirationalContext, x: Sequence[Any], g: Sequence[Any]) -> list[dict]:
    """f_u(x) = u a'/b' for (a', b') = eta(u, x), and gauge covariance of both maps."""
    K, u = ctx.K, ctx.u
    x = _check_x(ctx, x)
    a2, b2 = r_matrix(K, u, x)
    via_eta = [K.mul(ui, K.div(ai, bi)) for ui, ai, bi in zip(u, a2, b2)]
    y = f_u(ctx, x)
    out = [_tuple_entry(K, "eta-f", via_eta, y)]

    gu = [K.mul(gi, ui) for gi, ui in zip(g, u)]
    gx = [K.mul(gi, xi) for gi, xi in zip(g, x)]
    lhs = f_u(BirationalContext(K, gu), gx)
    out.append(_tuple_entry(K, "fu-gauge", lhs, [K.mul(gi, yi) for gi, yi in zip(g, y)]))

    ga2, gb2 = r_matrix(K, gu, gx)
    out.append(_tuple_entry(K, "eta-gauge[a]", ga2, [K.mul(gi, v) for gi, v in zip(g, a2)]))
    out.append(_tuple_entry(K, "eta-gauge[b]", gb2, [K.mul(gi, v) for gi, v in zip(g, b2)]))
    out.append(_tuple_entry(K, "back-formula", f_u_via_back_formula(ctx, x), y))
    return out


def rescale_to_equal_product(K: Semifield, u: Sequence[Any], x: Sequence[Any]) -> list:
    """Multiply x_1 by (u_1...u_n)/(x_1...x_n) so that both products agree."""
    x = list(x)
    x[0] = K.mul(x[0], K.div(K.prod(u), K.prod(x)))
    return x


def check_equal_case(ctx: BirationalContext, x: Sequence[Any]) -> dict:
    """Fixed point when the products of u and x coincide."""
    x = rescale_to_equal_product(ctx.K, ctx.u, x)
    return _tuple_entry(ctx.K, "equal-product-fixed-point", f_u(ctx, x), x)
