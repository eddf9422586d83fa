"""The piecewise-linear involution f_mu on Z^n and the bijection phi built from it."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import birational as bir
from .semifield import TROPICAL, TROPICAL_BATCH
from .tuples import IntTuple, RSetParams, Snake, enumerate_R, harpoon, is_snake, shift, size


@dataclass(frozen=True)
class TropicalContext:
    mu: IntTuple

    def __post_init__(self):
        object.__setattr__(self, "mu", IntTuple(self.mu))

    @property
    def n(self) -> int:
        return len(self.mu)


@dataclass(frozen=True)
class PhiParams:
    n: int
    a: int
    b: int
    mu: Snake

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"phi needs n >= 2, got {self.n}")
        if self.a < 0 or self.b < 0:
            raise ValueError("a and b must be nonnegative")
        mu = Snake(self.mu)
        if len(mu) != self.n or not mu.is_partition:
            raise ValueError(f"mu must be a partition with {self.n} entries, got {tuple(mu)}")
        object.__setattr__(self, "mu", mu)

    @property
    def alpha(self) -> Snake:
        return Snake((self.a + self.b,) + (self.a,) * (self.n - 2) + (0,))

    @property
    def beta(self) -> Snake:
        return Snake((self.a + self.b,) + (self.b,) * (self.n - 2) + (0,))

    @property
    def context(self) -> TropicalContext:
        return TropicalContext(self.mu)


def tau(ctx: TropicalContext, nu, j: int) -> int:
    """min over k of (nu_{j+1}+...+nu_{j+k}) + (mu_{j+k+1}+...+mu_{j+n-1})."""
    n, mu = ctx.n, ctx.mu
    nu = IntTuple(nu)
    best = None
    for k in range(n):
        val = sum(nu.at(j + i) for i in range(1, k + 1))
        val += sum(mu.at(j + i) for i in range(k + 1, n))
        if best is None or val < best:
            best = val
    return best


def f_mu(ctx: TropicalContext, gamma) -> IntTuple:
    """eta_i = mu_i + (mu_{i-1} + tau_{i-1}) - (gamma_{i+1} + tau_{i+1})."""
    gamma = IntTuple(gamma)
    if len(gamma) != ctx.n:
        raise ValueError("dimension mismatch")
    n, mu = ctx.n, ctx.mu
    taus = [tau(ctx, gamma, j) for j in range(n)]
    return IntTuple(
        mu.at(i) + (mu.at(i - 1) + taus[(i - 1) % n]) - (gamma.at(i + 1) + taus[(i + 1) % n])
        for i in range(1, n + 1)
    )


def f_mu_batch(mu, gammas: np.ndarray) -> np.ndarray:
    """f_mu applied to every row of an (N, n) integer array."""
    mu = np.asarray(mu, dtype=np.int64)
    g = np.asarray(gammas, dtype=np.int64)
    n = mu.shape[0]
    taus = np.empty_like(g)
    for j in range(n):
        # k = 0 term: mu_{j+1} + ... + mu_{j+n-1}
        mu_tail = sum(int(mu[(j + i - 1) % n]) for i in range(1, n))
        cur = np.full(g.shape[0], mu_tail, dtype=np.int64)
        best = cur.copy()
        for k in range(1, n):
            idx = (j + k - 1) % n
            cur = cur + g[:, idx] - mu[idx]
            np.minimum(best, cur, out=best)
        taus[:, j] = best
    eta = np.empty_like(g)
    for i in range(n):
        # 0-based column i is the entry with mathematical index i + 1
        eta[:, i] = (
            mu[i]
            + mu[(i - 1) % n]
            + taus[:, i % n]
            - g[:, (i + 1) % n]
            - taus[:, (i + 2) % n]
        )
    return eta


def f_mu_generic(mu, gamma) -> IntTuple:
    """f_mu obtained by running the semifield-generic f_u in (Z, min, +)."""
    ctx = bir.BirationalContext(TROPICAL, tuple(int(m) for m in mu))
    return IntTuple(bir.f_u(ctx, [int(v) for v in gamma]))


def f_mu_generic_batch(mu, gammas: np.ndarray) -> np.ndarray:
    g = np.asarray(gammas, dtype=np.int64)
    ctx = bir.BirationalContext(TROPICAL_BATCH, tuple(int(m) for m in mu))
    cols = bir.f_u(ctx, [g[:, i] for i in range(g.shape[1])])
    return np.stack([np.broadcast_to(c, (g.shape[0],)) for c in cols], axis=1)


def phi(params: PhiParams, omega) -> IntTuple:
    """phi(omega) = f_mu(omega - a) + b."""
    omega = IntTuple(omega)
    if len(omega) != params.n:
        raise ValueError("dimension mismatch")
    return shift(f_mu(params.context, shift(omega, -params.a)), params.b)


def phi_inverse(params: PhiParams, omega) -> IntTuple:
    """Inverse of phi, namely omega -> f_mu(omega - b) + a."""
    omega = IntTuple(omega)
    return shift(f_mu(params.context, shift(omega, -params.b)), params.a)


def phi_batch(params: PhiParams, omegas: np.ndarray) -> np.ndarray:
    return f_mu_batch(params.mu, np.asarray(omegas, dtype=np.int64) - params.a) + params.b


@dataclass
class PhiTrace:
    nu: IntTuple
    tau: IntTuple  # tau_1, ..., tau_n
    eta: IntTuple
    result: IntTuple
    hash_index: dict = field(default_factory=dict)


def phi_trace(params: PhiParams, omega) -> PhiTrace:
    """Evaluate phi literally, reducing every index through i -> i#."""
    n, a, b, mu = params.n, params.a, params.b, params.mu
    omega = IntTuple(omega)
    if len(omega) != n:
        raise ValueError("dimension mismatch")

    def h(i: int) -> int:
        return (i - 1) % n + 1

    nu = {i: omega[i - 1] - a for i in range(1, n + 1)}
    m = {i: mu[i - 1] for i in range(1, n + 1)}
    taus = {}
    for j in range(1, n + 1):
        taus[j] = min(
            sum(nu[h(j + i)] for i in range(1, k + 1)) + sum(m[h(j + i)] for i in range(k + 1, n))
            for k in range(n)
        )
    eta = [m[h(i)] + (m[h(i - 1)] + taus[h(i - 1)]) - (nu[h(i + 1)] + taus[h(i + 1)]) for i in range(1, n + 1)]
    return PhiTrace(
        nu=IntTuple(nu[i] for i in range(1, n + 1)),
        tau=IntTuple(taus[j] for j in range(1, n + 1)),
        eta=IntTuple(eta),
        result=IntTuple(e + b for e in eta),
        hash_index={i: h(i) for i in range(-1, 2 * n + 1)},
    )


def phi_direct(params: PhiParams, omega) -> IntTuple:
    return phi_trace(params, omega).result


def in_R(mu, gamma, a: int, b: int, nu) -> bool:
    return (
        is_snake(nu)
        and harpoon(mu, nu)
        and harpoon(gamma, nu)
        and size(mu) - size(nu) == a
        and size(gamma) - size(nu) == b
    )


def zeta_match(ctx: TropicalContext, gamma, nu, a: int, b: int) -> Snake:
    """Send nu in R_{mu,a,b}(gamma) to its partner in R_{mu,b,a}(f_mu(gamma))."""
    mu = ctx.mu
    gamma = IntTuple(gamma)
    if not in_R(mu, gamma, a, b, nu):
        raise ValueError(f"{tuple(nu)} is not in R_(mu,{a},{b})({gamma})")
    eta = f_mu(ctx, gamma)
    return Snake(min(m, e) - min(m, g) + v for m, e, g, v in zip(mu, eta, gamma, nu))


# -- counterexamples to uniqueness in the tropical semifield -----------------


def local_equation_holds(u, x, y, i: int) -> bool:
    """(u_i + x_i)(1/u_{i+1} + 1/x_{i+1}) = same with y, read in (Z, min, +)."""
    K = TROPICAL

    def side(z):
        return K.mul(
            K.add(bir._at(u, i), bir._at(z, i)),
            K.add(K.inv(bir._at(u, i + 1)), K.inv(bir._at(z, i + 1))),
        )

    return side(x) == side(y)


def product_equation_holds(u, x, y) -> bool:
    K = TROPICAL
    return K.mul(K.prod(y), K.prod(x)) == K.pow(K.prod(u), 2)


def reproduce_counterexamples(max_g: int = 5) -> dict:
    family = []
    for g in range(max_g + 1):
        for k in range(g + 1):
            u, x, y = (0, 0, g), (1, 2, 0), (k + 1, 2, k)
            ok = all(local_equation_holds(u, x, y, i) for i in range(1, 4))
            family.append({"g": g, "k": k, "u": list(u), "x": list(x), "y": list(y), "pass": ok})

    u, x = (2, 1, 1, 0), (1, 1, 1, 1)
    candidates = [(1, 1, 1, 1), (2, 2, 0, 0)]
    four = []
    for y in candidates:
        ok = all(local_equation_holds(u, x, y, i) for i in range(1, 5)) and product_equation_holds(u, x, y)
        four.append({"u": list(u), "x": list(x), "y": list(y), "pass": ok})
    fx = list(f_mu_generic(u, x))
    distinct = candidates[0] != candidates[1]
    return {
        "n3_family": family,
        "n4_instance": four,
        "n4_f_u_of_x": fx,
        "n4_solutions_distinct": distinct,
        "pass": all(e["pass"] for e in family) and all(e["pass"] for e in four) and distinct,
    }


def search_local_solutions(u, x, lo: int, hi: int, with_product: bool = False) -> list[IntTuple]:
    """Every y in [lo, hi]^n solving the local equations (and optionally the product one).

    Exploratory only: the box bounds the search, so an empty or short list
    says nothing about solutions outside it.
    """
    n = len(u)
    out = []
    for y in product(range(lo, hi + 1), repeat=n):
        if all(local_equation_holds(u, x, y, i) for i in range(1, n + 1)):
            if not with_product or product_equation_holds(u, x, y):
                out.append(IntTuple(y))
    return out


# -- exhaustive sweep --------------------------------------------------------


def _grid(n: int, lo: int, hi: int) -> np.ndarray:
    axes = [np.arange(lo, hi + 1, dtype=np.int64)] * n
    return np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)


def tropical_identity_masks(mu: np.ndarray, g: np.ndarray, eta: np.ndarray) -> dict[str, np.ndarray]:
    """Row masks (True = holds) for each tropical identity between gamma and eta."""
    n = mu.shape[0]
    mu_sum = int(mu.sum())
    checks = {
        "sum-rule": eta.sum(axis=1) + g.sum(axis=1) == 2 * mu_sum,
        "size-difference": eta.sum(axis=1) - mu_sum == mu_sum - g.sum(axis=1),
    }
    m_g = np.minimum(mu, g)
    m_e = np.minimum(mu, eta)
    local = np.ones(g.shape[0], dtype=bool)
    for i in range(n):
        nx = (i + 1) % n
        lhs = m_g[:, i] + np.minimum(-mu[nx], -g[:, nx])
        rhs = m_e[:, i] + np.minimum(-mu[nx], -eta[:, nx])
        local &= lhs == rhs
    checks["local"] = local
    checks["global"] = (m_g - g).sum(axis=1) == (m_e - mu).sum(axis=1)
    minmax = np.ones(g.shape[0], dtype=bool)
    for i in range(n - 1):
        lhs = m_e[:, i] - m_g[:, i]
        rhs = np.maximum(mu[i + 1], eta[:, i + 1]) - np.maximum(mu[i + 1], g[:, i + 1])
        minmax &= lhs == rhs
    checks["min-max"] = minmax
    checks["recover-gamma"] = (mu - m_e + m_g).sum(axis=1) == g.sum(axis=1)
    return checks


def sweep_tropical(ns=(2, 3, 4), lo: int = -3, hi: int = 3, max_failures: int = 20) -> dict:
    """Exhaustive check of f_mu over all mu, gamma in [lo, hi]^n."""
    start = time.perf_counter()
    instances = 0
    failures = []
    per_identity: dict[str, int] = {}
    for n in ns:
        grid = _grid(n, lo, hi)
        for mu in grid:
            eta = f_mu_batch(mu, grid)
            checks = {
                "involution": np.all(f_mu_batch(mu, eta) == grid, axis=1),
                "native-equals-generic": np.all(f_mu_generic_batch(mu, grid) == eta, axis=1),
            }
            checks.update(tropical_identity_masks(mu, grid, eta))
            instances += grid.shape[0]
            for name, mask in checks.items():
                bad = np.flatnonzero(~mask)
                per_identity[name] = per_identity.get(name, 0) + int(bad.size)
                for r in bad[: max(0, max_failures - len(failures))]:
                    failures.append(
                        {"identity": name, "mu": mu.tolist(), "gamma": grid[r].tolist(), "eta": eta[r].tolist()}
                    )
    return {
        "instances": instances,
        "failures": failures,
        "failure_counts": per_identity,
        "elapsed_ms": int((time.perf_counter() - start) * 1000),
    }


def check_R_transport(mu, gamma, a: int, b: int) -> bool:
    """|R_{mu,b,a}(f_mu(gamma))| == |R_{mu,a,b}(gamma)|, and zeta matches the two sets."""
    ctx = TropicalContext(mu)
    eta = f_mu(ctx, gamma)
    src = enumerate_R(RSetParams(ctx.mu, IntTuple(gamma), a, b))
    dst = enumerate_R(RSetParams(ctx.mu, eta, b, a))
    if len(src) != len(dst):
        return False
    image = {tuple(zeta_match(ctx, gamma, nu, a, b)) for nu in src}
    return image == {tuple(v) for v in dst}
