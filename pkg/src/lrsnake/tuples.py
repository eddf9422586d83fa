"""Integer n-tuples, snakes and the interleaving relation.

Tuples are 1-indexed in the mathematical sense and extend n-periodically to
all integer indices, so ``t.at(0) == t.at(n)`` and ``t.at(n + 1) == t.at(1)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class IntTuple(tuple):
    """An immutable n-tuple of integers with cyclic 1-based access."""

    def __new__(cls, entries: Iterable[int] = ()):
        vals = tuple(int(e) for e in entries)
        if not vals:
            raise ValueError("an n-tuple needs n >= 1 entries")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def at(self, i: int) -> int:
        """Entry ``i`` with ``i`` reduced into ``{1, ..., n}`` modulo n."""
        return self[(i - 1) % len(self)]

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_tuple(self)})"

    def __str__(self) -> str:
        return format_tuple(self)


class Snake(IntTuple):
    """A weakly decreasing n-tuple of integers."""

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if not is_snake(self):
            raise ValueError(f"not weakly decreasing: {tuple(self)}")
        return self

    @property
    def is_partition(self) -> bool:
        return self[-1] >= 0


@dataclass(frozen=True)
class RSetParams:
    mu: IntTuple
    gamma: IntTuple
    a: int
    b: int

    def __post_init__(self):
        if len(self.mu) != len(self.gamma):
            raise ValueError("mu and gamma must have the same length")


def is_snake(lam: Sequence[int]) -> bool:
    return all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def is_partition(lam: Sequence[int]) -> bool:
    return is_snake(lam) and (len(lam) == 0 or lam[-1] >= 0)


def shift(lam: Sequence[int], d: int) -> IntTuple:
    cls = Snake if isinstance(lam, Snake) else IntTuple
    return cls(v + d for v in lam)


def dual(lam: Sequence[int]) -> IntTuple:
    """``(-lam_n, ..., -lam_1)``; an involution that maps snakes to snakes."""
    cls = Snake if isinstance(lam, Snake) else IntTuple
    return cls(-v for v in reversed(lam))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def harpoon(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu_1 >= lam_1 >= mu_2 >= lam_2 >= ... >= mu_n >= lam_n``."""
    if len(mu) != len(lam):
        raise ValueError("dimension mismatch")
    n = len(mu)
    for i in range(n):
        if mu[i] < lam[i]:
            return False
        if i + 1 < n and lam[i] < mu[i + 1]:
            return False
    return True


def staircase(n: int) -> Snake:
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    return Snake(range(n - 1, -1, -1))


def ominus(b: int, a: int, n: int) -> Snake:
    """The snake ``(b, 0, ..., 0, -a)`` with ``n - 2`` interior zeros."""
    if n < 2:
        raise ValueError(f"b (-) a needs n >= 2, got {n}")
    if a < 0 or b < 0:
        raise ValueError(f"b (-) a needs a, b >= 0, got a={a}, b={b}")
    return Snake((b,) + (0,) * (n - 2) + (-a,))


def enumerate_R(params: RSetParams) -> list[Snake]:
    """All snakes nu with mu -> nu, |mu| - |nu| = a, gamma -> nu, |gamma| - |nu| = b.

    The interleaving chains pin nu_i to ``[max(mu_{i+1}, gamma_{i+1}),
    min(mu_i, gamma_i)]`` for i < n; the size equation then forces nu_n.
    Returns an empty list when no such snake exists (in particular when
    gamma is not a snake).
    """
    mu, gamma, a, b = params.mu, params.gamma, params.a, params.b
    n = len(mu)
    if not is_snake(gamma) or not is_snake(mu):
        return []
    if size(mu) - size(gamma) != a - b:
        return []
    target = size(mu) - a
    bounds = [
        (max(mu[i + 1], gamma[i + 1]), min(mu[i], gamma[i])) for i in range(n - 1)
    ]
    last_cap = min(mu[-1], gamma[-1])
    out: list[Snake] = []

    def rec(i: int, prefix: list[int], partial: int) -> None:
        if i == n - 1:
            last = target - partial
            if last <= last_cap:
                out.append(Snake(prefix + [last]))
            return
        lo, hi = bounds[i]
        for v in range(hi, lo - 1, -1):
            prefix.append(v)
            rec(i + 1, prefix, partial + v)
            prefix.pop()

    rec(0, [], 0)
    return out


def snakes_in_box(n: int, lo: int, hi: int) -> Iterator[Snake]:
    """Every snake of length n with entries in ``[lo, hi]``, lex-descending."""

    def rec(prefix: list[int], cap: int) -> Iterator[Snake]:
        if len(prefix) == n:
            yield Snake(prefix)
            return
        for v in range(cap, lo - 1, -1):
            prefix.append(v)
            yield from rec(prefix, v)
            prefix.pop()

    yield from rec([], hi)


def partitions_of(total: int, n: int, max_part: int | None = None) -> Iterator[Snake]:
    """Partitions of ``total`` with at most n parts, as length-n snakes."""
    if max_part is None:
        max_part = total

    def rec(prefix: list[int], remaining: int, cap: int) -> Iterator[Snake]:
        slots = n - len(prefix)
        if slots == 0:
            if remaining == 0:
                yield Snake(prefix)
            return
        if remaining > cap * slots:
            return
        for v in range(min(cap, remaining), -1, -1):
            prefix.append(v)
            yield from rec(prefix, remaining - v, v)
            prefix.pop()

    if total < 0:
        return
    yield from rec([], total, max_part)


def partitions_in_box(n: int, max_part: int) -> Iterator[Snake]:
    """All of Par[n] with first entry at most ``max_part``."""
    return snakes_in_box(n, 0, max_part)


def format_tuple(t: Iterable[int]) -> str:
    return ",".join(str(int(v)) for v in t)


def parse_tuple(text: str, n: int | None = None) -> IntTuple:
    """Parse ``"5,3,-1"``; a given ``n`` must match the entry count."""
    parts = [p.strip() for p in text.strip().split(",")]
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed tuple {text!r}") from None
    if n is not None and len(vals) != n:
        raise ValueError(f"tuple {text!r} has {len(vals)} entries, expected {n}")
    return IntTuple(vals)


def snakes_to_json(snakes: Iterable[Sequence[int]]) -> str:
    return json.dumps([format_tuple(s) for s in snakes])
