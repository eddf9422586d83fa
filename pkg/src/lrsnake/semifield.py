"""Semifields: a commutative addition without zero, and an abelian multiplicative group.

Each semifield is an instance object carrying the structure operations; the
elements are plain Python values (``Fraction`` for the positive rationals,
``int`` for the min-tropical integers).  Code that is generic over the
semifield only ever touches elements through these methods.
"""

from __future__ import annotations

import numbers
import random
from fractions import Fraction
from functools import reduce
from typing import Any, Iterable

import numpy as np


class SemifieldMismatch(TypeError):
    """An element does not belong to the semifield it was handed to."""


class Semifield:
    name = "abstract"

    def check(self, a: Any) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sum(self, values: Iterable[Any]):
        vals = list(values)
        if not vals:
            raise ValueError("the empty sum is undefined in a semifield")
        return reduce(self.add, vals)

    def prod(self, values: Iterable[Any]):
        return reduce(self.mul, values, self.one())

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        return self.prod([a] * k)

    def equal(self, a, b) -> bool:
        return self.check(a) == self.check(b)

    def format(self, a) -> str:
        return str(a)

    def __repr__(self) -> str:
        return f"<semifield {self.name}>"


class PositiveRationals(Semifield):
    """Q+ with the usual sum and product; elements are positive ``Fraction``s."""

    name = "Q+"

    def check(self, a):
        if not isinstance(a, Fraction):
            raise SemifieldMismatch(f"{a!r} is not an element of Q+")
        if a.numerator <= 0:  # denominators are always positive
            raise SemifieldMismatch(f"{a} is not positive")
        return a

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return self.check(a) + self.check(b)

    def mul(self, a, b):
        return self.check(a) * self.check(b)

    def inv(self, a):
        return 1 / self.check(a)

    def div(self, a, b):
        return self.check(a) / self.check(b)

    def parse(self, text: str) -> Fraction:
        return self.check(Fraction(text.strip()))

    def format(self, a) -> str:
        a = self.check(a)
        return f"{a.numerator}/{a.denominator}"

    def random(self, rng: random.Random, lo: int = 1, hi: int = 20) -> Fraction:
        return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))


class MinTropical(Semifield):
    """(Z, min, +, 0): sum is min, product is integer addition."""

    name = "min-tropical"

    def check(self, a):
        if isinstance(a, bool) or not isinstance(a, numbers.Integral):
            raise SemifieldMismatch(f"{a!r} is not a tropical integer")
        return a

    def one(self):
        return 0

    def add(self, a, b):
        return min(self.check(a), self.check(b))

    def mul(self, a, b):
        return self.check(a) + self.check(b)

    def inv(self, a):
        return -self.check(a)

    def div(self, a, b):
        return self.check(a) - self.check(b)

    def parse(self, text: str) -> int:
        return int(text.strip())

    def format(self, a) -> str:
        return str(int(self.check(a)))

    def random(self, rng: random.Random, lo: int = -5, hi: int = 5) -> int:
        return rng.randint(lo, hi)


class MinTropicalBatch(MinTropical):
    """The min-tropical integers evaluated elementwise over int64 arrays.

    One call of a generic routine then evaluates it at a whole batch of
    points; used by the exhaustive grid sweeps.
    """

    name = "min-tropical[batch]"

    def check(self, a):
        if isinstance(a, np.ndarray):
            if a.dtype.kind != "i":
                raise SemifieldMismatch(f"array of dtype {a.dtype} is not tropical")
            return a
        return super().check(a)

    def add(self, a, b):
        return np.minimum(self.check(a), self.check(b))

    def equal(self, a, b) -> bool:
        return bool(np.all(np.asarray(a) == np.asarray(b)))


QPLUS = PositiveRationals()
TROPICAL = MinTropical()
TROPICAL_BATCH = MinTropicalBatch()

INSTANCES = {"qplus": QPLUS, "tropical": TROPICAL}
