"""Sparse Laurent polynomials in x_1, ..., x_n with integer coefficients."""

from __future__ import annotations

import heapq
import json
from typing import Iterable, Mapping


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class LaurentPoly:
    """An element of Z[x_1^{+-1}, ..., x_n^{+-1}].

    ``terms`` maps exponent tuples (entries may be negative) to nonzero
    ints.  Instances are treated as immutable.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(int(v) for v in e)
                    if len(e) != n:
                        raise ValueError(f"exponent {e} has wrong length for n={n}")
                    clean[e] = int(c)
        self.terms = clean
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "LaurentPoly":
        # terms must already be clean: tuple keys of length n, nonzero ints
        p = cls.__new__(cls)
        p.n, p.terms, p._hash = n, terms, None
        return p

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {})

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {(0,) * n: 1})

    @classmethod
    def constant(cls, n: int, c: int) -> "LaurentPoly":
        return cls._raw(n, {(0,) * n: int(c)} if c else {})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        e = tuple(int(v) for v in exps)
        return cls._raw(len(e), {e: int(coeff)} if coeff else {})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        """x_i**power, with i counted from 1."""
        e = [0] * n
        e[i - 1] = power
        return cls.monomial(e)

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.n)
            return LaurentPoly._raw(self.n, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, 0) + ca * cb
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly.monomial([-v for v in e], c) ** (-k)
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Iterable[int]) -> "LaurentPoly":
        """Multiply by the monomial x^exps."""
        d = tuple(exps)
        return LaurentPoly._raw(
            self.n, {tuple(x + y for x, y in zip(e, d)): c for e, c in self.terms.items()}
        )

    def invert_variables(self) -> "LaurentPoly":
        """Substitute x_i -> x_i^{-1} for all i."""
        return LaurentPoly._raw(self.n, {tuple(-v for v in e): c for e, c in self.terms.items()})

    def permute_variables(self, perm: Iterable[int]) -> "LaurentPoly":
        """Substitute x_i -> x_{perm[i]} (0-based)."""
        perm = list(perm)
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.n
            for i, v in enumerate(e):
                f[perm[i]] = v
            out[tuple(f)] = c
        return LaurentPoly._raw(self.n, out)

    def swap_variables(self, i: int, j: int) -> "LaurentPoly":
        """Exchange x_i and x_j (1-based)."""
        perm = list(range(self.n))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return self.permute_variables(perm)

    # -- inspection ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(self.n, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, exps: Iterable[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def support(self) -> list[tuple]:
        return sorted(self.terms, reverse=True)

    def leading(self) -> tuple[tuple, int]:
        """Lex-greatest exponent and its coefficient."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> tuple:
        return tuple(min(e[i] for e in self.terms) for i in range(self.n))

    def is_symmetric(self) -> bool:
        return all(self.swap_variables(i, i + 1) == self for i in range(1, self.n))

    def evaluate(self, point):
        """Value at a point with invertible coordinates (e.g. Fractions)."""
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x**k
            total += term
        return total

    # -- division ------------------------------------------------------------

    def divexact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """The quotient self / divisor, which must be exact.

        Both operands are first moved into the polynomial ring by monomial
        factors; then leading-term division under lex order runs, with a heap
        tracking the current leading term of the running remainder.
        """
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero(self.n)
        s = self.min_exponents()
        t = divisor.min_exponents()
        p = self.shift([-v for v in s])
        d = divisor.shift([-v for v in t])
        q = _poly_divexact(p, d)
        return q.shift([a - b for a, b in zip(s, t)])

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [{"exps": list(e), "coeff": str(self.terms[e])} for e in sorted(self.terms)]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, n: int, obj: list[dict]) -> "LaurentPoly":
        return cls(n, {tuple(t["exps"]): int(t["coeff"]) for t in obj})

    @classmethod
    def from_json(cls, n: int, text: str) -> "LaurentPoly":
        return cls.from_json_obj(n, json.loads(text))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _poly_divexact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    n = p.n
    lead_e, lead_c = d.leading()
    rest = [(e, c) for e, c in d.terms.items() if e != lead_e]
    rem = dict(p.terms)
    heap = [tuple(-v for v in e) for e in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-v for v in key)
        c = rem.pop(e, 0)
        if not c:
            continue
        qe = tuple(a - b for a, b in zip(e, lead_e))
        if min(qe) < 0 or c % lead_c:
            raise NotDivisible(f"remainder term {c}*x^{e} survives division")
        qc = c // lead_c
        quot[qe] = quot.get(qe, 0) + qc
        for de, dc in rest:
            te = tuple(a + b for a, b in zip(qe, de))
            v = rem.get(te, 0) - qc * dc
            if v:
                if te not in rem:
                    heapq.heappush(heap, tuple(-x for x in te))
                rem[te] = v
            else:
                rem.pop(te, None)
    return LaurentPoly(n, quot)
