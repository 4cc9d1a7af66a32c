"""Exact arithmetic in Z[zeta_n], plus integer Laurent polynomials in A.

Elements of ``Z[zeta_n]`` are stored as coefficient vectors in the power
basis ``1, zeta, ..., zeta^(phi(n)-1)``, i.e. reduced modulo the n-th
cyclotomic polynomial. That representation is unique, so equality is a
comparison of integer tuples.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache
from typing import Iterable, Mapping


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (ascending coefficients), ``den`` monic."""
    num = list(num)
    dd = len(den) - 1
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd] if dd else [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row ``e`` is zeta^e in the power basis, for ``0 <= e < 2n``."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    vec = [1] + [0] * (deg - 1) if deg else []
    for _ in range(2 * n):
        rows.append(tuple(vec))
        # multiply by zeta: shift, then fold the top coefficient back
        top = vec[-1]
        vec = [0] + vec[:-1]
        if top:
            vec = [v - top * phi[j] for j, v in enumerate(vec)]
    return tuple(rows)


class CyclotomicInteger:
    """An element of ``Z[zeta_n]`` with ``zeta = exp(2 pi i / n)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[int] = ()) -> None:
        deg = len(cyclotomic_polynomial(order)) - 1
        raw = [int(c) for c in coeffs]
        if len(raw) > deg:
            _, raw = _poly_divmod_monic(raw, list(cyclotomic_polynomial(order)))
        raw = raw + [0] * (deg - len(raw))
        self.order = order
        self.coeffs = tuple(raw)

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, order: int) -> "CyclotomicInteger":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "CyclotomicInteger":
        return cls(order, (1,))

    @classmethod
    def root_power(cls, order: int, exponent: int) -> "CyclotomicInteger":
        """``zeta^exponent`` for any integer exponent."""
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = _reduction_table(order)[exponent % order]
        return obj

    @classmethod
    def from_laurent(cls, order: int, terms: Mapping[int, int]) -> "CyclotomicInteger":
        """Evaluate ``sum c_e zeta^e`` exactly."""
        table = _reduction_table(order)
        acc = [0] * (len(cyclotomic_polynomial(order)) - 1)
        for e, c in terms.items():
            if c:
                row = table[e % order]
                for j, r in enumerate(row):
                    if r:
                        acc[j] += c * r
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = tuple(acc)
        return obj

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "CyclotomicInteger":
        if isinstance(other, CyclotomicInteger):
            if other.order != self.order:
                raise ValueError(f"orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, int):
            return CyclotomicInteger(self.order, (other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CyclotomicInteger(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        table = _reduction_table(self.order)
        acc = [0] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    for t, r in enumerate(table[i + j]):
                        if r:
                            acc[t] += a * b * r
        obj = CyclotomicInteger.__new__(CyclotomicInteger)
        obj.order = self.order
        obj.coeffs = tuple(acc)
        return obj

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers only exist for roots of unity; use root_power")
        result = CyclotomicInteger.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicInteger(self.order, (other,))
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInteger({self.order}, {list(self.coeffs)})"

    def __complex__(self) -> complex:
        return self.to_complex()

    def to_complex(self) -> complex:
        zeta = cmath.exp(2j * math.pi / self.order)
        return sum((c * zeta**k for k, c in enumerate(self.coeffs) if c), 0j)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


# -- Laurent polynomials in A, as {exponent: coefficient} -------------------

Laurent = dict[int, int]


def laurent_mul(p: Mapping[int, int], q: Mapping[int, int]) -> Laurent:
    out: Laurent = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def laurent_add(p: Mapping[int, int], q: Mapping[int, int]) -> Laurent:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def laurent_shift(p: Mapping[int, int], k: int) -> Laurent:
    return {e + k: c for e, c in p.items()}


def laurent_pow(p: Mapping[int, int], n: int) -> Laurent:
    out: Laurent = {0: 1}
    for _ in range(n):
        out = laurent_mul(out, p)
    return out


LOOP_VALUE: Laurent = {2: -1, -2: -1}  # d = -A^2 - A^-2
