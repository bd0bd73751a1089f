"""Exact arithmetic in real quadratic fields Q[√d], and 2x2 matrices over them.

A QuadNum is a + b·√d with rational a, b and d a squarefree integer ≥ 2, so
every identity checked downstream (module ratios, traces of Veech elements)
is exact. No floating point enters this module.

Pure rationals are QuadNums with b = 0; they compare equal and combine across
different d, which keeps mixed expressions like ``QuadNum.sqrt(5) + 1`` legal.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

Rationalish = Union[int, Fraction]


def _square_part(d: int) -> int:
    """Largest s with s² dividing d."""
    s = 1
    k = 2
    while k * k <= d:
        while d % (k * k) == 0:
            d //= k * k
            s *= k
        k += 1
    return s


def _check_d(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"d must be an int, got {d!r}")
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    s = _square_part(d)
    if s != 1:
        raise ValueError(
            f"d={d} is not squarefree: d = {s}**2 * {d // (s * s)}; "
            f"use d={d // (s * s)} and fold the factor {s} into b"
        )
    return d


@dataclass(frozen=True)
class QuadNum:
    """a + b·√d, exactly."""

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a, b=0, d=2):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", _check_d(d))

    @staticmethod
    def sqrt(d: int) -> "QuadNum":
        return QuadNum(0, 1, d)

    @staticmethod
    def rational(x: Rationalish, d: int = 2) -> "QuadNum":
        return QuadNum(Fraction(x), 0, d)

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.d)

    def _key(self):
        # rationals are equal across fields
        return (self.a, self.b, self.d if self.b else 0)

    def __eq__(self, other) -> bool:
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # mixed signs: compare a² with b²·d
        lhs, rhs = a * a, b * b * self.d
        if a > 0:  # b < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def __lt__(self, other):
        return (self - other)._sign() < 0

    def __le__(self, other):
        return (self - other)._sign() <= 0

    def __gt__(self, other):
        return (self - other)._sign() > 0

    def __ge__(self, other):
        return (self - other)._sign() >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    # -- field operations ----------------------------------------------------

    def _common_d(self, other: "QuadNum") -> int:
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        if self.d != other.d:
            raise ValueError(f"incompatible fields Q[sqrt({self.d})] and Q[sqrt({other.d})]")
        return self.d

    def __add__(self, other):
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadNum(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        d = self._common_d(other)
        return QuadNum(
            self.a * other.a + self.b * other.b * d,
            self.a * other.b + self.b * other.a,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, self.d)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero QuadNum")
        d = self._common_d(other)
        # rationalize by the conjugate: norm = a² - b²·d is a nonzero rational
        norm = other.a * other.a - other.b * other.b * d
        num = self * other.conjugate()
        return QuadNum(num.a / norm, num.b / norm, d)

    def __rtruediv__(self, other):
        return _coerce(other, self.d) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        out = QuadNum(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- text form -----------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        root = f"sqrt({self.d})" if abs(self.b) == 1 else f"{abs(self.b)}*sqrt({self.d})"
        if self.a == 0:
            return root if self.b > 0 else f"-{root}"
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {root}"

    def __repr__(self) -> str:
        return f"QuadNum({self.a!r}, {self.b!r}, {self.d})"

    _RAT = r"[+-]?\d+(?:/\d+)?"
    _ROOT = r"(?:(?P<coef>\d+(?:/\d+)?)\*)?sqrt\((?P<d>\d+)\)"

    @staticmethod
    def parse(text: str, d: int | None = None) -> "QuadNum":
        """Inverse of str(): accepts ``p/q``, ``r/s*sqrt(d)``, ``p/q ± r/s*sqrt(d)``."""
        if re.search(r"\d\s+[\d/]", text):
            raise ValueError(f"cannot parse QuadNum: {text!r}")
        t = re.sub(r"\s", "", text)

        def root_part(m, sign: str) -> "QuadNum":
            dd = int(m.group("d"))
            if d is not None and d != dd:
                raise ValueError(f"expected sqrt({d}), found sqrt({dd})")
            b = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
            a = Fraction(m.group("rat")) if "rat" in m.groupdict() and m.group("rat") else Fraction(0)
            return QuadNum(a, -b if sign == "-" else b, dd)

        m = re.fullmatch(QuadNum._RAT, t)
        if m:
            return QuadNum(Fraction(t), 0, d if d is not None else 2)
        m = re.fullmatch(r"(?P<sign>[+-])?" + QuadNum._ROOT, t)
        if m:
            return root_part(m, m.group("sign") or "+")
        m = re.fullmatch(f"(?P<rat>{QuadNum._RAT})(?P<sign>[+-])" + QuadNum._ROOT, t)
        if m:
            return root_part(m, m.group("sign"))
        raise ValueError(f"cannot parse QuadNum: {text!r}")


def _coerce(x, d: int):
    if isinstance(x, QuadNum):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QuadNum(Fraction(x), 0, d)
    return NotImplemented


# -- function-style aliases ---------------------------------------------------


def qadd(x: QuadNum, y) -> QuadNum:
    return x + y


def qmul(x: QuadNum, y) -> QuadNum:
    return x * y


def qdiv(x: QuadNum, y) -> QuadNum:
    return x / y


def conjugate_num(x: QuadNum) -> QuadNum:
    return x.conjugate()


class MinimalPoly(NamedTuple):
    degree: int
    coeffs: tuple[Fraction, ...]  # ascending, monic: coeffs[-1] == 1

    def __call__(self, x):
        out = QuadNum(0, 0, x.d) if isinstance(x, QuadNum) else Fraction(0)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out


def minimal_poly_degree(x: QuadNum) -> MinimalPoly:
    """Degree of x over Q, with the monic minimal polynomial.

    Rationals have degree 1 (X - a); otherwise degree 2 with
    X² - 2a·X + (a² - b²·d).
    """
    if x.b == 0:
        return MinimalPoly(1, (-x.a, Fraction(1)))
    return MinimalPoly(2, (x.a * x.a - x.b * x.b * x.d, -2 * x.a, Fraction(1)))


# -- matrices -----------------------------------------------------------------


@dataclass(frozen=True)
class QuadMatrix:
    """2x2 matrix over a single Q[√d]."""

    m11: QuadNum
    m12: QuadNum
    m21: QuadNum
    m22: QuadNum

    def __init__(self, m11, m12, m21, m22, d: int | None = None):
        entries = [m11, m12, m21, m22]
        ds = {e.d for e in entries if isinstance(e, QuadNum) and e.b != 0}
        if d is not None:
            ds.add(d)
        if len(ds) > 1:
            raise ValueError(f"incompatible fields in matrix entries: {sorted(ds)}")
        dd = ds.pop() if ds else 2
        coerced = []
        for e in entries:
            c = _coerce(e, dd)
            if c is NotImplemented:
                raise TypeError(f"bad matrix entry {e!r}")
            coerced.append(QuadNum(c.a, c.b, dd) if c.b == 0 else c)
        for name, val in zip(("m11", "m12", "m21", "m22"), coerced):
            object.__setattr__(self, name, val)

    @staticmethod
    def identity(d: int = 2) -> "QuadMatrix":
        return QuadMatrix(1, 0, 0, 1, d=d)

    @property
    def d(self) -> int:
        return self.m11.d

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def __mul__(self, other: "QuadMatrix") -> "QuadMatrix":
        return QuadMatrix(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def trace(self) -> QuadNum:
        return self.m11 + self.m22

    def det(self) -> QuadNum:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __str__(self) -> str:
        return f"[[{self.m11}, {self.m12}], [{self.m21}, {self.m22}]]"


def mat_mul(A: QuadMatrix, B: QuadMatrix) -> QuadMatrix:
    return A * B


def mat_trace(A: QuadMatrix) -> QuadNum:
    return A.trace()


def mat_det(A: QuadMatrix) -> QuadNum:
    return A.det()
