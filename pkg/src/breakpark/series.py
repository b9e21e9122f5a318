"""Truncated power series with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import PreconditionError


class ExactSeries:
    """Power series in t truncated at a fixed order, coefficients Fraction.

    order T means coefficients of t^0 .. t^T are tracked.
    """

    def __init__(self, coeffs: Sequence, order: int):
        if order < 0:
            raise PreconditionError("order must be nonnegative")
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other):
        return (
            isinstance(other, ExactSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"ExactSeries({self.coeffs}, order={self.order})"

    def _coerce(self, other) -> "ExactSeries":
        if isinstance(other, ExactSeries):
            if other.order != self.order:
                raise PreconditionError("series orders differ")
            return other
        return ExactSeries([other], self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return ExactSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __sub__(self, other):
        other = self._coerce(other)
        return ExactSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order
        )

    def __mul__(self, other):
        other = self._coerce(other)
        out = [Fraction(0)] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return ExactSeries(out, self.order)

    def reciprocal(self) -> "ExactSeries":
        """1/self; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise PreconditionError("reciprocal needs nonzero constant term")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / self.coeffs[0]
        for k in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, k + 1):
                acc += self.coeffs[j] * inv[k - j]
            inv[k] = -acc / self.coeffs[0]
        return ExactSeries(inv, self.order)

    def pow_int(self, e: int) -> "ExactSeries":
        """self**e for any integer e (negative via reciprocal)."""
        base = self if e >= 0 else self.reciprocal()
        e = abs(e)
        result = ExactSeries([1], self.order)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def log(self) -> "ExactSeries":
        """Formal logarithm; requires constant term 1.

        Uses the recurrence from (log F)' = F'/F, all exact rationals.
        """
        if self.coeffs[0] != 1:
            raise PreconditionError("log needs constant term 1")
        # L' * F = F'  =>  k*F_k = sum_{j=1..k} j*L_j*F_{k-j}
        l = [Fraction(0)] * (self.order + 1)
        for k in range(1, self.order + 1):
            acc = Fraction(k) * self.coeffs[k]
            for j in range(1, k):
                acc -= Fraction(j) * l[j] * self.coeffs[k - j]
            l[k] = acc / k
        return ExactSeries(l, self.order)


def one_minus_power(k: int, order: int) -> ExactSeries:
    """The series 1 - t^k truncated at `order`."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = Fraction(1)
    if k <= order:
        coeffs[k] = Fraction(-1)
    return ExactSeries(coeffs, order)
