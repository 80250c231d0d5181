"""Truncated power series over exact rationals or doubles.

A TruncatedSeries holds coefficients c_0..c_K of a power series cut at
degree K.  Every series carries a mode tag: "rational" coefficients are
`fractions.Fraction` and all arithmetic is exact; "float" coefficients are
doubles.  The two modes never mix inside one operation; exact mode exists
because the combinatorial identities checked downstream hold exactly for
rational edge densities, while spectral routes are inherently floating
point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import ModeMismatchError

MODE_RATIONAL = "rational"
MODE_FLOAT = "float"

#: Degree used by callers that do not pick their own truncation.
DEFAULT_DEGREE = 16

Scalar = Union[Fraction, int, float]


def _coerce(value, mode):
    if mode == MODE_RATIONAL:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ModeMismatchError(
                f"rational mode requires int or Fraction coefficients, got {type(value).__name__}"
            )
        return Fraction(value)
    if isinstance(value, (int, float, np.floating, np.integer)):
        return float(value)
    raise ModeMismatchError(
        f"float mode requires numeric coefficients, got {type(value).__name__}"
    )


class TruncatedSeries:
    """Coefficients c_0..c_K of a power series truncated at degree K."""

    __slots__ = ("coeffs", "mode")

    def __init__(self, coeffs: Iterable[Scalar], mode: str):
        if mode not in (MODE_RATIONAL, MODE_FLOAT):
            raise ValueError(f"unknown series mode {mode!r}")
        cs = tuple(_coerce(c, mode) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def K(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, K: int, mode: str = MODE_RATIONAL) -> "TruncatedSeries":
        return cls([0] * (K + 1), mode)

    @classmethod
    def one(cls, K: int, mode: str = MODE_RATIONAL) -> "TruncatedSeries":
        return cls([1] + [0] * K, mode)

    def resized(self, K: int) -> "TruncatedSeries":
        """Zero-pad or truncate to degree K."""
        if K == self.K:
            return self
        if K < self.K:
            return TruncatedSeries(self.coeffs[: K + 1], self.mode)
        pad = (Fraction(0),) if self.mode == MODE_RATIONAL else (0.0,)
        return TruncatedSeries(self.coeffs + pad * (K - self.K), self.mode)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.mode == other.mode and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.mode, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries(mode={self.mode!r}, coeffs={list(self.coeffs)!r})"

    def to_json_dict(self) -> dict:
        """Serialize as {"mode": ..., "coeffs": [...]}, rationals as "num/den"."""
        if self.mode == MODE_RATIONAL:
            cs = [f"{c.numerator}/{c.denominator}" for c in self.coeffs]
        else:
            cs = list(self.coeffs)
        return {"mode": self.mode, "coeffs": cs}

    @classmethod
    def from_json_dict(cls, d: dict) -> "TruncatedSeries":
        mode = d["mode"]
        if mode == MODE_RATIONAL:
            return cls([Fraction(c) for c in d["coeffs"]], mode)
        return cls([float(c) for c in d["coeffs"]], mode)


def _pair(a: TruncatedSeries, b: TruncatedSeries, K: int):
    if a.mode != b.mode:
        raise ModeMismatchError(f"cannot combine {a.mode} and {b.mode} series")
    return a.resized(K), b.resized(K)


def series_mul(a: TruncatedSeries, b: TruncatedSeries, K: int) -> TruncatedSeries:
    """Cauchy product of a and b truncated at degree K."""
    a, b = _pair(a, b, K)
    zero = Fraction(0) if a.mode == MODE_RATIONAL else 0.0
    out = [zero] * (K + 1)
    for i, ai in enumerate(a.coeffs):
        if ai == 0:
            continue
        for j in range(0, K + 1 - i):
            out[i + j] += ai * b.coeffs[j]
    return TruncatedSeries(out, a.mode)


def series_exp(b: TruncatedSeries, K: int) -> TruncatedSeries:
    """Formal exponential of b, which must have zero constant term.

    Uses the O(K^2) recurrence obtained from a' = b'a:

        a_0 = 1,    n a_n = sum_{j=1..n} j b_j a_{n-j}.
    """
    if b.coeffs[0] != 0:
        raise ValueError("series_exp requires a zero constant term")
    b = b.resized(K)
    rational = b.mode == MODE_RATIONAL
    out = [Fraction(1) if rational else 1.0]
    for n in range(1, K + 1):
        acc = Fraction(0) if rational else 0.0
        for j in range(1, n + 1):
            bj = b.coeffs[j]
            if bj == 0:
                continue
            acc += j * bj * out[n - j]
        out.append(acc / n)
    return TruncatedSeries(out, b.mode)


def series_log(a: TruncatedSeries, K: int) -> TruncatedSeries:
    """Formal logarithm of a, which must have constant term 1.

    Helper inverse of series_exp via the derivative recurrence
    n a_n = sum_{j=1..n} j b_j a_{n-j} solved for b_n.
    """
    if a.coeffs[0] != 1:
        raise ValueError("series_log requires constant term 1")
    a = a.resized(K)
    rational = a.mode == MODE_RATIONAL
    out = [Fraction(0) if rational else 0.0]
    for n in range(1, K + 1):
        acc = n * a.coeffs[n]
        for j in range(1, n):
            bj = out[j]
            if bj == 0:
                continue
            acc -= j * bj * a.coeffs[n - j]
        out.append(acc / n)
    return TruncatedSeries(out, a.mode)


def series_scale_arg(a: TruncatedSeries, s: Scalar) -> TruncatedSeries:
    """Argument scaling a(z) -> a(s z): coefficient k picks up a factor s^k."""
    s = _coerce(s, a.mode)
    out = []
    power = Fraction(1) if a.mode == MODE_RATIONAL else 1.0
    for c in a.coeffs:
        out.append(c * power)
        power = power * s
    return TruncatedSeries(out, a.mode)


def series_eval(a: TruncatedSeries, z: Scalar):
    """Horner evaluation of the truncated polynomial at z."""
    acc = a.coeffs[-1]
    for c in reversed(a.coeffs[:-1]):
        acc = acc * z + c
    return acc


def series_csv_rows(a: TruncatedSeries) -> list:
    """Rows (k, c_k) with rational coefficients rendered as num/den strings."""
    if a.mode == MODE_RATIONAL:
        return [(k, f"{c.numerator}/{c.denominator}") for k, c in enumerate(a.coeffs)]
    return [(k, repr(c)) for k, c in enumerate(a.coeffs)]
