"""Truncated formal power series in x over the q-fraction field.

Carrier of the exponential formula relating masses of field extensions to
masses of etale algebras: coefficients are exact ``QFrac`` values, exp and
log are computed coefficient-by-coefficient from the differential-equation
recurrences (no factorial blowup, O(N^2) coefficient multiplications).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .qexpr import QExpr, QFrac

__all__ = ["TruncatedSeries", "ConstantTermError", "DEFAULT_TRUNCATION"]

DEFAULT_TRUNCATION = 12


class ConstantTermError(ValueError):
    """Constant coefficient violates the precondition of exp or log."""


def _as_qfrac(value: object) -> QFrac:
    if isinstance(value, QFrac):
        return value
    if isinstance(value, (int, Fraction, QExpr)):
        return QFrac(value)
    raise TypeError(f"cannot use {type(value).__name__} as a series coefficient")


class TruncatedSeries:
    """Power series known exactly through degree ``truncation``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[object], truncation: int | None = None):
        cs = [_as_qfrac(c) for c in coeffs]
        if truncation is not None:
            if truncation < 0:
                raise ValueError("truncation degree must be non-negative")
            cs = cs[: truncation + 1]
            cs.extend(QFrac(0) for _ in range(truncation + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the degree-0 coefficient")
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(truncation: int = DEFAULT_TRUNCATION) -> "TruncatedSeries":
        return TruncatedSeries([], truncation)

    @staticmethod
    def one(truncation: int = DEFAULT_TRUNCATION) -> "TruncatedSeries":
        return TruncatedSeries([1], truncation)

    @staticmethod
    def x(truncation: int = DEFAULT_TRUNCATION) -> "TruncatedSeries":
        return TruncatedSeries([0, 1], truncation)

    @staticmethod
    def from_coefficients(coeffs: Sequence[object]) -> "TruncatedSeries":
        return TruncatedSeries(coeffs)

    # -- inspection ------------------------------------------------------------

    @property
    def truncation(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[QFrac, ...]:
        return self._coeffs

    def coefficient(self, n: int) -> QFrac:
        if not 0 <= n <= self.truncation:
            raise IndexError(f"coefficient {n} beyond truncation {self.truncation}")
        return self._coeffs[n]

    def truncate(self, truncation: int) -> "TruncatedSeries":
        if truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self._coeffs, truncation)

    # -- arithmetic --------------------------------------------------------------

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.truncation, other.truncation)
        return TruncatedSeries([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.truncation, other.truncation)
        return TruncatedSeries([self._coeffs[i] - other._coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: object) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            n = min(self.truncation, other.truncation)
            out = [QFrac(0)] * (n + 1)
            for i in range(n + 1):
                a = self._coeffs[i]
                if a.is_zero:
                    continue
                for j in range(n + 1 - i):
                    b = other._coeffs[j]
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
            return TruncatedSeries(out)
        scalar = _as_qfrac(other)
        return TruncatedSeries([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    # -- exp / log ------------------------------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """Formal exponential; requires constant coefficient 0."""
        if not self._coeffs[0].is_zero:
            raise ConstantTermError("exp needs a series with zero constant term")
        n = self.truncation
        s = self._coeffs
        e = [QFrac(1)] + [QFrac(0)] * n
        for m in range(1, n + 1):
            acc = QFrac(0)
            for k in range(1, m + 1):
                if not s[k].is_zero:
                    acc = acc + s[k] * e[m - k] * k
            e[m] = acc * Fraction(1, m)
        return TruncatedSeries(e)

    def log(self) -> "TruncatedSeries":
        """Formal logarithm; requires constant coefficient 1."""
        if self._coeffs[0] != QFrac(1):
            raise ConstantTermError("log needs a series with constant term 1")
        n = self.truncation
        s = self._coeffs
        l = [QFrac(0)] * (n + 1)
        for m in range(1, n + 1):
            acc = QFrac(0)
            for k in range(1, m):
                if not l[k].is_zero and not s[m - k].is_zero:
                    acc = acc + l[k] * s[m - k] * k
            l[m] = s[m] - acc * Fraction(1, m)
        return TruncatedSeries(l)

    # -- comparison / serialization ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def to_json(self) -> list:
        return [c.to_json() for c in self._coeffs]

    @staticmethod
    def from_json(data: Iterable) -> "TruncatedSeries":
        return TruncatedSeries([QFrac.from_json(entry) for entry in data])

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:5])
        if self.truncation >= 5:
            shown += ", ..."
        return f"TruncatedSeries[N={self.truncation}]({shown})"
