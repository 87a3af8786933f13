"""Truncated integer power series in q.

Coefficients are Python ints (arbitrary precision).  Truncation is explicit:
arithmetic takes the minimum of the operand truncations, never silently
extends a series.
"""

from __future__ import annotations

from .partitions import partition_count


class QSeries:
    """Integer power series known exactly up to q^truncation."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs=(), truncation: int | None = None):
        coeffs = [int(c) for c in coeffs]
        if truncation is None:
            truncation = max(len(coeffs) - 1, 0)
        if truncation < 0:
            raise ValueError("truncation must be nonnegative")
        if len(coeffs) > truncation + 1:
            raise ValueError("more coefficients than the truncation admits")
        coeffs += [0] * (truncation + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "truncation", truncation)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @staticmethod
    def zero(truncation: int) -> "QSeries":
        return QSeries((), truncation)

    @staticmethod
    def one(truncation: int) -> "QSeries":
        return QSeries((1,), truncation)

    @staticmethod
    def monomial(degree: int, truncation: int, coefficient: int = 1) -> "QSeries":
        if degree > truncation:
            return QSeries.zero(truncation)
        return QSeries([0] * degree + [coefficient], truncation)

    def coeff(self, d: int) -> int:
        if d > self.truncation:
            raise IndexError(f"degree {d} beyond truncation {self.truncation}")
        return self.coeffs[d]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, truncation: int) -> "QSeries":
        if truncation > self.truncation:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: truncation + 1], truncation)

    def _common(self, other):
        if not isinstance(other, QSeries):
            raise TypeError(f"expected QSeries, got {type(other).__name__}")
        return min(self.truncation, other.truncation)

    def __add__(self, other):
        t = self._common(other)
        return QSeries([self.coeffs[d] + other.coeffs[d] for d in range(t + 1)], t)

    def __sub__(self, other):
        t = self._common(other)
        return QSeries([self.coeffs[d] - other.coeffs[d] for d in range(t + 1)], t)

    def __mul__(self, other):
        t = self._common(other)
        out = [0] * (t + 1)
        for i, a in enumerate(self.coeffs[: t + 1]):
            if a == 0:
                continue
            for j in range(t + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return QSeries(out, t)

    def agrees_with(self, other: "QSeries") -> bool:
        """Coefficientwise equality up to the shared truncation."""
        t = self._common(other)
        return self.coeffs[: t + 1] == other.coeffs[: t + 1]

    def to_json(self) -> dict:
        return {"truncation": self.truncation, "coeffs": list(self.coeffs)}

    def __eq__(self, other):
        return (
            isinstance(other, QSeries)
            and self.truncation == other.truncation
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.truncation, self.coeffs))

    def __repr__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                terms.append(f"{head}q^{d}" if d > 1 else f"{head}q")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"<{body} + O(q^{self.truncation + 1})>"


def euler_factor(k: int, truncation: int) -> QSeries:
    """prod_{i>=1} (1 - q^{ki}) truncated; factors beyond the cutoff are 1."""
    if k < 1:
        raise ValueError("k must be positive")
    out = QSeries.one(truncation)
    for i in range(1, truncation // k + 1):
        out = out * (QSeries.one(truncation) - QSeries.monomial(k * i, truncation))
    return out


def partition_series(k: int, truncation: int) -> QSeries:
    """sum_{delta} q^{k|delta|}: coefficient p(m) at q^{km}, zero elsewhere."""
    if k < 1:
        raise ValueError("k must be positive")
    coeffs = [0] * (truncation + 1)
    for m in range(truncation // k + 1):
        coeffs[k * m] = partition_count(m)
    return QSeries(coeffs, truncation)
