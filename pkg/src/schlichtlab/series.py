"""Truncated complex power-series arithmetic.

A :class:`ComplexSeries` holds the coefficients ``c[0] .. c[N]`` of a power
series truncated at order ``N``.  Binary operations truncate at the smaller
of the two operand orders and nothing extends a series silently, so every
stored coefficient is exact formal-series arithmetic through the result
order (up to rounding).

``log``, ``exp`` and ``sqrt`` use the standard derivative recurrences
(convolutions of the form ``f' = g' * f``), which are O(N^2) and stable in
double precision for the orders used here (N <= 256).  All values are
immutable after construction; every operation is a pure function.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DivisionByZeroConstantTerm,
    InnerConstantTermNonzero,
    InvalidParameter,
    UnnormalizedConstantTerm,
)

# log/sqrt demand a constant term this close to 1 (normalized branch).
NORMALIZED_TOL = 1e-12
# constant terms below this are treated as exactly zero by compose().
_ZERO_TOL = 1e-14


class ComplexSeries:
    """Power series ``c[0] + c[1] z + ... + c[N] z^N`` truncated at order N.

    The coefficient array is complex128, read-only, and guaranteed finite.
    Arithmetic operators accept another series or a scalar.  Calling the
    series evaluates the plain partial sum at a point (no tail estimate;
    certified evaluation lives with the function families).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidParameter("coefficients must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            raise InvalidParameter("coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> "ComplexSeries":
        return cls(np.zeros(order + 1))

    @classmethod
    def one(cls, order: int) -> "ComplexSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = 1.0
        return cls(c)

    @classmethod
    def identity(cls, order: int) -> "ComplexSeries":
        """The series of ``z`` itself."""
        if order < 1:
            raise InvalidParameter("identity needs order >= 1")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, ComplexSeries):
            n = min(self.order, other.order)
            return ComplexSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])
        c = self.coeffs.copy()
        c[0] += other
        return ComplexSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return ComplexSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, ComplexSeries) else -complex(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ComplexSeries):
            n = min(self.order, other.order)
            return ComplexSeries(np.convolve(self.coeffs, other.coeffs)[: n + 1])
        return ComplexSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, ComplexSeries):
            return ComplexSeries(self.coeffs / other)
        if other.coeffs[0] == 0:
            raise DivisionByZeroConstantTerm("divisor has zero constant term")
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        q = np.zeros(n + 1, dtype=np.complex128)
        for k in range(n + 1):
            q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
        return ComplexSeries(q)

    def __rtruediv__(self, other):
        num = np.zeros(self.order + 1, dtype=np.complex128)
        num[0] = other
        return ComplexSeries(num) / self

    # -- transcendental maps ---------------------------------------------

    def log(self) -> "ComplexSeries":
        """Formal logarithm; requires constant term 1 (normalized branch)."""
        f = self.coeffs
        if abs(f[0] - 1.0) > NORMALIZED_TOL:
            raise UnnormalizedConstantTerm(
                f"log needs constant term 1, got {f[0]!r}"
            )
        n = self.order
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = np.log(f[0])
        kout = np.zeros(n + 1, dtype=np.complex128)  # k * out[k], filled as we go
        for k in range(1, n + 1):
            acc = k * f[k] - np.dot(kout[1:k], f[k - 1 : 0 : -1])
            out[k] = acc / (k * f[0])
            kout[k] = k * out[k]
        return ComplexSeries(out)

    def exp(self) -> "ComplexSeries":
        """Formal exponential (any constant term)."""
        f = self.coeffs
        n = self.order
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = np.exp(f[0])
        kf = np.arange(n + 1) * f  # k * f[k]
        for k in range(1, n + 1):
            out[k] = np.dot(kf[1 : k + 1], out[k - 1 :: -1][:k]) / k
        return ComplexSeries(out)

    def sqrt(self) -> "ComplexSeries":
        """Formal square root with constant term 1; requires c[0] = 1."""
        f = self.coeffs
        if abs(f[0] - 1.0) > NORMALIZED_TOL:
            raise UnnormalizedConstantTerm(
                f"sqrt needs constant term 1, got {f[0]!r}"
            )
        n = self.order
        out = np.zeros(n + 1, dtype=np.complex128)
        out[0] = np.sqrt(f[0])
        for k in range(1, n + 1):
            acc = f[k] - np.dot(out[1:k], out[k - 1 : 0 : -1])
            out[k] = acc / (2.0 * out[0])
        return ComplexSeries(out)

    # -- calculus and evaluation -----------------------------------------

    def deriv(self) -> "ComplexSeries":
        if self.order == 0:
            return ComplexSeries([0.0])
        return ComplexSeries(self.coeffs[1:] * np.arange(1, self.order + 1))

    def __call__(self, z):
        """Partial sum at ``z`` (scalar or array), by Horner's rule."""
        return np.polyval(self.coeffs[::-1], z)

    def __repr__(self):
        head = np.array2string(self.coeffs[:4], precision=6, separator=", ")
        tail = ", ..." if self.order > 3 else ""
        return f"ComplexSeries(order={self.order}, coeffs={head[:-1]}{tail}])"


def compose(outer: ComplexSeries, inner: ComplexSeries) -> ComplexSeries:
    """Truncated composition ``outer(inner(z))``.

    ``inner`` must vanish at 0 (constant terms below 1e-14 are accepted as
    rounding noise and zeroed).  The result is exact through the common
    truncation order ``min(outer.order, inner.order)``.
    """
    c0 = inner.coeffs[0]
    if abs(c0) > _ZERO_TOL:
        raise InnerConstantTermNonzero(
            f"inner series has constant term {c0!r}, expected 0"
        )
    n = min(outer.order, inner.order)
    g = inner.coeffs[: n + 1].copy()
    g[0] = 0.0
    acc = np.zeros(n + 1, dtype=np.complex128)
    for c in outer.coeffs[n::-1]:
        acc = np.convolve(acc, g)[: n + 1]
        acc[0] += c
    return ComplexSeries(acc)


def eval_partial(s: ComplexSeries, z) -> complex:
    """Exact partial sum of ``s`` at ``z`` (alias for calling the series)."""
    return s(z)
