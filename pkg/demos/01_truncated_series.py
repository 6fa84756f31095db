"""Truncated power-series arithmetic: the substrate everything else uses.

Run:  python demos/01_truncated_series.py
"""

import numpy as np

from schlichtlab import ComplexSeries, compose

print("=" * 64)
print("1. ring arithmetic truncates at the smaller operand order")
print("=" * 64)

geometric = ComplexSeries(np.ones(8))          # 1/(1-z) through order 7
one_minus_z = ComplexSeries([1, -1, 0, 0, 0, 0, 0, 0])
print("1/(1-z) * (1-z)      ->", (geometric * one_minus_z).coeffs.real)

koebe_over_z = ComplexSeries(np.arange(1, 9))  # k(z)/z = 1 + 2z + 3z^2 + ...
print("k(z)/z               ->", koebe_over_z.coeffs.real)
print("reciprocal (1-z)^2   ->", (1.0 / koebe_over_z).coeffs.real)

print()
print("=" * 64)
print("2. log/exp/sqrt via derivative recurrences, and their round trips")
print("=" * 64)

log_geo = geometric.log()
print("log 1/(1-z)          ->", np.round(log_geo.coeffs.real, 6), " (= z^n/n)")
print("exp(log) round trip  ->",
      np.max(np.abs(log_geo.exp().coeffs - geometric.coeffs)))

root = koebe_over_z.sqrt()
print("sqrt(k(z)/z)         ->", root.coeffs.real, " (= 1/(1-z))")
print("sqrt^2 round trip    ->",
      np.max(np.abs((root * root).coeffs - koebe_over_z.coeffs)))

print()
print("=" * 64)
print("3. composition (inner must vanish at 0) and evaluation")
print("=" * 64)

koebe = ComplexSeries(np.arange(8))
half_z = ComplexSeries([0, 0.5, 0, 0, 0, 0, 0, 0])
print("k(z/2) coefficients  ->", compose(koebe, half_z).coeffs.real)
print("k at z=0.5 (partial) ->", ComplexSeries(np.arange(65))(0.5).real,
      "   closed form:", 0.5 / 0.25)
