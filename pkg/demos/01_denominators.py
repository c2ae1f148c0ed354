"""Denominators of Poincaré series for a few small monomial rings.

Run: python3 demos/01_denominators.py
"""

# %% setup
from monoring import GF2, RATIONALS, denominator, denominator_via_deviations, denominator_via_intervals, parse_ideal
from monoring.poincare import poincare_series

triangle = parse_ideal("vars: a b c\na*b\nb*c\na*c\n")
path = parse_ideal("vars: a b c d\na*b\nb*c\nc*d\n")
mixed = parse_ideal("vars: a b\na^2\na*b\n")

# %% the denominator b_R(x, z)
for label, M in [("triangle", triangle), ("path", path), ("{a^2, ab}", mixed)]:
    print(f"{label:10s} b_R = {denominator(M).to_str(M.names)}")

# %% three independent routes give the same polynomial (square-free only for the last)
for M in (triangle, path):
    routes = {denominator(M), denominator_via_intervals(M), denominator_via_deviations(M)}
    print("routes agree:", len(routes) == 1)

# %% the series itself, truncated; numerator is prod(1 + x_i z)
series = poincare_series(mixed, RATIONALS, max_z=4, max_deg=4)
print("P(a, b, z) =", series.to_str(mixed.names), "+ ...")

# %% nothing here depends on the field
print("Q vs GF(2):", denominator(path, RATIONALS) == denominator(path, GF2))
