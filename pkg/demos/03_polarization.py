"""Polarization turns any monomial ideal into a square-free one with the same lcm-lattice.

Run: python3 demos/03_polarization.py
"""

# %%
from monoring import denominator, parse_ideal, polarize
from monoring.poincare import formula_sum
from monoring.polyring import substitute_variables

M = parse_ideal("vars: a b c\na^2*b\nb*c^2\na*c\n")
pol = polarize(M)
P = pol.generators
print("polarized variables:", " ".join(P.names))
for g in M.gens:
    print(f"  {M.format(g):8s} -> {P.format(pol.forward[g])}")

# %% compute on the square-free side, push coefficients back through the lattice map
b_pol = formula_sum(P)
pushed = substitute_variables(b_pol, pol.lattice_map, target_t=M.t)
print("b_R' =", b_pol.to_str(P.names))
print("f(b_R') =", pushed.to_str(M.names))
print("matches b_R:", pushed == denominator(M) == formula_sum(M))
