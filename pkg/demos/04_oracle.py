"""Checking b_R against Tor computed from the bar complex.

Run: python3 demos/04_oracle.py
"""

# %%
from monoring import GF2, RATIONALS, MultiPoly, denominator, parse_ideal
from monoring.oracle import bar_strand, bar_tor_dims, verify_main_identity

M = parse_ideal("vars: a b c d\na*b\nb*c\nc*d\n")

# %% one multidegree strand by hand
strand = bar_strand(M.gens, (1, 1, 1, 0))
for n in sorted(strand.bases):
    print(f"B_{n}: {len(strand.bases[n])} tensors")
print("Tor at abc:", bar_tor_dims(M, RATIONALS, (1, 1, 1, 0)))

# %% the identity b_R * P = prod(1 + x_i z), coefficient by coefficient
for field in (RATIONALS, GF2):
    rep = verify_main_identity(M, field, max_z=6, max_deg=6)
    print(field, "ok" if rep.ok else rep.first, f"({rep.checked} coefficients)")

# %% a corrupted denominator is caught at the first wrong coefficient
bad = denominator(M) + MultiPoly.term(M.t, (1, 1, 0, 0), 2)
print("mutant:", verify_main_identity(M, max_z=5, max_deg=5, denominator=bad).first)
