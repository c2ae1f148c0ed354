"""Golod rings: b_R = 1 - z(P^Q_R - 1), tested two ways.

Run: python3 demos/02_golod.py
"""

# %%
from monoring import betti_numerator, denominator, golod_via_criterion, is_golod, parse_ideal
from monoring.poincare import golod_rhs, pre_golod_failures

cases = {
    "path {ab, bc}": "vars: a b c\na*b\nb*c\n",
    "triangle": "vars: a b c\na*b\nb*c\na*c\n",
    "ci {ab, cd}": "vars: a b c d\na*b\nc*d\n",
    "{a^2, b^2}": "vars: a b\na^2\nb^2\n",
}

# %% definition vs lattice criterion
for label, text in cases.items():
    M = parse_ideal(text)
    print(f"{label:15s} golod={is_golod(M)} criterion={golod_via_criterion(M)}")

# %% where a non-Golod ring fails
M = parse_ideal(cases["ci {ab, cd}"])
print("Betti numerator:", betti_numerator(M).to_str(M.names))
print("b_R            :", denominator(M).to_str(M.names))
print("Golod guess    :", golod_rhs(M).to_str(M.names))
for m in pre_golod_failures(M):
    print("not pre-Golod below", M.format(m))
