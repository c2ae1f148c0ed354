"""Simplicial homology over different fields, and where the field starts to matter.

Run: python3 demos/05_homology.py
"""

# %%
import itertools

from monoring import GF2, RATIONALS, FieldSpec, denominator, normalize_generators, reduced_homology_gf
from monoring.complexes import SimplicialComplex, alexander_dual
from monoring.oracle import integer_snf_homology

facets = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
          (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]
rp2 = SimplicialComplex.from_facets(range(1, 7), facets)

# %% the projective plane: H_1 = Z/2
print("integer homology:", integer_snf_homology(rp2))
for field in (RATIONALS, GF2, FieldSpec(3)):
    print(f"  over {field}: {reduced_homology_gf(rp2, field)}")

# %% Alexander duality: z^n H(dual)(1/z) = z^3 H(delta)(z)
dual = alexander_dual(rp2)
print("dual:", reduced_homology_gf(dual, GF2).reflect().shift(6), "vs", reduced_homology_gf(rp2, GF2).shift(3))

# %% the Stanley-Reisner ideal of rp2 has a field-dependent denominator
nonfaces = [c for c in itertools.combinations(range(1, 7), 3) if c not in facets]
M = normalize_generators([tuple(int(v in c) for v in range(1, 7)) for c in nonfaces])
diff = denominator(M, GF2) - denominator(M, RATIONALS)
print("b_R over GF(2) minus over Q:", diff.to_str(M.names))
