"""Characteristic dependence of b_R, exhibited on a small Stanley-Reisner ideal.

Not part of the acceptance gate. The ideal of minimal non-faces of the
6-vertex projective plane has a saturated set whose complex carries 2-torsion,
so its denominator over GF(2) differs from the one over Q.
"""

from conftest import FIXTURES, load
from monoring.homology import GF2, RATIONALS, FieldSpec
from monoring.oracle import bar_tor_dims
from monoring.poincare import denominator

IDEAL = FIXTURES / "exploratory" / "rp2_stanley_reisner.ideal"
TOP = (1,) * 6


def test_denominator_depends_on_characteristic():
    M = load(IDEAL)
    assert denominator(M, RATIONALS) == denominator(M, FieldSpec(3))
    diff = denominator(M, GF2) - denominator(M, RATIONALS)
    assert diff.to_str(M.names) == "-x1*x2*x3*x4*x5*x6*z^4 - x1*x2*x3*x4*x5*x6*z^5"


def test_bar_oracle_sees_the_extra_classes():
    M = load(IDEAL)
    assert bar_tor_dims(M, RATIONALS, TOP) == {5: 31, 6: 1}
    assert bar_tor_dims(M, GF2, TOP) == {4: 1, 5: 32, 6: 1}
