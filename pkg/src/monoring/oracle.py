"""Brute-force verifiers that share no code path with the denominator formula.

* the multidegree strands of the normalized bar complex give Tor^R(k, k);
* the Taylor complex reduced modulo the maximal ideal gives Tor^Q(R, k);
* Smith normal form over Z gives integral simplicial homology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import gcd

from .complexes import SimplicialComplex, chain_complex
from .errors import CapExceeded
from .homology import RATIONALS, FieldSpec, rank
from .monomials import DEFAULT_CAP, GeneratorSet, bits, check_cap, divides, lcm_of, popcount, quotient
from .polyring import MultiPoly, TruncatedSeries

STRAND_CAP = 200_000


# ---------------------------------------------------------------- bar complex

@dataclass
class BarStrand:
    """Multidegree-alpha strand of the normalized bar complex of R = Q/(M).

    ``monomials`` lists the non-unit divisors of x^alpha outside the ideal;
    ``bases[n]`` lists the tensors [u_1 | ... | u_n] (as tuples of indices
    into ``monomials``) whose product is x^alpha.
    """

    alpha: tuple
    monomials: list
    bases: dict
    merge: dict = dc_field(repr=False)

    def differential(self, n: int) -> list:
        """Rows of d_n: B_n -> B_{n-1}, d = sum_j (-1)^j (merge entries j, j+1), terms in I dropped."""
        if n < 2:
            return [{} for _ in self.bases.get(n, [])]
        index = {s: i for i, s in enumerate(self.bases.get(n - 1, []))}
        merge = self.merge
        rows = []
        for s in self.bases.get(n, []):
            row = {}
            for j in range(n - 1):
                m = merge.get((s[j], s[j + 1]))
                if m is not None:
                    row[index[s[:j] + (m,) + s[j + 2:]]] = -1 if j % 2 else 1
            rows.append(row)
        return rows

    def tensors(self, n: int) -> list:
        return [tuple(self.monomials[i] for i in s) for s in self.bases.get(n, [])]

    def size(self) -> int:
        return sum(len(b) for b in self.bases.values())


def bar_strand(gens, alpha, cap: int = STRAND_CAP) -> BarStrand:
    alpha = tuple(alpha)
    gens = [tuple(g) for g in gens]
    divisors = [
        u for u in itertools.product(*(range(a + 1) for a in alpha))
        if any(u) and not any(divides(g, u) for g in gens)
    ]
    ids = {u: i for i, u in enumerate(divisors)}
    merge = {}
    for i, u in enumerate(divisors):
        for j, v in enumerate(divisors):
            w = tuple(a + b for a, b in zip(u, v))
            if w in ids:
                merge[(i, j)] = ids[w]
    memo = {}
    total = [0]

    def tails(a):
        if a in memo:
            return memo[a]
        if not any(a):
            return [()]
        out = []
        for i, u in enumerate(divisors):
            if divides(u, a):
                for s in tails(quotient(a, u)):
                    out.append((i,) + s)
        total[0] += len(out)
        if total[0] > cap:
            raise CapExceeded(f"bar strand at {alpha}", total[0], cap)
        memo[a] = out
        return out

    bases = {}
    if any(alpha):
        for s in tails(alpha):
            bases.setdefault(len(s), []).append(s)
    return BarStrand(alpha, divisors, bases, merge)


@lru_cache(maxsize=None)
def _strand_dims(alpha, gens, characteristic, cap):
    strand = bar_strand(gens, alpha, cap)
    field = FieldSpec(characteristic)
    top = max(strand.bases, default=0)
    ranks = {n: rank(strand.differential(n), field) for n in range(2, top + 1)}
    dims = {}
    for n, basis in strand.bases.items():
        d = len(basis) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        assert d >= 0
        if d:
            dims[n] = d
    return dims


def bar_tor_dims(M: GeneratorSet, field: FieldSpec, alpha, cap: int = STRAND_CAP, peel: bool = True) -> dict:
    """``{i: dim Tor^R_{i,alpha}(k, k)}`` from the bar strand (zero entries omitted).

    Only generators dividing x^alpha matter. A variable of alpha that none of
    them involves splits off as a polynomial tensor factor whose Tor is an
    exterior algebra on one class of degree 1; it is peeled off before the
    strand is built (``peel=False`` keeps them in the strand). Strands are
    cached on (alpha, generators, characteristic).
    """
    alpha = tuple(alpha)
    if not any(alpha):
        return {0: 1}
    relevant = tuple(sorted(g for g in M.gens if divides(g, alpha)))
    if not peel:
        return dict(_strand_dims(alpha, relevant, field.characteristic, cap))
    used = [any(g[k] for g in relevant) for k in range(len(alpha))]
    free = [k for k, a in enumerate(alpha) if a and not used[k]]
    if any(alpha[k] > 1 for k in free):
        return {}
    core = tuple(0 if k in free else a for k, a in enumerate(alpha))
    if not any(core):
        return {len(free): 1}
    dims = _strand_dims(core, relevant, field.characteristic, cap)
    return {i + len(free): d for i, d in dims.items()}


def multidegrees(t: int, max_deg: int):
    """All alpha in N^t with total degree <= max_deg, by degree then reverse lex."""
    out = []
    for d in range(max_deg + 1):
        for c in itertools.combinations_with_replacement(range(t), d):
            a = [0] * t
            for i in c:
                a[i] += 1
            out.append(tuple(a))
    return out


def oracle_series(M: GeneratorSet, field: FieldSpec = RATIONALS, max_z: int = 7, max_deg: int = 7) -> TruncatedSeries:
    """sum of dim Tor^R_{i,alpha}(k, k) x^alpha z^i over |alpha| <= max_deg, i <= max_z."""
    terms = {}
    for alpha in multidegrees(M.t, max_deg):
        for i, d in bar_tor_dims(M, field, alpha).items():
            if i <= max_z:
                terms[(alpha, i)] = d
    return TruncatedSeries(M.t, terms, max_z, max_deg)


@dataclass
class IdentityReport:
    ok: bool
    checked: int
    discrepancies: list
    field: FieldSpec
    bounds: tuple

    @property
    def first(self):
        return self.discrepancies[0] if self.discrepancies else None


def verify_main_identity(
    M: GeneratorSet,
    field: FieldSpec = RATIONALS,
    max_z: int = 7,
    max_deg: int = 7,
    denominator: MultiPoly | None = None,
) -> IdentityReport:
    """Check b_R * P_oracle == prod(1 + x_i z) coefficientwise within the bounds.

    ``denominator`` overrides the computed b_R (used to exercise the checker).
    Discrepancies are (alpha, z, expected, got), sorted by z then alpha.
    """
    if denominator is None:
        from .poincare import denominator as compute

        denominator = compute(M, field)
    series = oracle_series(M, field, max_z, max_deg)
    lhs = TruncatedSeries.from_poly(denominator, max_z, max_deg) * series
    rhs = TruncatedSeries.from_poly(MultiPoly.koszul(M.t), max_z, max_deg)
    bad = []
    keys = set(lhs.terms) | set(rhs.terms)
    for alpha, z in keys:
        got, want = lhs.coefficient(alpha, z), rhs.coefficient(alpha, z)
        if got != want:
            bad.append((alpha, z, want, got))
    bad.sort(key=lambda d: (d[1], d[0]))
    checked = len(multidegrees(M.t, max_deg)) * (max_z + 1)
    return IdentityReport(not bad, checked, bad, field, (max_z, max_deg))


# ---------------------------------------------------------------- Taylor complex

@dataclass
class TaylorComplexData:
    """Taylor resolution on M: basis y_S for subsets S, with

    d(y_S) = sum_{s in S} sgn(s, S) (m_S / m_{S - s}) y_{S - s},  sgn = (-1)^(position of s in S).
    """

    M: GeneratorSet
    lcms: list

    def degree_basis(self, i: int) -> list:
        return [S for S in range(1 << len(self.M)) if popcount(S) == i]

    def boundary(self, S: int) -> list:
        """[(sign, coefficient monomial, S - s)] for each s in S."""
        out = []
        for j, s in enumerate(bits(S)):
            T = S & ~(1 << s)
            out.append((-1 if j % 2 else 1, quotient(self.lcms[S], self.lcms[T]), T))
        return out

    def check_d_squared(self) -> bool:
        for S in range(1 << len(self.M)):
            acc = {}
            for sign, coef, T in self.boundary(S):
                for sign2, coef2, U in self.boundary(T):
                    key = (U, tuple(a + b for a, b in zip(coef, coef2)))
                    acc[key] = acc.get(key, 0) + sign * sign2
            if any(acc.values()):
                return False
        return True


def taylor_complex(M: GeneratorSet, cap: int = DEFAULT_CAP) -> TaylorComplexData:
    check_cap(len(M), cap, "taylor_complex")
    return TaylorComplexData(M, [lcm_of(S, M) for S in range(1 << len(M))])


def taylor_betti_dims(M: GeneratorSet, field: FieldSpec = RATIONALS, cap: int = DEFAULT_CAP) -> MultiPoly:
    """sum dim Tor^Q_{i,alpha}(R, k) x^alpha z^i from the Taylor complex tensored with k.

    After reduction an entry survives (as its sign) exactly when m_S = m_{S - s},
    so the reduced complex splits by multidegree m_S.
    """
    tc = taylor_complex(M, cap)
    by_alpha = {}
    for S in range(1 << len(M)):
        by_alpha.setdefault(tc.lcms[S], {}).setdefault(popcount(S), []).append(S)
    terms = {}
    for alpha, strata in by_alpha.items():
        index = {S: pos for faces in strata.values() for pos, S in enumerate(faces)}
        ranks = {}
        for i, faces in strata.items():
            rows = []
            for S in faces:
                row = {}
                for sign, coef, T in tc.boundary(S):
                    if not any(coef):
                        row[index[T]] = sign
                rows.append(row)
            ranks[i] = rank(rows, field)
        for i, faces in strata.items():
            d = len(faces) - ranks.get(i, 0) - ranks.get(i + 1, 0)
            if d:
                terms[(alpha, i)] = d
    return MultiPoly(M.t, terms)


# ---------------------------------------------------------------- Smith normal form

def smith_invariants(matrix) -> list:
    """Nonzero invariant factors (positive, each dividing the next) of an integer matrix."""
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        while True:
            piv = None
            for i in range(r, rows):
                for j in range(c, cols):
                    if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                return _normalize_diag(diag)
            i, j = piv
            A[r], A[i] = A[i], A[r]
            for row in A:
                row[c], row[j] = row[j], row[c]
            p = A[r][c]
            done = True
            for i in range(r + 1, rows):
                q = A[i][c] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                if A[i][c]:
                    done = False
            for j in range(c + 1, cols):
                q = A[r][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[c]
                if A[r][j]:
                    done = False
            if done:
                break
        diag.append(abs(A[r][c]))
        r += 1
    return _normalize_diag(diag)


def _normalize_diag(diag) -> list:
    # enforce the divisibility chain: (a, b) -> (gcd, lcm)
    d = [x for x in diag if x]
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                g = gcd(d[i], d[j])
                if d[i] != g:
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
    return sorted(d)


def integer_snf_homology(delta: SimplicialComplex) -> dict:
    """``{i: (free rank, [torsion invariant factors > 1])}`` of the reduced integral homology."""
    cc = chain_complex(delta)
    invariants = {i: smith_invariants(cc.matrix(i)) for i in cc.boundaries}
    out = {}
    for i, basis in cc.bases.items():
        rk_out = len(invariants.get(i, []))
        incoming = invariants.get(i + 1, [])
        free = len(basis) - rk_out - len(incoming)
        torsion = [x for x in incoming if x > 1]
        if free or torsion:
            out[i] = (free, torsion)
    return out


def field_dims_from_snf(snf: dict, field: FieldSpec) -> dict:
    """Universal coefficients: dim H_i(k) = free_i + t_p(i) + t_p(i-1), t_p counting factors divisible by p."""
    p = field.characteristic
    out = {}
    for i in set(snf) | {i + 1 for i in snf}:
        free, tors = snf.get(i, (0, []))
        d = free
        if p:
            d += sum(1 for x in tors if x % p == 0)
            d += sum(1 for x in snf.get(i - 1, (0, []))[1] if x % p == 0)
        if d:
            out[i] = d
    return out
