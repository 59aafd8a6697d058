"""Partial representations of groups on exact matrices.

Finite groups carry full matrix tables checked exhaustively; infinite groups
are handled through rational-point oracles (exact matrix elements, seeded
sampling).  Includes extension-by-zero, induction from a coset datum,
the idempotent projectors P_x and the index-2 decomposition into a global
part and an extended-by-zero part.
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field as _dcfield
from fractions import Fraction
from typing import Callable, Optional

from .hopf import FiniteGroup
from .scalars import Field, SparseMatrix, SparseVector, dense_mul, kernel, membership, rref


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_identity(n, F: Field):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def mat_zero(n, F: Field):
    return [[F.zero] * n for _ in range(n)]


# ---------------------------------------------------------------------------
# carriers
# ---------------------------------------------------------------------------

@dataclass
class FinitePartialRep:
    group: FiniteGroup
    field: Field
    dim: int
    mats: list              # per group element index

    def matrix(self, g: int):
        return self.mats[g]

    def inv(self, g: int) -> int:
        return self.group.inverse[g]

    def mul(self, g: int, h: int) -> int:
        return self.group.table[g][h]

    def identity(self):
        return self.group.identity


@dataclass
class GroupOracle:
    """Exact-matrix group access for groups sampled at rational points."""
    name: str
    field: Field
    mul: Callable
    inv: Callable
    identity: object
    validate: Callable          # group defining equations, exactly
    in_subgroup: Callable       # the designated (index-2 or component) subgroup
    sample: Callable            # rng -> element
    sample_outside: Optional[Callable] = None


@dataclass
class OraclePartialRep:
    oracle: GroupOracle
    field: Field
    dim: int
    evaluate: Callable          # element -> dim x dim matrix

    def matrix(self, g):
        return self.evaluate(g)

    def inv(self, g):
        return self.oracle.inv(g)

    def mul(self, g, h):
        return self.oracle.mul(g, h)

    def identity(self):
        return self.oracle.identity


@dataclass
class PRReport:
    axioms: dict
    witnesses: dict = _dcfield(default_factory=dict)
    pairs_checked: int = 0

    @property
    def ok(self) -> bool:
        return all(self.axioms.values())


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def _pr_pairs(rep, samples, seed, n_samples):
    if isinstance(rep, FinitePartialRep):
        n = rep.group.order
        return [(x, y) for x in range(n) for y in range(n)]
    if samples is not None:
        return list(samples)
    rng = _random.Random(seed)
    out = []
    for _ in range(n_samples):
        x = rep.oracle.sample(rng)
        y = rep.oracle.sample(rng)
        if not (rep.oracle.validate(x) and rep.oracle.validate(y)):
            raise ValueError("oracle produced an element violating the group equations")
        out.append((x, y))
    return out


def check_pr(rep, samples=None, seed: int = 7, n_samples: int = 100) -> PRReport:
    """PR1-PR3; exhaustive for finite groups, sampled pairs for oracles."""
    F = rep.field
    axioms = {"PR1": True, "PR2": True, "PR3": True}
    wit: dict = {}
    ident = mat_identity(rep.dim, F)
    if not mat_eq(rep.matrix(rep.identity()), ident):
        axioms["PR1"] = False
        wit["PR1"] = "identity"
    pairs = _pr_pairs(rep, samples, seed, n_samples)
    for (x, y) in pairs:
        mx = rep.matrix(x)
        my = rep.matrix(y)
        mxi = rep.matrix(rep.inv(x))
        myi = rep.matrix(rep.inv(y))
        mxy = rep.matrix(rep.mul(x, y))
        # PR2: pi(x^-1) pi(x) pi(y) = pi(x^-1) pi(xy)
        lhs = dense_mul(mxi, dense_mul(mx, my, F), F)
        rhs = dense_mul(mxi, mxy, F)
        if not mat_eq(lhs, rhs):
            axioms["PR2"] = False
            wit.setdefault("PR2", (x, y))
        # PR3: pi(x) pi(y) pi(y^-1) = pi(xy) pi(y^-1)
        lhs = dense_mul(mx, dense_mul(my, myi, F), F)
        rhs = dense_mul(mxy, myi, F)
        if not mat_eq(lhs, rhs):
            axioms["PR3"] = False
            wit.setdefault("PR3", (x, y))
    return PRReport(axioms, wit, len(pairs))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def extend_by_zero_finite(G: FiniteGroup, subgroup: list[int], rep_mats: dict,
                          F: Field, dim: int) -> FinitePartialRep:
    """The partial representation equal to a true representation on a
    subgroup and zero outside it."""
    sub = set(subgroup)
    if G.identity not in sub:
        raise ValueError("subgroup must contain the identity")
    for a in sub:
        for b in sub:
            if G.table[a][b] not in sub:
                raise ValueError("given set is not closed under multiplication")
    for a in sub:
        for b in sub:
            lhs = dense_mul(rep_mats[a], rep_mats[b], F)
            if not mat_eq(lhs, rep_mats[G.table[a][b]]):
                raise ValueError(f"input is not multiplicative at {(a, b)}")
    if not mat_eq(rep_mats[G.identity], mat_identity(dim, F)):
        raise ValueError("identity must act as the identity matrix")
    zero = mat_zero(dim, F)
    mats = [rep_mats[g] if g in sub else zero for g in range(G.order)]
    return FinitePartialRep(G, F, dim, mats)


def extend_by_zero_oracle(oracle: GroupOracle, F: Field, dim: int,
                          sub_rep: Callable, seed: int = 11,
                          n_samples: int = 50) -> OraclePartialRep:
    """Oracle version: zero outside oracle.in_subgroup; multiplicativity of
    the input is verified on seeded samples."""
    rng = _random.Random(seed)
    checked = 0
    while checked < n_samples:
        a = oracle.sample(rng)
        b = oracle.sample(rng)
        if not (oracle.in_subgroup(a) and oracle.in_subgroup(b)):
            continue
        lhs = dense_mul(sub_rep(a), sub_rep(b), F)
        if not mat_eq(lhs, sub_rep(oracle.mul(a, b))):
            raise ValueError("input is not multiplicative on the subgroup")
        checked += 1
    zero = mat_zero(dim, F)

    def evaluate(g):
        return sub_rep(g) if oracle.in_subgroup(g) else zero
    return OraclePartialRep(oracle, F, dim, evaluate)


def induce(G: FiniteGroup, subgroup: list[int], A: list[int], rep_dim: int,
           rep_of_K: Callable, F: Field):
    """Partial representation induced from a coset datum.

    `A` is a union of left cosets of `subgroup` containing the identity;
    K = {g : gA = A} is computed, `A` must decompose into left K-cosets, and
    `rep_of_K` must give a true K-representation.  The result acts blockwise:
    the block (j, i) of the matrix of g is rep(k) when g g_i = g_j k with
    k in K, and zero when g g_i leaves A.  Returns (rep, K).
    """
    sub = set(subgroup)
    Aset = set(A)
    if G.identity not in Aset:
        raise ValueError("A must contain the subgroup coset of the identity")
    for a in A:
        for h in sub:
            if G.table[a][h] not in Aset:
                raise ValueError("A is not a union of left subgroup-cosets")
    K = [g for g in range(G.order) if {G.table[g][a] for a in Aset} == Aset]
    Kset = set(K)
    for a in A:
        for k in K:
            if G.table[a][k] not in Aset:
                raise ValueError("A does not decompose into left K-cosets")
    # representatives, identity's coset first
    reps = []
    covered: set = set()
    for a in sorted(Aset):
        if a not in covered:
            if a == G.identity or not reps:
                pass
            reps.append(a)
            covered.update(G.table[a][k] for k in K)
    if G.identity in Aset:
        # force the identity to represent its own coset
        id_rep = next(r for r in reps if G.identity in {G.table[r][k] for k in K})
        if id_rep != G.identity:
            reps[reps.index(id_rep)] = G.identity
    # K-representation sanity
    for k1 in K:
        for k2 in K:
            if not mat_eq(dense_mul(rep_of_K(k1), rep_of_K(k2), F),
                          rep_of_K(G.table[k1][k2])):
                raise ValueError("rep_of_K is not a K-representation")
    if not mat_eq(rep_of_K(G.identity), mat_identity(rep_dim, F)):
        raise ValueError("rep_of_K must send the identity to the identity")
    nblocks = len(reps)
    dim = nblocks * rep_dim
    rep_index = {}
    for j, r in enumerate(reps):
        for k in K:
            rep_index[G.table[r][k]] = (j, k)
    mats = []
    for g in range(G.order):
        m = mat_zero(dim, F)
        for i, gi in enumerate(reps):
            x = G.table[g][gi]
            if x not in rep_index:
                continue
            j, k = rep_index[x]
            blk = rep_of_K(k)
            for r in range(rep_dim):
                for c in range(rep_dim):
                    if blk[r][c]:
                        m[j * rep_dim + r][i * rep_dim + c] = blk[r][c]
        mats.append(m)
    return FinitePartialRep(G, F, dim, mats), K


def projector(rep, x):
    """P_x = pi(x) pi(x^-1); idempotent for every partial representation."""
    return dense_mul(rep.matrix(x), rep.matrix(rep.inv(x)), rep.field)


def direct_sum_reps(r1: OraclePartialRep, r2: OraclePartialRep) -> OraclePartialRep:
    if r1.oracle is not r2.oracle:
        raise ValueError("summands use different oracles")
    F = r1.field
    n1, n2 = r1.dim, r2.dim

    def evaluate(g):
        m1 = r1.evaluate(g)
        m2 = r2.evaluate(g)
        out = mat_zero(n1 + n2, F)
        for i in range(n1):
            for j in range(n1):
                out[i][j] = m1[i][j]
        for i in range(n2):
            for j in range(n2):
                out[n1 + i][n1 + j] = m2[i][j]
        return out
    return OraclePartialRep(r1.oracle, F, n1 + n2, evaluate)


@dataclass
class DecomposeReport:
    checks: dict
    witnesses: dict = _dcfield(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


def decompose(rep, y=None, seed: int = 13, n_samples: int = 50):
    """Split a partial representation that is global on an index-2 subgroup
    into its global part (image of P_y) and its extended-by-zero part
    (kernel of P_y).

    For oracles the subgroup is the oracle's designated one and `y` defaults
    to a sampled element outside it; only the index-2 situation is supported.
    Returns (V_g basis, V_p basis, report).
    """
    F = rep.field
    rng = _random.Random(seed)
    checks = {}
    wit = {}
    if isinstance(rep, FinitePartialRep):
        G = rep.group
        if y is None:
            raise ValueError("finite decompose needs the subgroup coset witness y")
        sub = [g for g in range(G.order) if mat_eq(projector(rep, g), mat_identity(rep.dim, F))]
        inside = set(sub)
        if 2 * len(inside) != G.order:
            raise ValueError("decompose is implemented for index-2 subgroups only")
        outside = [g for g in range(G.order) if g not in inside]
        if y in inside:
            raise ValueError("y must lie outside the globality subgroup")
        pair_src = [(a, b) for a in range(G.order) for b in range(G.order)]
        inside_pairs = [(a, b) for a, b in pair_src if a in inside and b in inside]
        sample_z = list(range(G.order))
        sample_out = outside
    else:
        oracle = rep.oracle
        if y is None:
            y = (oracle.sample_outside(rng) if oracle.sample_outside
                 else _sample_until(oracle, rng, lambda g: not oracle.in_subgroup(g)))
        if oracle.in_subgroup(y):
            raise ValueError("y must lie outside the designated subgroup")
        inside_pairs = []
        while len(inside_pairs) < n_samples:
            a = oracle.sample(rng)
            b = oracle.sample(rng)
            if oracle.in_subgroup(a) and oracle.in_subgroup(b):
                inside_pairs.append((a, b))
        sample_z = [oracle.sample(rng) for _ in range(n_samples)]
        sample_out = []
        while len(sample_out) < n_samples:
            g = oracle.sample(rng)
            if not oracle.in_subgroup(g):
                sample_out.append(g)
    # precondition: global on the subgroup
    ok = True
    for (a, b) in inside_pairs:
        if not mat_eq(dense_mul(rep.matrix(a), rep.matrix(b), F),
                      rep.matrix(rep.mul(a, b))):
            ok = False
            wit.setdefault("global_on_subgroup", (a, b))
            break
    checks["global_on_subgroup"] = ok
    P = projector(rep, y)
    checks["projector_idempotent"] = mat_eq(dense_mul(P, P, F), P)
    # P_{y'} agrees for every sampled y' outside
    ok = True
    for yp in sample_out:
        if not mat_eq(projector(rep, yp), P):
            ok = False
            wit.setdefault("projector_constant_outside", yp)
            break
    checks["projector_constant_outside"] = ok
    # P commutes with every sampled matrix
    ok = True
    for z in sample_z:
        mz = rep.matrix(z)
        if not mat_eq(dense_mul(P, mz, F), dense_mul(mz, P, F)):
            ok = False
            wit.setdefault("projector_central", z)
            break
    checks["projector_central"] = ok
    # split
    n = rep.dim
    entries = {(r, c): P[r][c] for r in range(n) for c in range(n) if P[r][c]}
    Pm = SparseMatrix(n, n, entries)
    rank, _, red = rref(SparseMatrix(n, n, {(c, r): v for (r, c), v in entries.items()}), F)
    vg = [dict(row) for row in red.rows()[:rank]]
    vp = [dict(v.entries) for v in kernel(Pm, F)]
    vg_dense = [[row.get(j, F.zero) for j in range(n)] for row in vg]
    vp_dense = [[row.get(j, F.zero) for j in range(n)] for row in vp]
    # V_g carries a global action; V_p is annihilated outside the subgroup
    span_g = [SparseVector(n, {j: c for j, c in enumerate(v) if c}) for v in vg_dense]
    ok = True
    for z in sample_z:
        for v in vg_dense:
            img = _mat_vec(rep.matrix(z), v, F)
            if any(img) and membership(SparseVector(n, {j: c for j, c in enumerate(img) if c}),
                                       span_g, F) is None:
                ok = False
                wit.setdefault("global_part_stable", z)
                break
    checks["global_part_stable"] = ok
    ok = True
    all_pairs = ([(a, b) for a in sample_z for b in sample_z[:3]]
                 if not isinstance(rep, FinitePartialRep)
                 else [(a, b) for a in range(rep.group.order) for b in range(rep.group.order)])
    for (a, b) in all_pairs:
        mab = rep.matrix(rep.mul(a, b))
        ma_mb = dense_mul(rep.matrix(a), rep.matrix(b), F)
        for v in vg_dense:
            if _mat_vec(ma_mb, v, F) != _mat_vec(mab, v, F):
                ok = False
                wit.setdefault("global_part_multiplicative", (a, b))
                break
        if not ok:
            break
    checks["global_part_multiplicative"] = ok
    ok = True
    for yp in sample_out:
        myp = rep.matrix(yp)
        for v in vp_dense:
            if any(_mat_vec(myp, v, F)):
                ok = False
                wit.setdefault("extended_part_vanishes_outside", yp)
                break
        if not ok:
            break
    checks["extended_part_vanishes_outside"] = ok
    return vg_dense, vp_dense, DecomposeReport(checks, wit)


def _sample_until(oracle, rng, pred, tries=1000):
    for _ in range(tries):
        g = oracle.sample(rng)
        if pred(g):
            return g
    raise ValueError("could not sample a suitable element")


def _mat_vec(m, v, F: Field):
    out = []
    for row in m:
        s = F.zero
        for x, y in zip(row, v):
            if x and y:
                s = s + x * y
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# the orthogonal group at rational points
# ---------------------------------------------------------------------------

def o2_rotation(t: Fraction, F: Field):
    """Exact rotation from the Pythagorean parametrization of the circle."""
    t = Fraction(t)
    den = 1 + t * t
    c = F.scalar((1 - t * t) / den)
    s = F.scalar(2 * t / den)
    return ((c, -s), (s, c))


def o2_reflection(t: Fraction, F: Field):
    t = Fraction(t)
    den = 1 + t * t
    c = F.scalar((1 - t * t) / den)
    s = F.scalar(2 * t / den)
    return ((c, s), (s, -c))


def o2_sample(seed_or_rng, det: int = 1, F: Optional[Field] = None):
    """Seeded exact orthogonal 2x2 matrix with the requested determinant."""
    F = F or Field.rationals()
    rng = seed_or_rng if isinstance(seed_or_rng, _random.Random) else _random.Random(seed_or_rng)
    t = Fraction(rng.randint(-50, 50), rng.randint(1, 25))
    return o2_rotation(t, F) if det == 1 else o2_reflection(t, F)


def o2_oracle(F: Optional[Field] = None) -> GroupOracle:
    F = F or Field.rationals()

    def mul(a, b):
        return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(2)), F.zero)
                           for j in range(2)) for i in range(2))

    def det(a):
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]

    def inv(a):
        # orthogonal: inverse = transpose
        return ((a[0][0], a[1][0]), (a[0][1], a[1][1]))

    ident = ((F.one, F.zero), (F.zero, F.one))

    def validate(a):
        return mul(inv(a), a) == ident and det(a) in (F.one, -F.one)

    def in_so2(a):
        return det(a) == F.one

    def sample(rng):
        return o2_sample(rng, det=rng.choice((1, -1)), F=F)

    def sample_outside(rng):
        return o2_sample(rng, det=-1, F=F)

    return GroupOracle("O(2)", F, mul, inv, ident, validate, in_so2,
                       sample, sample_outside)


def o2_standard_rep(oracle: GroupOracle) -> OraclePartialRep:
    """The (global) representation acting by the matrix itself."""
    return OraclePartialRep(oracle, oracle.field, 2, lambda g: g)


def o2_rotation_extended_rep(oracle: GroupOracle) -> OraclePartialRep:
    """The rotation action extended by zero across the reflections."""
    F = oracle.field
    zero = mat_zero(2, F)
    return OraclePartialRep(oracle, F, 2,
                            lambda g: g if oracle.in_subgroup(g) else zero)


# ---------------------------------------------------------------------------
# the monomial 3x3 group at rational points
# ---------------------------------------------------------------------------

def monomial_g(F: Field):
    """The cyclic permutation matrix generating the component group."""
    z, o = F.zero, F.one
    return ((z, z, o), (o, z, z), (z, o, z))


def monomial_element(pattern: int, a, b, c, F: Field):
    """g^pattern * diag(a, b, c) with nonzero rational entries."""
    if not (a and b and c):
        raise ValueError("diagonal entries must be nonzero")
    diag = ((F.scalar(a), F.zero, F.zero),
            (F.zero, F.scalar(b), F.zero),
            (F.zero, F.zero, F.scalar(c)))
    m = diag
    g = monomial_g(F)
    for _ in range(pattern % 3):
        m = tuple(tuple(sum((g[i][k] * m[k][j] for k in range(3)), F.zero)
                        for j in range(3)) for i in range(3))
    return m


def monomial_sample(seed_or_rng, F: Optional[Field] = None, pattern: Optional[int] = None):
    F = F or Field.rationals()
    rng = seed_or_rng if isinstance(seed_or_rng, _random.Random) else _random.Random(seed_or_rng)
    def nz():
        x = 0
        while not x:
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return x
    p = rng.randrange(3) if pattern is None else pattern
    return monomial_element(p, nz(), nz(), nz(), F)


def monomial_pattern(m, F: Field) -> int:
    """Which component of the group a monomial matrix lies in."""
    if m[0][0]:
        return 0
    if m[1][0]:
        return 1
    return 2


def monomial_oracle(F: Optional[Field] = None) -> GroupOracle:
    F = F or Field.rationals()

    def mul(a, b):
        return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(3)), F.zero)
                           for j in range(3)) for i in range(3))

    def inv(a):
        # monomial: transpose the pattern, invert the entries
        out = [[F.zero] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                if a[i][j]:
                    out[j][i] = F.inv(a[i][j])
        return tuple(tuple(r) for r in out)

    ident = tuple(tuple(F.one if i == j else F.zero for j in range(3)) for i in range(3))

    def validate(a):
        # exactly one nonzero entry per row and column, in a cyclic pattern
        for row in a:
            if sum(1 for x in row if x) != 1:
                return False
        for j in range(3):
            if sum(1 for i in range(3) if a[i][j]) != 1:
                return False
        p = monomial_pattern(a, F)
        g = monomial_element(p, 1, 1, 1, F)
        return all((a[i][j] == F.zero) == (g[i][j] == F.zero)
                   for i in range(3) for j in range(3))

    def in_diagonal(a):
        return monomial_pattern(a, F) == 0

    def sample(rng):
        return monomial_sample(rng, F)

    def sample_outside(rng):
        return monomial_sample(rng, F, pattern=rng.choice((1, 2)))

    return GroupOracle("monomial3", F, mul, inv, ident, validate, in_diagonal,
                       sample, sample_outside)


def monomial_induced_rep(oracle: GroupOracle) -> OraclePartialRep:
    """The 6-dimensional partial representation induced from the diagonal
    character of the identity component over the coset set {1, g} of the
    component group: carrier V + V^g with blocks

        block(j, i) = diag-action of g^{-j} m g^{i}   when that lies in the
                                                      diagonal part and j < 2,
        zero otherwise.
    """
    F = oracle.field
    g = monomial_g(F)
    ginv = oracle.inv(g)
    powers = [tuple(tuple(F.one if i == j else F.zero for j in range(3)) for i in range(3)), g]

    def evaluate(m):
        out = mat_zero(6, F)
        comp = monomial_pattern(m, F)
        for i in range(2):
            j = (comp + i) % 3
            if j > 1:
                continue
            k = oracle.mul(oracle.mul(oracle.inv(powers[j]), m), powers[i])
            # k is diagonal; the character acts coordinatewise
            for r in range(3):
                out[j * 3 + r][i * 3 + r] = k[r][r]
        return out
    return OraclePartialRep(oracle, F, 6, evaluate)
