"""Partial comodules and partial modules as finite exact matrices.

A partial comodule is a coaction rho: M -> M (x) H subject to counitality
and the four partial-coassociativity identities; a partial module is a family
of action matrices indexed by the H-basis subject to the unit axiom and two
relation families.  All checkers evaluate both sides of every axiom in full,
so failure witnesses carry the exact tensor difference.

Tensors in M (x) H^{(x) k} are dicts keyed by (m_index, h_1, ..., h_k).
"""

from __future__ import annotations

import random as _random
from dataclasses import dataclass, field as _dcfield
from fractions import Fraction
from typing import Optional

from .hopf import (HopfAlgebra, apply_counit_at, apply_delta_at,
                   apply_antipode_at, apply_mu_at, tensor_sub, sweedler4)
from .scalars import Field, SparseMatrix, SparseVector, rref, membership


@dataclass
class PartialComodule:
    H: HopfAlgebra
    dim: int
    rho: dict       # m-index -> list of (m-index, h-index, scalar)

    def __post_init__(self):
        d = self.H.dim
        for a, terms in self.rho.items():
            if not 0 <= a < self.dim:
                raise ValueError(f"coaction source index {a} out of range")
            for (b, h, c) in terms:
                if not (0 <= b < self.dim and 0 <= h < d):
                    raise ValueError(f"coaction term {(a, b, h)} out of range")

    def coact_tensor(self, a: int) -> dict:
        """rho(e_a) in M (x) H as a tensor dict."""
        return {(b, h): c for (b, h, c) in self.rho.get(a, ()) if c}

    def apply_rho_slot0(self, t: dict) -> dict:
        """(rho (x) H^k) on a tensor in M (x) H^k; the new H slot lands at 1."""
        out: dict = {}
        for key, c in t.items():
            for (b, h, cc) in self.rho.get(key[0], ()):
                nk = (b, h) + key[1:]
                v = out.get(nk)
                v = c * cc if v is None else v + c * cc
                if v:
                    out[nk] = v
                else:
                    out.pop(nk, None)
        return out

    def coact_vector(self, vec: list) -> dict:
        t: dict = {}
        for a, x in enumerate(vec):
            if not x:
                continue
            for (b, h, c) in self.rho.get(a, ()):
                key = (b, h)
                v = t.get(key)
                v = x * c if v is None else v + x * c
                if v:
                    t[key] = v
                else:
                    t.pop(key, None)
        return t

    def matrix_form(self) -> SparseMatrix:
        """The coaction as an (m*d) x m sparse matrix, m-major row indexing."""
        d = self.H.dim
        entries = {}
        for a, terms in self.rho.items():
            for (b, h, c) in terms:
                entries[(b * d + h, a)] = c
        return SparseMatrix(self.dim * d, self.dim, entries)


@dataclass
class PartialModule:
    H: HopfAlgebra
    dim: int
    mats: list      # per H-basis index: dim x dim dense matrix

    def __post_init__(self):
        if len(self.mats) != self.H.dim:
            raise ValueError("need one action matrix per H-basis element")
        for m in self.mats:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ValueError("action matrix has wrong shape")

    def act_elem(self, elem: dict) -> list:
        """Action matrix of a general element of H."""
        F = self.H.field
        out = [[F.zero] * self.dim for _ in range(self.dim)]
        for i, c in elem.items():
            if not c:
                continue
            mi = self.mats[i]
            for r in range(self.dim):
                row = mi[r]
                orow = out[r]
                for j in range(self.dim):
                    if row[j]:
                        orow[j] = orow[j] + c * row[j]
        return out


# ---------------------------------------------------------------------------
# axiom checkers
# ---------------------------------------------------------------------------

@dataclass
class AxiomReport:
    axioms: dict
    witnesses: dict = _dcfield(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.axioms.values())

    def failing(self) -> list[str]:
        return [k for k, v in self.axioms.items() if not v]


def check_partial_comodule(M: PartialComodule, vectors: Optional[list] = None) -> AxiomReport:
    """Check counitality and the four partial coassociativity identities
    exactly on the given basis indices (all of them by default)."""
    H = M.H
    F = H.field
    axioms = {f"PCM{i}": True for i in range(1, 6)}
    wit: dict = {}
    idx = range(M.dim) if vectors is None else vectors
    for a in idx:
        t1 = M.coact_tensor(a)
        # PCM1: (M (x) eps) rho = id
        lhs = apply_counit_at(H, t1, 1)
        if lhs != {(a,): F.one}:
            axioms["PCM1"] = False
            wit.setdefault("PCM1", (a, tensor_sub(lhs, {(a,): F.one})))
        t2 = M.apply_rho_slot0(t1)      # (rho (x) H) rho
        t3 = M.apply_rho_slot0(t2)      # (rho (x) H (x) H)(rho (x) H) rho
        # PCM2: (M h mu)(M h h S)(M Delta h) t2 = (M h mu)(M h h S) t3
        l2 = apply_mu_at(H, apply_antipode_at(H, apply_delta_at(H, t2, 1), 3), 2)
        r2 = apply_mu_at(H, apply_antipode_at(H, t3, 3), 2)
        if l2 != r2:
            axioms["PCM2"] = False
            wit.setdefault("PCM2", (a, tensor_sub(l2, r2)))
        # PCM3: (M mu h)(M h S h)(M h Delta) t2 = (M mu h)(M h S h) t3
        l3 = apply_mu_at(H, apply_antipode_at(H, apply_delta_at(H, t2, 2), 2), 1)
        r3 = apply_mu_at(H, apply_antipode_at(H, t3, 2), 1)
        if l3 != r3:
            axioms["PCM3"] = False
            wit.setdefault("PCM3", (a, tensor_sub(l3, r3)))
        # PCM4: (M h mu)(M h S h)(M Delta h) t2 = (M h mu)(M h S h) t3
        l4 = apply_mu_at(H, apply_antipode_at(H, apply_delta_at(H, t2, 1), 2), 2)
        r4 = apply_mu_at(H, apply_antipode_at(H, t3, 2), 2)
        if l4 != r4:
            axioms["PCM4"] = False
            wit.setdefault("PCM4", (a, tensor_sub(l4, r4)))
        # PCM5: (M mu h)(M S h h)(M h Delta) t2 = (M mu h)(M S h h) t3
        l5 = apply_mu_at(H, apply_antipode_at(H, apply_delta_at(H, t2, 2), 1), 1)
        r5 = apply_mu_at(H, apply_antipode_at(H, t3, 1), 1)
        if l5 != r5:
            axioms["PCM5"] = False
            wit.setdefault("PCM5", (a, tensor_sub(l5, r5)))
    return AxiomReport(axioms, wit)


def check_global(M: PartialComodule, vectors: Optional[list] = None) -> bool:
    """True iff the coaction is exactly coassociative (a global comodule)."""
    H = M.H
    idx = range(M.dim) if vectors is None else vectors
    for a in idx:
        t1 = M.coact_tensor(a)
        if M.apply_rho_slot0(t1) != apply_delta_at(H, t1, 1):
            return False
    return True


def check_partial_module(M: PartialModule) -> AxiomReport:
    """Unit axiom plus the two relation families, exhaustively over basis
    pairs of H."""
    H = M.H
    F = H.field
    d = H.dim
    axioms = {"PM1": True, "PM2": True, "PM3": True}
    wit: dict = {}

    def matmul(a, b):
        n = M.dim
        out = [[F.zero] * n for _ in range(n)]
        for r in range(n):
            ar = a[r]
            orow = out[r]
            for t in range(n):
                c = ar[t]
                if not c:
                    continue
                bt = b[t]
                for j in range(n):
                    if bt[j]:
                        orow[j] = orow[j] + c * bt[j]
        return out

    ident = [[F.one if i == j else F.zero for j in range(M.dim)] for i in range(M.dim)]
    unit_mat = M.act_elem(H.unit_elem())
    if unit_mat != ident:
        axioms["PM1"] = False
        wit["PM1"] = "1_H does not act as the identity"

    smat = {i: dict(H.antipode.get(i, ())) for i in range(d)}
    for h in range(d):
        for k in range(d):
            # PM2: h (k1 (S(k2) m)) = (h k1) (S(k2) m)
            acc = None
            for (a, b, c) in H.sweedler(k):
                sb = M.act_elem(smat[b])
                t1 = matmul(M.mats[h], matmul(M.mats[a], sb))
                hk = M.act_elem({p: cp for p, cp in H.mult.get((h, a), ())})
                t2 = matmul(hk, sb)
                term = [[c * (x - y) for x, y in zip(rx, ry)] for rx, ry in zip(t1, t2)]
                acc = term if acc is None else [
                    [u + v for u, v in zip(ru, rv)] for ru, rv in zip(acc, term)]
            if acc is not None and any(x for row in acc for x in row):
                axioms["PM2"] = False
                wit.setdefault("PM2", (h, k))
            # PM3: h1 (S(h2) (k m)) = h1 ((S(h2) k) m)
            acc = None
            for (a, b, c) in H.sweedler(h):
                sb = M.act_elem(smat[b])
                t1 = matmul(M.mats[a], matmul(sb, M.mats[k]))
                sk: dict = {}
                for s, cs in smat[b].items():
                    for p, cp in H.mult.get((s, k), ()):
                        sk[p] = sk.get(p, F.zero) + cs * cp
                t2 = matmul(M.mats[a], M.act_elem(sk))
                term = [[c * (x - y) for x, y in zip(rx, ry)] for rx, ry in zip(t1, t2)]
                acc = term if acc is None else [
                    [u + v for u, v in zip(ru, rv)] for ru, rv in zip(acc, term)]
            if acc is not None and any(x for row in acc for x in row):
                axioms["PM3"] = False
                wit.setdefault("PM3", (h, k))
    return AxiomReport(axioms, wit)


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

def comodule_to_module(M: PartialComodule, dual: Optional[HopfAlgebra] = None) -> PartialModule:
    """Left partial module over the dual Hopf algebra: [h*] m = (M (x) h*) rho(m)."""
    from .hopf import dual_hopf
    rep = check_partial_comodule(M)
    if not rep.ok:
        raise ValueError(f"input fails comodule axioms: {rep.failing()}")
    H = M.H
    F = H.field
    D = dual if dual is not None else dual_hopf(H)
    mats = []
    for i in range(H.dim):
        m = [[F.zero] * M.dim for _ in range(M.dim)]
        for a, terms in M.rho.items():
            for (b, h, c) in terms:
                if h == i and c:
                    m[b][a] = m[b][a] + c
        mats.append(m)
    return PartialModule(D, M.dim, mats)


def module_to_comodule(M: PartialModule, H: HopfAlgebra) -> PartialComodule:
    """Coaction rho(m) = sum_i ([h_i*] m) (x) h_i over the dual basis of H."""
    rep = check_partial_module(M)
    if not rep.ok:
        raise ValueError(f"input fails module axioms: {rep.failing()}")
    if M.H.dim != H.dim:
        raise ValueError("module is not over the dual of the given Hopf algebra")
    rho: dict = {}
    for a in range(M.dim):
        terms = []
        for i in range(H.dim):
            col = [M.mats[i][r][a] for r in range(M.dim)]
            for b, c in enumerate(col):
                if c:
                    terms.append((b, i, c))
        rho[a] = terms
    return PartialComodule(H, M.dim, rho)


# ---------------------------------------------------------------------------
# subcomodules, sums
# ---------------------------------------------------------------------------

def generated_subcomodule(M: PartialComodule, seeds: list) -> list:
    """Basis of the smallest subspace containing the seeds and closed under
    coefficient extraction (id (x) h*) rho; the result is rho-stable.

    Seeds and output vectors are dense coordinate lists over M's basis.
    """
    F = M.H.field
    d = M.H.dim
    rows: list[dict] = []

    def reduce_add(vec: dict) -> bool:
        vec = dict(vec)
        for row in rows:
            piv = min(row)
            if piv in vec:
                c = vec.pop(piv)
                for j, v in row.items():
                    if j == piv:
                        continue
                    nv = vec.get(j)
                    nv = -c * v if nv is None else nv - c * v
                    if nv:
                        vec[j] = nv
                    else:
                        vec.pop(j, None)
        if not vec:
            return False
        piv = min(vec)
        inv = F.inv(vec[piv])
        rows.append({j: v * inv for j, v in vec.items()})
        rows.sort(key=min)
        return True

    frontier = []
    for s in seeds:
        v = {i: c for i, c in enumerate(s) if c}
        if reduce_add(v):
            frontier.append(v)
    while frontier:
        v = frontier.pop()
        coact = {}
        for a, c in v.items():
            for (b, h, cc) in M.rho.get(a, ()):
                key = (b, h)
                w = coact.get(key)
                w = c * cc if w is None else w + c * cc
                if w:
                    coact[key] = w
                else:
                    coact.pop(key, None)
        comps: dict = {}
        for (b, h), c in coact.items():
            comps.setdefault(h, {})[b] = c
        for h, comp in sorted(comps.items()):
            if reduce_add(comp):
                frontier.append(comp)
    # rho-stability assertion through exact membership
    span = [SparseVector(M.dim, dict(r)) for r in rows]
    for r in rows:
        coact = {}
        for a, c in r.items():
            for (b, h, cc) in M.rho.get(a, ()):
                coact.setdefault(h, {})
                w = coact[h].get(b, F.zero) + c * cc
                if w:
                    coact[h][b] = w
                else:
                    coact[h].pop(b, None)
        for h, comp in coact.items():
            if comp and membership(SparseVector(M.dim, comp), span, F) is None:
                raise AssertionError("closure output is not rho-stable")
    out = []
    for r in rows:
        vec = [F.zero] * M.dim
        for j, c in r.items():
            vec[j] = c
        out.append(vec)
    return out


def direct_sum(M1: PartialComodule, M2: PartialComodule) -> PartialComodule:
    if M1.H is not M2.H and (M1.H.field != M2.H.field or M1.H.dim != M2.H.dim
                             or M1.H.mult != M2.H.mult or M1.H.comult != M2.H.comult):
        raise ValueError("summands live over different Hopf algebras")
    rho: dict = {}
    for a, terms in M1.rho.items():
        rho[a] = list(terms)
    off = M1.dim
    for a, terms in M2.rho.items():
        rho[a + off] = [(b + off, h, c) for (b, h, c) in terms]
    return PartialComodule(M1.H, M1.dim + M2.dim, rho)


def conjugate_comodule(M: PartialComodule, T: list, Tinv: list) -> PartialComodule:
    """Transport the coaction along the invertible matrix T (columns = images)."""
    F = M.H.field
    n = M.dim
    rho: dict = {}
    for a in range(n):
        acc: dict = {}
        for s in range(n):
            c0 = Tinv[s][a]
            if not c0:
                continue
            for (b, h, c) in M.rho.get(s, ()):
                for r in range(n):
                    if T[r][b]:
                        key = (r, h)
                        v = acc.get(key)
                        w = c0 * c * T[r][b]
                        v = w if v is None else v + w
                        if v:
                            acc[key] = v
                        else:
                            acc.pop(key, None)
        rho[a] = [(b, h, c) for (b, h), c in sorted(acc.items())]
    return PartialComodule(M.H, n, rho)


# ---------------------------------------------------------------------------
# built-in examples over the cyclic group of order 3
# ---------------------------------------------------------------------------

def kc3_comodules(F: Field) -> dict:
    """The five irreducible coactions over the group algebra kC3: three
    1-dimensional global ones, one properly partial 1-dimensional one, and
    one properly partial 2-dimensional one (needs a primitive cube root)."""
    from .hopf import group_algebra, named_group
    H = group_algebra(named_group("C3"), F)
    one = F.one
    third = F.inv(F.scalar(3))
    out = {
        "rho1": PartialComodule(H, 1, {0: [(0, 0, one)]}),
        "rho2": PartialComodule(H, 1, {0: [(0, 1, one)]}),
        "rho3": PartialComodule(H, 1, {0: [(0, 2, one)]}),
        "rho4": PartialComodule(H, 1, {0: [(0, 0, third), (0, 1, third), (0, 2, third)]}),
    }
    xi = F.root_of_unity(3)
    if xi is not None:
        xi2 = xi * xi
        out["rho5"] = PartialComodule(H, 2, {
            0: [(0, 0, third), (0, 1, third), (0, 2, third),
                (1, 0, third), (1, 1, third * xi2), (1, 2, third * xi)],
            1: [(0, 0, third), (0, 1, third * xi), (0, 2, third * xi2),
                (1, 0, third), (1, 1, third), (1, 2, third)],
        })
    return out


def kc3_modules(F: Field) -> dict:
    """The partial actions chi4 (1-dim) and chi5 (2-dim) over kC3."""
    from .hopf import group_algebra, named_group
    H = group_algebra(named_group("C3"), F)
    one, zero = F.one, F.zero
    chi4 = PartialModule(H, 1, [[[one]], [[zero]], [[zero]]])
    chi5 = PartialModule(H, 2, [
        [[one, zero], [zero, one]],
        [[zero, zero], [one, zero]],
        [[zero, one], [zero, zero]],
    ])
    return {"chi4": chi4, "chi5": chi5}


# ---------------------------------------------------------------------------
# the irregular example at finite truncation
# ---------------------------------------------------------------------------

@dataclass
class TruncatedPartialComodule:
    comodule: PartialComodule       # on basis z^0 .. z^N
    degree: int                     # N
    n_max: int                      # axiom checks asserted on z^0 .. z^{N-3}


def h4_truncated(N: int, F: Optional[Field] = None) -> TruncatedPartialComodule:
    """The coaction z^n -> z^n (x) (1+g)/2 + z^{n+1} (x) y on polynomials of
    degree <= N; axiom checks are valid on the window z^0 .. z^{N-3}."""
    if N < 3:
        raise ValueError("truncation degree must be >= 3")
    if F is None:
        F = Field.rationals()
    H = sweedler4(F)
    half = F.inv(F.scalar(2))
    one = F.one
    rho: dict = {}
    for n in range(N + 1):
        terms = [(n, 0, half), (n, 1, half)]     # z^n (x) e, e = (1+g)/2
        if n < N:
            terms.append((n + 1, 3, one))        # z^{n+1} (x) y
        rho[n] = terms
    return TruncatedPartialComodule(PartialComodule(H, N + 1, rho), N, N - 3)


def check_truncated(T: TruncatedPartialComodule) -> dict:
    """Axiom checks restricted to the validity window; skipped vectors are
    listed rather than evaluated."""
    window = list(range(T.n_max + 1))
    skipped = list(range(T.n_max + 1, T.degree + 1))
    report = check_partial_comodule(T.comodule, vectors=window)
    return {"window": window, "skipped": skipped, "report": report,
            "global": check_global(T.comodule, vectors=window)}


def h4_quotient(n: int, F: Optional[Field] = None) -> PartialComodule:
    """The n-dimensional quotient of the irregular example: a genuine partial
    comodule (all axioms hold exactly, not only on a window)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if F is None:
        F = Field.rationals()
    H = sweedler4(F)
    half = F.inv(F.scalar(2))
    one = F.one
    rho: dict = {}
    for i in range(n):
        terms = [(i, 0, half), (i, 1, half)]
        if i < n - 1:
            terms.append((i + 1, 3, one))
        rho[i] = terms
    return PartialComodule(H, n, rho)


# ---------------------------------------------------------------------------
# randomized accepted inputs (for round-trip property tests)
# ---------------------------------------------------------------------------

def random_invertible(rng: _random.Random, n: int, F: Field) -> tuple:
    """A random invertible matrix with its exact inverse (unitriangular product)."""
    lower = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    upper = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            lower[i][j] = F.scalar(rng.randint(-2, 2))
        for j in range(i + 1, n):
            upper[i][j] = F.scalar(rng.randint(-2, 2))
    def matmul(a, b):
        return [[sum((a[r][t] * b[t][c] for t in range(n)), F.zero)
                 for c in range(n)] for r in range(n)]
    def inv_unitri(m, lower_tri):
        out = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
        idx = range(n) if lower_tri else range(n - 1, -1, -1)
        for col in range(n):
            e = [F.one if i == col else F.zero for i in range(n)]
            x = [F.zero] * n
            for i in idx:
                s = e[i]
                for j in range(n):
                    if j != i and m[i][j] and x[j]:
                        s = s - m[i][j] * x[j]
                x[i] = s
            for i in range(n):
                out[i][col] = x[i]
        return out
    T = matmul(lower, upper)
    Tinv = matmul(inv_unitri(upper, False), inv_unitri(lower, True))
    return T, Tinv


def random_accepted_comodule(rng: _random.Random, H: HopfAlgebra,
                             pool: list) -> PartialComodule:
    """A random accepted partial comodule: a direct sum of pool members
    conjugated by a random basis change."""
    k = rng.randint(1, 2)
    M = pool[rng.randrange(len(pool))]
    for _ in range(k - 1):
        M = direct_sum(M, pool[rng.randrange(len(pool))])
    T, Tinv = random_invertible(rng, M.dim, H.field)
    return conjugate_comodule(M, T, Tinv)
