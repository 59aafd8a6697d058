"""Exact scalars (rationals and cyclotomic extensions) and sparse linear algebra.

Everything in this module is exact: no floating point anywhere.  Rational
scalars are `fractions.Fraction`; cyclotomic scalars are `Cyc` elements, i.e.
coefficient vectors over Q reduced modulo the n-th cyclotomic polynomial.
All downstream modules do their linear algebra through `rref`, `kernel` and
`membership` below.
"""

from __future__ import annotations

import functools
import random as _random
from dataclasses import dataclass, field as _dcfield
from fractions import Fraction
from typing import Iterable, Optional, Union

import numpy as _np

Q0 = Fraction(0)
Q1 = Fraction(1)


# ---------------------------------------------------------------------------
# cyclotomic polynomials and rings
# ---------------------------------------------------------------------------

def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # exact division in Z[x]; caller guarantees divisibility when used below
    num = list(num)
    deg_d = len(den) - 1
    lead = den[-1]
    quo = [0] * (len(num) - deg_d) if len(num) > deg_d else [0]
    while len(num) - 1 >= deg_d and any(num):
        d = len(num) - 1 - deg_d
        c = num[-1] // lead
        quo[d] = c
        for i, dc in enumerate(den):
            num[d + i] -= c * dc
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    return quo, num


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("cyclotomic order must be >= 1")
    if n == 1:
        return (-1, 1)
    # Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_int(num, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(num)


class CycRing:
    """Arithmetic data for Q(zeta_n): reduction of powers modulo Phi_n."""

    def __init__(self, n: int):
        self.n = n
        phi = cyclotomic_polynomial(n)
        self.phi = tuple(Fraction(c) for c in phi)
        self.degree = len(phi) - 1
        # x^k mod Phi_n for k = 0 .. 2*degree - 2
        d = self.degree
        rows: list[tuple[Fraction, ...]] = []
        cur = [Q0] * d
        if d > 0:
            cur[0] = Q1
        for _ in range(max(2 * d - 1, 1)):
            rows.append(tuple(cur))
            nxt = [Q0] + cur[:-1]
            top = cur[-1]
            if top:
                # x^d = -(phi_0 + ... + phi_{d-1} x^{d-1})  (Phi_n is monic)
                for i in range(d):
                    nxt[i] -= top * self.phi[i]
            cur = nxt[:d]
        self.power_table = rows

    def reduce_product(self, a: tuple[Fraction, ...], b: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
        d = self.degree
        out = [Q0] * d
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if not cb:
                    continue
                c = ca * cb
                row = self.power_table[i + j]
                for k, rk in enumerate(row):
                    if rk:
                        out[k] += c * rk
        return tuple(out)


@functools.lru_cache(maxsize=None)
def _ring(n: int) -> CycRing:
    return CycRing(n)


class Cyc:
    """An element of Q(zeta_n) in canonical reduced form."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycRing, coeffs: Iterable[Fraction]):
        self.ring = ring
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != ring.degree:
            raise ValueError("coefficient vector has wrong length")
        self.coeffs = cs

    # -- constructors -------------------------------------------------
    @staticmethod
    def from_rational(ring: CycRing, q) -> "Cyc":
        cs = [Q0] * ring.degree
        cs[0] = Fraction(q)
        return Cyc(ring, cs)

    @staticmethod
    def zeta(ring: CycRing) -> "Cyc":
        if ring.degree == 1:
            # Phi_1 = x - 1, Phi_2 = x + 1: zeta is rational
            return Cyc(ring, (Q1,)) if ring.n == 1 else Cyc(ring, (-Q1,))
        cs = [Q0] * ring.degree
        cs[1] = Q1
        return Cyc(ring, cs)

    # -- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyc):
            if other.ring is not self.ring:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.from_rational(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyc(self.ring, self.ring.reduce_product(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        # extended Euclid in Q[x] against Phi_n
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        a = list(self.coeffs)
        while len(a) > 1 and not a[-1]:
            a.pop()
        r0, r1 = list(self.ring.phi), a
        s0, s1 = [Q0], [Q1]
        while any(r1):
            q, r = _poly_divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        c = r0[_poly_deg(r0)]
        inv = [x / c for x in s0]
        inv += [Q0] * (self.ring.degree - len(inv))
        return Cyc(self.ring, inv[: self.ring.degree])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        out = Cyc.from_rational(self.ring, 1)
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ring.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f"Cyc(n={self.ring.n}, {list(map(str, self.coeffs))})"


def _poly_deg(p):
    d = len(p) - 1
    while d > 0 and not p[d]:
        d -= 1
    return d


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Q0] * (n - len(a))
    b = list(b) + [Q0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_mul(a, b):
    out = [Q0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_divmod_q(num, den):
    num = list(num)
    dd = _poly_deg(den)
    lead = den[dd]
    dn = _poly_deg(num)
    if dn < dd:
        return [Q0], num
    quo = [Q0] * (dn - dd + 1)
    for d in range(dn - dd, -1, -1):
        c = num[d + dd] / lead
        if c:
            quo[d] = c
            for i in range(dd + 1):
                num[d + i] -= c * den[i]
    while len(num) > 1 and not num[-1]:
        num.pop()
    return quo, num


Scalar = Union[Fraction, Cyc]


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class Field:
    """Field descriptor: the rationals or a cyclotomic extension Q(zeta_n)."""

    def __init__(self, kind: str, n: int = 1):
        if kind not in ("rationals", "cyclotomic"):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == "cyclotomic" and n < 1:
            raise ValueError("cyclotomic order must be >= 1")
        self.kind = kind
        self.n = n if kind == "cyclotomic" else 1
        self.ring = _ring(self.n) if kind == "cyclotomic" else None
        self.degree = self.ring.degree if self.ring else 1
        self.zero = self.scalar(0)
        self.one = self.scalar(1)

    # -- constructors --------------------------------------------------
    @staticmethod
    def rationals() -> "Field":
        return Field("rationals")

    @staticmethod
    def cyclotomic(n: int) -> "Field":
        return Field("cyclotomic", n)

    def scalar(self, value) -> Scalar:
        if self.ring is None:
            return Fraction(value)
        if isinstance(value, Cyc):
            if value.ring is not self.ring:
                raise ValueError("scalar from a different cyclotomic order")
            return value
        return Cyc.from_rational(self.ring, Fraction(value))

    def zeta(self) -> Scalar:
        """A primitive n-th root of unity (1 for the rationals)."""
        if self.ring is None:
            return Q1
        return Cyc.zeta(self.ring)

    def inv(self, x: Scalar) -> Scalar:
        if isinstance(x, Fraction):
            return 1 / x
        return x.inverse()

    def contains_root_of_unity(self, m: int) -> bool:
        return self.root_of_unity(m) is not None

    def root_of_unity(self, m: int) -> Optional[Scalar]:
        """A primitive m-th root of unity in this field, or None."""
        if m == 1:
            return self.one
        if m == 2:
            return self.scalar(-1)
        if self.ring is None:
            return None
        n = self.n
        if n % m == 0:
            return self.zeta() ** (n // m)
        if n % 2 == 1 and m % 2 == 0 and (2 * n) % m == 0:
            # Q(zeta_n) = Q(zeta_2n) for odd n
            return (-self.zeta()) ** ((2 * n) // m)
        return None

    def random(self, rng: _random.Random, span: int = 10) -> Scalar:
        num = rng.randint(-span, span)
        den = rng.randint(1, span)
        base = Fraction(num, den)
        if self.ring is None:
            return base
        coeffs = [Fraction(rng.randint(-span, span), rng.randint(1, span))
                  for _ in range(self.degree)]
        return Cyc(self.ring, coeffs)

    # -- serialization ---------------------------------------------------
    def format_scalar(self, x: Scalar):
        if isinstance(x, Fraction):
            return str(x)
        return [str(c) for c in x.coeffs]

    def parse_scalar(self, data) -> Scalar:
        if isinstance(data, str):
            return self.scalar(Fraction(data))
        if isinstance(data, (int,)):
            return self.scalar(data)
        if self.ring is None:
            raise ValueError("coefficient-list scalar over the rationals")
        return Cyc(self.ring, [Fraction(c) for c in data])

    def to_json(self) -> dict:
        if self.kind == "rationals":
            return {"kind": "rationals"}
        return {"kind": "cyclotomic", "n": self.n}

    @staticmethod
    def from_json(data: dict) -> "Field":
        if data["kind"] == "rationals":
            return Field.rationals()
        return Field.cyclotomic(int(data["n"]))

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.n) == (other.kind, other.n)

    def __hash__(self):
        return hash((self.kind, self.n))

    def __repr__(self):
        return "Q" if self.kind == "rationals" else f"Q(zeta_{self.n})"


def field_make(kind: str, n: int = 1) -> Field:
    """Build a field descriptor; `kind` is 'rationals' or 'cyclotomic'."""
    return Field(kind, n)


# ---------------------------------------------------------------------------
# sparse vectors and matrices
# ---------------------------------------------------------------------------

@dataclass
class SparseVector:
    """Sparse vector with explicit dimension; no stored zeros."""

    dim: int
    entries: dict = _dcfield(default_factory=dict)

    def __post_init__(self):
        self.entries = {i: v for i, v in self.entries.items() if v}
        for i in self.entries:
            if not 0 <= i < self.dim:
                raise ValueError(f"index {i} out of range for dim {self.dim}")

    def items(self):
        return sorted(self.entries.items())

    def to_dense(self, zero=Q0):
        out = [zero] * self.dim
        for i, v in self.entries.items():
            out[i] = v
        return out

    def __eq__(self, other):
        return (self.dim, dict(self.entries)) == (other.dim, dict(other.entries))


@dataclass
class SparseMatrix:
    """Sparse matrix keyed by (row, col); no stored zeros."""

    nrows: int
    ncols: int
    entries: dict = _dcfield(default_factory=dict)

    def __post_init__(self):
        self.entries = {rc: v for rc, v in self.entries.items() if v}
        for (r, c) in self.entries:
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise ValueError(f"entry {(r, c)} out of range")

    @staticmethod
    def from_rows(rows: list[dict], ncols: int) -> "SparseMatrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in row.items():
                if v:
                    entries[(r, c)] = v
        return SparseMatrix(len(rows), ncols, entries)

    @staticmethod
    def from_dense(rows: list[list]) -> "SparseMatrix":
        entries = {}
        for r, row in enumerate(rows):
            for c, v in enumerate(row):
                if v:
                    entries[(r, c)] = v
        return SparseMatrix(len(rows), len(rows[0]) if rows else 0, entries)

    def rows(self) -> list[dict]:
        out = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def apply(self, vec: SparseVector) -> SparseVector:
        if vec.dim != self.ncols:
            raise ValueError("dimension mismatch")
        out: dict = {}
        for (r, c), v in self.entries.items():
            x = vec.entries.get(c)
            if x:
                out[r] = out.get(r, Q0) + v * x
        return SparseVector(self.nrows, out)

    def __eq__(self, other):
        return (self.nrows, self.ncols, dict(self.entries)) == (
            other.nrows, other.ncols, dict(other.entries))


def _row_reduce(rows: list[dict], ncols: int, inv):
    """Gaussian elimination on dict rows. Returns (pivots, echelon rows).

    Echelon rows are fully reduced (RREF) with pivot coefficient 1, keyed by
    pivot column.  Deterministic: columns scanned in increasing order, rows
    in their given order.
    """
    echelon: dict[int, dict] = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            if c not in echelon:
                break
            coef = row.pop(c)
            for cc, vv in echelon[c].items():
                if cc == c:
                    continue
                nv = row.get(cc)
                nv = -coef * vv if nv is None else nv - coef * vv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        if not row:
            continue
        c = min(row)
        ic = inv(row[c])
        norm = {cc: vv * ic for cc, vv in row.items()}
        # clean the tail against existing pivots; echelon tails carry no
        # pivot columns, so one pass suffices
        for cc in [x for x in norm if x != c and x in echelon]:
            coef = norm.pop(cc, None)
            if coef is None:
                continue
            for c2, v2 in echelon[cc].items():
                if c2 == cc:
                    continue
                nv = norm.get(c2)
                nv = -coef * v2 if nv is None else nv - coef * v2
                if nv:
                    norm[c2] = nv
                else:
                    norm.pop(c2, None)
        # back-substitute the new row into existing rows
        for pc, prow in echelon.items():
            coef = prow.get(c)
            if coef:
                for cc, vv in norm.items():
                    if cc == c:
                        continue
                    nv = prow.get(cc)
                    nv = -coef * vv if nv is None else nv - coef * vv
                    if nv:
                        prow[cc] = nv
                    else:
                        prow.pop(cc, None)
                del prow[c]
        echelon[c] = norm
    pivots = sorted(echelon)
    return pivots, echelon


def rref(m: SparseMatrix, field: Optional[Field] = None):
    """Reduced row-echelon form; returns (rank, pivot columns, reduced matrix)."""
    inv = (field.inv if field else (lambda x: 1 / x if isinstance(x, Fraction) else x.inverse()))
    pivots, echelon = _row_reduce(m.rows(), m.ncols, inv)
    out_rows = [echelon[c] for c in pivots]
    return len(pivots), pivots, SparseMatrix.from_rows(out_rows, m.ncols)


def kernel(m: SparseMatrix, field: Optional[Field] = None) -> list[SparseVector]:
    """Exact basis of the right null space of m."""
    rank, pivots, red = rref(m, field)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    rows = red.rows()
    by_pivot = {min(row): row for row in rows if row}
    basis = []
    one = Q1 if not field else field.one
    for fc in free_cols:
        vec = {fc: one}
        for pc in pivots:
            coef = by_pivot[pc].get(fc)
            if coef:
                vec[pc] = -coef
        basis.append(SparseVector(m.ncols, vec))
    return basis


NOT_IN_SPAN = None


def membership(v: SparseVector, span: list[SparseVector], field: Optional[Field] = None):
    """Coordinates of v over `span`, or None when v is not in the span."""
    for w in span:
        if w.dim != v.dim:
            raise ValueError("dimension mismatch")
    inv = (field.inv if field else (lambda x: 1 / x if isinstance(x, Fraction) else x.inverse()))
    # eliminate [span | v] rows, tracking coordinates
    k = len(span)
    rows = []
    for j, w in enumerate(span):
        row = dict(w.entries)
        row[v.dim + j] = Q1 if field is None else field.one  # bookkeeping columns
        rows.append(row)
    pivots, echelon = _row_reduce(rows, v.dim + k, inv)
    residual = dict(v.entries)
    coords = [Q0 if field is None else field.zero] * k
    while residual:
        c = min(residual)
        if c >= v.dim or c not in echelon:
            return NOT_IN_SPAN
        coef = residual.pop(c)
        for cc, vv in echelon[c].items():
            if cc == c:
                continue
            if cc >= v.dim:
                coords[cc - v.dim] = coords[cc - v.dim] + coef * vv
            else:
                nv = residual.get(cc, Q0) - coef * vv
                if nv:
                    residual[cc] = nv
                else:
                    residual.pop(cc, None)
    return coords


# ---------------------------------------------------------------------------
# prime-field screening (pre-check only; all reported results are re-verified
# exactly by the callers)
# ---------------------------------------------------------------------------

def rank_mod_prime(rows: list[dict], ncols: int, p: int) -> Optional[int]:
    """Rank of integer/rational dict rows modulo p; None if p divides a denominator."""
    echelon: dict[int, dict] = {}
    for row in rows:
        r = {}
        for c, v in row.items():
            if isinstance(v, Fraction):
                if v.denominator % p == 0:
                    return None
                x = (v.numerator * pow(v.denominator, -1, p)) % p
            else:
                x = int(v) % p
            if x:
                r[c] = x
        while r:
            c = min(r)
            if c in echelon:
                coef = r.pop(c)
                for cc, vv in echelon[c].items():
                    if cc == c:
                        continue
                    nv = (r.get(cc, 0) - coef * vv) % p
                    if nv:
                        r[cc] = nv
                    else:
                        r.pop(cc, None)
            else:
                ic = pow(r[c], -1, p)
                echelon[c] = {cc: (vv * ic) % p for cc, vv in r.items()}
                break
    return len(echelon)


# ---------------------------------------------------------------------------
# dense exact matrices (lists of lists of scalars) with a fast integer path
# ---------------------------------------------------------------------------

def dense_identity(n: int, field: Field) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]

def dense_zero(n: int, m: int, field: Field) -> list[list]:
    return [[field.zero] * m for _ in range(n)]

def dense_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def dense_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def dense_scale(a, c):
    return [[c * x for x in row] for row in a]

def dense_is_zero(a) -> bool:
    return all(not x for row in a for x in row)

def dense_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _rational_parts(a):
    """Common denominator and integer numerators of a Fraction matrix."""
    den = 1
    for row in a:
        for x in row:
            d = x.denominator
            if d != 1:
                g = _gcd(den, d)
                den = den // g * d
    num = [[int(x.numerator * (den // x.denominator)) for x in row] for row in a]
    return num, den


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def dense_mul(a, b, field: Optional[Field] = None):
    """Exact matrix product.  Rational matrices go through integer numpy
    matmul (int64 when provably overflow-safe, object dtype otherwise)."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    if n == 0 or m == 0:
        return [[] for _ in range(n)]
    if a and isinstance(a[0][0], Fraction):
        na, da = _rational_parts(a)
        nb, db = _rational_parts(b)
        ma = max((abs(x) for row in na for x in row), default=0)
        mb = max((abs(x) for row in nb for x in row), default=0)
        if ma and mb and ma * mb * k < (1 << 62):
            prod = _np.array(na, dtype=_np.int64) @ _np.array(nb, dtype=_np.int64)
        else:
            prod = _np.array(na, dtype=object) @ _np.array(nb, dtype=object)
        den = da * db
        return [[Fraction(int(prod[i, j]), den) for j in range(m)] for i in range(n)]
    zero = field.zero if field else a[0][0] * 0
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j]:
                    oi[j] = oi[j] + c * bt[j]
    return out


def dense_mat_vec(a, v):
    out = []
    for row in a:
        s = None
        for x, y in zip(row, v):
            t = x * y
            s = t if s is None else s + t
        out.append(s)
    return out
