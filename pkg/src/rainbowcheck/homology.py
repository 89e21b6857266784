"""Exact reduced and relative simplicial homology via boundary-matrix ranks.

All arithmetic is exact: modular integers over GF(p), fraction-free
integer elimination over the rationals. No floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .complexes import SimplicialComplex


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: GF(p) for prime p < 2**31, or the rationals (p == 0)."""

    p: int

    def __post_init__(self):
        if self.p == 0:
            return
        if self.p >= 2**31 or not _is_prime(self.p):
            raise ValueError(f"{self.p} is not a prime below 2**31")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(0)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self):
        return "Q" if self.p == 0 else f"GF({self.p})"


QQ = FieldSpec.rationals()
GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
GF5 = FieldSpec.gf(5)

# An "over an arbitrary field" hypothesis is reported per field over this menu.
DEFAULT_FIELDS = (GF2, GF3, GF5, QQ)


def parse_field(text: str) -> FieldSpec:
    """Parse a CLI field token: 'q', a prime like '2', or 'p:N'."""
    t = text.strip().lower()
    if t in ("q", "qq", "rational", "rationals"):
        return QQ
    if t.startswith("p:"):
        t = t[2:]
    if t.isdigit():
        return FieldSpec.gf(int(t))
    raise ValueError(f"cannot parse field {text!r} (expected q, a prime, or p:N)")


@dataclass(frozen=True)
class SparseMatrix:
    """Sparse matrix with entries in canonical column-major order."""

    rows: int
    cols: int
    entries: tuple  # ((row, col, value), ...), no zeros, no duplicate positions

    def __post_init__(self):
        for r, c, v in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r},{c}) out of range")
            if v == 0:
                raise ValueError("explicit zero entry")
        positions = [(c, r) for r, c, _ in self.entries]
        if len(set(positions)) != len(positions):
            raise ValueError("duplicate entry position")
        object.__setattr__(
            self, "entries", tuple(sorted(self.entries, key=lambda e: (e[1], e[0])))
        )

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.cols, self.rows, tuple((c, r, v) for r, c, v in self.entries))

    def column_dicts(self):
        cols = [dict() for _ in range(self.cols)]
        for r, c, v in self.entries:
            cols[c][r] = v
        return cols

    def matmul(self, other: "SparseMatrix", field: FieldSpec) -> "SparseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        mine = self.column_dicts()
        out = []
        for r, c, v in other.entries:
            # column c of the product accumulates v * (column r of self)
            out.append((c, r, v))
        acc = {}
        for c, r, v in out:
            for rr, vv in mine[r].items():
                acc[(rr, c)] = acc.get((rr, c), 0) + v * vv
        entries = []
        for (rr, c), v in acc.items():
            v = v % field.p if not field.is_rational else v
            if v != 0:
                entries.append((rr, c, v))
        return SparseMatrix(self.rows, other.cols, tuple(entries))


def _row_dicts(M: SparseMatrix):
    rows = {}
    for r, c, v in M.entries:
        rows.setdefault(r, {})[c] = v
    return list(rows.values())


def _rank_gf(rows, p: int) -> int:
    pivots = {}  # pivot column -> normalized row dict
    rank = 0
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], p - 2, p) if p > 2 else 1
                pivots[c] = {cc: (vv * inv) % p for cc, vv in row.items()}
                rank += 1
                break
            f = row[c]
            for cc, vv in piv.items():
                nv = (row.get(cc, 0) - f * vv) % p
                if nv:
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
        # exhausted row: linearly dependent
    return rank


def _clear_denominators(row):
    if all(isinstance(v, int) for v in row.values()):
        ints = dict(row)
    else:
        fracs = {c: Fraction(v) for c, v in row.items()}
        lcm = 1
        for v in fracs.values():
            lcm = lcm * v.denominator // gcd(lcm, v.denominator)
        ints = {c: int(v * lcm) for c, v in fracs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if g > 1:
        ints = {c: v // g for c, v in ints.items()}
    return {c: v for c, v in ints.items() if v}


def _rank_rational(rows) -> int:
    """Fraction-free elimination on integer rows with gcd reduction."""
    pivots = {}
    rank = 0
    for row in rows:
        row = _clear_denominators(row)
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                pivots[c] = row
                rank += 1
                break
            pv, rv = piv[c], row[c]
            new = {}
            for cc in set(row) | set(piv):
                nv = row.get(cc, 0) * pv - piv.get(cc, 0) * rv
                if nv:
                    new[cc] = nv
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {cc: v // g for cc, v in new.items()}
            row = new
    return rank


def field_rank(M: SparseMatrix, F: FieldSpec) -> int:
    """Exact rank of M over F."""
    rows = _row_dicts(M)
    if F.is_rational:
        return _rank_rational(rows)
    return _rank_gf(rows, F.p)


@dataclass(frozen=True)
class ChainComplexMatrices:
    """Augmented boundary operators of a complex over a fixed field.

    face_counts[k] for k = -1..n (the -1 count is 1: the augmentation);
    boundaries[k] maps k-chains to (k-1)-chains for k = 0..n, with
    boundaries[0] the all-ones augmentation row.
    """

    field: FieldSpec
    face_counts: dict
    boundaries: dict


def boundary_matrices(K: SimplicialComplex, F: FieldSpec) -> ChainComplexMatrices:
    """Standard simplicial boundary operators with signs (-1)^i over the
    frozen vertex order; columns indexed by sorted k-faces."""
    counts = {-1: 1}
    boundaries = {}
    for k in range(0, K.dim + 1):
        counts[k] = K.face_count(k)
    if K.dim >= 0:
        n0 = counts[0]
        one = 1 % F.p if not F.is_rational else 1
        entries = tuple((0, j, one) for j in range(n0)) if one else ()
        boundaries[0] = SparseMatrix(1, n0, entries)
    index = {}
    for k in range(1, K.dim + 1):
        lower = K._faces(k - 1)
        index = {f: i for i, f in enumerate(lower)}
        entries = []
        for j, f in enumerate(K._faces(k)):
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                sign = -1 if i % 2 else 1
                if not F.is_rational:
                    sign %= F.p
                if sign:
                    entries.append((index[sub], j, sign))
        boundaries[k] = SparseMatrix(len(lower), counts[k], tuple(entries))
    return ChainComplexMatrices(F, counts, boundaries)


class BettiVector:
    """Reduced Betti numbers indexed from degree -1 upward; 0 off support."""

    __slots__ = ("_values",)

    def __init__(self, values=None):
        self._values = {k: int(v) for k, v in dict(values or {}).items() if v}

    def __getitem__(self, k: int) -> int:
        return self._values.get(k, 0)

    get = __getitem__

    def nonzero(self) -> dict:
        return dict(self._values)

    def as_dict(self, min_degree: int, max_degree: int) -> dict:
        return {k: self[k] for k in range(min_degree, max_degree + 1)}

    def is_zero(self) -> bool:
        return not self._values

    def __eq__(self, other):
        if isinstance(other, BettiVector):
            return self._values == other._values
        if isinstance(other, dict):
            return self._values == {k: v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._values.items()))

    def __repr__(self):
        return f"BettiVector({self._values})"


def sphere_betti(n: int) -> BettiVector:
    """Reduced Betti vector of the n-sphere (n >= -1; S^-1 is the empty complex)."""
    return BettiVector({n: 1})


_betti_cache = {}


def reduced_betti(K: SimplicialComplex, F: FieldSpec) -> BettiVector:
    """Reduced Betti numbers of K over F; degree -1 is 1 exactly for the
    empty complex."""
    key = (K.facets, F)
    hit = _betti_cache.get(key)
    if hit is not None:
        return hit
    if K.is_empty:
        result = BettiVector({-1: 1})
        _betti_cache[key] = result
        return result
    mats = boundary_matrices(K, F)
    ranks = {k: field_rank(M, F) for k, M in mats.boundaries.items()}
    ranks[K.dim + 1] = 0
    values = {-1: 1 - ranks[0]}
    for k in range(0, K.dim + 1):
        values[k] = mats.face_counts[k] - ranks[k] - ranks[k + 1]
    result = BettiVector(values)
    _betti_cache[key] = result
    return result


def relative_betti(K: SimplicialComplex, L: SimplicialComplex, F: FieldSpec) -> BettiVector:
    """Betti numbers of the pair (K, L): quotient chain complex on the faces
    of K not in L.  Relative homology is unreduced (no augmentation); the
    degree -1 entry is fixed at 0."""
    for f in L.facets:
        if not K.has_face(f):
            raise ValueError(f"{f!r} is a facet of L but not a face of K")
    l_faces = set()
    for k in range(0, L.dim + 1):
        l_faces.update(L._faces(k))
    bases = {}
    for k in range(0, K.dim + 1):
        bases[k] = [f for f in K._faces(k) if f not in l_faces]
    bases[K.dim + 1] = []
    ranks = {0: 0}  # no boundary out of relative 0-chains
    for k in range(1, K.dim + 2):
        index = {f: i for i, f in enumerate(bases[k - 1])}
        entries = []
        for j, f in enumerate(bases.get(k, [])):
            for i in range(len(f)):
                sub = f[:i] + f[i + 1 :]
                if sub in index:
                    sign = -1 if i % 2 else 1
                    if not F.is_rational:
                        sign %= F.p
                    entries.append((index[sub], j, sign))
        M = SparseMatrix(len(bases[k - 1]), len(bases.get(k, [])), tuple(entries))
        ranks[k] = field_rank(M, F)
    values = {}
    for k in range(0, K.dim + 1):
        values[k] = len(bases[k]) - ranks[k] - ranks[k + 1]
    return BettiVector(values)


def is_acyclic(K: SimplicialComplex, F: FieldSpec) -> bool:
    """True iff K is nonempty with vanishing reduced homology over F."""
    return not K.is_empty and reduced_betti(K, F).is_zero()
