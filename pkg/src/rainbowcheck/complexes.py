"""Finite abstract simplicial complexes, stored by their maximal faces.

A complex is immutable after construction. Vertex labels must be mutually
comparable (all strings or all integers, say); the sorted order of the
labels is frozen at construction and determines all orientation signs
downstream.
"""

from __future__ import annotations

import itertools
import threading
from collections import Counter
from dataclasses import dataclass

# A simplex is a strictly sorted tuple of vertex labels.
Simplex = tuple


def _normalize_facet(vertices) -> Simplex:
    vs = tuple(sorted(vertices))
    if not vs:
        raise ValueError("empty facet is not allowed")
    for a, b in zip(vs, vs[1:]):
        if a == b:
            raise ValueError(f"duplicate vertex {a!r} inside facet {list(vertices)!r}")
    return vs


class SimplicialComplex:
    """Abstract simplicial complex given by an antichain of facets.

    k-faces are enumerated on demand and memoized; the empty complex
    (no facets) is a legal value with dim == -1.
    """

    __slots__ = ("facets", "vertices", "dim", "_facet_sets", "_face_table", "_lock")

    def __init__(self, facets=()):
        candidates = {_normalize_facet(f) for f in facets}
        # Antichain normalization: absorb faces contained in other input faces.
        maximal = set()
        as_sets = {f: frozenset(f) for f in candidates}
        for f in candidates:
            fs = as_sets[f]
            if not any(f != g and fs <= as_sets[g] for g in candidates):
                maximal.add(f)
        self.facets = frozenset(maximal)
        self.vertices = tuple(sorted({v for f in maximal for v in f}))
        self.dim = max((len(f) - 1 for f in maximal), default=-1)
        self._facet_sets = [frozenset(f) for f in sorted(maximal)]
        self._face_table = {-1: [()]}
        self._lock = threading.Lock()

    @property
    def is_empty(self) -> bool:
        return not self.facets

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __repr__(self):
        return f"SimplicialComplex(dim={self.dim}, facets={len(self.facets)}, vertices={len(self.vertices)})"

    def _faces(self, k: int):
        """All k-faces, sorted; returns [] above dim, [()] at k == -1."""
        if k < -1 or k > self.dim:
            return [] if k != -1 else [()]
        with self._lock:
            if k not in self._face_table:
                seen = set()
                for f in self.facets:
                    if len(f) >= k + 1:
                        seen.update(itertools.combinations(f, k + 1))
                self._face_table[k] = sorted(seen)
            return self._face_table[k]

    def faces(self, k: int):
        """All k-faces in lexicographic order; k = -1 yields the empty-simplex marker."""
        if k < -1 or k > self.dim:
            raise ValueError(f"k={k} out of range for complex of dim {self.dim}")
        return list(self._faces(k))

    def face_count(self, k: int) -> int:
        return len(self._faces(k))

    def has_face(self, simplex) -> bool:
        s = frozenset(simplex)
        return any(s <= f for f in self._facet_sets)

    def induced(self, W) -> "SimplicialComplex":
        return induced_subcomplex(self, W)


def from_facets(facet_lists) -> SimplicialComplex:
    """Build a normalized complex from an iterable of vertex lists."""
    return SimplicialComplex(facet_lists)


def induced_subcomplex(K: SimplicialComplex, W) -> SimplicialComplex:
    """Full subcomplex on the vertex set W: all faces with vertices inside W."""
    W = frozenset(W)
    unknown = W - set(K.vertices)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown, key=repr)!r}")
    pieces = []
    for f in K.facets:
        kept = W.intersection(f)
        if kept:
            pieces.append(tuple(sorted(kept)))
    return SimplicialComplex(pieces)


def boundary_complex(K: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by the (n-1)-faces lying in exactly one facet.

    Requires K pure; empty for a closed pseudomanifold, and empty for a
    pure 0-complex (points have empty boundary).
    """
    if K.is_empty:
        return SimplicialComplex()
    if not is_pure(K):
        raise ValueError("boundary_complex requires a pure complex")
    n = K.dim
    if n == 0:
        return SimplicialComplex()
    degrees = _ridge_degrees(K)
    return SimplicialComplex([r for r, d in degrees.items() if d == 1])


def is_pure(K: SimplicialComplex) -> bool:
    return K.is_empty or all(len(f) == K.dim + 1 for f in K.facets)


def _ridge_degrees(K: SimplicialComplex) -> Counter:
    """How many top-dimensional facets contain each (dim-1)-face."""
    degrees = Counter()
    for f in K.facets:
        if len(f) == K.dim + 1:
            degrees.update(itertools.combinations(f, K.dim))
    return degrees


def euler_characteristic(K: SimplicialComplex) -> int:
    return sum((-1) ** k * K.face_count(k) for k in range(K.dim + 1))


def connected_components(K: SimplicialComplex):
    """Partition of the vertex set under the edge relation, sorted blocks."""
    parent = {v: v for v in K.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if K.dim >= 1:
        for a, b in K._faces(1):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    blocks = {}
    for v in K.vertices:
        blocks.setdefault(find(v), []).append(v)
    return sorted(sorted(b) for b in blocks.values())


def vertex_link(K: SimplicialComplex, v) -> SimplicialComplex:
    """Link of v: complex generated by f minus v over the facets f containing v."""
    if v not in set(K.vertices):
        raise ValueError(f"unknown vertex {v!r}")
    pieces = [tuple(u for u in f if u != v) for f in K.facets if v in f and len(f) > 1]
    return SimplicialComplex(pieces)


@dataclass(frozen=True)
class PseudomanifoldReport:
    is_pure: bool
    ridge_degrees_ok: bool
    is_closed: bool
    link_betti_ok: bool
    strongly_connected: bool

    def as_dict(self):
        return {
            "is_pure": self.is_pure,
            "ridge_degrees_ok": self.ridge_degrees_ok,
            "is_closed": self.is_closed,
            "link_betti_ok": self.link_betti_ok,
            "strongly_connected": self.strongly_connected,
        }


def pseudomanifold_report(K: SimplicialComplex) -> PseudomanifoldReport:
    """Necessary manifold conditions, decided by finite enumeration.

    Vertex links are compared against the GF(2) reduced Betti vectors of
    the (n-1)-sphere and the (n-1)-ball; this is necessary, not sufficient,
    for K to triangulate a manifold.
    """
    from .homology import GF2, reduced_betti  # local import: avoid cycle

    if K.is_empty:
        return PseudomanifoldReport(True, True, False, True, False)
    pure = is_pure(K)
    degrees = _ridge_degrees(K)
    ridge_ok = all(d <= 2 for d in degrees.values())
    closed = pure and K.dim >= 1 and all(d == 2 for d in degrees.values())

    n = K.dim
    link_ok = True
    for v in K.vertices:
        lk = vertex_link(K, v)
        betti = reduced_betti(lk, GF2)
        sphere = all(betti[k] == (1 if k == n - 1 else 0) for k in range(-1, n))
        ball = (not lk.is_empty) and all(betti[k] == 0 for k in range(-1, n))
        if not (sphere or ball):
            link_ok = False
            break

    strong = False
    if pure and K.facets:
        facets = sorted(K.facets)
        ridge_to_facets = {}
        for i, f in enumerate(facets):
            for r in itertools.combinations(f, len(f) - 1):
                ridge_to_facets.setdefault(r, []).append(i)
        adj = {i: set() for i in range(len(facets))}
        for members in ridge_to_facets.values():
            for i in members:
                adj[i].update(m for m in members if m != i)
        seen = {0}
        stack = [0]
        while stack:
            for j in adj[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        strong = len(seen) == len(facets)

    return PseudomanifoldReport(pure, ridge_ok, closed, link_ok, strong)
