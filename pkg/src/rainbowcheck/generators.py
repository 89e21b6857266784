"""Built-in triangulations, Sperner-style instances, and seeded colorings.

The random generator is Python's Mersenne Twister (random.Random), whose
output for a fixed seed is stable across platforms and versions, so seeded
colorings are reproducible everywhere.
"""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass

from .chromatic import Coloring
from .complexes import SimplicialComplex
from .subdivision import barycentric_subdivision

MAX_SIMPLEX_DIM = 6

# 7-vertex triangulated torus: 14 triangles on Z/7.
TORUS7_FACETS = tuple(
    tuple(sorted(t))
    for i in range(7)
    for t in ((i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7))
)

# 6-vertex projective plane (antipodal quotient of the icosahedron), 10 triangles.
RP2_6_FACETS = (
    (1, 2, 4),
    (1, 2, 5),
    (1, 3, 4),
    (1, 3, 6),
    (1, 5, 6),
    (2, 3, 5),
    (2, 3, 6),
    (2, 4, 6),
    (3, 4, 5),
    (4, 5, 6),
)


@dataclass(frozen=True)
class NamedComplex:
    name: str
    complex: SimplicialComplex


_NAME_RE = re.compile(r"^([a-z0-9_]+?)(?:\((\d+)\))?$")


def generate(name: str) -> NamedComplex:
    """Catalog lookup: simplex(n), simplex_boundary(n), torus7, rp2_6,
    disjoint(k), cycle(k)."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"cannot parse complex name {name!r}")
    base, arg = m.group(1), m.group(2)
    arg = int(arg) if arg is not None else None

    if base == "simplex":
        if arg is None or not 0 <= arg <= MAX_SIMPLEX_DIM:
            raise ValueError(f"simplex(n) needs 0 <= n <= {MAX_SIMPLEX_DIM}")
        return NamedComplex(name, SimplicialComplex([range(arg + 1)]))
    if base == "simplex_boundary":
        if arg is None or not 1 <= arg <= MAX_SIMPLEX_DIM:
            raise ValueError(f"simplex_boundary(n) needs 1 <= n <= {MAX_SIMPLEX_DIM}")
        facets = itertools.combinations(range(arg + 2), arg + 1)
        return NamedComplex(name, SimplicialComplex(facets))
    if base == "torus7":
        if arg is not None:
            raise ValueError("torus7 takes no parameter")
        return NamedComplex("torus7", SimplicialComplex(TORUS7_FACETS))
    if base == "rp2_6":
        if arg is not None:
            raise ValueError("rp2_6 takes no parameter")
        return NamedComplex("rp2_6", SimplicialComplex(RP2_6_FACETS))
    if base == "disjoint":
        if arg is None or arg < 1:
            raise ValueError("disjoint(k) needs k >= 1")
        return NamedComplex(name, SimplicialComplex([(2 * i, 2 * i + 1) for i in range(arg)]))
    if base == "cycle":
        if arg is None or arg < 3:
            raise ValueError("cycle(k) needs k >= 3")
        return NamedComplex(name, SimplicialComplex([(i, (i + 1) % arg) for i in range(arg)]))
    raise ValueError(f"unknown complex name {name!r}")


def sperner_instance(n: int, k: int = 1, tie_break=min):
    """k-fold barycentric subdivision of the n-simplex with the Sperner
    coloring that sends each barycenter to tie_break of the original
    vertices spanning its carrier.

    Returns (complex, coloring); the coloring satisfies the Sperner carrier
    condition by construction.
    """
    if not 1 <= n <= 4:
        raise ValueError("sperner_instance supports 1 <= n <= 4")
    if k < 1:
        raise ValueError("need k >= 1 subdivisions")
    if math.factorial(n + 1) ** k > 200_000:
        raise ValueError(f"sd^{k} of the {n}-simplex exceeds the size guard")
    K = SimplicialComplex([range(n + 1)])
    support = {v: frozenset([v]) for v in range(n + 1)}
    for _ in range(k):
        sdm = barycentric_subdivision(K)
        support = {
            label: frozenset().union(*(support[u] for u in face))
            for label, face in sdm.carrier.items()
        }
        K = sdm.complex
    classes = [[] for _ in range(n + 1)]
    for v in K.vertices:
        classes[tie_break(support[v])].append(v)
    return K, Coloring(classes)


def random_coloring(K: SimplicialComplex, classes: int, seed: int) -> Coloring:
    """Seeded uniform coloring, re-drawn until every class is nonempty."""
    n_vertices = len(K.vertices)
    if classes < 1 or classes > n_vertices:
        raise ValueError(f"cannot split {n_vertices} vertices into {classes} nonempty classes")
    rng = random.Random(seed)
    while True:
        assignment = [rng.randrange(classes) for _ in range(n_vertices)]
        if len(set(assignment)) == classes:
            break
    out = [[] for _ in range(classes)]
    for v, c in zip(K.vertices, assignment):
        out[c].append(v)
    return Coloring(out)
