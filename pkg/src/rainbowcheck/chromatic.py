"""Vertex colorings, chromatic subcomplexes, rainbow-simplex enumeration,
and the homological sufficient-condition checkers.

Contractibility-style hypotheses are replaced by acyclicity over the
requested fields and reported as proxy-pass, never pass; manifold-structure
hypotheses are reported as assumed (with the pseudomanifold report attached).
A homological condition quantified over fields counts as holding when it
holds over at least one requested field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

from .complexes import (
    SimplicialComplex,
    boundary_complex,
    induced_subcomplex,
    pseudomanifold_report,
)
from .homology import BettiVector, FieldSpec, is_acyclic, reduced_betti, relative_betti, sphere_betti

PASS = "pass"
FAIL = "fail"
PROXY_PASS = "proxy-pass"
PROXY_FAIL = "proxy-fail"
ASSUMED = "assumed"

_OK = (PASS, PROXY_PASS, ASSUMED)

THEOREM_IDS = ("meshulam", "surface", "three", "four", "n", "sphere")


class ArityError(ValueError):
    """Complex dimension / class count does not match the requested checker."""


class Coloring:
    """Partition of a vertex set into color classes V_0..V_m."""

    __slots__ = ("classes", "class_of")

    def __init__(self, classes):
        self.classes = tuple(frozenset(c) for c in classes)
        self.class_of = {}
        for i, cls in enumerate(self.classes):
            for v in cls:
                if v in self.class_of:
                    raise ValueError(f"vertex {v!r} appears in more than one class")
                self.class_of[v] = i

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def union(self, S) -> frozenset:
        out = set()
        for i in S:
            if not 0 <= i < self.num_classes:
                raise IndexError(f"class index {i} out of range")
            out.update(self.classes[i])
        return frozenset(out)

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.classes == other.classes

    def __hash__(self):
        return hash(self.classes)

    def __repr__(self):
        return f"Coloring({[sorted(c) for c in self.classes]})"


def validate_coloring(K: SimplicialComplex, C: Coloring):
    """Diagnostics: 'error:' entries break the partition property,
    'warning:' entries (empty classes) do not."""
    violations = []
    vertex_set = set(K.vertices)
    for v in sorted(vertex_set - set(C.class_of)):
        violations.append(f"error: vertex {v!r} is uncolored")
    for v in sorted(set(C.class_of) - vertex_set):
        violations.append(f"error: colored vertex {v!r} is not in the complex")
    for i, cls in enumerate(C.classes):
        if not cls:
            violations.append(f"warning: class {i} is empty")
    return violations


def coloring_errors(K: SimplicialComplex, C: Coloring):
    return [v for v in validate_coloring(K, C) if v.startswith("error:")]


def chromatic_subcomplex(K: SimplicialComplex, C: Coloring, S) -> SimplicialComplex:
    """K_S: the full subcomplex induced by the union of the classes in S."""
    return induced_subcomplex(K, C.union(S) & set(K.vertices))


def rainbow_simplices(K: SimplicialComplex, C: Coloring):
    """Top-dimensional faces with exactly one vertex in each color class.

    Requires class count == dim(K) + 1; otherwise there is nothing to
    enumerate and the empty list is returned.
    """
    n = K.dim
    if C.num_classes != n + 1 or n < 0:
        return []
    full = set(range(n + 1))
    out = []
    for f in K._faces(n):
        colors = {C.class_of.get(v) for v in f}
        if colors == full:
            out.append(f)
    return out


@dataclass(frozen=True)
class HypothesisVerdict:
    id: str
    status: str
    detail: dict = dataclass_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in _OK

    def as_dict(self):
        return {"id": self.id, "status": self.status, "detail": _jsonable(self.detail)}


@dataclass(frozen=True)
class CheckReport:
    theorem_id: str
    verdicts: tuple
    all_hold: bool
    rainbow_witnesses: tuple
    consistent: bool

    def as_dict(self):
        return {
            "theorem_id": self.theorem_id,
            "verdicts": [v.as_dict() for v in self.verdicts],
            "all_hold": self.all_hold,
            "rainbow_witnesses": [list(w) for w in self.rainbow_witnesses],
            "consistent": self.consistent,
        }


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(v) for v in obj)
    if isinstance(obj, BettiVector):
        return obj.nonzero()
    if isinstance(obj, FieldSpec):
        return str(obj)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    if hasattr(obj, "as_dict"):
        return _jsonable(obj.as_dict())
    return str(obj)


def _assemble(theorem_id, verdicts, witnesses, fields) -> CheckReport:
    """all_hold: every field-independent verdict ok, and all field-scoped
    verdicts ok over at least one field."""
    global_ok = all(v.ok for v in verdicts if "field" not in v.detail)
    field_names = [str(f) for f in fields]
    scoped = [v for v in verdicts if "field" in v.detail]
    if scoped and field_names:
        some_field = any(
            all(v.ok for v in scoped if v.detail["field"] == name) for name in field_names
        )
    else:
        some_field = True
    all_hold = global_ok and some_field
    witnesses = tuple(witnesses)
    consistent = (not all_hold) or bool(witnesses)
    return CheckReport(theorem_id, tuple(verdicts), all_hold, witnesses, consistent)


def _nonempty_subsets(n_classes: int):
    subsets = []
    for size in range(1, n_classes + 1):
        subsets.extend(itertools.combinations(range(n_classes), size))
    return sorted(subsets)


def check_meshulam(K: SimplicialComplex, C: Coloring, F: FieldSpec) -> CheckReport:
    """Check the vanishing condition b~_{|S|-2}(K_S) = 0 for every nonempty
    color subset S over the field F; sufficient for a rainbow simplex.

    For |S| = 1 the verdict requires K_S to be nonempty AND connected
    (degrees -1 and 0).  This is a deliberate strengthening of the bare
    degree -1 reading; the condition stays sufficient, and the extra
    connectivity check is what catches scattered single-color classes.
    """
    verdicts = []
    if C.num_classes != K.dim + 1:
        verdicts.append(
            HypothesisVerdict(
                "arity",
                FAIL,
                {"classes": C.num_classes, "dim": K.dim, "expected_classes": K.dim + 1},
            )
        )
        return _assemble("meshulam", verdicts, (), [F])
    for S in _nonempty_subsets(C.num_classes):
        KS = chromatic_subcomplex(K, C, S)
        betti = reduced_betti(KS, F)
        d = max(len(S) - 2, 0)
        val = betti[d] if len(S) > 1 else betti[-1] + betti[0]
        verdicts.append(
            HypothesisVerdict(
                f"vanishing[S={list(S)}]",
                PASS if val == 0 else FAIL,
                {"S": list(S), "degree": d, "field": str(F), "betti": val},
            )
        )
    witnesses = rainbow_simplices(K, C)
    return _assemble("meshulam", verdicts, witnesses, [F])


def _pairwise_edge_verdicts(K, C):
    edges = K._faces(1) if K.dim >= 1 else []
    present = set()
    for a, b in edges:
        ca, cb = C.class_of.get(a), C.class_of.get(b)
        if ca is not None and cb is not None and ca != cb:
            present.add((min(ca, cb), max(ca, cb)))
    verdicts = []
    for i, j in itertools.combinations(range(C.num_classes), 2):
        ok = (i, j) in present
        verdicts.append(
            HypothesisVerdict(f"edge[{i},{j}]", PASS if ok else FAIL, {"i": i, "j": j})
        )
    return verdicts


def _classes_nonempty_verdict(C):
    empty = [i for i, cls in enumerate(C.classes) if not cls]
    return HypothesisVerdict(
        "classes_nonempty", PASS if not empty else FAIL, {"empty_classes": empty}
    )


def _manifold_verdict(K, label):
    return HypothesisVerdict(label, ASSUMED, {"pseudomanifold": pseudomanifold_report(K)})


def _is_closed(K):
    return pseudomanifold_report(K).is_closed


def check_theorem(K: SimplicialComplex, C: Coloring, theorem_id: str, fields) -> CheckReport:
    """Run the hypothesis checks of one of the named sufficient-condition
    theorems; returns per-condition verdicts, rainbow witnesses, and the
    computed consistency flag."""
    fields = list(fields)
    if not fields:
        raise ValueError("at least one field is required")
    if theorem_id == "meshulam":
        if len(fields) == 1:
            return check_meshulam(K, C, fields[0])
        raise ValueError("check_meshulam takes a single field; call it per field")
    if theorem_id not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem_id!r}")
    n = K.dim
    m1 = C.num_classes

    if theorem_id == "surface":
        if n != 2 or m1 != 3:
            raise ArityError(f"surface checker needs dim 2 and 3 classes, got dim {n}, {m1} classes")
        return _check_surface(K, C, fields)
    if theorem_id == "three":
        if n != 3 or m1 != 4:
            raise ArityError(f"three checker needs dim 3 and 4 classes, got dim {n}, {m1} classes")
        return _check_three(K, C, fields)
    if theorem_id == "four":
        if n != 4 or m1 != 5:
            raise ArityError(f"four checker needs dim 4 and 5 classes, got dim {n}, {m1} classes")
        return _check_four(K, C, fields)
    if theorem_id == "n":
        if m1 != n + 1:
            raise ArityError(f"n checker needs dim+1 classes, got dim {n}, {m1} classes")
        if not _is_closed(K):
            raise ArityError("n checker requires a closed complex (every ridge in 2 facets)")
        return _check_n(K, C, fields)
    # sphere
    if m1 != n + 1:
        raise ArityError(f"sphere checker needs dim+1 classes, got dim {n}, {m1} classes")
    return _check_sphere(K, C, fields)


def _check_surface(K, C, fields):
    verdicts = [_manifold_verdict(K, "surface_manifold"), _classes_nonempty_verdict(C)]
    dK = boundary_complex(K)
    for i in range(3):
        Ki = chromatic_subcomplex(K, C, (i,))
        Ki_bd = (
            induced_subcomplex(dK, C.classes[i] & set(dK.vertices))
            if not dK.is_empty
            else SimplicialComplex()
        )
        for F in fields:
            val = relative_betti(Ki, Ki_bd, F)[1]
            verdicts.append(
                HypothesisVerdict(
                    f"relative_h1[i={i}]",
                    PASS if val == 0 else FAIL,
                    {"i": i, "field": str(F), "betti": val},
                )
            )
    return _assemble("surface", verdicts, rainbow_simplices(K, C), fields)


def _acyclic_class_verdicts(K, C, fields, dK):
    verdicts = []
    for i in range(C.num_classes):
        Ki = chromatic_subcomplex(K, C, (i,))
        Ki_bd = (
            induced_subcomplex(dK, C.classes[i] & set(dK.vertices))
            if not dK.is_empty
            else SimplicialComplex()
        )
        for F in fields:
            interior_ok = is_acyclic(Ki, F)
            bd_ok = Ki_bd.is_empty or is_acyclic(Ki_bd, F)
            verdicts.append(
                HypothesisVerdict(
                    f"class_acyclic[i={i}]",
                    PROXY_PASS if interior_ok and bd_ok else PROXY_FAIL,
                    {
                        "i": i,
                        "field": str(F),
                        "class_acyclic": interior_ok,
                        "boundary_part_ok": bd_ok,
                    },
                )
            )
    return verdicts


def _vanishing_verdicts(K, fields, degrees, label="ambient_vanishing"):
    verdicts = []
    for F in fields:
        betti = reduced_betti(K, F)
        bad = {k: betti[k] for k in degrees if betti[k] != 0}
        verdicts.append(
            HypothesisVerdict(
                label,
                PASS if not bad else FAIL,
                {"field": str(F), "degrees": list(degrees), "nonzero": bad},
            )
        )
    return verdicts


def _check_three(K, C, fields):
    verdicts = [_manifold_verdict(K, "three_manifold")]
    verdicts += _vanishing_verdicts(K, fields, [2])
    verdicts += _acyclic_class_verdicts(K, C, fields, boundary_complex(K))
    verdicts += _pairwise_edge_verdicts(K, C)
    return _assemble("three", verdicts, rainbow_simplices(K, C), fields)


def _check_four(K, C, fields):
    verdicts = [_manifold_verdict(K, "four_manifold")]
    verdicts += _vanishing_verdicts(K, fields, [2, 3])
    verdicts += _pairwise_edge_verdicts(K, C)
    verdicts += _acyclic_class_verdicts(K, C, fields, SimplicialComplex())
    # Handlebody-neighborhood proxy: no homology above the 1-dimensional spine.
    for S in itertools.combinations(range(5), 2):
        KS = chromatic_subcomplex(K, C, S)
        for F in fields:
            betti = reduced_betti(KS, F)
            bad = {k: betti[k] for k in range(2, K.dim + 1) if betti[k] != 0}
            verdicts.append(
                HypothesisVerdict(
                    f"pair_spine[S={list(S)}]",
                    PROXY_PASS if not bad else PROXY_FAIL,
                    {"S": list(S), "field": str(F), "nonzero": bad},
                )
            )
    return _assemble("four", verdicts, rainbow_simplices(K, C), fields)


def _check_n(K, C, fields):
    n = K.dim
    verdicts = [_manifold_verdict(K, "n_manifold")]
    verdicts += _vanishing_verdicts(K, fields, list(range(2, n)))
    # Spine proxy: a complex retracting to an i-dimensional spine has no
    # homology above degree i; here i = |S| - 1.
    for size in range(1, n):
        for S in itertools.combinations(range(n + 1), size):
            KS = chromatic_subcomplex(K, C, S)
            for F in fields:
                betti = reduced_betti(KS, F)
                bad = {k: betti[k] for k in range(size, K.dim + 1) if betti[k] != 0}
                verdicts.append(
                    HypothesisVerdict(
                        f"spine[S={list(S)}]",
                        PROXY_PASS if not bad else PROXY_FAIL,
                        {"S": list(S), "field": str(F), "nonzero": bad},
                    )
                )
    return _assemble("n", verdicts, rainbow_simplices(K, C), fields)


def _check_sphere(K, C, fields):
    n = K.dim
    verdicts = []
    for F in fields:
        is_sphere = reduced_betti(K, F) == sphere_betti(n)
        verdicts.append(
            HypothesisVerdict(
                "homology_sphere",
                PROXY_PASS if is_sphere else PROXY_FAIL,
                {"field": str(F), "betti": reduced_betti(K, F)},
            )
        )
    for size in range(1, n):
        for S in itertools.combinations(range(n + 1), size):
            KS = chromatic_subcomplex(K, C, S)
            for F in fields:
                val = reduced_betti(KS, F)[size]
                verdicts.append(
                    HypothesisVerdict(
                        f"vanishing[S={list(S)}]",
                        PASS if val == 0 else FAIL,
                        {"S": list(S), "degree": size, "field": str(F), "betti": val},
                    )
                )
    return _assemble("sphere", verdicts, rainbow_simplices(K, C), fields)


@dataclass(frozen=True)
class DualityAudit:
    field: FieldSpec
    entries: tuple  # dicts: S, lhs_degree, lhs, rhs_degree, rhs, equal
    passed: bool

    def as_dict(self):
        return {
            "field": str(self.field),
            "entries": [_jsonable(e) for e in self.entries],
            "passed": self.passed,
        }


def alexander_duality_audit(K: SimplicialComplex, C: Coloring, F: FieldSpec) -> DualityAudit:
    """For a homology n-sphere K with n+1 color classes, compare
    b~_{|S|-2}(K_S) with b~_{n+1-|S|}(K_{S complement}) for 1 <= |S| <= n."""
    n = K.dim
    if reduced_betti(K, F) != sphere_betti(n):
        raise ValueError(f"K is not a homology {n}-sphere over {F}")
    if C.num_classes != n + 1:
        raise ValueError(f"need {n + 1} classes, got {C.num_classes}")
    errors = coloring_errors(K, C)
    if errors:
        raise ValueError("; ".join(errors))
    entries = []
    passed = True
    for size in range(1, n + 1):
        for S in itertools.combinations(range(n + 1), size):
            comp = tuple(i for i in range(n + 1) if i not in S)
            lhs = reduced_betti(chromatic_subcomplex(K, C, S), F)[size - 2]
            rhs = reduced_betti(chromatic_subcomplex(K, C, comp), F)[n + 1 - size]
            equal = lhs == rhs
            passed = passed and equal
            entries.append(
                {
                    "S": list(S),
                    "lhs_degree": size - 2,
                    "lhs": lhs,
                    "rhs_degree": n + 1 - size,
                    "rhs": rhs,
                    "equal": equal,
                }
            )
    return DualityAudit(F, tuple(entries), passed)
