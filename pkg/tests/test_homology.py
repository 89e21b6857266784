import random

import pytest

from rainbowcheck import (
    DEFAULT_FIELDS,
    GF2,
    GF3,
    GF5,
    QQ,
    FieldSpec,
    SparseMatrix,
    boundary_matrices,
    euler_characteristic,
    field_rank,
    from_facets,
    is_acyclic,
    reduced_betti,
    relative_betti,
)
from rainbowcheck.generators import generate

from oracle import dense_reduced_betti

TETRA_BOUNDARY = [["a", "b", "c"], ["a", "b", "d"], ["a", "c", "d"], ["b", "c", "d"]]


def test_fieldspec_rejects_composites():
    with pytest.raises(ValueError):
        FieldSpec.gf(6)
    with pytest.raises(ValueError):
        FieldSpec.gf(1)
    assert str(FieldSpec.gf(7)) == "GF(7)"
    assert str(QQ) == "Q"


def test_sparse_matrix_validation():
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((0, 0, 1), (0, 0, 1)))
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((5, 0, 1),))
    with pytest.raises(ValueError):
        SparseMatrix(2, 2, ((0, 0, 0),))


def test_field_rank_identity_and_zero():
    ident = SparseMatrix(2, 2, ((0, 0, 1), (1, 1, 1)))
    assert field_rank(ident, GF2) == 2
    assert field_rank(SparseMatrix(3, 4, ()), QQ) == 0


def test_field_rank_three_cycle_boundary():
    # edges ab, ac, bc of the triangle boundary; rank 2 over Q: frozen from
    # a hand Gaussian elimination
    K = from_facets([["a", "b"], ["a", "c"], ["b", "c"]])
    d1 = boundary_matrices(K, QQ).boundaries[1]
    assert field_rank(d1, QQ) == 2
    assert field_rank(d1, GF2) == 2


def test_field_rank_rational_entries():
    from fractions import Fraction

    M = SparseMatrix(
        2, 2, ((0, 0, Fraction(1, 2)), (0, 1, Fraction(1, 3)), (1, 0, 3), (1, 1, 2))
    )
    assert field_rank(M, QQ) == 1  # second row is 6x the first


def test_boundary_sign_convention_single_edge():
    K = from_facets([["a", "b"]])
    d1 = boundary_matrices(K, QQ).boundaries[1]
    assert d1.rows == 2 and d1.cols == 1
    assert dict(((r, c), v) for r, c, v in d1.entries) == {(0, 0): -1, (1, 0): 1}


def test_boundary_shapes_tetra_boundary():
    mats = boundary_matrices(from_facets(TETRA_BOUNDARY), QQ)
    d2 = mats.boundaries[2]
    assert (d2.rows, d2.cols) == (6, 4)
    per_column = {}
    for _, c, _ in d2.entries:
        per_column[c] = per_column.get(c, 0) + 1
    assert all(v == 3 for v in per_column.values())
    assert mats.face_counts[-1] == 1
    assert mats.boundaries[0].rows == 1


@pytest.mark.parametrize("field", DEFAULT_FIELDS)
def test_boundary_squares_to_zero_torus(field):
    mats = boundary_matrices(generate("torus7").complex, field)
    for k in range(1, 3):
        product = mats.boundaries[k - 1].matmul(mats.boundaries[k], field)
        assert product.entries == ()


def test_reduced_betti_sphere():
    betti = reduced_betti(from_facets(TETRA_BOUNDARY), QQ)
    assert betti.as_dict(-1, 2) == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_reduced_betti_torus7_frozen_and_oracle():
    K = generate("torus7").complex
    for field in DEFAULT_FIELDS:
        betti = reduced_betti(K, field)
        assert betti == {1: 2, 2: 1}
        p = None if field.is_rational else field.p
        assert dense_reduced_betti(sorted(K.facets), p) == betti.as_dict(-1, 2)


def test_reduced_betti_rp2_frozen_and_oracle():
    K = generate("rp2_6").complex
    assert reduced_betti(K, GF2) == {1: 1, 2: 1}
    assert reduced_betti(K, QQ).is_zero()
    assert reduced_betti(K, GF3).is_zero()
    assert dense_reduced_betti(sorted(K.facets), 2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert dense_reduced_betti(sorted(K.facets), None) == {-1: 0, 0: 0, 1: 0, 2: 0}


def test_reduced_betti_empty_complex():
    assert reduced_betti(from_facets([]), QQ) == {-1: 1}


def test_relative_betti_interval_mod_boundary():
    K = from_facets([["a", "b"]])
    L = from_facets([["a"], ["b"]])
    assert relative_betti(K, L, QQ).as_dict(-1, 1) == {-1: 0, 0: 0, 1: 1}


def test_relative_betti_disk_mod_boundary():
    K = from_facets([["a", "b", "c"]])
    L = from_facets([["a", "b"], ["a", "c"], ["b", "c"]])
    assert relative_betti(K, L, QQ).as_dict(-1, 2) == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_relative_betti_empty_subcomplex_is_unreduced():
    K = generate("torus7").complex
    rel = relative_betti(K, from_facets([]), QQ)
    red = reduced_betti(K, QQ)
    assert rel[0] == red[0] + 1
    assert rel[1] == red[1] and rel[2] == red[2]


def test_relative_betti_rejects_non_subcomplex():
    K = from_facets([["a", "b"]])
    with pytest.raises(ValueError):
        relative_betti(K, from_facets([["a", "c"]]), QQ)


def test_long_exact_sequence_spot_check():
    # relative H2 of (disk, circle) matches reduced H1 of the circle
    disk = from_facets([["a", "b", "c"]])
    circle = from_facets([["a", "b"], ["a", "c"], ["b", "c"]])
    assert relative_betti(disk, circle, QQ)[2] == 1 == reduced_betti(circle, QQ)[1]


def test_is_acyclic():
    assert is_acyclic(from_facets([["a"]]), QQ)
    assert not is_acyclic(generate("cycle(4)").complex, QQ)
    assert not is_acyclic(from_facets([]), QQ)
    rp2 = generate("rp2_6").complex
    assert is_acyclic(rp2, GF3)
    assert not is_acyclic(rp2, GF2)


CORPUS = ["simplex_boundary(2)", "simplex_boundary(3)", "torus7", "rp2_6", "cycle(5)", "simplex(3)"]


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("field", DEFAULT_FIELDS)
def test_reduced_euler_relation(name, field):
    K = generate(name).complex
    betti = reduced_betti(K, field)
    total = sum((-1) ** k * betti[k] for k in range(0, K.dim + 1))
    assert total == euler_characteristic(K) - 1


@pytest.mark.parametrize("name", ["torus7", "rp2_6", "simplex_boundary(3)"])
def test_betti_independent_of_vertex_order(name):
    K = generate(name).complex
    rng = random.Random(7)
    labels = list(K.vertices)
    for _ in range(3):
        shuffled = labels[:]
        rng.shuffle(shuffled)
        relabel = {v: f"v{shuffled.index(v):02d}" for v in labels}
        K2 = from_facets([[relabel[v] for v in f] for f in K.facets])
        assert reduced_betti(K2, QQ) == reduced_betti(K, QQ)


@pytest.mark.parametrize("field", DEFAULT_FIELDS)
def test_rank_equals_rank_of_transpose(field):
    for name in ("torus7", "rp2_6"):
        mats = boundary_matrices(generate(name).complex, field)
        for M in mats.boundaries.values():
            assert field_rank(M, field) == field_rank(M.transpose(), field)
