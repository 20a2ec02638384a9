import random
from fractions import Fraction

import pytest

from hopfact.linalg import (QQ, GF, Matrix, Subspace, rref, kernel,
                            solve, subspace_sum, subspace_intersect,
                            enumerate_subspaces, gaussian_binomial,
                            subspace_count, EnumerationBound, annihilator,
                            gf2_stable_subspaces, gf2_column_masks)


def test_field_descriptor():
    assert QQ.characteristic() == 0
    assert GF(5).characteristic() == 5
    with pytest.raises(ValueError):
        GF(6)
    assert GF(3) == GF(3) and GF(3) != GF(5) and QQ != GF(2)


def test_scalar_serialization():
    assert QQ.render(Fraction(-2, 4)) == "-1/2"
    assert QQ.parse("3/6") == Fraction(1, 2)
    assert GF(7).parse("12") == 5
    assert GF(7).render(GF(7).from_int(-1)) == "6"


def test_rref_identity_fixed():
    m = Matrix.identity(QQ, 2)
    assert rref(m) == m


def test_rref_rank_one():
    m = Matrix.from_rows(QQ, [[2, 4], [1, 2]])
    assert rref(m).to_lists() == [[1, 2], [0, 0]]


def test_rref_gf2():
    m = Matrix.from_rows(GF(2), [[1, 1], [1, 1]])
    assert rref(m).to_lists() == [[1, 1], [0, 0]]


def test_rref_idempotent_random():
    rng = random.Random(7)
    for _ in range(25):
        m = Matrix.from_rows(QQ, [[Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                   for _ in range(4)] for _ in range(3)])
        r = rref(m)
        assert rref(r) == r


def test_kernel_examples():
    assert kernel(Matrix.zeros(QQ, 3, 3)).dim == 3
    assert kernel(Matrix.identity(QQ, 3)).dim == 0
    k = kernel(Matrix.from_rows(QQ, [[1, 1]]))
    assert k.rows == ((Fraction(1), Fraction(-1)),)


def test_kernel_solve_consistency_random():
    rng = random.Random(11)
    for _ in range(20):
        m = Matrix.from_rows(GF(3), [[rng.randrange(3) for _ in range(5)]
                                     for _ in range(3)])
        for v in kernel(m).basis_vectors():
            assert all(x == 0 for x in m.vec_mul(v))


def test_solve():
    ident = Matrix.identity(QQ, 2)
    assert solve(ident, [3, 4]) == [3, 4]
    assert solve(Matrix.from_rows(QQ, [[1, 1]]), [0]) == [0, 0]
    assert solve(Matrix.from_rows(QQ, [[0]]), [1]) is None


def test_subspace_canonical_equality():
    a = Subspace.from_vectors(QQ, 2, [[1, 1], [2, 2]])
    b = Subspace.from_vectors(QQ, 2, [[3, 3]])
    assert a == b and a.dim == 1


def test_subspace_ops():
    f2 = GF(2)
    u = Subspace.from_vectors(f2, 3, [[1, 0, 0], [0, 1, 0]])
    v = Subspace.from_vectors(f2, 3, [[0, 1, 0], [0, 0, 1]])
    w = subspace_intersect(u, v)
    assert w.rows == ((0, 1, 0),)
    assert subspace_sum(u, Subspace.zero(f2, 3)) == u
    assert subspace_intersect(u, u) == u
    assert u.contains([1, 1, 0]) and not u.contains([0, 0, 1])


def test_annihilator_double():
    u = Subspace.from_vectors(QQ, 4, [[1, 2, 0, 0], [0, 0, 1, 1]])
    assert annihilator(annihilator(u)) == u


def test_modular_law_random_triples():
    # (u cap w) + (v cap w) is inside (u + v) cap w
    f2 = GF(2)
    rng = random.Random(3)
    subs = list(enumerate_subspaces(f2, 3))
    for _ in range(60):
        u, v, w = (subs[rng.randrange(len(subs))] for _ in range(3))
        lhs = subspace_sum(subspace_intersect(u, w), subspace_intersect(v, w))
        rhs = subspace_intersect(subspace_sum(u, v), w)
        assert lhs.le(rhs)


# oracle: the Gaussian binomial product formula, frozen small values
@pytest.mark.parametrize("n,count", [(1, 2), (2, 5), (3, 16), (4, 67), (5, 374)])
def test_enumeration_counts_gf2(n, count):
    assert subspace_count(2, n) == count
    subs = list(enumerate_subspaces(GF(2), n))
    assert len(subs) == count
    assert len(set(subs)) == count


def test_enumeration_counts_gf3():
    assert gaussian_binomial(3, 1, 3) == 13
    subs = list(enumerate_subspaces(GF(3), 3))
    assert len(subs) == 1 + 13 + 13 + 1


def test_enumeration_bound():
    with pytest.raises(EnumerationBound):
        list(enumerate_subspaces(GF(2), 20))
    with pytest.raises(EnumerationBound):
        list(enumerate_subspaces(QQ, 2))


def test_gf2_fast_path_agrees_with_generic():
    # stability under one operator: bitmask route vs generic filtering
    f2 = GF(2)
    op = Matrix.from_rows(f2, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    fast = gf2_stable_subspaces(3, [gf2_column_masks(op)])
    slow = [s for s in enumerate_subspaces(f2, 3)
            if all(s.contains(op.vec_mul(list(r))) for r in s.rows)]
    assert sorted(s.rows for s in fast) == sorted(s.rows for s in slow)


def test_enumeration_order_deterministic():
    f2 = GF(2)
    first = [s.rows for s in enumerate_subspaces(f2, 3)]
    second = [s.rows for s in enumerate_subspaces(f2, 3)]
    assert first == second
    # dimension-ascending canonical order, zero space first, full space last
    assert first[0] == ()
    assert len(first[-1]) == 3
