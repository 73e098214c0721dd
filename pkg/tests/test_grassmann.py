import random

import pytest

from grasscodes.gf import GF
from grasscodes.grassmann import (EchelonMatrix, determinant, enumerate_cell,
                                  enumerate_grassmannian,
                                  enumerate_schubert_variety,
                                  in_last_column_locus, plucker, project_tau,
                                  string_fiber, string_label)
from grasscodes.linalg import rank, row_reduce
from grasscodes.qcombin import delta, gaussian_binomial, index_tuples


def test_echelon_validation(f2):
    # pivot of each row is its last nonzero entry and equals 1
    EchelonMatrix(f2, 4, ((1, 1, 0, 0), (0, 0, 1, 1)), (2, 4))
    with pytest.raises(ValueError):
        # entry right of the pivot
        EchelonMatrix(f2, 4, ((1, 1, 1, 0), (0, 0, 0, 1)), (2, 4))
    with pytest.raises(ValueError):
        # nonzero in another row's pivot column
        EchelonMatrix(f2, 4, ((0, 1, 0, 0), (0, 1, 0, 1)), (2, 4))
    with pytest.raises(ValueError):
        # pivot not a unit
        EchelonMatrix(GF(3), 4, ((0, 2, 0, 0), (0, 0, 0, 1)), (2, 4))


def test_cell_sizes(f2, f3):
    for field in (f2, f3):
        q = field.q
        for alpha in index_tuples(2, 4):
            mats = list(enumerate_cell(alpha, 4, field))
            assert len(mats) == q ** delta(alpha)
            assert len(set(m.rows for m in mats)) == len(mats)


@pytest.mark.parametrize("ell,m,q", [(1, 3, 2), (2, 4, 2), (2, 4, 3), (2, 5, 2),
                                     (3, 5, 2), (3, 6, 2)])
def test_grassmannian_count(ell, m, q):
    field = GF(q)
    count = sum(1 for _ in enumerate_grassmannian(ell, m, field))
    assert count == gaussian_binomial(m, ell, q)


def test_schubert_variety_count(f2):
    # nabla((1,4)) = {(1,2),(1,3),(1,4)} so 1 + 2 + 4 = 7 points
    assert sum(1 for _ in enumerate_schubert_variety((1, 4), 4, f2)) == 7


def test_enumeration_rows_have_full_rank(f3):
    for mat in enumerate_grassmannian(2, 4, f3):
        assert rank(f3, [list(r) for r in mat.rows]) == 2


def test_determinant_values(f3):
    assert determinant(f3, [[1, 2], [2, 1]]) == (1 * 1 - 2 * 2) % 3
    assert determinant(f3, [[1, 2], [2, 1]]) == 0  # 1 - 4 = -3 = 0 mod 3
    assert determinant(f3, [[0, 1], [1, 0]]) == f3.neg(1)
    assert determinant(f3, [[2, 0], [0, 2]]) == 1


def test_determinant_matches_permutation_expansion():
    f5 = GF(5)
    rng = random.Random(5)
    import itertools
    for _ in range(25):
        a = [[rng.randrange(5) for _ in range(3)] for _ in range(3)]
        expect = 0
        for perm in itertools.permutations(range(3)):
            sign = 1
            inv = sum(1 for i in range(3) for j in range(i + 1, 3)
                      if perm[i] > perm[j])
            term = 1
            for r, c in enumerate(perm):
                term = f5.mul(term, a[r][c])
            if inv % 2:
                term = f5.neg(term)
            expect = f5.add(expect, term)
        assert determinant(f5, a) == expect


def test_plucker_pivot_coordinate_is_one(f2):
    for mat in enumerate_grassmannian(2, 4, f2):
        coords = plucker(mat).as_dict()
        assert coords[mat.pivots] == 1


def test_plucker_injective_on_grassmannian(f3):
    seen = set()
    for mat in enumerate_grassmannian(2, 4, f3):
        key = plucker(mat).normalized().coords
        assert key not in seen
        seen.add(key)
    assert len(seen) == gaussian_binomial(4, 2, 3)


def test_plucker_satisfies_quadratic_relation(f3):
    # p12 p34 - p13 p24 + p14 p23 = 0 for every point of G(2, V_4)
    for mat in enumerate_grassmannian(2, 4, f3):
        p = plucker(mat).as_dict()
        acc = f3.mul(p[(1, 2)], p[(3, 4)])
        acc = f3.sub(acc, f3.mul(p[(1, 3)], p[(2, 4)]))
        acc = f3.add(acc, f3.mul(p[(1, 4)], p[(2, 3)]))
        assert acc == 0


def test_plucker_gl_invariance(f3):
    """Row operations change Pluecker coordinates only by a global scalar."""
    rng = random.Random(7)
    mats = list(enumerate_grassmannian(2, 4, f3))
    for _ in range(20):
        mat = rng.choice(mats)
        # random invertible 2x2 change of basis applied to the rows
        while True:
            g = [[rng.randrange(3) for _ in range(2)] for _ in range(2)]
            if determinant(f3, g):
                break
        new_rows = []
        for i in range(2):
            row = []
            for j in range(4):
                acc = 0
                for t in range(2):
                    acc = f3.add(acc, f3.mul(g[i][t], mat.rows[t][j]))
                row.append(acc)
            new_rows.append(row)
        # re-echelonize through linear algebra and compare projectively
        direct = plucker(mat).normalized().coords
        from grasscodes.qcombin import index_tuples as its
        coords = []
        for alpha in its(2, 4):
            sub = [[new_rows[i][a - 1] for a in alpha] for i in range(2)]
            coords.append(determinant(f3, sub))
        lead = next(c for c in coords if c)
        inv = f3.inv(lead)
        assert tuple(f3.mul(inv, c) for c in coords) == direct


def test_string_locus_and_label(f2):
    mats = list(enumerate_grassmannian(2, 4, f2))
    locus = [m for m in mats if in_last_column_locus(m)]
    # cells (1,4), (2,4), (3,4) with deltas 2, 3, 4: 4 + 8 + 16 = 28 points
    assert len(locus) == sum(2 ** delta(a) for a in [(1, 4), (2, 4), (3, 4)])
    assert len(locus) == 28
    for m in locus:
        assert len(string_label(m)) == 2


def test_string_partition_is_a_bijection(f2, f3):
    """Fibers partition the last-column locus and each maps onto M(l-1, m-1)."""
    for field, ell, m in [(f2, 2, 4), (f2, 2, 5), (f2, 3, 5), (f3, 2, 4)]:
        q = field.q
        seen = set()
        total = 0
        import itertools
        for nu in itertools.product(range(q), repeat=m - ell):
            fiber = list(string_fiber(nu, ell, m, field))
            assert len(fiber) == gaussian_binomial(m - 1, ell - 1, q)
            for mat in fiber:
                assert in_last_column_locus(mat)
                assert string_label(mat) == nu
                assert mat.rows not in seen
                seen.add(mat.rows)
            total += len(fiber)
        locus = [mm for mm in enumerate_grassmannian(ell, m, field)
                 if in_last_column_locus(mm)]
        assert total == len(locus)
        assert seen == {mm.rows for mm in locus}


def test_projection_section_roundtrip(f3):
    for nu in [(0, 0), (1, 2), (2, 1)]:
        for mat in string_fiber(nu, 2, 4, f3):
            sub = project_tau(mat)
            assert sub.m == 3 and sub.ell == 1
            assert sub.pivots == mat.pivots[:-1]


def test_projection_errors(f2):
    mat = EchelonMatrix(f2, 4, ((1, 0, 0, 0), (0, 1, 0, 0)), (1, 2))
    with pytest.raises(ValueError):
        project_tau(mat)  # last pivot not in last column
    one_row = EchelonMatrix(f2, 4, ((1, 1, 0, 1),), (4,))
    with pytest.raises(ValueError):
        project_tau(one_row)  # needs two rows


def test_row_reduce_rank(f2):
    rows = [[1, 0, 1, 0], [0, 1, 1, 0], [1, 1, 0, 0]]
    _, r = row_reduce(f2, rows)
    assert r == 2
