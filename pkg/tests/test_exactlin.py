import random
from fractions import Fraction
from math import gcd

import pytest

from repchar.exactlin import (
    AbelianGroup,
    ChainComplex,
    IntegerChainComplex,
    IntegerMatrix,
    InvariantError,
    SparseRationalMatrix,
    induced_map_on_homology,
    integer_kernel_basis,
    smith_normal_form,
    solve_integer,
)


def dense(m):
    return IntegerMatrix(m)


def snf_oracle_factors(a):
    """Invariant factors via gcds of k x k minors (independent slow route)."""
    data = a.data
    rows, cols = a.rows, a.cols

    def minors_gcd(k):
        import itertools
        g = 0
        for rs in itertools.combinations(range(rows), k):
            for cs in itertools.combinations(range(cols), k):
                sub = [[data[i][j] for j in cs] for i in rs]
                g = gcd(g, abs(det(sub)))
        return g

    def det(m):
        n = len(m)
        if n == 1:
            return m[0][0]
        total = 0
        for j in range(n):
            if m[0][j]:
                sub = [row[:j] + row[j + 1:] for row in m[1:]]
                total += (-1) ** j * m[0][j] * det(sub)
        return total

    factors = []
    prev = 1
    for k in range(1, min(rows, cols) + 1):
        g = minors_gcd(k)
        if g == 0:
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


class TestSmithNormalForm:
    def test_identity(self):
        res = smith_normal_form(IntegerMatrix.identity(2))
        assert res.factors == (1, 1)

    def test_worked_two_by_two(self):
        res = smith_normal_form(dense([[2, 4], [6, 8]]))
        assert res.factors == (2, 4)
        assert res.factors == snf_oracle_factors(dense([[2, 4], [6, 8]]))

    def test_zero_matrix(self):
        res = smith_normal_form(IntegerMatrix.zero(3, 2))
        assert res.factors == ()

    def test_transforms_diagonalize(self):
        rng = random.Random(7)
        for _ in range(25):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 4)
            a = dense([[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])
            res = smith_normal_form(a)
            d = res.left * a * res.right
            for i in range(rows):
                for j in range(cols):
                    if i == j and i < len(res.factors):
                        assert d.data[i][j] == res.factors[i]
                    else:
                        assert d.data[i][j] == 0
            for i in range(1, len(res.factors)):
                assert res.factors[i] % res.factors[i - 1] == 0
            assert abs(int_det(res.left.data)) == 1
            assert abs(int_det(res.right.data)) == 1

    def test_oracle_on_random_matrices(self):
        rng = random.Random(11)
        for _ in range(20):
            rows = rng.randint(1, 3)
            cols = rng.randint(1, 3)
            a = dense([[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)])
            assert smith_normal_form(a).factors == snf_oracle_factors(a)

    def test_unimodular_invariance(self):
        rng = random.Random(13)
        base = dense([[2, 4], [6, 8]])
        for _ in range(10):
            u = random_unimodular(2, rng)
            v = random_unimodular(2, rng)
            assert smith_normal_form(u * base * v).factors == (2, 4)


def int_det(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j]:
            sub = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * m[0][j] * int_det(sub)
    return total


def random_unimodular(n, rng):
    m = IntegerMatrix.identity(n)
    data = [row[:] for row in m.data]
    for _ in range(6):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for k in range(n):
            data[i][k] += c * data[j][k]
    return IntegerMatrix(data)


class TestSparseMatrix:
    def test_rank_plus_kernel(self):
        rng = random.Random(3)
        for _ in range(30):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            m = SparseRationalMatrix.from_dense(
                [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
            assert m.rank() + len(m.kernel_basis()) == cols

    def test_kernel_vectors_are_killed(self):
        rng = random.Random(5)
        for _ in range(20):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 5)
            m = SparseRationalMatrix.from_dense(
                [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])
            for vec in m.kernel_basis():
                assert m.apply(vec) == {}

    def test_product_and_transpose(self):
        a = SparseRationalMatrix.from_dense([[1, 2], [0, 1]])
        b = SparseRationalMatrix.from_dense([[1, 0], [3, 1]])
        assert (a * b).to_dense() == [[7, 2], [3, 1]]
        assert a.transpose().to_dense() == [[1, 0], [2, 1]]

    def test_fraction_entries(self):
        m = SparseRationalMatrix.from_dense([[Fraction(1, 2), 1], [1, 2]])
        assert m.rank() == 1


def two_term_complex(matrix):
    m = SparseRationalMatrix.from_dense(matrix)
    return ChainComplex([m.rows, m.cols], {1: m})


class TestHomologyDims:
    def test_multiplication_by_two_is_iso_over_q(self):
        c = two_term_complex([[2]])
        assert c.homology_dims() == [0, 0]

    def test_zero_differentials(self):
        c = ChainComplex([3, 2], {1: SparseRationalMatrix.zero(3, 2)})
        assert c.homology_dims() == [3, 2]

    def test_boundary_of_triangle(self):
        # simplicial chains of the hollow triangle: three vertices, three edges
        d1 = SparseRationalMatrix.from_dense([
            [-1, -1, 0],
            [1, 0, -1],
            [0, 1, 1],
        ])
        c = ChainComplex([3, 3], {1: d1})
        assert c.homology_dims() == [1, 1]

    def test_rejects_non_complex(self):
        d1 = SparseRationalMatrix.from_dense([[1]])
        d2 = SparseRationalMatrix.from_dense([[1]])
        with pytest.raises(InvariantError):
            ChainComplex([1, 1, 1], {1: d1, 2: d2})

    def test_fast_matches_slow_on_random_complexes(self):
        rng = random.Random(17)
        for _ in range(25):
            c = random_rational_complex(rng)
            assert c.homology_dims(fast=True) == c.homology_dims(fast=False)


def random_integer_complex(rng, max_rank=5):
    r0 = rng.randint(1, max_rank)
    r1 = rng.randint(1, max_rank)
    a1 = IntegerMatrix([[rng.randint(-2, 2) for _ in range(r1)] for _ in range(r0)])
    kernel_cols = integer_kernel_basis(a1)
    k = len(kernel_cols)
    r2 = rng.randint(0, max_rank)
    mix = [[rng.randint(-2, 2) for _ in range(r2)] for _ in range(k)]
    a2 = [[sum(kernel_cols[t][i] * mix[t][j] for t in range(k)) for j in range(r2)]
          for i in range(r1)]
    a2 = IntegerMatrix(a2 if r2 else [[] for _ in range(r1)], rows=r1, cols=r2)
    return IntegerChainComplex([r0, r1, r2], {1: a1, 2: a2})


def random_rational_complex(rng):
    return random_integer_complex(rng).rationalize()


class TestIntegerHomology:
    def test_mod_two_cokernel(self):
        c = IntegerChainComplex([1, 1], {1: dense([[2]])})
        assert c.homology() == [AbelianGroup(0, (2,)), AbelianGroup(0)]

    def test_zero_complex(self):
        c = IntegerChainComplex([2, 1], {1: IntegerMatrix.zero(2, 1)})
        assert c.homology() == [AbelianGroup(2), AbelianGroup(1)]

    def test_free_ranks_match_rational_dims(self):
        rng = random.Random(23)
        for _ in range(25):
            zc = random_integer_complex(rng)
            groups = zc.homology()
            dims = zc.rationalize().homology_dims()
            assert [g.free_rank for g in groups] == dims

    def test_solve_integer(self):
        a = dense([[2, 0], [0, 3]])
        xs = solve_integer(a, [[4, 9]])
        assert a.apply(xs[0]) == (4, 9)


class TestInducedMaps:
    def test_identity_chain_map(self):
        rng = random.Random(29)
        c = random_rational_complex(rng)
        f = [SparseRationalMatrix.identity(d) for d in c.dims]
        mats = induced_map_on_homology(f, c, c)
        for q, m in enumerate(mats):
            h = c.homology_dims()[q]
            assert m == SparseRationalMatrix.identity(h)

    def test_zero_chain_map(self):
        rng = random.Random(31)
        c = random_rational_complex(rng)
        f = [SparseRationalMatrix.zero(d, d) for d in c.dims]
        mats = induced_map_on_homology(f, c, c)
        for m in mats:
            assert m.is_zero()

    def test_rejects_non_chain_map(self):
        c = two_term_complex([[0]])
        f = [SparseRationalMatrix.from_dense([[1]]),
             SparseRationalMatrix.from_dense([[1]])]
        d = ChainComplex([1, 1], {1: SparseRationalMatrix.from_dense([[1]])})
        with pytest.raises(InvariantError):
            induced_map_on_homology(f, c, d)


class TestAbelianGroup:
    def test_str(self):
        assert str(AbelianGroup(2, (3,))) == "Z^2 x Z/3"
        assert str(AbelianGroup(0)) == "0"
        assert str(AbelianGroup(1)) == "Z"

    def test_from_cokernel(self):
        assert AbelianGroup.from_cokernel(dense([[2, 4], [6, 8]])) == \
            AbelianGroup(0, (2, 4))
