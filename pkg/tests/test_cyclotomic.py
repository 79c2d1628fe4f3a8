import random
from fractions import Fraction

import pytest

from oracles import complex_value, fraction_rank

from monohopf.cyclotomic import CyclotomicScalar as S
from monohopf.cyclotomic import cyclotomic_polynomial, sparse_kernel, sparse_rank


@pytest.mark.parametrize("m,coeffs", [
    (1, (-1, 1)), (2, (1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)), (9, (1, 0, 0, 1, 0, 0, 1)),
])
def test_cyclotomic_polynomials(m, coeffs):
    assert cyclotomic_polynomial(m) == coeffs


def _rand(M, rng):
    deg = len(cyclotomic_polynomial(M)) - 1
    return S(M, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])


@pytest.mark.parametrize("M", [1, 2, 3, 4, 5, 8, 12])
def test_field_operations_match_complex_values(M):
    rng = random.Random(M)
    for _ in range(30):
        x, y = _rand(M, rng), _rand(M, rng)
        for got, want in ((x + y, complex_value(x) + complex_value(y)),
                          (x - y, complex_value(x) - complex_value(y)),
                          (x * y, complex_value(x) * complex_value(y))):
            assert abs(complex_value(got) - want) < 1e-9
        if not y.is_zero():
            assert (x / y) * y == x
            assert y * y.inverse() == S.one(M)


def test_roots_of_unity_and_lift():
    for M in (3, 4, 6, 12):
        z = S.root_of_unity(M, 1)
        assert z ** M == S.one(M)
        assert all(z ** k != S.one(M) for k in range(1, M))
        assert S.root_of_unity(M, -1) * z == S.one(M)
    i = S.root_of_unity(4, 1)
    assert i.lift(12) == S.root_of_unity(12, 3)
    assert abs(complex_value(i.lift(8)) - 1j) < 1e-12
    with pytest.raises(ValueError):
        i.lift(6)
    assert S.root_of_unity(2, 1) == S.from_rational(2, -1)


def test_equality_hash_and_json():
    x = S(6, [1, Fraction(1, 2)])
    y = S.from_json(x.to_json())
    assert x == y and hash(x) == hash(y)
    assert S.zero(5).is_zero() and not S.one(5).is_zero()
    with pytest.raises(ZeroDivisionError):
        S.zero(4).inverse()


def test_sparse_rank_matches_fraction_elimination():
    rng = random.Random(7)
    for _ in range(25):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        rows = [[rng.choice([0, 0, 1, -1, 2, Fraction(1, 3)]) for _ in range(c)] for _ in range(r)]
        sparse = [{j: S.from_rational(1, v) for j, v in enumerate(row) if v} for row in rows]
        assert sparse_rank(sparse) == fraction_rank(rows)


def test_dft_matrix_has_full_rank():
    n = 6
    z = S.root_of_unity(n, 1)
    rows = [{j: z ** (i * j) for j in range(n)} for i in range(n)]
    assert sparse_rank(rows) == n
    rows[5] = dict(rows[0])
    assert sparse_rank(rows) == n - 1


def test_sparse_kernel_is_annihilated():
    M = 4
    one = S.one(M)
    images = [{0: one}, {1: one}, {0: one, 1: one}, {0: S.root_of_unity(M, 1)}]
    ker = sparse_kernel(images, M)
    assert len(ker) == 2
    for vec in ker:
        total = {}
        for i, c in vec.items():
            for k, v in images[i].items():
                total[k] = total.get(k, S.zero(M)) + c * v
        assert all(v.is_zero() for v in total.values())
