import random
from itertools import product

import pytest

from monohopf.linalg import (invariant_factors_of_orders, kernel_mod, mat_mul, smith_normal_form,
                             solve_linear_mod, subquotient_invariants)


def test_smith_normal_form_small():
    A = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    D, U, V = smith_normal_form(A)
    assert [D[i][i] for i in range(3)] == [2, 6, 12]
    assert mat_mul(mat_mul(U, A), V) == D


def test_smith_normal_form_random_is_verified():
    rng = random.Random(3)
    for _ in range(40):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        D, U, V = smith_normal_form(A)
        assert mat_mul(mat_mul(U, A), V) == D
        diag = [D[i][i] for i in range(min(m, n))]
        nz = [x for x in diag if x]
        assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@pytest.mark.parametrize("orders,expected", [
    ([2, 4, 6], [2, 2, 12]), ([4, 4], [4, 4]), ([3, 5], [15]), ([2, 3, 4, 9], [6, 36]), ([1, 1], []),
])
def test_invariant_factors(orders, expected):
    assert invariant_factors_of_orders(orders) == expected


def _brute_solutions(A, b, M):
    n = len(A[0])
    return [x for x in product(range(M), repeat=n)
            if all((sum(a * v for a, v in zip(row, x)) - bb) % M == 0 for row, bb in zip(A, b))]


def test_solve_linear_mod_against_enumeration():
    rng = random.Random(11)
    for _ in range(40):
        M = rng.choice([2, 4, 6, 8])
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        A = [[rng.randint(0, M - 1) for _ in range(n)] for _ in range(m)]
        b = [rng.randint(0, M - 1) for _ in range(m)]
        sols = _brute_solutions(A, b, M)
        res = solve_linear_mod(A, b, M)
        if not sols:
            assert res is None
            continue
        x, _ = res
        assert tuple(v % M for v in x) in sols


def test_kernel_mod_generates_the_kernel():
    A = [[2, 4], [0, 3]]
    M = 6
    gens = kernel_mod(A, M)
    span = {(0, 0)}
    for gvec in gens:
        span |= {tuple((s[i] + k * gvec[i]) % M for i in range(2)) for s in span for k in range(M)}
    assert span == set(_brute_solutions(A, [0, 0], M))


def test_subquotient():
    # Z = (Z/4)^2, B = span{(2, 0)}: quotient Z/2 x Z/4
    st = subquotient_invariants(4, 2, [[1, 0], [0, 1]], [[2, 0]])
    assert sorted(st.invariants) == [2, 4] and st.order == 8


@pytest.mark.parametrize("M", [4, 6, 8, 9])
def test_kernel_mod_composite_moduli_against_enumeration(M):
    # tall matrices with many dependent rows, the shape cocycle systems have
    rng = random.Random(M)
    for _ in range(5):
        n = 3
        A = [[rng.choice([0, 0, 1, -1, 2, M - 1]) for _ in range(n)] for _ in range(12)]
        gens = kernel_mod(A, M)
        span = {tuple([0] * n)}
        frontier = list(span)
        while frontier:
            v = frontier.pop()
            for g in gens:
                w = tuple((a + b) % M for a, b in zip(v, g))
                if w not in span:
                    span.add(w)
                    frontier.append(w)
        kernel = {v for v in product(range(M), repeat=n)
                  if all(sum(a * x for a, x in zip(row, v)) % M == 0 for row in A)}
        assert span == kernel
