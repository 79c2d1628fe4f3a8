import random
from math import gcd

import pytest

from oracles import exhaustive_h2

from monohopf.cohomology import (CocycleError, CocycleVector, bicharacter_cocycle, coboundary,
                                 cyclic_standard_cocycle, epsilon_map, h2, modified_h2, restrict,
                                 yamazaki_decompose)
from monohopf.groups import cyclic_group, cyclic_product


@pytest.mark.parametrize("N,M", [(2, 2), (2, 4), (3, 3), (3, 2), (4, 2), (4, 3), (3, 4)])
def test_cyclic_h2_against_exhaustive_oracle(N, M):
    G = cyclic_group(N)
    order, inv, _, _ = exhaustive_h2(G.cayley, G.identity, G.identity, G.identity, M)
    H = h2(G, M)
    assert (H.order, H.invariants) == (order, inv)


@pytest.mark.parametrize("N", range(1, 7))
@pytest.mark.parametrize("M", range(1, 7))
def test_cyclic_h2_order_is_gcd(N, M):
    # |H^2(C_N, mu_M)| = gcd(N, M), established by the exhaustive oracle above
    assert h2(cyclic_group(N), M).order == gcd(N, M)


@pytest.mark.parametrize("factors,M", [([4, 2], 4), ([2, 2, 2], 2), ([4, 4], 2), ([3, 3], 3)])
def test_dense_and_abelian_engines_agree(factors, M):
    G = cyclic_product(factors)
    rng = random.Random(sum(factors) + M)
    pairs = [(G.identity, G.identity)] + [(rng.randrange(G.order), rng.randrange(G.order)) for _ in range(4)]
    for g1, g2 in pairs:
        a = modified_h2(G, g1, g2, M, engine="abelian")
        d = modified_h2(G, g1, g2, M, engine="dense")
        assert (a.order, a.invariants) == (d.order, d.invariants)


def test_c2xc2_classes_and_ext_part():
    G = cyclic_product([2, 2])
    H = h2(G, 2)
    assert H.invariants == [2, 2, 2]
    # mu_4 coefficients on C4 x C4: Ext part [4, 4] and alternating part [4]
    assert h2(cyclic_product([4, 4]), 4).invariants == [4, 4, 4]


def test_canonicalizer_is_a_class_invariant():
    G = cyclic_product([4, 2])
    M = 4
    g = G.abelian_structure.generators[0]
    rng = random.Random(5)
    for g1, g2 in ((None, None), (None, g), (g, g)):
        H = modified_h2(G, g1, g2, M)
        fixed = G.identity if g2 is None else g2
        seen = set()
        for coords in H.classes():
            sig = H.representative(coords)
            assert H.canonicalize(sig) == coords
            seen.add(coords)
            for _ in range(3):
                phi = [rng.randrange(M) for _ in range(G.order)]
                phi[G.identity] = 0
                phi[fixed] = 0
                assert H.canonicalize(sig + coboundary(G, M, phi)) == coords
        assert len(seen) == H.order


def test_cocycle_rejected_outside_z():
    G = cyclic_product([2, 2])
    x, h = G.abelian_structure.generators
    H = modified_h2(G, x, x, 2)
    alt = bicharacter_cocycle(G, 2, [[0, 1], [0, 0]])
    assert alt.pairing(x, h) == 1
    assert not H.in_z(alt)
    with pytest.raises(CocycleError):
        H.canonicalize(alt)


def test_standard_cyclic_cocycle_and_epsilon():
    G = cyclic_group(6)
    y = G.abelian_structure.generators[0]
    for a in range(6):
        f = cyclic_standard_cocycle(G, y, a, 6)
        assert f.is_cocycle()
        assert epsilon_map(f, y) == a
    H = h2(G, 6)
    f = cyclic_standard_cocycle(G, y, 1, 6)
    rng = random.Random(1)
    for _ in range(5):
        phi = [rng.randrange(6) for _ in range(6)]
        phi[G.identity] = 0
        assert epsilon_map(f + coboundary(G, 6, phi), y) == 1
    assert H.canonicalize(f) != H.canonicalize(CocycleVector.trivial(G, 6))


def test_bicharacter_pairing_on_the_c16xc4_example():
    # sigma(x^a h^b, x^a' h^b') = i^(a b') on C16 x C4 with g = x^2
    G = cyclic_product([16, 4])
    x, h = G.abelian_structure.generators
    sig = bicharacter_cocycle(G, 16, [[0, 4], [0, 0]])
    g = G.power(x, 2)
    # sigma(g, h)^{-1} sigma(h, g) = i^{-2}
    assert (-sig.pairing(g, h)) % 16 == 8
    assert sig.pairing(x, G.power(x, 5)) == 0


def test_restriction_and_yamazaki():
    G1, G2 = cyclic_group(2), cyclic_group(2)
    Y = yamazaki_decompose(G1, G2, G1.identity, G1.identity, 2)
    assert Y.factor_orders() == (2, 2, 2)
    seen = set()
    for coords in Y.big.classes():
        parts = Y.forward(Y.big.representative(coords))
        assert Y.backward(*parts) == coords
        seen.add(parts)
    assert len(seen) == Y.big.order == 8
    G1, G2 = cyclic_group(4), cyclic_group(2)
    Y = yamazaki_decompose(G1, G2, G1.identity, G1.identity, 4)
    a, b, c = Y.factor_orders()
    assert a * b * c == Y.big.order == 16
    K = cyclic_group(2)
    G = cyclic_product([2, 2])
    emb = [G.identity, G.abelian_structure.generators[1]]
    sig = bicharacter_cocycle(G, 2, [[0, 0], [0, 1]])
    assert restrict(sig, K, emb).table == ((0, 0), (0, 1))
