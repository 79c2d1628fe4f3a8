import pytest

from monohopf.bigalois import (BiGaloisError, bigalois_group, bigalois_isomorphic, check_compose_agreement,
                               gamma_group, make_bigalois)
from monohopf.cohomology import CocycleVector, coboundary
from monohopf.datum import make_datum
from monohopf.groups import Character, GroupAutomorphism, cyclic_product

from oracles import coset_representatives, exhaustive_h2, gamma_order_brute


def datum(factors, g, chi_mod, values, mu=0):
    G = cyclic_product(factors)
    return make_datum(G, G.abelian_structure.element(g), Character.from_generators(G, chi_mod, values), mu)


CASES = [
    (([2], [1], 2, [1]), 2),
    (([3], [1], 3, [1]), 3),
    (([4], [1], 2, [1]), 2),
    (([2, 2], [1, 0], 2, [1, 0]), 2),
    (([2, 2], [1, 0], 2, [1, 1]), 2),
]


@pytest.mark.parametrize("spec,M", CASES)
def test_gamma_order_against_brute_force(spec, M):
    D = datum(*spec)
    G = D.G
    _, _, Zset, cob = exhaustive_h2(G.cayley, G.identity, G.identity, D.g, M)
    classes = coset_representatives(Zset, cob, M)
    expected = gamma_order_brute(G, D.g, D.chi.exponents, D.chi.modulus, M, classes)
    assert gamma_group(D, M).order == expected


def test_gamma_group_law_and_taft_invariants():
    Gm = gamma_group(datum([3], [1], 3, [1]), 3)
    assert Gm.check_group_law()
    s = Gm.summary()
    assert s["abelian"] and s["invariants"] == [3]


def test_gamma_needs_mu_zero():
    with pytest.raises(BiGaloisError, match="mu = 0"):
        gamma_group(datum([4], [1], 2, [1], mu=1))


def test_make_bigalois_errors():
    with pytest.raises(BiGaloisError, match="reduced datum"):
        D6 = datum([4], [1], 2, [1], mu=1)
        make_bigalois(D6, None, CocycleVector.trivial(D6.G, 2))
    D3 = datum([4], [1], 2, [1])
    with pytest.raises(BiGaloisError, match="a must vanish"):
        make_bigalois(D3, None, CocycleVector.trivial(D3.G, 2), a=1)


@pytest.mark.parametrize("a", [0, 1])
def test_sweedler_bigalois_objects_verify(a):
    D = datum([2], [1], 2, [1])
    R = make_bigalois(D, None, CocycleVector.trivial(D.G, 2), a)
    assert R.report["verified"] and R.report["left_galois"] and R.report["bicomodule"]


def test_bigalois_isomorphism_through_a_coboundary():
    D = datum([2, 2], [1, 0], 2, [1, 0])
    G = D.G
    u = GroupAutomorphism.identity(G)
    sig = CocycleVector.trivial(G, 2)
    # mu vanishes on g, so the twist stays in the same biGalois class
    mu = [0] * G.order
    mu[G.abelian_structure.element((0, 1))] = 1
    mu[G.abelian_structure.element((1, 1))] = 1
    tau = sig + coboundary(G, 2, mu)
    assert bigalois_isomorphic(D, (u, sig, 0), (u, tau, 0)) is not None
    swap = next(v for v in gamma_group(D, 2).aut_g if not v.is_identity())
    assert bigalois_isomorphic(D, (u, sig, 0), (swap, sig, 0)) is None


def test_compose_agreement_on_sweedler():
    ok, pairs = check_compose_agreement(gamma_group(datum([2], [1], 2, [1]), 2), samples=(0, 1))
    assert ok and pairs > 0


def test_type_vi_bigalois_goes_through_the_bridge():
    res = bigalois_group(datum([4], [1], 2, [1], mu=1), M=4)
    assert res.type == "VI" and res.bridge["verified"]
    assert res.reduced_datum is not None and not res.reduced_datum.has_mu
    assert all(all(g["certificate"].values()) for g in res.generators)
