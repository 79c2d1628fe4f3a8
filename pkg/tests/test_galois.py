import pytest

from monohopf.cohomology import CocycleVector, h2
from monohopf.cyclotomic import CyclotomicScalar
from monohopf.datum import make_datum
from monohopf.galois import (GaloisError, brute_force_colinear_iso, coboundary_twist, enumerate_galois,
                             galois_isomorphic, homotopy_classes, root_exponent, scalar_orbits,
                             three_way_check)
from monohopf.comodule import build_comodule_algebra
from monohopf.groups import Character, cyclic_product

from oracles import exhaustive_h2


def datum(factors, g, chi_mod, values, mu=0):
    G = cyclic_product(factors)
    return make_datum(G, G.abelian_structure.element(g), Character.from_generators(G, chi_mod, values), mu)


def q(x, M=1):
    return CyclotomicScalar.from_rational(M, x)


def test_root_exponent_and_orbits():
    i = CyclotomicScalar.root_of_unity(4, 1)
    assert root_exponent(i, 4) == 1
    assert root_exponent(q(-1), 4) == 2
    assert root_exponent(q(2), 4) is None
    orbits = scalar_orbits([q(0), q(1), q(-1), i, q(2)], 4)
    assert [len(m) for _, m in orbits] == [3, 1]


def test_sweedler_enumeration():
    E = enumerate_galois(datum([2], [1], 2, [1]), M=2)
    assert E.type == "I"
    assert list(E.branches) == ["H2 x k"]
    # the Ext part of H^2(C2, mu_2) contributes a second class
    assert E.branches["H2 x k"]["classes"] == 2
    assert len(E.objects) == 8 and all(o.verified for o in E.objects)


def test_type_iii_cyclic_branches():
    E = enumerate_galois(datum([4], [1], 2, [1]), M=4)
    assert E.type == "III"
    assert E.branches["a=0"]["invariants"] == [4]
    assert E.branches["a!=0"]["invariants"] == [2, 4]
    assert all(o.verified for o in E.objects)
    assert {o.branch for o in E.objects} == {"a=0", "a!=0"}


def test_type_ii_has_no_second_branch():
    E = enumerate_galois(datum([4], [2], 4, [1]), M=4)
    assert E.type == "II" and list(E.branches) == ["a=0"]


def test_type_vi_reports_the_bridge():
    E = enumerate_galois(datum([4], [1], 2, [1], mu=1), M=4)
    assert E.type == "VI"
    assert E.bridge["right_galois"] and E.bridge["bicomodule"]
    assert not E.reduced_datum.has_mu


def test_distinct_scalars_on_sweedler_are_not_isomorphic():
    D = datum([2], [1], 2, [1])
    sig = CocycleVector.trivial(D.G, 2)
    assert galois_isomorphic(D, (sig, 1), (sig, -1)) is None
    Z1 = build_comodule_algebra(D, sig, 1)
    Z2 = build_comodule_algebra(D, sig, -1, hopf=Z1.hopf)
    assert brute_force_colinear_iso(Z1, Z2, lam_samples=[q(0), q(1), q(-1)], M=2) is None


def test_coboundary_twist_is_isomorphic_and_brute_force_agrees():
    D = datum([2, 2], [1, 0], 2, [1, 0])
    sig = h2(D.G, 2).representative((1, 0, 0))
    mu = [0, 1, 1, 0]
    tau = coboundary_twist(D, sig, mu)
    w = galois_isomorphic(D, (sig, 0), (tau, 0))
    assert w is not None
    Z1 = build_comodule_algebra(D, sig, 0)
    Z2 = build_comodule_algebra(D, tau, 0, hopf=Z1.hopf)
    assert brute_force_colinear_iso(Z1, Z2, M=2) is not None


def test_isomorphism_rejects_pairs_failing_the_x_d_condition():
    D = datum([8], [2], 4, [1])
    sig = CocycleVector.trivial(D.G, 4)
    with pytest.raises(GaloisError, match="compatibility"):
        galois_isomorphic(D, (sig, 1), (sig, 1))


@pytest.mark.parametrize("a", [0, 1])
def test_three_way_agreement(a):
    for D in (datum([8], [2], 4, [1]), datum([4], [1], 2, [1], mu=1)):
        rep = three_way_check(D, CocycleVector.trivial(D.G, 4), a)
        assert rep["agree"], rep


def test_homotopy_classes_match_exhaustive_h2():
    D = datum([2, 2], [1, 0], 2, [1, 0])
    H = homotopy_classes(D, 2)
    order, inv, _, _ = exhaustive_h2(D.G.cayley, D.G.identity, D.G.identity, D.G.identity, 2)
    assert (H.order, H.invariants) == (order, inv)
    assert homotopy_classes(datum([4], [1], 2, [1], mu=1), 4).report["reduced"]
