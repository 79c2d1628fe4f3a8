import pytest

from oracles import automorphisms

from monohopf.groups import (Character, GroupError, automorphisms_fixing, brute_force_automorphism_count,
                             build_group, cyclic_group, cyclic_product, direct_product, element_order,
                             is_central, symmetric_group)


@pytest.mark.parametrize("factors", [[2], [4], [2, 2], [2, 4], [3, 3], [6]])
def test_automorphism_counts_match_permutation_search(factors):
    G = cyclic_product(factors)
    expected = len(automorphisms(G.cayley, G.identity))
    assert len(automorphisms_fixing(G)) == expected == brute_force_automorphism_count(G)


def test_automorphisms_fixing_g_and_chi():
    G = cyclic_product([4, 2])
    g = G.abelian_structure.generators[0]
    chi = Character.from_generators(G, 2, [1, 1])
    all_u = [f for f in automorphisms(G.cayley, G.identity) if f[g] == g]
    with_chi = [f for f in all_u if all(chi.exponents[f[h]] == chi.exponents[h] for h in range(G.order))]
    assert sorted(u.perm for u in automorphisms_fixing(G, g)) == sorted(map(tuple, all_u))
    assert len(automorphisms_fixing(G, g, chi)) == len(with_chi)


def test_element_orders_and_structure():
    G = cyclic_group(6)
    z = G.abelian_structure.generators[0]
    assert element_order(G, G.identity) == 1 and element_order(G, z) == 6
    G = build_group({"cyclic_factors": [16, 4]})
    assert G.order == 64 and G.exponent() == 16 and not G.is_cyclic()
    assert build_group([3, 5]).is_cyclic()


def test_nonabelian_group():
    S3 = symmetric_group(3)
    assert S3.abelian_structure is None and not S3.is_abelian
    assert [is_central(S3, x) for x in range(6)].count(True) == 1
    assert brute_force_automorphism_count(S3) == 6
    T = build_group({"cayley_table": S3.cayley})
    assert T.order == 6 and T.abelian_structure is None


def test_bad_groups_are_rejected():
    with pytest.raises(GroupError):
        build_group({"oops": 1})
    with pytest.raises(Exception):
        build_group({"cayley_table": [[0, 1], [0, 1]]})


def test_characters():
    G = cyclic_product([4, 2])
    chi = Character.from_generators(G, 4, [1, 2])
    x, h = G.abelian_structure.generators
    assert chi.value_order(x) == 4 and chi.value_order(h) == 2
    assert chi.order() == 4 and (chi ** 4).is_trivial()
    with pytest.raises(Exception):
        Character.from_generators(G, 4, [1, 1])  # i on an element of order 2


def test_direct_product():
    P = direct_product(cyclic_group(2), cyclic_group(3))
    assert P.order == 6 and P.is_cyclic()
