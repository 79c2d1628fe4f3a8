"""One function per acceptance criterion; each returns (ok, detail)."""

import time

from oracles import exhaustive_h2

from monohopf.bigalois import bigalois_group, check_compose_agreement, twisted_gamma_map, gamma_group
from monohopf.cli import fixture_names, load_fixture
from monohopf.cohomology import h2, modified_h2
from monohopf.comodule import (build_comodule_algebra, build_hopf_algebra, confluence_check,
                               psi_identity_sides, normalize_psi, presented_dimension, psi_from_g,
                               verify_hopf_axioms)
from monohopf.cyclotomic import CyclotomicScalar
from monohopf.datum import classify_type, companion_datum, datum_isomorphic, make_datum
from monohopf.galois import (brute_force_colinear_iso, default_samples, enumerate_galois,
                             galois_isomorphic, three_way_check)
from monohopf.groups import Character, cyclic_product
from monohopf.special import (all_cyclic_data, compare_with_pipeline, generalized_taft, cyclic_type_table,
                              make_cyclic_datum, omega_iso, simple_pointed, taft)


def _timed(budget, fn):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    return ok and dt < budget, f"{detail}; {dt:.2f}s (budget {budget}s)"


def all_data(factors, M):
    """Every datum (G, g, chi) on prod C_factors with chi values in mu_M."""
    G = cyclic_product(factors)
    st = G.abelian_structure
    out = []
    from itertools import product

    for vals in product(range(M), repeat=len(factors)):
        try:
            chi = Character.from_generators(G, M, list(vals))
        except Exception:
            continue
        for g in range(G.order):
            if chi.exponents[g] % M:
                out.append(make_datum(G, g, chi))
    return out


def small_galois_data():
    G = cyclic_product([2, 2])
    return [
        ("sweedler", taft(2)),
        ("C[2,2,4,1,i]", make_cyclic_datum(2, 2, 4, 1, (1, 4))[1]),
        ("C[2,4,4,1,-1]", make_cyclic_datum(2, 4, 4, 1, (1, 2))[1]),
        ("H_{2,2,-1}", generalized_taft(2, 1)),
        ("C2xC2, chi=(1,1)", make_datum(G, st_gen(G, 0), Character.from_generators(G, 2, [1, 1]))),
        ("A(i,1,2,4)", simple_pointed((1, 4), 1, 2, 4)),
    ]


def st_gen(G, i):
    return G.abelian_structure.generators[i]


# 1 -------------------------------------------------------------------------

def criterion_1():
    worst = 0.0
    bad = []
    for name in fixture_names():
        D = load_fixture(name).datum
        t = time.perf_counter()
        A = build_hopf_algebra(D, lazy=True).algebra
        ok, rep = confluence_check(A)
        pd = presented_dimension(A, rep["_discrepancies"])
        dt = time.perf_counter() - t
        worst = max(worst, dt)
        if not (ok and pd == A.dim == D.G.order * D.d and dt < 1.0):
            bad.append(name)
    return not bad, f"{len(fixture_names())} fixtures, presented dim = |G|d, slowest {worst:.2f}s; failures {bad}"


# 2 -------------------------------------------------------------------------

def criterion_2():
    def run():
        data = [taft(2), taft(3), taft(4), simple_pointed((1, 4), 1, 2, 4), generalized_taft(2, 1, (1, 2))]
        res = [verify_hopf_axioms(build_hopf_algebra(D))["all"] for D in data]
        return all(res), f"{sum(res)}/{len(res)} Hopf algebras pass"
    return _timed(30, run)


# 3 -------------------------------------------------------------------------

def criterion_3():
    def run():
        checked = agree = pairs = pair_agree = isos = 0
        for _, D in small_galois_data():
            for M in (2, 4):
                H = h2(D.G, M)
                objs = []
                for c in H.classes():
                    sig = H.representative(c)
                    for a in default_samples(M):
                        r = three_way_check(D, sig, a)
                        checked += 1
                        agree += r["agree"]
                        if r["galois"]:
                            objs.append((sig, a, build_comodule_algebra(D, sig, a)))
                for s1, a1, Z1 in objs:
                    for s2, a2, Z2 in objs:
                        crit = galois_isomorphic(D, (s1, a1), (s2, a2), M, verify=False) is not None
                        bf = brute_force_colinear_iso(Z1, Z2, lam_samples=default_samples(M), M=M) is not None
                        pairs += 1
                        pair_agree += crit == bf
                        isos += crit
        ok = checked == agree and pairs == pair_agree
        return ok, f"three-way {agree}/{checked}, colinear-iso criterion {pair_agree}/{pairs} ({isos} isomorphic)"
    return _timed(300, run)


# 4 -------------------------------------------------------------------------

def _oracle_invariants(D, g1, g2, M):
    return exhaustive_h2(D.G.cayley, D.G.identity, g1, g2, M)[1]


def criterion_4():
    def run():
        cases = []
        D = taft(2)
        cases.append(("I", D, 2, {"H2 x k": _oracle_invariants(D, D.G.identity, D.G.identity, 2)}))
        D = make_cyclic_datum(2, 2, 4, 1, (1, 4))[1]
        cases.append(("II", D, 4, {"a=0": _oracle_invariants(D, D.G.identity, D.G.identity, 4)}))
        D = make_cyclic_datum(2, 4, 4, 1, (1, 2))[1]
        III = {"a=0": _oracle_invariants(D, D.G.identity, D.G.identity, 4),
               "a!=0": _oracle_invariants(D, D.g_d, D.g_d, 4)}
        cases.append(("III", D, 4, III))
        ex = load_fixture("c16xc4_type_iv")
        # H^2(C16 x C4, mu_16): gcd(16,16), gcd(4,16) and gcd(16,4,16)
        cases.append(("IV", ex.datum, 16, {"a=0": [4, 4, 16]}))
        ex = load_fixture("c4xc4_companion_v")
        # C4 x C4, M = 4: H^2 = [4,4,4]; H^2_{x,x} for x = g^2 of order 2 has the
        # Ext part [4,4], the alternating forms with B(x, .) = 0 ([2]) and the
        # extra factor M / gcd(o(x), M) = 2 from the smaller coboundary group
        cases.append(("V", companion_datum(ex.datum, ex.sigma), 4, {"a=0": [4, 4, 4], "a!=0": [2, 2, 4, 4]}))
        D = simple_pointed((1, 4), 1, 2, 4)
        cases.append(("VI", D, 4, III))
        bad = []
        for t, D, M, expected in cases:
            E = enumerate_galois(D, M)
            got = {k: v["invariants"] for k, v in E.branches.items()}
            ok = E.type == t and got == expected and all(o.verified for o in E.objects)
            if t == "I":
                ok = ok and len(E.objects) == _prod(expected["H2 x k"]) * len(default_samples(M))
            else:
                orbits = E.branches.get("a!=0", {}).get("scalar_orbits", 0)
                ok = ok and len(E.objects) == _prod(expected["a=0"]) + orbits * _prod(expected.get("a!=0", []))
            if t == "VI":
                ok = ok and E.bridge and E.bridge.get("right_galois") and E.bridge.get("left_galois")
            if not ok:
                bad.append((t, got, expected))
        return not bad, f"types I-VI branch structures match; mismatches {bad}"
    return _timed(600, run)


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


# 5 -------------------------------------------------------------------------

def criterion_5():
    def run():
        n = 0
        bad = []
        for factors, M in (([2], 2), ([3], 3), ([4], 2), ([2, 2], 2)):
            G = cyclic_product(factors)
            e = G.identity
            for g in range(G.order):
                for g1, g2, flavor in ((e, e, "H2"), (e, g, "H2_{1,g}"), (g, g, "H2_{g,g}")):
                    order, inv, _, _ = exhaustive_h2(G.cayley, e, g1, g2, M)
                    H = modified_h2(G, g1, g2, M)
                    n += 1
                    if (H.order, H.invariants) != (order, inv) or len(list(H.classes())) != order:
                        bad.append((factors, M, flavor, g))
        return not bad, f"{n} (group, M, flavor, g) cases match the exhaustive oracle; mismatches {bad}"
    return _timed(120, run)


# 6 -------------------------------------------------------------------------

def criterion_6():
    def run():
        n = 0
        ok = True
        for factors, M in (([4], 4), ([2, 2], 2)):
            for D in all_data(factors, M):
                H = h2(D.G, M)
                for c in H.classes():
                    sig = H.representative(c)
                    for h in range(D.G.order):
                        lhs, rhs = psi_identity_sides(D, sig, h)
                        n += 1
                        ok = ok and lhs == rhs
        return ok, f"{n} (datum, class, h) products agree exactly"
    return _timed(60, run)


# 7 -------------------------------------------------------------------------

def criterion_7():
    def run():
        n = 0
        ok = True
        for N in (2, 3, 4):
            D = taft(N)
            H = h2(D.G, N)
            for c in H.classes():
                sig = H.representative(c)
                for pg in default_samples(N)[1:]:
                    for a in (0, 1):
                        psi = psi_from_g(D, sig, pg)
                        a2, lam, rep = normalize_psi(D, sig, CyclotomicScalar.from_rational(1, a), psi)
                        n += 1
                        ok = ok and rep["verified"] and rep["target_galois"] and rep["source_galois"]
        return ok, f"{n} normalizations X -> X + lambda T_g verified colinear algebra isomorphisms"
    return _timed(60, run)


# 8 -------------------------------------------------------------------------

def criterion_8():
    def run():
        res = []
        for N in (2, 3):
            Gm = gamma_group(taft(N), N)
            ok, count = check_compose_agreement(Gm, samples=(0,))
            res.append((ok, count))
        return all(r[0] for r in res), "pairs checked " + ", ".join(str(r[1]) for r in res)
    return _timed(300, run)


# 9 -------------------------------------------------------------------------

def criterion_9():
    def run():
        ok = True
        notes = []
        for N in (2, 3, 4):
            Gm = gamma_group(taft(N), N)
            s = Gm.summary()
            good = s["invariants"] == [N] and s["aut_part_order"] == 1
            ok = ok and good
            notes.append(f"Taft{N}: {s['invariants']}")
        # affine scalar law on the algebra level, with nonzero scalars
        for N in (2, 3):
            Gm = gamma_group(taft(N), N)
            good, count = check_compose_agreement(Gm, samples=(1, -1))
            ok = ok and good
            notes.append(f"affine law Taft{N}: {count} pairs")
        R = bigalois_group(simple_pointed((1, 4), 1, 2, 4), 4)
        br = R.bridge
        good = all(v for v in br.values() if isinstance(v, bool)) and R.type == "VI"
        ok = ok and good
        notes.append(f"type VI bridge dim {br['dim']} verified {good}")
        return ok, "; ".join(notes)
    return _timed(300, run)


# 10 ------------------------------------------------------------------------

def criterion_10():
    def run():
        notes = []
        ex = load_fixture("c16xc4_type_iv")
        D = ex.datum
        Gm = gamma_group(D, ex.modulus)
        coords = Gm.H.canonicalize(ex.sigma)
        partners = sum(1 for u in Gm.aut_g if Gm.is_member(u, coords))
        D2 = companion_datum(D, ex.sigma)
        ok1 = classify_type(D).name == "IV" and partners == 0 and datum_isomorphic(D, D2) is None
        notes.append(f"C16xC4: IV, partners {partners}")
        ex = load_fixture("c4xc2_companion_iii")
        D = ex.datum
        D2 = companion_datum(D, ex.sigma)
        ok2 = classify_type(D).name == "III" == classify_type(D2).name and datum_isomorphic(D, D2) is None
        notes.append("C4xC2: III/III non-isomorphic")
        ex = load_fixture("c4xc4_companion_v")
        D2 = companion_datum(ex.datum, ex.sigma)
        T = classify_type(D2, ex.modulus)
        _, _, _, rep = twisted_gamma_map(D2, T.witness, ex.modulus)
        ok3 = T.name == "V" and rep["verified"] and rep["injective"] and rep["surjective"]
        notes.append(f"C4xC4: companion {T.name}, twisted Gamma map {rep['verified']}")
        return ok1 and ok2 and ok3, "; ".join(notes)
    return _timed(600, run)


# 11 ------------------------------------------------------------------------

def criterion_11():
    def run():
        data = all_cyclic_data(12)
        table_bad = []
        pred_bad = []
        for d, n, N, alpha, q in data:
            cd, D = make_cyclic_datum(d, n, N, alpha, q)
            if cyclic_type_table(cd) != classify_type(D).name:
                table_bad.append(cd.as_tuple())
            for M in (2, 3, 4):
                r = compare_with_pipeline(D, M)
                if not r["match"]:
                    pred_bad.append((cd.as_tuple(), M))
        om = omega_iso(generalized_taft(2, 1), 2)
        ok = not table_bad and not pred_bad and om["verified"]
        return ok, (f"{len(data)} cyclic data x 3 moduli; table mismatches {len(table_bad)}, "
                    f"prediction mismatches {len(pred_bad)}; Omega on C2xC2 verified {om['verified']}")
    return _timed(900, run)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]
