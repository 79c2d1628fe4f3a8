"""Brute-force reference computations, written without the library's
linear algebra so they can be used to check it."""

import cmath
from collections import Counter
from fractions import Fraction
from itertools import permutations, product
from math import gcd


def complex_value(x):
    """Numerical value of a CyclotomicScalar (power basis in zeta_M)."""
    z = cmath.exp(2j * cmath.pi / x.modulus)
    return sum(c * z ** k for k, c in enumerate(x.num)) / x.den


def fraction_rank(rows):
    """Rank of a rational matrix by plain Gaussian elimination."""
    A = [[Fraction(v) for v in r] for r in rows]
    rank = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(len(A)):
            if r != rank and A[r][c] != 0:
                f = A[r][c] / A[rank][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def automorphisms(table, identity=0):
    """All bijections f with f(ab) = f(a) f(b), by permutation search."""
    n = len(table)
    out = []
    others = [x for x in range(n) if x != identity]
    for p in permutations(others):
        f = [0] * n
        f[identity] = identity
        for x, y in zip(others, p):
            f[x] = y
        if all(f[table[a][b]] == table[f[a]][f[b]] for a in range(n) for b in range(n)):
            out.append(tuple(f))
    return out


def abelian_type_from_orders(order_counts):
    """Invariant factors of a finite abelian group from its element-order
    statistics, by comparing with every candidate type of that order."""
    total = sum(order_counts.values())
    for cand in _abelian_types(total):
        if _order_stats(cand) == order_counts:
            return cand
    raise AssertionError("no abelian group with these order statistics")


def _abelian_types(n):
    # invariant-factor lists d_1 | d_2 | ... with product n
    def rec(rest, prev):
        if rest == 1:
            yield []
            return
        for d in range(2, rest + 1):
            if rest % d == 0 and (prev is None or d % prev == 0):
                for tail in rec(rest // d, d):
                    yield [d] + tail
    return list(rec(n, None))


def _order_stats(factors):
    c = Counter()
    for v in product(*[range(f) for f in factors]):
        o = 1
        for x, f in zip(v, factors):
            k = f // gcd(f, x)
            o = o * k // gcd(o, k)
        c[o] += 1
    return c


def exhaustive_h2(table, identity, g1, g2, M):
    """H^2_{g1,g2}(G, Z/M) by listing every normalized cochain.

    Z: cocycles with c(g1, h) = c(h, g1); B: coboundaries of phi with
    phi(1) = phi(g2) = 0.  Returns (order, invariants, cocycles, coboundaries)."""
    n = len(table)
    nz = [x for x in range(n) if x != identity]
    cells = [(a, b) for a in nz for b in nz]
    cocycles = []
    for vals in product(range(M), repeat=len(cells)):
        c = [[0] * n for _ in range(n)]
        for (a, b), v in zip(cells, vals):
            c[a][b] = v
        ok = all((c[b][t] - c[table[a][b]][t] + c[a][table[b][t]] - c[a][b]) % M == 0
                 for a in nz for b in nz for t in nz)
        if ok and all((c[g1][h] - c[h][g1]) % M == 0 for h in range(n)):
            cocycles.append(tuple(map(tuple, c)))
    free = [x for x in nz if x != g2]
    cob = set()
    for vals in product(range(M), repeat=len(free)):
        phi = [0] * n
        for x, v in zip(free, vals):
            phi[x] = v
        cob.add(tuple(tuple((phi[a] + phi[b] - phi[table[a][b]]) % M for b in range(n)) for a in range(n)))
    Zset = set(cocycles)
    assert cob <= Zset or g1 != identity, "coboundaries must be cocycles"
    order = len(Zset) // len(cob)
    # element orders in Z/B
    stats = Counter()
    seen = set()
    for c in cocycles:
        key = _coset_key(c, cob, M)
        if key in seen:
            continue
        seen.add(key)
        k = 1
        while _scale(c, k, M) not in cob:
            k += 1
        stats[k] += 1
    assert len(seen) == order
    return order, abelian_type_from_orders(stats), Zset, cob


def _scale(c, k, M):
    return tuple(tuple((k * x) % M for x in row) for row in c)


def _coset_key(c, cob, M):
    return min(tuple(tuple((x - y) % M for x, y in zip(r1, r2)) for r1, r2 in zip(c, b)) for b in cob)


def gamma_order_brute(G, g, chi_exps, chi_mod, M, classes):
    """|{(u, class) : u(g) = g, chi(u(h)) = chi(h) - B_sigma(g, h)}| with u
    ranging over all automorphisms found by permutation search and classes
    given as explicit cocycle tables (values in Z/M, chi values in mu_M)."""
    table = G.cayley
    auts = [f for f in automorphisms(table, G.identity) if f[g] == g]
    s = M // chi_mod if M % chi_mod == 0 else None
    assert s is not None
    count = 0
    for f in auts:
        for c in classes:
            if all((chi_exps[f[h]] * s - chi_exps[h] * s + c[g][h] - c[h][g]) % M == 0 for h in range(G.order)):
                count += 1
    return count


def coset_representatives(Zset, cob, M):
    """One cocycle table per class of Z/B."""
    reps = {}
    for c in sorted(Zset):
        reps.setdefault(_coset_key(c, cob, M), c)
    return list(reps.values())
