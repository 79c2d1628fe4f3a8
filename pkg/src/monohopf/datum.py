"""Group data (G, g, chi, mu), the six types, companion data and isomorphism."""

from dataclasses import dataclass, field
from math import gcd, lcm

from .cohomology import CocycleVector, abelian_cocycle_assemble
from .cyclotomic import CyclotomicScalar
from .groups import Character, GroupAutomorphism, _abelian_automorphisms, is_central, isomorphisms
from .linalg import solve_linear_mod

TYPES = ("I", "II", "III", "IV", "V", "VI")


class DatumError(ValueError):
    pass


def _as_scalar(mu):
    if mu is None or (isinstance(mu, int) and mu == 0):
        return CyclotomicScalar.zero(1)
    if isinstance(mu, CyclotomicScalar):
        return mu
    return CyclotomicScalar.from_rational(1, mu)


@dataclass
class GroupDatum:
    G: object
    g: int
    chi: Character
    mu: CyclotomicScalar
    d: int = field(init=False)
    n: int = field(init=False)
    m: int = field(init=False)
    name: str = None

    def __post_init__(self):
        self.d = self.chi.value_order(self.g)
        self.n = self.G.orders()[self.g]
        self.m = self.chi.order()

    @property
    def g_d(self):
        return self.G.power(self.g, self.d)

    @property
    def has_mu(self):
        return not self.mu.is_zero()

    def default_modulus(self):
        return lcm(self.G.exponent(), self.m)

    def field_modulus(self, M):
        return lcm(M, self.chi.modulus, self.mu.modulus, 2)

    def chi_exponent(self, h, M):
        """chi(h) as an exponent mod M (requires chi values in mu_M)."""
        c = self.chi
        L = lcm(M, c.modulus)
        e = c.exponents[h] * (L // c.modulus)
        if e % (L // M):
            raise DatumError(f"chi takes values outside mu_{M}")
        return (e // (L // M)) % M

    def chi_in_mu(self, M):
        return M % self.m == 0

    def with_mu(self, mu):
        return make_datum(self.G, self.g, self.chi, mu)

    def describe(self):
        st = self.G.abelian_structure
        gdesc = list(st.vectors[self.g]) if st is not None else self.g
        return {
            "group": self.G.name or f"order {self.G.order}",
            "order": self.G.order,
            "g": gdesc,
            "chi_modulus": self.chi.modulus,
            "chi": list(self.chi.exponents) if st is None else
            [self.chi.exponents[s] for s in st.generators],
            "mu": str(self.mu),
            "d": self.d,
            "n": self.n,
            "m": self.m,
        }


def make_datum(G, g, chi, mu=0, name=None):
    if not is_central(G, g):
        raise DatumError("g_central: g must be central in G")
    if chi.group is not G:
        raise DatumError("chi_group: chi is defined on another group")
    if chi.exponents[g] % chi.modulus == 0:
        raise DatumError("chi_g_nontrivial: chi(g) must differ from 1")
    mu = _as_scalar(mu)
    D = GroupDatum(G, g, chi, mu, name=name)
    if D.has_mu and D.n == D.d:
        raise DatumError("mu_zero_when_n_eq_d: mu must vanish when o(g) = o(chi(g))")
    if D.has_mu and not (chi ** D.d).is_trivial():
        raise DatumError("mu_requires_chi_d_trivial: mu != 0 needs chi^d = 1")
    return D


@dataclass
class DatumType:
    name: str
    witness: CocycleVector = None
    search_modulus: int = None
    note: str = ""

    def __str__(self):
        return self.name


def _symmetric_extension_witness(D, M):
    """A cocycle sigma with c(g^d, h) - c(h, g^d) = d chi(h) for all h, or None."""
    G = D.G
    if not D.chi_in_mu(M):
        return None
    gd = D.g_d
    target = {h: (D.d * D.chi_exponent(h, M)) % M for h in range(G.order)}
    st = G.abelian_structure
    if st is not None:
        r = len(st.factors)
        pairs = [(i, j) for i in range(r) for j in range(i)]
        if not pairs:
            return None
        weights = [M // gcd(M, gcd(st.factors[i], st.factors[j])) for (i, j) in pairs]
        gv = st.vectors[gd]
        A, b = [], []
        for k, s in enumerate(st.generators):
            hv = [int(t == k) for t in range(r)]
            A.append([w * (gv[i] * hv[j] - hv[i] * gv[j]) for (i, j), w in zip(pairs, weights)])
            b.append(target[s])
        sol = solve_linear_mod(A, b, M)
        if sol is None:
            return None
        svec, _ = sol
        bmat = [[0] * r for _ in range(r)]
        for (i, j), w, s in zip(pairs, weights, svec):
            bmat[i][j] = w * s
        sigma = abelian_cocycle_assemble(G, M, [0] * r, bmat)
    else:
        sigma = _dense_witness(G, gd, target, M)
        if sigma is None:
            return None
    assert all((sigma.pairing(gd, h) - target[h]) % M == 0 for h in range(G.order))
    return sigma


def _dense_witness(G, gd, target, M):
    e = G.identity
    others = [x for x in range(G.order) if x != e]
    pos = {(a, b): k for k, (a, b) in enumerate((a, b) for a in others for b in others)}
    dim = len(pos)
    rows, rhs = [], []
    mul = G.cayley
    for a in others:
        for b in others:
            for x in others:
                r = [0] * dim
                for key, s in (((a, b), 1), ((mul[a][b], x), 1), ((b, x), -1), ((a, mul[b][x]), -1)):
                    if key in pos:
                        r[pos[key]] += s
                if any(r):
                    rows.append(r)
                    rhs.append(0)
    for h in others:
        r = [0] * dim
        if gd != e and h != gd:
            r[pos[(gd, h)]] += 1
            r[pos[(h, gd)]] -= 1
        rows.append(r)
        rhs.append(target[h])
    sol = solve_linear_mod(rows, rhs, M)
    if sol is None:
        return None
    x, _ = sol
    n = G.order
    t = [[0] * n for _ in range(n)]
    for (a, b), k in pos.items():
        t[a][b] = x[k]
    return CocycleVector(G, M, t)


def classify_type(D, M=None):
    M = M or D.default_modulus()
    if D.has_mu:
        return DatumType("VI", search_modulus=M)
    chi_d_trivial = (D.chi ** D.d).is_trivial()
    if D.d == D.n:
        return DatumType("I" if chi_d_trivial else "II", search_modulus=M)
    if chi_d_trivial:
        return DatumType("III", search_modulus=M)
    w = _symmetric_extension_witness(D, M)
    note = ""
    if not D.chi_in_mu(M):
        note = f"chi takes values outside mu_{M}; search over mu_{M}-valued cocycles is not conclusive"
    if w is None:
        return DatumType("IV", search_modulus=M, note=note)
    return DatumType("V", witness=w, search_modulus=M)


def _character_shift(D, sigma):
    """chi'(h) = chi(h) - B_sigma(g, h), as a Character over lcm moduli."""
    L = lcm(D.chi.modulus, sigma.modulus)
    cs = L // D.chi.modulus
    ss = L // sigma.modulus
    G = D.G
    exps = [D.chi.exponents[h] * cs - sigma.pairing(D.g, h) * ss for h in range(G.order)]
    return Character(G, L, exps).reduced()


def companion_datum(D, sigma, a=None):
    """The datum G' with chi'(h) = sigma(g,h)^{-1} sigma(h,g) chi(h); with a
    nonzero scalar a, the type VI companion with
    mu' = -a prod_{i=1}^{d-1} sigma(g, g^i)^{-1}."""
    t = classify_type(D).name
    if t not in ("III", "IV") and a is None:
        raise DatumError(f"companion data are defined for types III and IV, not {t}")
    chi2 = _character_shift(D, sigma)
    if a is None or (isinstance(a, CyclotomicScalar) and a.is_zero()) or a == 0:
        return make_datum(D.G, D.g, chi2)
    if t != "III":
        raise DatumError("the type VI companion needs a type III datum")
    a = _as_scalar(a)
    L = lcm(sigma.modulus, a.modulus)
    prod = CyclotomicScalar.one(L)
    x = D.g
    for _ in range(1, D.d):
        prod = prod * sigma.value(D.g, x, L)
        x = D.G.cayley[x][D.g]
    mu2 = -(a.lift(L) / prod)
    return make_datum(D.G, D.g, chi2, mu2)


def _scalar_candidates(M, samples):
    out = [CyclotomicScalar.root_of_unity(M, e) for e in range(M)]
    for s in samples or ():
        if isinstance(s, CyclotomicScalar) and not s.is_zero():
            out.append(s)
    return out


def datum_isomorphic(D1, D2, samples=None, cap=None):
    """(f, delta) with f(g1) = g2, chi2 o f = chi1 and mu1 = delta^d mu2, or None.

    delta is searched in mu_M (M = common default modulus) plus samples."""
    G1, G2 = D1.G, D2.G
    if G1.order != G2.order or D1.d != D2.d or D1.n != D2.n or D1.m != D2.m:
        return None
    if D1.has_mu != D2.has_mu:
        return None
    L = lcm(D1.chi.modulus, D2.chi.modulus)
    c1, c2 = D1.chi.lift(L), D2.chi.lift(L)
    if G1 is G2 and G1.abelian_structure is not None:
        cands = [p for p in _abelian_automorphisms(G1) if p[D1.g] == D2.g]
    else:
        cands = isomorphisms(G1, G2, fixed=[(D1.g, D2.g)], cap=cap)
    delta = CyclotomicScalar.one(1)
    for f in cands:
        if any(c2.exponents[f[h]] != c1.exponents[h] for h in range(G1.order)):
            continue
        if D1.has_mu:
            M = lcm(D1.default_modulus(), D2.default_modulus())
            found = None
            for dl in _scalar_candidates(M, samples):
                if D1.mu == (dl ** D1.d) * D2.mu:
                    found = dl
                    break
            if found is None:
                continue
            delta = found
        iso = GroupAutomorphism(G1, f, check=False) if G1 is G2 else f
        return iso, delta
    return None


def reduce(D, mode, sigma=None):
    """Type V with witness sigma -> G_sigma; type VI -> G_red.  Both type III."""
    t = classify_type(D).name
    if mode in ("V", "type-V"):
        if t != "V":
            raise DatumError(f"type-V reduction applied to a type {t} datum")
        if sigma is None:
            sigma = classify_type(D).witness
        M = sigma.modulus
        gd = D.g_d
        for h in range(D.G.order):
            if (sigma.pairing(gd, h) - D.d * D.chi_exponent(h, M)) % M:
                raise DatumError("witness fails chi(h)^d = sigma(g^d,h) sigma(h,g^d)^{-1}")
        out = make_datum(D.G, D.g, _character_shift(D, sigma))
    elif mode in ("VI", "type-VI"):
        if t != "VI":
            raise DatumError(f"type-VI reduction applied to a type {t} datum")
        out = make_datum(D.G, D.g, D.chi, 0)
    else:
        raise DatumError(f"unknown reduction mode {mode!r}")
    if classify_type(out).name != "III":
        raise DatumError("reduced datum is not of type III")
    return out
