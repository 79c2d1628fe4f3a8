"""Normalized 2-cocycles with values in mu_M and the modified cohomology
groups H^2_{g1,g2}(G, mu_M) = Z^2_{g1} / B^2_{g2}.

A cocycle is stored additively: the exponent table c with
sigma(a, b) = zeta_M^{c(a, b)}.  Z^2_{g1} consists of the cocycles with
c(g1, h) = c(h, g1) for all h, and B^2_{g2} of the coboundaries of
functions vanishing at 1 and at g2.

Two engines compute the quotient.  The dense one works on the full
cochain space of any small group.  The structured one handles abelian
groups of any size we care about: it maps a cocycle to a short vector
(alternating part, cyclic invariants, and the value at g2 of a
normalized primitive of the symmetric remainder) whose kernel lies in
B^2_{g2}, so the quotient is computed in a space of dimension about r^2
for a group with r cyclic factors.
"""

from itertools import product
from math import gcd

from .cyclotomic import CyclotomicScalar
from .groups import GroupError, is_central
from .linalg import kernel_mod, solve_linear_mod, subquotient_invariants

DENSE_CAP = 16


class CocycleError(ValueError):
    pass


class CocycleVector:
    __slots__ = ("group", "modulus", "table", "_hash")

    def __init__(self, group, modulus, table, check=False):
        self.group = group
        self.modulus = int(modulus)
        M = self.modulus
        self.table = tuple(tuple(int(x) % M for x in row) for row in table)
        self._hash = None
        if check:
            self.validate()

    @classmethod
    def from_function(cls, group, modulus, fn):
        n = group.order
        return cls(group, modulus, [[fn(a, b) for b in range(n)] for a in range(n)])

    @classmethod
    def trivial(cls, group, modulus):
        n = group.order
        return cls(group, modulus, [[0] * n for _ in range(n)])

    def __call__(self, a, b):
        return self.table[a][b]

    def value(self, a, b, field_modulus=None):
        m = field_modulus or self.modulus
        return CyclotomicScalar.root_of_unity(m, self.table[a][b] * (m // self.modulus))

    def is_normalized(self):
        e = self.group.identity
        return all(x == 0 for x in self.table[e]) and all(row[e] == 0 for row in self.table)

    def is_cocycle(self):
        G, c, M = self.group, self.table, self.modulus
        mul = G.cayley
        for a in range(G.order):
            ca = c[a]
            for b in range(G.order):
                ab = mul[a][b]
                cab = c[ab]
                cb = c[b]
                base = ca[b]
                for x in range(G.order):
                    if (base + cab[x] - cb[x] - ca[mul[b][x]]) % M:
                        return False
        return True

    def validate(self):
        if not self.is_normalized():
            raise CocycleError("cocycle is not normalized")
        if not self.is_cocycle():
            raise CocycleError("cocycle identity fails")
        return self

    def _binary(self, other, sign):
        if other.group is not self.group:
            raise CocycleError("cocycles on different groups")
        if other.modulus != self.modulus:
            raise CocycleError("cocycles with different moduli; lift first")
        return CocycleVector(self.group, self.modulus,
                             [[x + sign * y for x, y in zip(r1, r2)] for r1, r2 in zip(self.table, other.table)])

    def __add__(self, other):
        return self._binary(other, 1)

    def __sub__(self, other):
        return self._binary(other, -1)

    def __neg__(self):
        return CocycleVector(self.group, self.modulus, [[-x for x in row] for row in self.table])

    def scale(self, k):
        return CocycleVector(self.group, self.modulus, [[k * x for x in row] for row in self.table])

    def compose(self, u):
        """sigma o (u x u)."""
        p = u.perm if hasattr(u, "perm") else u
        t = self.table
        n = self.group.order
        return CocycleVector(self.group, self.modulus, [[t[p[a]][p[b]] for b in range(n)] for a in range(n)])

    def lift(self, modulus):
        if modulus % self.modulus:
            raise CocycleError(f"cannot lift mu_{self.modulus} values to mu_{modulus}")
        s = modulus // self.modulus
        return CocycleVector(self.group, modulus, [[x * s for x in row] for row in self.table])

    def pairing(self, a, h):
        """B_sigma(a, h) = c(a, h) - c(h, a)."""
        return (self.table[a][h] - self.table[h][a]) % self.modulus

    def __eq__(self, other):
        return (isinstance(other, CocycleVector) and other.group is self.group
                and other.modulus == self.modulus and other.table == self.table)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.modulus, self.table))
        return self._hash

    def __repr__(self):
        return f"CocycleVector(mod {self.modulus}, order {self.group.order})"

    def to_json(self):
        return {"modulus": self.modulus, "table": [list(r) for r in self.table]}


def coboundary(G, M, delta):
    """The coboundary of delta: (a, b) -> delta(a) + delta(b) - delta(ab)."""
    d = [int(x) for x in delta]
    if d[G.identity] % M:
        raise CocycleError("delta must vanish at 1")
    mul = G.cayley
    n = G.order
    return CocycleVector(G, M, [[d[a] + d[b] - d[mul[a][b]] for b in range(n)] for a in range(n)])


def _indicator_coboundary_fn(G, x):
    mul = G.cayley

    def fn(a, b):
        return int(a == x) + int(b == x) - int(mul[a][b] == x)

    return fn


# ---------------------------------------------------------------------------
# engines


class _DenseEngine:
    """Coordinates = values on pairs (a, b) with a, b != 1."""

    name = "dense"

    def __init__(self, G, M, g1, g2):
        self.G, self.M = G, M
        e = G.identity
        self.others = [x for x in range(G.order) if x != e]
        self.pos = {}
        for a in self.others:
            for b in self.others:
                self.pos[(a, b)] = len(self.pos)
        self.dim = len(self.pos)
        self.g1, self.g2 = g1, g2

    def vector(self, fn):
        return [fn(a, b) % self.M for (a, b) in self.pos]

    def cocycle(self, vec):
        G = self.G
        n = G.order
        t = [[0] * n for _ in range(n)]
        for (a, b), i in self.pos.items():
            t[a][b] = vec[i]
        return CocycleVector(G, self.M, t)

    def z_generators(self):
        G, M = self.G, self.M
        mul = G.cayley
        rows = []
        seen = set()
        for a in self.others:
            for b in self.others:
                ab = mul[a][b]
                for x in self.others:
                    bx = mul[b][x]
                    row = {}
                    for key, s in (((a, b), 1), ((ab, x), 1), ((b, x), -1), ((a, bx), -1)):
                        if key in self.pos:
                            i = self.pos[key]
                            row[i] = row.get(i, 0) + s
                    items = tuple(sorted((i, v) for i, v in row.items() if v))
                    if items and items not in seen:
                        seen.add(items)
                        rows.append(items)
        if self.g1 != G.identity:
            for h in self.others:
                if h == self.g1:
                    continue
                rows.append(((self.pos[(self.g1, h)], 1), (self.pos[(h, self.g1)], -1)))
        A = []
        for items in rows:
            r = [0] * self.dim
            for i, v in items:
                r[i] = v
            A.append(r)
        gens = kernel_mod(A, M, ncols=self.dim)
        return gens, [self.cocycle(v) for v in gens]

    def b_generators(self):
        G = self.G
        out = []
        for x in self.others:
            if x == self.g2:
                continue
            out.append(self.vector(_indicator_coboundary_fn(G, x)))
        return out


class _AbelianEngine:
    """Compressed coordinates for abelian groups (see module docstring)."""

    name = "abelian"

    def __init__(self, G, M, g1, g2):
        st = G.abelian_structure
        if st is None:
            raise GroupError("structured engine needs an abelian group")
        self.G, self.M, self.st = G, M, st
        self.g1, self.g2 = g1, g2
        self.r = len(st.factors)
        self.pairs = [(i, j) for i in range(self.r) for j in range(i)]
        self.use_t = g2 != G.identity
        self.dim = len(self.pairs) + self.r + int(self.use_t)
        # BFS spanning tree: parent[x] = (y, i) with x = y + e_i
        e = G.identity
        order = [e]
        parent = {e: None}
        k = 0
        while k < len(order):
            y = order[k]
            k += 1
            for i, s in enumerate(st.generators):
                x = G.cayley[y][s]
                if x not in parent:
                    parent[x] = (y, i)
                    order.append(x)
        self.bfs = order
        self.parent = parent
        # powers of generators
        self.gen_powers = []
        for i, s in enumerate(st.generators):
            pw = [e]
            for _ in range(st.factors[i] - 1):
                pw.append(G.cayley[pw[-1]][s])
            self.gen_powers.append(pw)

    def _struct_value(self, S, b, x, y):
        st = self.st
        vx, vy = st.vectors[x], st.vectors[y]
        tot = 0
        for i, N in enumerate(st.factors):
            if vx[i] + vy[i] >= N:
                tot += S[i]
        for (i, j), bij in zip(self.pairs, b):
            if bij:
                tot += bij * vx[i] * vy[j]
        return tot

    def vector(self, fn):
        M, st = self.M, self.st
        gens = st.generators
        b = [(fn(gens[i], gens[j]) - fn(gens[j], gens[i])) % M for (i, j) in self.pairs]
        S = []
        for i, s in enumerate(gens):
            S.append(sum(fn(s, p) for p in self.gen_powers[i]) % M)
        out = b + S
        if self.use_t:
            # primitive delta of c' = c - struct(S, b) with delta(e_i) = 0
            delta = {self.G.identity: 0}
            for x in self.bfs[1:]:
                y, i = self.parent[x]
                s = gens[i]
                cval = fn(y, s) - self._struct_value(S, b, y, s)
                delta[x] = (delta[y] - cval) % M
            out.append(delta[self.g2])
        return out

    def generator_cocycles(self):
        G, M, st = self.G, self.M, self.st
        cocycles = []
        for i in range(self.r):
            cocycles.append(abelian_cocycle_assemble(G, M, [int(k == i) for k in range(self.r)], None))
        # bicharacters b_ij x_i y_j (i > j) with the g1-symmetry constraint
        weights = [M // gcd(M, gcd(st.factors[i], st.factors[j])) for (i, j) in self.pairs]
        if self.pairs:
            if self.g1 != G.identity:
                gv = st.vectors[self.g1]
                A = []
                for k in range(self.r):
                    hv = [int(t == k) for t in range(self.r)]
                    A.append([w * (gv[i] * hv[j] - hv[i] * gv[j]) for (i, j), w in zip(self.pairs, weights)])
                svecs = kernel_mod(A, M, ncols=len(self.pairs))
            else:
                svecs = [[int(a == b) for a in range(len(self.pairs))] for b in range(len(self.pairs))]
            for s in svecs:
                bmat = [[0] * self.r for _ in range(self.r)]
                for (i, j), w, sv in zip(self.pairs, weights, s):
                    bmat[i][j] = w * sv
                cocycles.append(abelian_cocycle_assemble(G, M, [0] * self.r, bmat))
        if self.use_t:
            cocycles.append(CocycleVector.from_function(G, M, _indicator_coboundary_fn(G, self.g2)))
        return cocycles

    def z_generators(self):
        cocs = self.generator_cocycles()
        return [self.vector(c.__call__) for c in cocs], cocs

    def b_generators(self):
        G = self.G
        out = []
        for x in range(G.order):
            if x == G.identity or x == self.g2:
                continue
            out.append(self.vector(_indicator_coboundary_fn(G, x)))
        return out


class CohomologyGroup:
    """H^2_{g1,g2}(G, mu_M) with canonical coordinates."""

    def __init__(self, G, g1, g2, M, engine=None, dense_cap=DENSE_CAP):
        e = G.identity
        g1 = e if g1 is None else g1
        g2 = e if g2 is None else g2
        for x in (g1, g2):
            if not is_central(G, x):
                raise CocycleError("g1 and g2 must be central")
        if M < 1:
            raise CocycleError("modulus must be positive")
        if engine is None:
            engine = "abelian" if G.abelian_structure is not None else "dense"
        if engine == "dense":
            if G.order > dense_cap:
                raise CocycleError(f"dense cochain engine capped at |G| <= {dense_cap}; "
                                   "use the structured abelian engine")
            eng = _DenseEngine(G, M, g1, g2)
        elif engine == "abelian":
            eng = _AbelianEngine(G, M, g1, g2)
        else:
            raise CocycleError(f"unknown engine {engine!r}")
        self.group, self.g1, self.g2, self.modulus = G, g1, g2, M
        self.engine = eng
        zvecs, zcocs = eng.z_generators()
        self._zvecs, self._zcocs = zvecs, zcocs
        bvecs = eng.b_generators()
        self.structure = subquotient_invariants(M, eng.dim, zvecs + bvecs, bvecs)
        self._reps = {}

    @property
    def flavor(self):
        return (self.g1, self.g2)

    @property
    def invariants(self):
        return list(self.structure.invariants)

    @property
    def order(self):
        return self.structure.order

    def classes(self):
        return self.structure.elements()

    def zero(self):
        return self.structure.zero()

    def add(self, x, y):
        return self.structure.add(x, y)

    def neg(self, x):
        return self.structure.neg(x)

    def in_z(self, sigma):
        """Whether sigma (assumed a normalized cocycle) is g1-symmetric."""
        g1 = self.g1
        return all(sigma(g1, h) == sigma(h, g1) for h in range(self.group.order))

    def canonicalize(self, sigma):
        if sigma.group is not self.group:
            raise CocycleError("cocycle lives on another group")
        if sigma.modulus != self.modulus:
            sigma = _convert_modulus(sigma, self.modulus)
        if not self.in_z(sigma):
            raise CocycleError("cocycle is not symmetric against g1")
        return self.structure.coordinates(self.engine.vector(sigma.__call__))

    def representative(self, coords):
        coords = tuple(coords)
        rep = self._reps.get(coords)
        if rep is not None:
            return rep
        target = self.structure.element(coords)
        A = [[v[i] for v in self._zvecs] for i in range(self.engine.dim)]
        sol = solve_linear_mod(A, target, self.modulus) if self._zvecs else None
        if sol is None:
            if any(target):
                raise CocycleError("no lift found for class coordinates")
            rep = CocycleVector.trivial(self.group, self.modulus)
        else:
            x, _ = sol
            rep = CocycleVector.trivial(self.group, self.modulus)
            for k, c in zip(x, self._zcocs):
                if k:
                    rep = rep + c.scale(k)
        assert self.canonicalize(rep) == coords
        self._reps[coords] = rep
        return rep

    def describe(self):
        names = {self.group.identity: "1"}
        return {
            "g1": names.get(self.g1, self.g1),
            "g2": names.get(self.g2, self.g2),
            "modulus": self.modulus,
            "engine": self.engine.name,
            "invariants": self.invariants,
            "order": self.order,
        }


def _convert_modulus(sigma, M):
    if M % sigma.modulus == 0:
        return sigma.lift(M)
    k = sigma.modulus // M if sigma.modulus % M == 0 else 0
    if k and all(x % k == 0 for row in sigma.table for x in row):
        return CocycleVector(sigma.group, M, [[x // k for x in row] for row in sigma.table])
    raise CocycleError(f"cocycle values are not in mu_{M}")


def modified_h2(G, g1, g2, M, engine=None, dense_cap=DENSE_CAP):
    return CohomologyGroup(G, g1, g2, M, engine=engine, dense_cap=dense_cap)


def h2(G, M, engine=None):
    return CohomologyGroup(G, None, None, M, engine=engine)


# ---------------------------------------------------------------------------
# invariants of classes


def epsilon_map(sigma, g, n=None):
    """sum_{i=1}^{n-1} c(g, g^i) mod M, n = o(g)."""
    G = sigma.group
    if n is None:
        n = G.orders()[g]
    tot = 0
    x = g
    for _ in range(1, n):
        tot += sigma(g, x)
        x = G.cayley[x][g]
    return tot % sigma.modulus


def pairing_of_class(sigma, H=None):
    """Table {(a, h): B_sigma(a, h)} for a in G and h in the central subset H."""
    G = sigma.group
    if H is None:
        H = [h for h in range(G.order) if is_central(G, h)]
    for h in H:
        if not is_central(G, h):
            raise CocycleError("pairing needs central second arguments")
    return {(a, h): sigma.pairing(a, h) for a in range(G.order) for h in H}


def check_pairing_biadditive(sigma, H):
    G, M = sigma.group, sigma.modulus
    for a in range(G.order):
        for b in range(G.order):
            ab = G.cayley[a][b]
            for h in H:
                if (sigma.pairing(ab, h) - sigma.pairing(a, h) - sigma.pairing(b, h)) % M:
                    return False
    for a in range(G.order):
        for h in H:
            for k in H:
                if (sigma.pairing(a, G.cayley[h][k]) - sigma.pairing(a, h) - sigma.pairing(a, k)) % M:
                    return False
    return True


# ---------------------------------------------------------------------------
# explicit cocycle families


def cyclic_standard_cocycle(G, y, a, M):
    """f_a for the generator y of the cyclic group G: c(y^i, y^j) = a if
    i + j >= N (0 <= i, j < N), else 0."""
    N = G.order
    pw = [G.identity]
    for _ in range(N - 1):
        pw.append(G.cayley[pw[-1]][y])
    if len(set(pw)) != N:
        raise CocycleError("y does not generate G")
    expo = {x: i for i, x in enumerate(pw)}
    return CocycleVector.from_function(G, M, lambda u, v: a if expo[u] + expo[v] >= N else 0)


def abelian_cocycle_assemble(G, M, cyclic_parts, bichar=None):
    """sum_i f_{a_i}(x_i, y_i) + sum_{i>j} b_ij x_i y_j on G = prod C_{N_i}."""
    st = G.abelian_structure
    if st is None:
        raise CocycleError("assembly needs an abelian structure")
    r = len(st.factors)
    if len(cyclic_parts) != r:
        raise CocycleError("one cyclic exponent per factor expected")
    if bichar is None:
        bichar = [[0] * r for _ in range(r)]
    if len(bichar) != r or any(len(row) != r for row in bichar):
        raise CocycleError("bicharacter matrix has the wrong shape")
    for i in range(r):
        for j in range(r):
            b = bichar[i][j] % M
            if b and i <= j:
                raise CocycleError("bicharacter support must be strictly lower triangular")
            if (b * gcd(st.factors[i], st.factors[j])) % M:
                raise CocycleError(f"entry ({i},{j}) is not well defined on C_{st.factors[i]} x C_{st.factors[j]}")
    N = st.factors
    vecs = st.vectors

    def fn(x, y):
        vx, vy = vecs[x], vecs[y]
        tot = 0
        for i in range(r):
            if cyclic_parts[i] and vx[i] + vy[i] >= N[i]:
                tot += cyclic_parts[i]
            row = bichar[i]
            for j in range(i):
                if row[j]:
                    tot += row[j] * vx[i] * vy[j]
        return tot

    return CocycleVector.from_function(G, M, fn)


def bicharacter_cocycle(G, M, form):
    """c(x, y) = sum_ij form[i][j] x_i y_j; must be well defined mod M."""
    st = G.abelian_structure
    if st is None:
        raise CocycleError("bicharacters need an abelian structure")
    r = len(st.factors)
    for i in range(r):
        for j in range(r):
            if (form[i][j] * st.factors[i]) % M or (form[i][j] * st.factors[j]) % M:
                raise CocycleError(f"form entry ({i},{j}) is not well defined")
    vecs = st.vectors
    return CocycleVector.from_function(
        G, M, lambda x, y: sum(form[i][j] * vecs[x][i] * vecs[y][j] for i in range(r) for j in range(r)))


def restrict(sigma, H_group, embedding):
    """Pull sigma back along the injective homomorphism ``embedding``."""
    t = sigma.table
    n = H_group.order
    return CocycleVector(H_group, sigma.modulus, [[t[embedding[a]][embedding[b]] for b in range(n)] for a in range(n)])


# ---------------------------------------------------------------------------
# direct products


class YamazakiDecomposition:
    """H^2_{g,h}(G1 x G2) -> H^2_{g,h}(G1) x H^2(G2) x P(G1/<g> x G2)."""

    def __init__(self, G1, G2, g, h, M, product_group=None):
        from .groups import direct_product, product_embeddings

        self.G1, self.G2, self.M = G1, G2, M
        self.G = product_group or direct_product(G1, G2)
        self.i1, self.i2 = product_embeddings(G1, G2)
        self.g, self.h = g, h
        self.big = CohomologyGroup(self.G, self.i1[g], self.i1[h], M)
        self.left = CohomologyGroup(G1, g, h, M)
        self.right = CohomologyGroup(G2, None, None, M)
        # pairings B: G1 x G2 -> Z/M with B(g, .) = 0, described by values on generators
        self.p1 = G1.generating_set()
        self.p2 = G2.generating_set()
        self._pairings = self._enumerate_pairings()
        self._pair_index = {self._pair_key(B): k for k, B in enumerate(self._pairings)}

    def _pair_key(self, B):
        return tuple(B[(a, b)] for a in self.p1 for b in self.p2)

    def _enumerate_pairings(self):
        G1, G2, M = self.G1, self.G2, self.M
        gens1, gens2 = self.p1, self.p2
        o1, o2 = G1.orders(), G2.orders()
        choices = []
        for a in gens1:
            for b in gens2:
                k = gcd(o1[a], o2[b])
                choices.append([(M // gcd(M, k)) * t % M for t in range(gcd(M, k))])
        out = []
        for vals in product(*choices):
            gv = dict(zip([(a, b) for a in gens1 for b in gens2], vals))
            B = self._extend_pairing(gv)
            if B is None:
                continue
            if any(B[(self.g, b)] for b in range(G2.order)):
                continue
            out.append(B)
        return out

    def _extend_pairing(self, gv):
        G1, G2, M = self.G1, self.G2, self.M

        def word_map(G, gens):
            w = {G.identity: {}}
            frontier = [G.identity]
            while frontier:
                new = []
                for x in frontier:
                    for s in gens:
                        y = G.cayley[x][s]
                        if y not in w:
                            d = dict(w[x])
                            d[s] = d.get(s, 0) + 1
                            w[y] = d
                            new.append(y)
                frontier = new
            return w

        w1, w2 = word_map(G1, self.p1), word_map(G2, self.p2)
        B = {}
        for a in range(G1.order):
            for b in range(G2.order):
                B[(a, b)] = sum(ka * kb * gv[(s, t)] for s, ka in w1[a].items() for t, kb in w2[b].items()) % M
        for a in range(G1.order):
            for a2 in range(G1.order):
                for b in range(G2.order):
                    if (B[(G1.cayley[a][a2], b)] - B[(a, b)] - B[(a2, b)]) % M:
                        return None
        for a in range(G1.order):
            for b in range(G2.order):
                for b2 in range(G2.order):
                    if (B[(a, G2.cayley[b][b2])] - B[(a, b)] - B[(a, b2)]) % M:
                        return None
        return B

    @property
    def pairing_order(self):
        return len(self._pairings)

    def forward(self, sigma):
        s1 = restrict(sigma, self.G1, self.i1)
        s2 = restrict(sigma, self.G2, self.i2)
        B = {(a, b): sigma.pairing(self.i1[a], self.i2[b]) for a in range(self.G1.order) for b in range(self.G2.order)}
        return (self.left.canonicalize(s1), self.right.canonicalize(s2), self._pair_index[self._pair_key(B)])

    def backward(self, c1, c2, k):
        s1 = self.left.representative(c1)
        s2 = self.right.representative(c2)
        B = self._pairings[k]
        n2 = self.G2.order
        G = self.G

        def fn(x, y):
            a1, a2 = divmod(x, n2)
            b1, b2 = divmod(y, n2)
            return s1(a1, b1) + s2(a2, b2) + B[(a1, b2)]

        sigma = CocycleVector.from_function(G, self.M, fn)
        return self.big.canonicalize(sigma)

    def factor_orders(self):
        return self.left.order, self.right.order, self.pairing_order


def yamazaki_decompose(G1, G2, g, h, M):
    return YamazakiDecomposition(G1, G2, g, h, M)
