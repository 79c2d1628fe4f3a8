"""Finite groups as Cayley tables, central elements, root-of-unity valued
characters and automorphism enumeration."""

from dataclasses import dataclass
from itertools import product
from math import gcd, lcm

from .cyclotomic import CyclotomicScalar
from .linalg import smith_decomposition

NONABELIAN_AUT_CAP = 24
ASSOCIATIVITY_CAP = 64


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class AbelianStructure:
    """Cyclic decomposition G = C_{N_1} x ... x C_{N_r}.

    ``generators[i]`` generates the i-th factor; ``vectors[x]`` is the
    exponent vector of element x and ``index`` inverts it.
    """

    factors: tuple
    generators: tuple
    vectors: tuple
    index: dict

    def vector(self, x):
        return self.vectors[x]

    def element(self, vec):
        return self.index[tuple(v % n for v, n in zip(vec, self.factors))]


class FiniteGroup:
    def __init__(self, cayley, identity=None, abelian_structure=None, name=None, check=True):
        self.cayley = [list(row) for row in cayley]
        self._orders = None
        self.order = len(self.cayley)
        n = self.order
        if n == 0:
            raise GroupError("empty group")
        for row in self.cayley:
            if len(row) != n or sorted(row) != list(range(n)):
                raise GroupError("Cayley table is not a Latin square")
        if identity is None:
            identity = next((e for e in range(n) if self.cayley[e] == list(range(n))), None)
            if identity is None:
                raise GroupError("no identity element")
        self.identity = identity
        if any(self.cayley[x][identity] != x or self.cayley[identity][x] != x for x in range(n)):
            raise GroupError("identity does not act neutrally")
        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if self.cayley[x][y] == identity:
                    inv[x] = y
                    break
            if inv[x] is None or self.cayley[inv[x]][x] != identity:
                raise GroupError(f"element {x} has no two-sided inverse")
        self.inverse = inv
        if check and n <= ASSOCIATIVITY_CAP:
            c = self.cayley
            for a in range(n):
                ca = c[a]
                for b in range(n):
                    cab = c[ca[b]]
                    cb = c[b]
                    for x in range(n):
                        if cab[x] != ca[cb[x]]:
                            raise GroupError(f"table is not associative at ({a},{b},{x})")
        self.is_abelian = all(self.cayley[a][b] == self.cayley[b][a] for a in range(n) for b in range(a))
        if abelian_structure is None and self.is_abelian:
            abelian_structure = _abelian_structure_from_table(self)
        self.abelian_structure = abelian_structure
        self.name = name

    def __len__(self):
        return self.order

    def __repr__(self):
        if self.name:
            return f"FiniteGroup({self.name})"
        return f"FiniteGroup(order={self.order})"

    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.cayley[a][b]

    def inv(self, a):
        return self.inverse[a]

    def power(self, a, k):
        if k < 0:
            a, k = self.inverse[a], -k
        result = self.identity
        base = a
        while k:
            if k & 1:
                result = self.cayley[result][base]
            base = self.cayley[base][base]
            k >>= 1
        return result

    def orders(self):
        if self._orders is None:
            self._orders = [element_order(self, x) for x in range(self.order)]
        return self._orders

    def exponent(self):
        e = 1
        for o in self.orders():
            e = lcm(e, o)
        return e

    def generated_subgroup(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = self.cayley[x][s]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return sorted(seen)

    def generating_set(self):
        """A small generating set: greedily add elements of largest order."""
        if self.abelian_structure is not None:
            return list(self.abelian_structure.generators)
        gens = []
        sub = {self.identity}
        orders = self.orders()
        for x in sorted(range(self.order), key=lambda e: (-orders[e], e)):
            if x not in sub:
                gens.append(x)
                sub = set(self.generated_subgroup(gens))
                if len(sub) == self.order:
                    break
        return gens

    def is_cyclic(self):
        return self.order in self.orders()


def element_order(G, e):
    t, x = 1, e
    while x != G.identity:
        x = G.cayley[x][e]
        t += 1
    return t


def is_central(G, e):
    row = G.cayley[e]
    return all(row[h] == G.cayley[h][e] for h in range(G.order))


def build_group(spec, name=None):
    """Build a group from ``{"cyclic_factors": [...]}``, ``{"cayley_table": ...}``,
    or directly from a list of cyclic orders."""
    if isinstance(spec, dict):
        if "cyclic_factors" in spec:
            return cyclic_product(spec["cyclic_factors"], name=name)
        if "cayley_table" in spec:
            return FiniteGroup(spec["cayley_table"], name=name)
        raise GroupError("group spec needs 'cyclic_factors' or 'cayley_table'")
    if spec and isinstance(spec[0], (list, tuple)):
        return FiniteGroup(spec, name=name)
    return cyclic_product(spec, name=name)


def cyclic_product(factors, name=None):
    factors = tuple(int(f) for f in factors)
    if any(f < 1 for f in factors):
        raise GroupError("cyclic factors must be positive")
    factors = tuple(f for f in factors if f > 1) or ()
    vecs = list(product(*[range(f) for f in factors])) if factors else [()]
    index = {v: i for i, v in enumerate(vecs)}
    table = [[index[tuple((a + b) % f for a, b, f in zip(u, v, factors))] for v in vecs] for u in vecs]
    gens = tuple(index[tuple(int(i == j) for j in range(len(factors)))] for i in range(len(factors)))
    st = AbelianStructure(factors, gens, tuple(vecs), index)
    label = name or ("C" + "xC".join(map(str, factors)) if factors else "C1")
    return FiniteGroup(table, identity=index[tuple(0 for _ in factors)], abelian_structure=st, name=label,
                       check=len(vecs) <= 16)


def cyclic_group(n):
    return cyclic_product([n])


def _abelian_structure_from_table(G):
    gens = []
    sub = {G.identity}
    orders = G.orders()
    for x in sorted(range(G.order), key=lambda e: (-orders[e], e)):
        if x not in sub:
            gens.append(x)
            sub = set(G.generated_subgroup(gens))
            if len(sub) == G.order:
                break
    k = len(gens)
    if k == 0:
        return AbelianStructure((), (), ((),) * 1, {(): G.identity})
    # BFS word coordinates, then the relation lattice
    vec = {G.identity: [0] * k}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for i, s in enumerate(gens):
                y = G.cayley[x][s]
                if y not in vec:
                    v = list(vec[x])
                    v[i] += 1
                    vec[y] = v
                    new.append(y)
        frontier = new
    rels = []
    for x in range(G.order):
        for i, s in enumerate(gens):
            y = G.cayley[x][s]
            r = [a - b for a, b in zip(vec[x], vec[y])]
            r[i] += 1
            if any(r):
                rels.append(r)
    res = smith_decomposition(rels)
    diag = res.diagonal + [0] * (k - len(res.diagonal))
    keep = [i for i in range(k) if diag[i] != 1]
    factors = tuple(diag[i] for i in keep)
    new_gens = []
    for i in keep:
        x = G.identity
        for j, s in enumerate(gens):
            x = G.cayley[x][G.power(s, res.Vinv[i][j])]
        new_gens.append(x)
    vectors = []
    for x in range(G.order):
        v = vec[x]
        w = [sum(v[j] * res.V[j][i] for j in range(k)) for i in range(k)]
        vectors.append(tuple(w[i] % diag[i] for i in keep))
    index = {v: x for x, v in enumerate(vectors)}
    assert len(index) == G.order, "abelian decomposition is not bijective"
    st = AbelianStructure(factors, tuple(new_gens), tuple(vectors), index)
    for x in range(G.order):
        for y in range(G.order):
            a, b = st.vectors[x], st.vectors[y]
            assert st.element([p + q for p, q in zip(a, b)]) == G.cayley[x][y]
    return st


def direct_product(G1, G2):
    n1, n2 = G1.order, G2.order
    table = [[G1.cayley[a // n2][b // n2] * n2 + G2.cayley[a % n2][b % n2] for b in range(n1 * n2)]
             for a in range(n1 * n2)]
    st = None
    if G1.abelian_structure is not None and G2.abelian_structure is not None:
        s1, s2 = G1.abelian_structure, G2.abelian_structure
        factors = s1.factors + s2.factors
        vectors = tuple(s1.vectors[x // n2] + s2.vectors[x % n2] for x in range(n1 * n2))
        index = {v: i for i, v in enumerate(vectors)}
        gens = tuple(g * n2 + G2.identity for g in s1.generators) + tuple(
            G1.identity * n2 + g for g in s2.generators)
        st = AbelianStructure(factors, gens, vectors, index)
    name = None
    if G1.name and G2.name:
        name = f"{G1.name}x{G2.name}"
    return FiniteGroup(table, identity=G1.identity * n2 + G2.identity, abelian_structure=st, name=name,
                       check=False)


def product_embeddings(G1, G2):
    """Index maps G1 -> G1xG2 and G2 -> G1xG2 for ``direct_product``."""
    n2 = G2.order
    return ([a * n2 + G2.identity for a in range(G1.order)],
            [G1.identity * n2 + b for b in range(G2.order)])


def symmetric_group(n):
    from itertools import permutations

    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, name=f"S{n}")


# ---------------------------------------------------------------------------
# characters


class Character:
    """h -> zeta_M^{exponents[h]}."""

    def __init__(self, group, modulus, exponents, check=True):
        self.group = group
        self.modulus = int(modulus)
        self.exponents = tuple(int(e) % self.modulus for e in exponents)
        if check:
            G = group
            if len(self.exponents) != G.order:
                raise GroupError("character needs one exponent per element")
            if self.exponents[G.identity] != 0:
                raise GroupError("character must send 1 to 1")
            for a in range(G.order):
                for b in range(G.order):
                    if (self.exponents[a] + self.exponents[b] - self.exponents[G.cayley[a][b]]) % self.modulus:
                        raise GroupError("exponents are not additive")

    @classmethod
    def from_generators(cls, group, modulus, values):
        st = group.abelian_structure
        if st is None:
            raise GroupError("generator values need an abelian structure")
        if len(values) != len(st.factors):
            raise GroupError("one value per cyclic factor expected")
        exps = [sum(v * e for v, e in zip(values, st.vectors[x])) for x in range(group.order)]
        return cls(group, modulus, exps)

    @classmethod
    def trivial(cls, group, modulus=1):
        return cls(group, modulus, [0] * group.order, check=False)

    def __call__(self, h):
        return self.exponents[h]

    def value(self, h, field_modulus=None):
        m = field_modulus or self.modulus
        return CyclotomicScalar.root_of_unity(m, self.exponents[h] * (m // self.modulus))

    def lift(self, modulus):
        if modulus % self.modulus:
            raise GroupError(f"cannot lift a mu_{self.modulus} character to mu_{modulus}")
        s = modulus // self.modulus
        return Character(self.group, modulus, [e * s for e in self.exponents], check=False)

    def reduced(self):
        """The same character over the smallest modulus: mu_{o(chi)}."""
        m = self.order()
        s = self.modulus // m
        return Character(self.group, m, [e // s for e in self.exponents], check=False)

    def order(self):
        g = self.modulus
        for e in self.exponents:
            g = gcd(g, e)
        return self.modulus // g

    def value_order(self, h):
        e = self.exponents[h]
        return self.modulus // gcd(self.modulus, e)

    def __mul__(self, other):
        m = lcm(self.modulus, other.modulus)
        a, b = self.lift(m), other.lift(m)
        return Character(self.group, m, [x + y for x, y in zip(a.exponents, b.exponents)], check=False)

    def __pow__(self, k):
        return Character(self.group, self.modulus, [k * e for e in self.exponents], check=False)

    def compose(self, u):
        """chi o u."""
        return Character(self.group, self.modulus, [self.exponents[u.perm[h]] for h in range(self.group.order)],
                         check=False)

    def is_trivial(self):
        return not any(self.exponents)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        m = lcm(self.modulus, other.modulus)
        return self.group is other.group and self.lift(m).exponents == other.lift(m).exponents

    def __hash__(self):
        r = self.reduced()
        return hash((r.modulus, r.exponents))

    def __repr__(self):
        return f"Character(mod {self.modulus}, {list(self.exponents)})"


# ---------------------------------------------------------------------------
# automorphisms


class GroupAutomorphism:
    __slots__ = ("group", "perm")

    def __init__(self, group, perm, check=True):
        self.group = group
        self.perm = tuple(perm)
        if check:
            G = group
            if sorted(self.perm) != list(range(G.order)):
                raise GroupError("automorphism must be a bijection")
            if self.perm[G.identity] != G.identity:
                raise GroupError("automorphism must fix 1")
            for a in range(G.order):
                for b in range(G.order):
                    if self.perm[G.cayley[a][b]] != G.cayley[self.perm[a]][self.perm[b]]:
                        raise GroupError("map is not multiplicative")

    def __call__(self, h):
        return self.perm[h]

    def compose(self, other):
        """(self o other)(h) = self(other(h))."""
        return GroupAutomorphism(self.group, [self.perm[other.perm[h]] for h in range(self.group.order)],
                                 check=False)

    def inverse(self):
        inv = [0] * len(self.perm)
        for h, x in enumerate(self.perm):
            inv[x] = h
        return GroupAutomorphism(self.group, inv, check=False)

    def is_identity(self):
        return all(x == h for h, x in enumerate(self.perm))

    @classmethod
    def identity(cls, group):
        return cls(group, range(group.order), check=False)

    def __eq__(self, other):
        return isinstance(other, GroupAutomorphism) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)

    def __repr__(self):
        return f"GroupAutomorphism({list(self.perm)})"


def _extend_hom(G, H, gens, images):
    """The homomorphism G -> H sending gens to images, or None."""
    phi = {G.identity: H.identity}
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            px = phi[x]
            for s, t in zip(gens, images):
                y = G.cayley[x][s]
                py = H.cayley[px][t]
                if y in phi:
                    if phi[y] != py:
                        return None
                else:
                    phi[y] = py
                    new.append(y)
        frontier = new
    if len(phi) != G.order:
        return None
    # BFS consistency only checks generator steps; verify fully
    for a in range(G.order):
        pa = phi[a]
        for b in range(G.order):
            if phi[G.cayley[a][b]] != H.cayley[pa][phi[b]]:
                return None
    return [phi[x] for x in range(G.order)]


def isomorphisms(G1, G2, fixed=(), cap=None, first_only=False):
    """All isomorphisms G1 -> G2 (as image lists) sending each (a, b) in
    ``fixed`` to b, by backtracking over generator images."""
    if G1.order != G2.order:
        return []
    if cap is not None and G1.order > cap:
        raise GroupError(f"group order {G1.order} exceeds the isomorphism search cap {cap}")
    if sorted(G1.orders()) != sorted(G2.orders()):
        return []
    gens = G1.generating_set()
    o1, o2 = G1.orders(), G2.orders()
    cands = [[y for y in range(G2.order) if o2[y] == o1[s]] for s in gens]
    fixed = list(fixed)
    out = []
    for imgs in product(*cands):
        phi = _extend_hom(G1, G2, gens, imgs)
        if phi is None or len(set(phi)) != G2.order:
            continue
        if any(phi[a] != b for a, b in fixed):
            continue
        out.append(phi)
        if first_only:
            break
    return out


def _abelian_automorphisms(G, g=None):
    st = G.abelian_structure
    N = st.factors
    r = len(N)
    # entry (i, j): coefficient of factor i in u(e_j), in (N_i/gcd(N_i,N_j)) Z / N_i
    choices = []
    for i in range(r):
        for j in range(r):
            step = N[i] // gcd(N[i], N[j])
            choices.append([step * k for k in range(gcd(N[i], N[j]))])
    gvec = st.vectors[g] if g is not None else None
    out = []
    for entries in product(*choices):
        m = [entries[i * r:(i + 1) * r] for i in range(r)]
        if gvec is not None:
            img = tuple(sum(m[i][j] * gvec[j] for j in range(r)) % N[i] for i in range(r))
            if img != gvec:
                continue
        perm = []
        seen = set()
        ok = True
        for x in range(G.order):
            v = st.vectors[x]
            w = tuple(sum(m[i][j] * v[j] for j in range(r)) % N[i] for i in range(r))
            y = st.index[w]
            if y in seen:
                ok = False
                break
            seen.add(y)
            perm.append(y)
        if ok:
            out.append(perm)
    return out


def automorphisms_fixing(G, g=None, chi=None, cap=NONABELIAN_AUT_CAP):
    """Automorphisms u with u(g) = g and, if given, chi o u = chi."""
    if g is not None and not is_central(G, g):
        raise GroupError("g must be central")
    if G.abelian_structure is not None:
        perms = _abelian_automorphisms(G, g)
    else:
        if G.order > cap:
            raise GroupError(f"nonabelian automorphism search capped at |G| <= {cap}")
        perms = isomorphisms(G, G, fixed=[(g, g)] if g is not None else ())
    out = []
    for p in perms:
        if chi is not None and any((chi.exponents[p[h]] - chi.exponents[h]) % chi.modulus for h in range(G.order)):
            continue
        out.append(GroupAutomorphism(G, p, check=False))
    out.sort(key=lambda u: u.perm)
    return out


def brute_force_automorphism_count(G):
    """Count automorphisms by generator-image backtracking (independent of
    the matrix parameterization used for abelian groups)."""
    return len(isomorphisms(G, G))
