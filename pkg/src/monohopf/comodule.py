"""Structure constants for A(G), A_{sigma,a}(G) and A_{sigma,a,psi}(G).

All of these are spanned by the normal words T_h X^i (h in G, 0 <= i < d)
and differ only in the data (sigma, chi, psi, X^d).  MonomialAlgebra
multiplies normal words by rewriting: a left factor T_h X^i acts on a
normal word through i applications of "X times" followed by "T_h times",
using

    X T_h = chi(h) T_h X + psi(h) T_{gh},   X^d = sum_m c_m T_m,
    T_a T_b = sigma(a, b) T_{ab}.

For A(G) itself T_h is the grouplike h, sigma = 0 and X^d = mu(1 - g^d).

When the relations are not confluent this product is only the product of
one reduction strategy; ``presented_dimension`` computes the true
dimension of the presented algebra, and every verification starts there.
"""

from dataclasses import dataclass, field
from math import lcm

from .cyclotomic import CyclotomicScalar, sparse_rank

GALOIS_DIM_CAP = 16


class AlgebraError(ValueError):
    pass


def _add_into(target, src, coeff=None):
    for k, v in src.items():
        if coeff is not None:
            v = v * coeff
        cur = target.get(k)
        nv = v if cur is None else cur + v
        if nv.is_zero():
            target.pop(k, None)
        else:
            target[k] = nv
    return target


def _clean(elem):
    return {k: v for k, v in elem.items() if not v.is_zero()}


class MonomialAlgebra:
    """The algebra with basis T_h X^i and the rewriting product above."""

    def __init__(self, G, g, chi, d, sigma, xd, psi=None, field_modulus=None, label="T"):
        self.G, self.g, self.chi, self.d = G, g, chi, d
        L = field_modulus or lcm(chi.modulus, sigma.modulus if sigma is not None else 1)
        for c in xd.values():
            L = lcm(L, c.modulus)
        if psi is not None:
            for p in psi:
                L = lcm(L, p.modulus)
        self.L = L
        n = G.order
        self.dim = n * d
        self.label = label
        self.sigma = sigma
        if sigma is None:
            one = CyclotomicScalar.one(L)
            self.sval = [[one] * n for _ in range(n)]
        else:
            self.sval = [[sigma.value(a, b, L) for b in range(n)] for a in range(n)]
        self.chival = [chi.value(h, L) for h in range(n)]
        self.xd = {m: c.lift(L) for m, c in xd.items() if not c.is_zero()}
        self.psi = None if psi is None else [p.lift(L) for p in psi]
        self._cache = {}
        self._one = CyclotomicScalar.one(L)
        self._zero = CyclotomicScalar.zero(L)

    # basis bookkeeping

    def index(self, h, i):
        return h * self.d + i

    def word(self, k):
        return divmod(k, self.d)

    def basis_label(self, k):
        h, i = self.word(k)
        return f"{self.label}{h}X^{i}"

    def one(self):
        return {self.index(self.G.identity, 0): self._one}

    def T(self, h):
        return {self.index(h, 0): self._one}

    def X(self):
        if self.d == 1:
            raise AlgebraError("X is not a basis word when d = 1")
        return {self.index(self.G.identity, 1): self._one}

    def scalar(self, c):
        if isinstance(c, CyclotomicScalar):
            return c.lift(lcm(self.L, c.modulus)) if self.L % c.modulus else c.lift(self.L)
        return CyclotomicScalar.from_rational(self.L, c)

    # rewriting

    def _left_T(self, k, elem):
        out = {}
        mul = self.G.cayley
        for idx, c in elem.items():
            h, i = self.word(idx)
            key = self.index(mul[k][h], i)
            _add_into(out, {key: c * self.sval[k][h]})
        return out

    def _left_X(self, elem):
        out = {}
        mul = self.G.cayley
        g, d = self.g, self.d
        for idx, c in elem.items():
            h, i = self.word(idx)
            # X T_h X^i = chi(h) T_h X^{i+1} + psi(h) T_{gh} X^i
            a = c * self.chival[h]
            if i + 1 < d:
                _add_into(out, {self.index(h, i + 1): a})
            else:
                for m, cm in self.xd.items():
                    _add_into(out, {self.index(mul[h][m], 0): a * cm * self.sval[h][m]})
            if self.psi is not None and not self.psi[h].is_zero():
                _add_into(out, {self.index(mul[g][h], i): c * self.psi[h]})
        return out

    def mul_basis(self, p, q):
        key = (p, q)
        res = self._cache.get(key)
        if res is not None:
            return res
        h, i = self.word(p)
        elem = {q: self._one}
        for _ in range(i):
            elem = self._left_X(elem)
        res = self._left_T(h, elem)
        self._cache[key] = res
        return res

    def mul(self, u, v):
        out = {}
        for p, a in u.items():
            for q, b in v.items():
                _add_into(out, self.mul_basis(p, q), a * b)
        return out

    def power(self, u, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def add(self, u, v):
        return _add_into(dict(u), v)

    def scale(self, u, c):
        return _clean({k: x * c for k, x in u.items()})

    def word_element(self, h, i):
        """T_h X^i computed as a product (equals the basis word)."""
        return self.mul(self.T(h), self.power(self.X(), i)) if i else self.T(h)

    def structure_constants(self):
        """JSON-friendly multiplication table."""
        out = {}
        for p in range(self.dim):
            for q in range(self.dim):
                r = self.mul_basis(p, q)
                if r:
                    out[f"{p},{q}"] = {str(k): v.to_json() for k, v in sorted(r.items())}
        return out


class TensorAlgebra:
    """A (x) B with componentwise product; elements are dicts (p, q) -> scalar."""

    def __init__(self, A, B):
        self.A, self.B = A, B

    def mul(self, u, v):
        out = {}
        A, B = self.A, self.B
        for (p1, q1), a in u.items():
            for (p2, q2), b in v.items():
                ab = a * b
                left = A.mul_basis(p1, p2)
                right = B.mul_basis(q1, q2)
                for k1, c1 in left.items():
                    for k2, c2 in right.items():
                        _add_into(out, {(k1, k2): ab * c1 * c2})
        return out

    def one(self):
        return {(p, q): a * b for p, a in self.A.one().items() for q, b in self.B.one().items()}

    def pure(self, u, v):
        return _clean({(p, q): a * b for p, a in u.items() for q, b in v.items()})

    def power(self, u, k):
        out = self.one()
        for _ in range(k):
            out = self.mul(out, u)
        return out


# ---------------------------------------------------------------------------
# Hopf algebra A(G)


@dataclass
class HopfAlgebraRep:
    datum: object
    algebra: MonomialAlgebra
    coproduct: dict = field(default_factory=dict)
    counit: list = field(default_factory=list)
    antipode: dict = field(default_factory=dict)

    @property
    def dim(self):
        return self.algebra.dim

    def grouplike(self, h):
        return self.algebra.T(h)

    def x(self):
        return self.algebra.X()


def hopf_algebra_presentation(D, field_modulus=None):
    G = D.G
    L = D.field_modulus(D.default_modulus()) if field_modulus is None else field_modulus
    L = lcm(L, D.mu.modulus, D.chi.modulus)
    mu = D.mu.lift(L) if not D.mu.is_zero() else CyclotomicScalar.zero(L)
    xd = {}
    if not mu.is_zero():
        xd[G.identity] = mu
        xd[D.g_d] = -mu if D.g_d != G.identity else CyclotomicScalar.zero(L)
        if D.g_d == G.identity:
            xd = {}
    return MonomialAlgebra(G, D.g, D.chi, D.d, None, xd, field_modulus=L, label="h")


def build_hopf_algebra(D, field_modulus=None, lazy=False):
    """A(G) with coproduct, counit and antipode on the basis h x^i."""
    A = hopf_algebra_presentation(D, field_modulus)
    H = HopfAlgebraRep(D, A)
    if lazy:
        return H
    G = D.G
    TT = TensorAlgebra(A, A)
    one = A._one
    e = G.identity
    dx = {}
    if D.d > 1:
        x = A.index(e, 1)
        dx = {(A.index(e, 0), x): one, (x, A.index(D.g, 0)): one}
    xinv_g = A.mul(A.X(), A.T(G.inverse[D.g])) if D.d > 1 else {}
    Sx = A.scale(xinv_g, -one)
    for h in range(G.order):
        hh = {(A.index(h, 0), A.index(h, 0)): one}
        cur = hh
        cur_s = A.T(G.inverse[h])
        sx_pow = A.one()
        for i in range(D.d):
            k = A.index(h, i)
            H.coproduct[k] = cur
            H.counit.append(None)
            H.antipode[k] = A.mul(sx_pow, cur_s)
            if i + 1 < D.d:
                cur = TT.mul(cur, dx)
                sx_pow = A.mul(sx_pow, Sx)
    H.counit = [one if A.word(k)[1] == 0 else A._zero for k in range(A.dim)]
    return H


def _tensor_apply_left(F, t):
    """(F (x) id)(t) where F maps basis index -> element."""
    out = {}
    for (p, q), c in t.items():
        for k, v in F(p).items():
            _add_into(out, {(k, q): c * v})
    return out


def verify_hopf_axioms(H, checks=None):
    """Exact bialgebra and antipode identities on all basis elements."""
    A = H.algebra
    n = A.dim
    TT = TensorAlgebra(A, A)
    report = {}
    basis = range(n)

    def delta(k):
        return H.coproduct[k]

    def delta_elem(u):
        out = {}
        for k, c in u.items():
            _add_into(out, delta(k), c)
        return out

    ok = True
    for a in basis:
        for b in basis:
            ab = A.mul_basis(a, b)
            for c in basis:
                if A.mul(ab, {c: A._one}) != A.mul({a: A._one}, A.mul_basis(b, c)):
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    report["associativity"] = ok
    one = A.one()
    report["unit"] = all(A.mul(one, {a: A._one}) == {a: A._one} == A.mul({a: A._one}, one) for a in basis)

    ok = True
    for k in basis:
        dk = delta(k)
        left = {}
        for (p, q), c in dk.items():
            for (p1, p2), c1 in delta(p).items():
                _add_into(left, {(p1, p2, q): c * c1})
        right = {}
        for (p, q), c in dk.items():
            for (q1, q2), c2 in delta(q).items():
                _add_into(right, {(p, q1, q2): c * c2})
        if left != right:
            ok = False
            break
    report["coassociativity"] = ok

    ok = True
    for k in basis:
        l, r = {}, {}
        for (p, q), c in delta(k).items():
            if not H.counit[p].is_zero():
                _add_into(l, {q: c * H.counit[p]})
            if not H.counit[q].is_zero():
                _add_into(r, {p: c * H.counit[q]})
        if l != {k: A._one} or r != {k: A._one}:
            ok = False
            break
    report["counit"] = ok

    ok = True
    for a in basis:
        for b in basis:
            lhs = delta_elem(A.mul_basis(a, b))
            rhs = TT.mul(delta(a), delta(b))
            if lhs != rhs:
                ok = False
                break
        if not ok:
            break
    report["coproduct_multiplicative"] = ok

    ok = True
    for a in basis:
        for b in basis:
            ab = A.mul_basis(a, b)
            val = A._zero
            for k, c in ab.items():
                val = val + c * H.counit[k]
            if val != H.counit[a] * H.counit[b]:
                ok = False
                break
        if not ok:
            break
    report["counit_multiplicative"] = ok

    ok = True
    for k in basis:
        target = A.scale(one, H.counit[k]) if not H.counit[k].is_zero() else {}
        l, r = {}, {}
        for (p, q), c in delta(k).items():
            _add_into(l, A.mul(H.antipode[p], {q: A._one}), c)
            _add_into(r, A.mul({p: A._one}, H.antipode[q]), c)
        if l != target or r != target:
            ok = False
            break
    report["antipode"] = ok
    report["all"] = all(report.values())
    return report


# ---------------------------------------------------------------------------
# comodule algebras A_{sigma,a,psi}


@dataclass
class ComoduleAlgebra:
    datum: object
    algebra: MonomialAlgebra
    sigma: object
    a: CyclotomicScalar
    psi: list = None
    hopf: HopfAlgebraRep = None
    left_hopf: HopfAlgebraRep = None
    left_u: object = None
    _right: dict = field(default_factory=dict, repr=False)
    _left: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self):
        return self.algebra.dim

    def right_coaction(self, k):
        """alpha(T_h X^i) = (T_h (x) h)(1 (x) x + X (x) g)^i in Z (x) A(G)."""
        res = self._right.get(k)
        if res is not None:
            return res
        Z, H = self.algebra, self.hopf.algebra
        TT = TensorAlgebra(Z, H)
        h, i = Z.word(k)
        one = Z._one
        e = Z.G.identity
        cur = {(Z.index(h, 0), H.index(h, 0)): one}
        if i:
            ax = {(Z.index(e, 0), H.index(e, 1)): one, (Z.index(e, 1), H.index(Z.g, 0)): one}
            for _ in range(i):
                cur = TT.mul(cur, ax)
        self._right[k] = cur
        return cur

    def left_coaction(self, k):
        """beta(T_h X^i) = (u(h) (x) T_h)(1 (x) X + x (x) T_g)^i in A(G') (x) Z."""
        if self.left_hopf is None:
            raise AlgebraError("no left coaction attached")
        res = self._left.get(k)
        if res is not None:
            return res
        Z, H = self.algebra, self.left_hopf.algebra
        TT = TensorAlgebra(H, Z)
        h, i = Z.word(k)
        one = Z._one
        e = Z.G.identity
        u = self.left_u
        uh = u.perm[h] if u is not None else h
        cur = {(H.index(uh, 0), Z.index(h, 0)): one}
        if i:
            bx = {(H.index(e, 0), Z.index(e, 1)): one, (H.index(e, 1), Z.index(Z.g, 0)): one}
            for _ in range(i):
                cur = TT.mul(cur, bx)
        self._left[k] = cur
        return cur


def build_comodule_algebra(D, sigma, a, psi=None, hopf=None, field_modulus=None):
    """A_{sigma,a,psi}(G) with its right A(G)-coaction.

    For a datum with mu != 0 the relation becomes X^d = mu + a T_{g^d};
    A(G) itself is then the object with sigma = 1 and a = -mu."""
    G = D.G
    a = a if isinstance(a, CyclotomicScalar) else CyclotomicScalar.from_rational(1, a)
    L = lcm(field_modulus or D.field_modulus(sigma.modulus), sigma.modulus, a.modulus)
    if psi is not None:
        for p in psi:
            L = lcm(L, p.modulus)
    if hopf is None:
        hopf = build_hopf_algebra(D, field_modulus=L)
    L = lcm(L, hopf.algebra.L)
    xd = {}
    if D.has_mu:
        xd[G.identity] = D.mu.lift(lcm(L, D.mu.modulus))
    if not a.is_zero():
        xd[D.g_d] = a.lift(L)
    Z = MonomialAlgebra(G, D.g, D.chi, D.d, sigma, xd, psi=psi, field_modulus=L)
    return ComoduleAlgebra(D, Z, sigma, a, psi, hopf)


# ---------------------------------------------------------------------------
# rewriting system and the diamond lemma


class RewritingSystem:
    """Words are tuples of 'X' and group elements (standing for T_h)."""

    def __init__(self, Z):
        self.Z = Z
        self.G = Z.G
        self.e = Z.G.identity

    def _rule_at(self, w, p):
        """Which rule applies with its left-hand side starting at p, or None."""
        Z = self.Z
        s = w[p]
        if s != "X":
            if s == self.e:
                return "unit"
            if p + 1 < len(w) and w[p + 1] != "X":
                return "TT"
            return None
        if p + 1 < len(w) and w[p + 1] != "X":
            return "XT"
        if p + Z.d <= len(w) and all(c == "X" for c in w[p:p + Z.d]):
            return "Xd"
        return None

    def apply(self, w, p, rule):
        Z = self.Z
        one = Z._one
        mul = self.G.cayley
        pre, post = w[:p], None
        if rule == "unit":
            return {pre + w[p + 1:]: one}
        if rule == "TT":
            a, b = w[p], w[p + 1]
            return {pre + (mul[a][b],) + w[p + 2:]: Z.sval[a][b]}
        if rule == "XT":
            h = w[p + 1]
            post = w[p + 2:]
            out = {pre + (h, "X") + post: Z.chival[h]}
            if Z.psi is not None and not Z.psi[h].is_zero():
                _add_into(out, {pre + (mul[Z.g][h],) + post: Z.psi[h]})
            return out
        if rule == "Xd":
            post = w[p + Z.d:]
            out = {}
            for m, c in Z.xd.items():
                _add_into(out, {pre + (m,) + post: c})
            return out
        raise AlgebraError(rule)

    def reduce(self, combo):
        """Leftmost reduction to normal words."""
        out = {}
        todo = dict(combo)
        while todo:
            w, c = todo.popitem()
            for p in range(len(w)):
                rule = self._rule_at(w, p)
                if rule is not None:
                    _add_into(todo, self.apply(w, p, rule), c)
                    break
            else:
                _add_into(out, {w: c})
        return out

    def to_basis(self, combo):
        Z = self.Z
        out = {}
        for w, c in combo.items():
            if w and w[0] != "X":
                h, rest = w[0], w[1:]
            else:
                h, rest = self.e, w
            assert all(s == "X" for s in rest) and len(rest) < Z.d, w
            _add_into(out, {Z.index(h, len(rest)): c})
        return out

    def ambiguities(self):
        """(word, pos1, rule1, pos2, rule2) for every overlap and inclusion."""
        G, Z, e = self.G, self.Z, self.e
        els = range(G.order)
        out = []
        for a in els:
            for b in els:
                for c in els:
                    if e in (a, b, c):
                        continue
                    out.append(((a, b, c), 0, "TT", 1, "TT"))
        for a in els:
            for b in els:
                if e in (a, b):
                    continue
                out.append((("X", a, b), 0, "XT", 1, "TT"))
        d = Z.d
        for h in els:
            if h == e:
                continue
            out.append((("X",) * d + (h,), 0, "Xd", d - 1, "XT"))
        for k in range(1, d):
            out.append((("X",) * (d + k), 0, "Xd", k, "Xd"))
        for b in els:
            out.append(((e, b), 0, "unit", 0, "TT"))
            out.append(((b, e), 1, "unit", 0, "TT"))
            out.append((("X", e), 1, "unit", 0, "XT"))
        return out


def confluence_check(Z_or_cm):
    """Resolve every ambiguity two ways; returns (confluent, report)."""
    Z = Z_or_cm.algebra if isinstance(Z_or_cm, ComoduleAlgebra) else Z_or_cm
    rs = RewritingSystem(Z)
    failures = []
    discrepancies = []
    count = 0
    table = Z.sigma.table if Z.sigma is not None else None
    mul = Z.G.cayley
    for w, p1, r1, p2, r2 in rs.ambiguities():
        count += 1
        if r1 == r2 == "TT":
            # T_a T_b T_c: both sides are multiples of T_abc, so compare the
            # cocycle exponents and only fall back to scalars on a mismatch
            a, b, c = w
            if table is None or (table[a][b] + table[mul[a][b]][c] - table[b][c] - table[a][mul[b][c]]) \
                    % Z.sigma.modulus == 0:
                continue
        left = rs.to_basis(rs.reduce(rs.apply(w, p1, r1)))
        right = rs.to_basis(rs.reduce(rs.apply(w, p2, r2)))
        diff = _add_into(dict(left), {k: -v for k, v in right.items()})
        if diff:
            failures.append({"word": [str(s) for s in w], "rules": [r1, r2]})
            discrepancies.append(diff)
    return len(failures) == 0, {"ambiguities": count, "failures": failures, "_discrepancies": discrepancies}


def presented_dimension(Z_or_cm, discrepancies=None):
    """dim of the algebra presented by the relations: |G| d minus the
    dimension of the ideal generated by the ambiguity discrepancies."""
    Z = Z_or_cm.algebra if isinstance(Z_or_cm, ComoduleAlgebra) else Z_or_cm
    if discrepancies is None:
        _, rep = confluence_check(Z)
        discrepancies = rep["_discrepancies"]
    if not discrepancies:
        return Z.dim
    from .cyclotomic import SparseEchelon

    ech = SparseEchelon()
    queue = []
    for v in discrepancies:
        if ech.add(dict(v)):
            queue.append(v)
    gens = [Z.T(h) for h in range(Z.G.order)]
    if Z.d > 1:
        gens.append(Z.X())
    while queue:
        v = queue.pop()
        for s in gens:
            for w in (Z.mul(s, v), Z.mul(v, s)):
                if w and ech.add(dict(w)):
                    queue.append(w)
        if ech.rank == Z.dim:
            break
    return Z.dim - ech.rank


def condition_2_1(D, sigma, a):
    """a sigma(g^d, h) = a chi(h)^d sigma(h, g^d) for all h."""
    a = a if isinstance(a, CyclotomicScalar) else CyclotomicScalar.from_rational(1, a)
    if a.is_zero():
        return True
    L = lcm(sigma.modulus, D.chi.modulus)
    gd = D.g_d
    for h in range(D.G.order):
        lhs = sigma(gd, h) * (L // sigma.modulus)
        rhs = D.d * D.chi.exponents[h] * (L // D.chi.modulus) + sigma(h, gd) * (L // sigma.modulus)
        if (lhs - rhs) % L:
            return False
    return True


def kappa_r_columns(cm):
    Z = cm.algebra
    H = cm.hopf.algebra
    n = Z.dim
    cols = []
    for p in range(n):
        for q in range(n):
            col = {}
            for (z, hh), c in cm.right_coaction(q).items():
                for k, v in Z.mul_basis(p, z).items():
                    key = k * H.dim + hh
                    _add_into(col, {key: c * v})
            cols.append(col)
    return cols


def kappa_l_columns(cm):
    Z = cm.algebra
    H = cm.left_hopf.algebra
    n = Z.dim
    cols = []
    for p in range(n):
        beta = cm.left_coaction(p)
        for q in range(n):
            col = {}
            for (hh, z), c in beta.items():
                for k, v in Z.mul_basis(z, q).items():
                    key = hh * Z.dim + k
                    _add_into(col, {key: c * v})
            cols.append(col)
    return cols


def verify_galois_right(cm, cap=GALOIS_DIM_CAP):
    """(is_galois, report).  Dimension of the presented algebra first, then
    exact invertibility of kappa_r."""
    Z = cm.algebra
    H = cm.hopf
    report = {"dim_H": H.dim}
    pdim = presented_dimension(Z)
    report["presented_dim"] = pdim
    if pdim != H.dim:
        report["reason"] = "dimension of the presented algebra differs from dim A(G)"
        return False, report
    if Z.dim > cap:
        report["reason"] = f"kappa_r rank skipped: dimension {Z.dim} exceeds cap {cap}"
        report["kappa_checked"] = False
        return True, report
    rank = sparse_rank(kappa_r_columns(cm))
    report["kappa_rank"] = rank
    report["kappa_checked"] = True
    ok = rank == Z.dim * H.dim
    if not ok:
        report["reason"] = "kappa_r is not bijective"
    return ok, report


def verify_galois_left(cm, cap=GALOIS_DIM_CAP):
    Z = cm.algebra
    report = {}
    if Z.dim > cap:
        report["reason"] = f"kappa_l rank skipped: dimension {Z.dim} exceeds cap {cap}"
        return True, report
    rank = sparse_rank(kappa_l_columns(cm))
    report["kappa_rank"] = rank
    return rank == Z.dim * cm.left_hopf.dim, report


def check_right_coaction(cm):
    """alpha is an algebra map, coassociative and counital."""
    Z, H = cm.algebra, cm.hopf
    TT = TensorAlgebra(Z, H.algebra)
    res = {}
    ok = True
    for p in range(Z.dim):
        for q in range(Z.dim):
            lhs = {}
            for k, c in Z.mul_basis(p, q).items():
                _add_into(lhs, cm.right_coaction(k), c)
            if lhs != TT.mul(cm.right_coaction(p), cm.right_coaction(q)):
                ok = False
                break
        if not ok:
            break
    res["algebra_map"] = ok
    ok = True
    for k in range(Z.dim):
        a = cm.right_coaction(k)
        left, right = {}, {}
        for (z, h), c in a.items():
            for (z1, h1), c1 in cm.right_coaction(z).items():
                _add_into(left, {(z1, h1, h): c * c1})
            for (h1, h2), c2 in H.coproduct[h].items():
                _add_into(right, {(z, h1, h2): c * c2})
        if left != right:
            ok = False
            break
        counit = {}
        for (z, h), c in a.items():
            if not H.counit[h].is_zero():
                _add_into(counit, {z: c * H.counit[h]})
        if counit != {k: Z._one}:
            ok = False
            break
    res["coassociative_counital"] = ok
    return res


def check_bicomodule(cm):
    """(beta (x) id) alpha = (id (x) alpha) beta on every basis element."""
    Z = cm.algebra
    for k in range(Z.dim):
        left, right = {}, {}
        for (z, h), c in cm.right_coaction(k).items():
            for (hl, z2), c2 in cm.left_coaction(z).items():
                _add_into(left, {(hl, z2, h): c * c2})
        for (hl, z), c in cm.left_coaction(k).items():
            for (z2, h), c2 in cm.right_coaction(z).items():
                _add_into(right, {(hl, z2, h): c * c2})
        if left != right:
            return False
    return True


def check_left_coaction(cm):
    Z, H = cm.algebra, cm.left_hopf
    TT = TensorAlgebra(H.algebra, Z)
    for p in range(Z.dim):
        for q in range(Z.dim):
            lhs = {}
            for k, c in Z.mul_basis(p, q).items():
                _add_into(lhs, cm.left_coaction(k), c)
            if lhs != TT.mul(cm.left_coaction(p), cm.left_coaction(q)):
                return False
    for k in range(Z.dim):
        b = cm.left_coaction(k)
        left, right = {}, {}
        for (h, z), c in b.items():
            for (h1, h2), c1 in H.coproduct[h].items():
                _add_into(left, {(h1, h2, z): c * c1})
            for (h2, z2), c2 in cm.left_coaction(z).items():
                _add_into(right, {(h, h2, z2): c * c2})
        if left != right:
            return False
    return True


# ---------------------------------------------------------------------------
# algebra maps between objects on the same basis


class LinearMap:
    """A linear map Z1 -> Z2 given on basis indices."""

    def __init__(self, src, dst, images):
        self.src, self.dst = src, dst
        self.images = images

    def __call__(self, u):
        out = {}
        for k, c in u.items():
            _add_into(out, self.images[k], c)
        return out

    @classmethod
    def from_generators(cls, src, dst, x_image, t_images):
        """Extend T_h -> t_images[h], X -> x_image multiplicatively on T_h X^i."""
        images = {}
        for h in range(src.G.order):
            cur = t_images[h]
            for i in range(src.d):
                images[src.index(h, i)] = cur
                if i + 1 < src.d:
                    cur = dst.mul(cur, x_image)
        return cls(src, dst, images)

    def is_multiplicative(self):
        S, T = self.src, self.dst
        for p in range(S.dim):
            for q in range(S.dim):
                if self(S.mul_basis(p, q)) != T.mul(self.images[p], self.images[q]):
                    return False
        return self(S.one()) == T.one()

    def is_bijective(self):
        return sparse_rank([self.images[k] for k in range(self.src.dim)]) == self.dst.dim == self.src.dim


def is_colinear(f, cm1, cm2):
    """alpha2 o f = (f (x) id) o alpha1 on basis elements."""
    for k in range(cm1.dim):
        lhs = {}
        for z, c in f.images[k].items():
            _add_into(lhs, cm2.right_coaction(z), c)
        rhs = {}
        for (z, h), c in cm1.right_coaction(k).items():
            for z2, c2 in f.images[z].items():
                _add_into(rhs, {(z2, h): c * c2})
        if lhs != rhs:
            return False
    return True


def is_left_colinear(f, cm1, cm2):
    for k in range(cm1.dim):
        lhs = {}
        for z, c in f.images[k].items():
            _add_into(lhs, cm2.left_coaction(z), c)
        rhs = {}
        for (h, z), c in cm1.left_coaction(k).items():
            for z2, c2 in f.images[z].items():
                _add_into(rhs, {(h, z2): c * c2})
        if lhs != rhs:
            return False
    return True


def phi_map(cm):
    """The colinear map h x^i -> T_h X^i from A(G) to the object."""
    H = cm.hopf.algebra
    Z = cm.algebra
    return {k: {k: Z._one} for k in range(H.dim)}


def phi_intertwines(cm):
    """Phi_{sigma,a}: alpha o Phi = (Phi (x) id) o Delta."""
    H = cm.hopf
    for k in range(cm.dim):
        rhs = {(p, q): c for (p, q), c in H.coproduct[k].items()}
        if cm.right_coaction(k) != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# conditions on psi, the product identity and the normalization


def _scal(D, L):
    return lambda e: CyclotomicScalar.root_of_unity(L, e)


def psi_conditions(D, sigma, a, psi):
    """Report on the derivation rule, the formula through psi(g), the power relation and the product identity."""
    G = D.G
    a = a if isinstance(a, CyclotomicScalar) else CyclotomicScalar.from_rational(1, a)
    L = lcm(sigma.modulus, D.chi.modulus, a.modulus, *(p.modulus for p in psi))
    s = lambda x, y: sigma.value(x, y, L)
    chi = lambda h: D.chi.value(h, L)
    P = [p.lift(L) for p in psi]
    aL = a.lift(L)
    mul = G.cayley
    g = D.g
    one = CyclotomicScalar.one(L)
    ok22 = True
    for h1 in range(G.order):
        for h2 in range(G.order):
            rhs = (chi(h1) * s(h1, mul[h2][g]) * P[h2] + s(mul[h1][g], h2) * P[h1]) / s(h1, h2)
            if P[mul[h1][h2]] != rhs:
                ok22 = False
    ok23 = True
    denom = s(g, g) * (one - chi(g))
    for h in range(G.order):
        if P[h] != P[g] * (s(g, h) - chi(h) * s(h, g)) / denom:
            ok23 = False
    ok24 = True
    gd = D.g_d
    for h in range(G.order):
        lhs = aL * (s(gd, h) - (chi(h) ** D.d) * s(h, gd))
        prod = one
        x = h
        for _ in range(D.d):
            prod = prod * P[x]
            x = mul[g][x]
        if lhs != prod:
            ok24 = False
    return {"twisted_derivation": ok22, "determined_by_g": ok23, "power_relation": ok24, "product_identity": psi_product_identity(D, sigma)}


def psi_identity_sides(D, sigma, h, L=None):
    G = D.G
    L = L or lcm(sigma.modulus, D.chi.modulus)
    s = lambda x, y: sigma.value(x, y, L)
    chi = lambda x: D.chi.value(x, L)
    g = D.g
    mul = G.cayley
    lhs = CyclotomicScalar.one(L)
    x = h
    for _ in range(D.d):
        lhs = lhs * (s(g, x) - chi(x) * s(x, g))
        x = mul[g][x]
    rhs = CyclotomicScalar.one(L)
    x = g
    for _ in range(1, D.d):
        rhs = rhs * s(g, x)
        x = mul[x][g]
    gd = D.g_d
    rhs = rhs * (s(gd, h) - (chi(h) ** D.d) * s(h, gd))
    return lhs, rhs


def psi_product_identity(D, sigma):
    return all(l == r for l, r in (psi_identity_sides(D, sigma, h) for h in range(D.G.order)))


def psi_from_g(D, sigma, psi_g):
    """psi determined by psi(g)."""
    L = lcm(sigma.modulus, D.chi.modulus, psi_g.modulus if isinstance(psi_g, CyclotomicScalar) else 1)
    pg = psi_g.lift(L) if isinstance(psi_g, CyclotomicScalar) else CyclotomicScalar.from_rational(L, psi_g)
    s = lambda x, y: sigma.value(x, y, L)
    chi = lambda h: D.chi.value(h, L)
    g = D.g
    denom = s(g, g) * (1 - chi(g))
    return [pg * (s(g, h) - chi(h) * s(h, g)) / denom for h in range(D.G.order)]


def normalize_psi(D, sigma, a, psi, verify=True):
    """(a', lambda, report) with A_{sigma,a,psi} -> A_{sigma,a'}, X -> X + lambda T_g."""
    conds = psi_conditions(D, sigma, a, psi)
    if not (conds["twisted_derivation"] and conds["determined_by_g"] and conds["power_relation"]):
        raise AlgebraError(f"psi fails its preconditions: {conds}")
    a = a if isinstance(a, CyclotomicScalar) else CyclotomicScalar.from_rational(1, a)
    L = lcm(sigma.modulus, D.chi.modulus, a.modulus, *(p.modulus for p in psi))
    s = lambda x, y: sigma.value(x, y, L)
    g = D.g
    chig = D.chi.value(g, L)
    pg = psi[g].lift(L)
    one = CyclotomicScalar.one(L)
    lam = pg / (s(g, g) * (one - chig))
    prod = one
    x = g
    for _ in range(1, D.d):
        prod = prod * s(g, x)
        x = D.G.cayley[x][g]
    a2 = a.lift(L) - (pg ** D.d) * (s(g, g) ** (-D.d)) * ((one - chig) ** (-D.d)) * prod
    report = {"conditions": conds}
    if verify:
        src = build_comodule_algebra(D, sigma, a, psi=psi, field_modulus=L)
        dst = build_comodule_algebra(D, sigma, a2, hopf=src.hopf, field_modulus=L)
        Zs, Zd = src.algebra, dst.algebra
        ximg = Zd.add(Zd.X(), Zd.scale(Zd.T(g), lam))
        f = LinearMap.from_generators(Zs, Zd, ximg, [Zd.T(h) for h in range(D.G.order)])
        report["multiplicative"] = f.is_multiplicative()
        report["bijective"] = f.is_bijective()
        report["colinear"] = is_colinear(f, src, dst)
        report["source_galois"] = verify_galois_right(src)[0]
        report["target_galois"] = verify_galois_right(dst)[0]
        report["verified"] = all(report[k] for k in ("multiplicative", "bijective", "colinear"))
    return a2, lam, report


# ---------------------------------------------------------------------------
# Hopf automorphisms


def hopf_automorphism_group(D, scalar_samples=None, M=None, verify=True):
    """Aut_{g,chi}(G) together with the scalar factor; every returned pair
    (u, r) is realized as h -> u(h), x -> r x and checked."""
    from .groups import automorphisms_fixing

    M = M or D.default_modulus()
    auts = automorphisms_fixing(D.G, D.g, D.chi)
    if D.has_mu:
        scal_orders = D.d
        scalars = [CyclotomicScalar.root_of_unity(D.d, e) for e in range(D.d)]
        kind = f"mu_{D.d}"
    else:
        scal_orders = M
        scalars = [CyclotomicScalar.root_of_unity(M, e) for e in range(M)]
        kind = f"mu_{M} (surrogate for the multiplicative group)"
        for s in scalar_samples or ():
            if isinstance(s, CyclotomicScalar) and not s.is_zero() and s not in scalars:
                scalars.append(s)
    out = {"aut_g_chi": auts, "scalar_factor": kind, "scalar_factor_order": scal_orders, "scalars": scalars}
    if verify:
        L = D.field_modulus(M)
        for s in scalars:
            L = lcm(L, s.modulus)
        H = build_hopf_algebra(D, field_modulus=L)
        A = H.algebra
        ok = True
        for u in auts:
            for r in scalars:
                f = LinearMap.from_generators(A, A, A.scale(A.X(), r.lift(lcm(L, r.modulus))) if D.d > 1 else {},
                                              [A.T(u.perm[h]) for h in range(D.G.order)])
                if not (f.is_multiplicative() and f.is_bijective() and _is_coalgebra_map(f, H)):
                    ok = False
                    break
            if not ok:
                break
        out["verified"] = ok
    return out


def _is_coalgebra_map(f, H):
    A = H.algebra
    for k in range(A.dim):
        lhs = {}
        for z, c in f.images[k].items():
            _add_into(lhs, H.coproduct[z], c)
        rhs = {}
        for (p, q), c in H.coproduct[k].items():
            for p2, c2 in f.images[p].items():
                for q2, c3 in f.images[q].items():
                    _add_into(rhs, {(p2, q2): c * c2 * c3})
        if lhs != rhs:
            return False
        val = A._zero
        for z, c in f.images[k].items():
            val = val + c * H.counit[z]
        if val != H.counit[k]:
            return False
    return True
