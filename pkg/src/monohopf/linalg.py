"""Exact integer linear algebra: Smith normal form, linear systems over
Z/M, and invariant factors of subquotients of (Z/M)^n.

Everything here works with plain Python integers, so there is no
overflow and no rounding.  Matrices are lists of rows.
"""

from dataclasses import dataclass, field
from math import gcd


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    if not A:
        return []
    cols = len(B[0]) if B else 0
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] if Bt else [0] * cols for row in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A, ncols=None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(c) for c in zip(*A)]


@dataclass
class SNFResult:
    D: list
    U: list
    V: list
    Uinv: list
    Vinv: list

    @property
    def diagonal(self):
        k = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(k)]

    @property
    def rank(self):
        return sum(1 for x in self.diagonal if x)


def _snf(A, ncols=None, modulus=None, track_rows=True):
    # With a modulus, entries are kept reduced (the result is a Smith form
    # over Z/modulus).  track_rows=False skips U and Uinv.
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    M = modulus
    D = [[int(x) % M for x in row] for row in A] if M else [list(map(int, row)) for row in A]
    U = identity(m) if track_rows else None
    Uinv = identity(m) if track_rows else None
    V = identity(n)
    Vinv = identity(n)

    def row_add(dst, src, q):
        # row_dst += q * row_src
        if q == 0:
            return
        rd, rs = D[dst], D[src]
        for c in range(n):
            if rs[c]:
                rd[c] += q * rs[c]
        if M:
            for c in range(n):
                rd[c] %= M
        if U is None:
            return
        ud, us = U[dst], U[src]
        for c in range(m):
            if us[c]:
                ud[c] += q * us[c]
        # Uinv' = Uinv * (I - q e_dst e_src^T): col_src -= q col_dst
        for r in range(m):
            x = Uinv[r][dst]
            if x:
                Uinv[r][src] -= q * x

    def row_swap(a, b):
        D[a], D[b] = D[b], D[a]
        if U is None:
            return
        U[a], U[b] = U[b], U[a]
        for r in range(m):
            Uinv[r][a], Uinv[r][b] = Uinv[r][b], Uinv[r][a]

    def row_neg(a):
        D[a] = [-x for x in D[a]]
        U[a] = [-x for x in U[a]]
        for r in range(m):
            Uinv[r][a] = -Uinv[r][a]

    def col_add(dst, src, q):
        # col_dst += q * col_src
        if q == 0:
            return
        for r in range(m):
            x = D[r][src]
            if x:
                D[r][dst] += q * x
                if M:
                    D[r][dst] %= M
        for r in range(n):
            x = V[r][src]
            if x:
                V[r][dst] += q * x
                if M:
                    V[r][dst] %= M
        # Vinv' = (I - q e_src e_dst^T) Vinv: row_src -= q row_dst
        vs, vd = Vinv[src], Vinv[dst]
        for c in range(n):
            if vd[c]:
                vs[c] -= q * vd[c]
                if M:
                    vs[c] %= M

    def col_swap(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]
        Vinv[a], Vinv[b] = Vinv[b], Vinv[a]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = D[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                x = D[i][t]
                if x:
                    row_add(i, t, -(x // p))
                    if D[i][t]:
                        clean = False
            for j in range(t + 1, n):
                x = D[t][j]
                if x:
                    col_add(j, t, -(x // p))
                    if D[t][j]:
                        clean = False
            if not clean:
                # bring the smallest remaining entry of row/col t to the pivot
                best = (abs(D[t][t]), t, t)
                for i in range(t + 1, m):
                    x = D[i][t]
                    if x and abs(x) < best[0]:
                        best = (abs(x), i, t)
                for j in range(t + 1, n):
                    x = D[t][j]
                    if x and abs(x) < best[0]:
                        best = (abs(x), t, j)
                if best[1] != t:
                    row_swap(t, best[1])
                if best[2] != t:
                    col_swap(t, best[2])
                continue
            # divisibility of the remaining block
            bad = None
            for i in range(t + 1, m):
                row = D[i]
                for j in range(t + 1, n):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        if D[t][t] < 0 and not M:
            row_neg(t)
        t += 1
    return SNFResult(D, U, V, Uinv, Vinv)


def smith_normal_form(A, check=True):
    """Return (D, U, V) with U A V = D, D diagonal with d_i | d_{i+1}."""
    res = _snf(A)
    if check:
        _check_snf(A, res)
    return res.D, res.U, res.V


def smith_decomposition(A, ncols=None, check=False):
    res = _snf(A, ncols)
    if check:
        _check_snf(A, res)
    return res


def _check_snf(A, res):
    if A and A[0]:
        assert mat_mul(mat_mul(res.U, A), res.V) == res.D, "UAV != D"
    diag = res.diagonal
    for i, x in enumerate(diag):
        assert x >= 0
        if i + 1 < len(diag) and x:
            assert diag[i + 1] % x == 0, "divisibility chain broken"
        if x == 0:
            assert all(y == 0 for y in diag[i:]), "zero before nonzero on diagonal"
    for i, row in enumerate(res.D):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0


# ---------------------------------------------------------------------------
# systems over Z/M


def _echelon_mod(A, M, n):
    """Rows in echelon form spanning the same Z/M-module as the rows of A.

    Each row is inserted with unimodular 2x2 steps, so at most one row per
    pivot column survives.  Rows are kept sparse while reducing."""
    basis = {}

    def comb(a, u, b, v):
        # a*u + b*v for sparse rows u, v
        out = {}
        for j, x in u.items():
            out[j] = a * x
        for j, x in v.items():
            out[j] = out.get(j, 0) + b * x
        return {j: x % M for j, x in out.items() if x % M}

    for row in A:
        r = {j: int(x) % M for j, x in enumerate(row) if int(x) % M}
        while r:
            c = min(r)
            b = basis.get(c)
            if b is None:
                basis[c] = r
                break
            p, x = b[c], r[c]
            if x % p == 0:
                r = comb(1, r, -(x // p), b)
                continue
            g, s_, t_ = _xgcd(p, x)
            basis[c] = comb(s_, b, t_, r)
            r = comb(x // g, b, -(p // g), r)
    out = []
    for c in sorted(basis):
        row = [0] * n
        for j, x in basis[c].items():
            row[j] = x
        out.append(row)
    return out


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def kernel_mod(A, M, ncols=None):
    """Generators of {x in (Z/M)^n : A x = 0 mod M}."""
    n = len(A[0]) if A else ncols
    if not A:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    rows = _echelon_mod(A, M, n)
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    res = _snf(rows, modulus=M, track_rows=False)
    diag = res.diagonal
    gens = []
    for i in range(n):
        di = diag[i] if i < len(diag) else 0
        scale = M // gcd(di, M)
        if scale == M:
            continue
        col = [(res.V[r][i] * scale) % M for r in range(n)]
        if any(col):
            gens.append(col)
    return gens


def solve_linear_mod(A, b, M):
    """Solve A x = b over Z/M.  Returns (x, kernel_generators) or None."""
    if M < 2:
        raise ValueError("modulus must be at least 2")
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [], []
    res = _snf(A)
    c = [v % M for v in mat_vec(res.U, b)]
    diag = res.diagonal
    y = [0] * n
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        g = gcd(di, M)
        if c[i] % g:
            return None
        if i < n and di % M:
            mod = M // g
            y[i] = (c[i] // g) * pow(di // g, -1, mod) % mod if mod > 1 else 0
    x = [v % M for v in mat_vec(res.V, y)]
    kern = []
    for i in range(n):
        di = diag[i] if i < len(diag) else 0
        scale = M // gcd(di, M)
        if scale == M:
            continue
        col = [(res.V[r][i] * scale) % M for r in range(n)]
        if any(col):
            kern.append(col)
    return x, kern


# ---------------------------------------------------------------------------
# subquotients of (Z/M)^n


class SubquotientError(ValueError):
    pass


@dataclass
class AbelianGroupStructure:
    """Z/B for subgroups B <= Z <= (Z/M)^n, with explicit coordinates.

    ``invariants`` lists the nontrivial invariant factors e_1 | e_2 | ...;
    ``basis`` holds one vector of Z per factor; ``coordinates`` sends any
    vector of Z to its coordinate tuple, each entry reduced mod e_i.
    """

    modulus: int
    dim: int
    invariants: list
    basis: list
    _P: list = field(repr=False)
    _winv: object = field(repr=False)
    _keep: list = field(repr=False)
    _full: list = field(repr=False)

    @property
    def order(self):
        out = 1
        for e in self.invariants:
            out *= e
        return out

    def lattice_coordinates(self, z):
        w = self._winv(z)
        if w is None:
            raise SubquotientError("vector is not in the subgroup Z")
        return w

    def contains(self, z):
        return self._winv(z) is not None

    def coordinates(self, z):
        w = self.lattice_coordinates(z)
        y = mat_vec(self._P, w)
        return tuple(y[i] % self._full[i] for i in self._keep)

    def element(self, coords):
        """The vector sum_i c_i basis_i, reduced mod M."""
        v = [0] * self.dim
        for c, b in zip(coords, self.basis):
            if c:
                for k in range(self.dim):
                    v[k] += c * b[k]
        return [x % self.modulus for x in v]

    def elements(self):
        """All coordinate tuples, lexicographically ordered."""
        out = [()]
        for e in self.invariants:
            out = [t + (i,) for t in out for i in range(e)]
        return out

    def add(self, x, y):
        return tuple((a + b) % e for a, b, e in zip(x, y, self.invariants))

    def neg(self, x):
        return tuple((-a) % e for a, e in zip(x, self.invariants))

    def zero(self):
        return tuple(0 for _ in self.invariants)


def _lattice_basis(gens, n, M):
    """Basis matrix W (columns) of the lattice spanned by gens and M Z^n,
    together with a function z -> W^{-1} z (None if z is outside)."""
    cols = [list(map(int, g)) for g in gens] + [[M * int(i == j) for i in range(n)] for j in range(n)]
    mat = [[c[i] for c in cols] for i in range(n)]
    res = _snf(mat)
    diag = res.diagonal
    assert len(diag) == n and all(diag), "lattice is not full rank"
    # W = Uinv * diag(d)
    W = [[res.Uinv[i][j] * diag[j] for j in range(n)] for i in range(n)]
    U = res.U
    Ucols = transpose(U, n)

    def winv(z):
        uz = [0] * n
        for k, x in enumerate(z):
            x = int(x)
            if x:
                for i, u in enumerate(Ucols[k]):
                    if u:
                        uz[i] += x * u
        out = []
        for x, d in zip(uz, diag):
            if x % d:
                return None
            out.append(x // d)
        return out

    return W, winv


def subquotient_invariants(M, n, Zgens, Bgens, check=True):
    """Structure of span(Zgens)/span(Bgens) inside (Z/M)^n."""
    if M < 1:
        raise ValueError("modulus must be positive")
    # same spans once M Z^n is added, with far fewer generators
    Zgens = _echelon_mod(Zgens, M, n) if M > 1 else []
    Bgens = _echelon_mod(Bgens, M, n) if M > 1 else []
    W, winv = _lattice_basis(Zgens, n, M)
    bcols = []
    for b in list(Bgens) + [[M * int(i == j) for i in range(n)] for j in range(n)]:
        w = winv(b)
        if w is None:
            raise SubquotientError("B is not contained in Z")
        bcols.append(w)
    C = [[c[i] for c in bcols] for i in range(n)]
    res = _snf(C)
    diag = res.diagonal
    full = [diag[i] if i < len(diag) else 0 for i in range(n)]
    assert all(full), "quotient is infinite; B must contain M Z^n"
    keep = [i for i in range(n) if full[i] != 1]
    basis = []
    for i in keep:
        # W * Pinv e_i
        col = [res.Uinv[r][i] for r in range(n)]
        v = mat_vec(W, col)
        basis.append([x % M for x in v])
    st = AbelianGroupStructure(
        modulus=M,
        dim=n,
        invariants=[full[i] for i in keep],
        basis=basis,
        _P=res.U,
        _winv=winv,
        _keep=keep,
        _full=full,
    )
    if check:
        for k, b in enumerate(basis):
            expect = tuple(int(j == k) for j in range(len(keep)))
            assert st.coordinates(b) == tuple(x % e for x, e in zip(expect, st.invariants))
    return st


def invariant_factors_of_orders(orders):
    """Invariant factors of the product of cyclic groups of given orders."""
    diag = [[int(i == j) * o for j in range(len(orders))] for i, o in enumerate(orders)]
    if not orders:
        return []
    res = _snf(diag)
    return [x for x in res.diagonal if x != 1]


def cyclic_invariants(*orders):
    return invariant_factors_of_orders([o for o in orders if o != 1])
