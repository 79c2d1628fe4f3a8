"""Exact arithmetic in the cyclotomic fields Q(zeta_M).

Elements are stored in the power basis 1, z, ..., z^(phi(M)-1) modulo the
M-th cyclotomic polynomial, as an integer numerator vector over a single
positive denominator.  Two elements are equal iff their normalized
representations are equal.

Also provides exact rank / kernel computations for matrices with
cyclotomic entries: a sparse incremental echelon form (used for the large,
very sparse canonical-map matrices) and a dense fraction-free Bareiss
elimination.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients (constant term first) of Phi_m.

    Computed by dividing x^m - 1 by Phi_e for every proper divisor e of m.
    """
    if m < 1:
        raise ValueError("cyclotomic_polynomial needs m >= 1")
    num = [-1] + [0] * (m - 1) + [1]
    for e in range(1, m):
        if m % e == 0:
            num = _exact_poly_div(num, list(cyclotomic_polynomial(e)))
    return tuple(num)


def _exact_poly_div(num, den):
    # monic integer divisor; remainder must vanish
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


class _FieldData:
    """Per-modulus tables: degree and reductions of x^k mod Phi_M."""

    def __init__(self, m):
        self.m = m
        phi = list(cyclotomic_polynomial(m))
        self.deg = len(phi) - 1
        deg = self.deg
        # powers[k] = coefficients of x^k reduced, for 0 <= k < max(2*deg, m)
        limit = max(2 * deg, m) + 1
        powers = []
        cur = [0] * deg
        cur[0] = 1
        for _ in range(limit):
            powers.append(tuple(cur))
            # multiply by x
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(deg):
                    cur[i] -= top * phi[i]
        self.powers = powers


@lru_cache(maxsize=None)
def _field(m):
    return _FieldData(m)


def _normalize(num, den):
    if den < 0:
        num = tuple(-c for c in num)
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return num, 1
    if g > 1:
        num = tuple(c // g for c in num)
        den //= g
    return num, den


class CyclotomicScalar:
    """An element of Q(zeta_M)."""

    __slots__ = ("modulus", "num", "den", "_hash")

    def __init__(self, modulus, coefficients, den=1):
        fd = _field(modulus)
        coeffs = list(coefficients)
        if any(isinstance(c, Fraction) for c in coeffs):
            common = 1
            for c in coeffs:
                common = lcm(common, Fraction(c).denominator)
            coeffs = [int(Fraction(c) * common) for c in coeffs]
            den *= common
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > fd.deg:
            # reduce a longer polynomial
            red = [0] * fd.deg
            for k, c in enumerate(coeffs):
                if c:
                    for i, p in enumerate(_power(fd, k)):
                        red[i] += c * p
            coeffs = red
        elif len(coeffs) < fd.deg:
            coeffs = coeffs + [0] * (fd.deg - len(coeffs))
        self.modulus = modulus
        self.num, self.den = _normalize(tuple(coeffs), den)
        self._hash = None

    @classmethod
    def _raw(cls, modulus, num, den):
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.num, obj.den = _normalize(num, den)
        obj._hash = None
        return obj

    # constructors

    @classmethod
    def zero(cls, modulus):
        return cls._raw(modulus, (0,) * _field(modulus).deg, 1)

    @classmethod
    def one(cls, modulus):
        return cls.from_rational(modulus, 1)

    @classmethod
    def from_rational(cls, modulus, q):
        q = Fraction(q)
        deg = _field(modulus).deg
        return cls._raw(modulus, (q.numerator,) + (0,) * (deg - 1), q.denominator)

    @classmethod
    def root_of_unity(cls, modulus, e):
        """zeta_M ** e."""
        fd = _field(modulus)
        return cls._raw(modulus, _power(fd, e % modulus), 1)

    # conversions

    def lift(self, modulus):
        """Image in Q(zeta_modulus) under zeta_self -> zeta_modulus^(modulus/self)."""
        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise ValueError(f"Q(zeta_{self.modulus}) is not a subfield of Q(zeta_{modulus})")
        step = modulus // self.modulus
        fd = _field(modulus)
        out = [0] * fd.deg
        for k, c in enumerate(self.num):
            if c:
                for i, p in enumerate(_power(fd, k * step)):
                    out[i] += c * p
        return CyclotomicScalar._raw(modulus, tuple(out), self.den)

    def coefficients(self):
        return [Fraction(c, self.den) for c in self.num]

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.modulus == self.modulus:
                return self, other
            m = lcm(self.modulus, other.modulus)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CyclotomicScalar.from_rational(self.modulus, other)
        return NotImplemented, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        if b.den == a.den:
            num = tuple(x + y for x, y in zip(a.num, b.num))
            return CyclotomicScalar._raw(a.modulus, num, a.den)
        num = tuple(x * b.den + y * a.den for x, y in zip(a.num, b.num))
        return CyclotomicScalar._raw(a.modulus, num, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.modulus, tuple(-x for x in self.num), self.den)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        fd = _field(a.modulus)
        deg = fd.deg
        if deg == 1:
            return CyclotomicScalar._raw(a.modulus, (a.num[0] * b.num[0],), a.den * b.den)
        prod = [0] * (2 * deg - 1)
        for i, x in enumerate(a.num):
            if x:
                for j, y in enumerate(b.num):
                    if y:
                        prod[i + j] += x * y
        out = list(prod[:deg])
        for k in range(deg, 2 * deg - 1):
            c = prod[k]
            if c:
                for i, p in enumerate(fd.powers[k]):
                    if p:
                        out[i] += c * p
        return CyclotomicScalar._raw(a.modulus, tuple(out), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        fd = _field(self.modulus)
        deg = fd.deg
        if deg == 1:
            return CyclotomicScalar._raw(self.modulus, (self.den,), self.num[0])
        # columns: self * x^j in the power basis; solve for the preimage of 1
        cols = []
        for j in range(deg):
            v = self * CyclotomicScalar._raw(self.modulus, fd.powers[j], 1)
            cols.append([Fraction(c, v.den) for c in v.num])
        mat = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        sol = _solve_rational(mat, deg)
        return CyclotomicScalar(self.modulus, sol)

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if a is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = CyclotomicScalar.one(self.modulus)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicScalar.from_rational(self.modulus, other)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        if other.modulus != self.modulus:
            a, b = self._coerce(other)
            return a.num == b.num and a.den == b.den
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            # hash in the canonical field of definition would be costly; use
            # a value stable under lifting only for rationals
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.modulus, self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.is_rational():
            return f"Cyclo({Fraction(self.num[0], self.den)})"
        terms = []
        for k, c in enumerate(self.num):
            if c:
                q = Fraction(c, self.den)
                terms.append(f"{q}*z^{k}" if k else f"{q}")
        return f"Cyclo[{self.modulus}](" + " + ".join(terms) + ")"

    def __str__(self):
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            q = Fraction(c, self.den)
            if not k:
                terms.append(str(q))
            elif q == 1:
                terms.append(f"zeta_{self.modulus}^{k}")
            elif q == -1:
                terms.append(f"-zeta_{self.modulus}^{k}")
            else:
                terms.append(f"{q}*zeta_{self.modulus}^{k}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self):
        return {"modulus": self.modulus, "coefficients": [str(c) for c in self.coefficients()]}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (int, float)):
            return cls.from_rational(1, Fraction(obj))
        return cls(int(obj["modulus"]), [Fraction(c) for c in obj["coefficients"]])


def _power(fd, k):
    if k < len(fd.powers):
        return fd.powers[k]
    # reduce via zeta^m = 1
    return fd.powers[k % fd.m]


def _solve_rational(mat, n):
    # Gauss-Jordan on an n x (n+1) augmented matrix of Fractions
    for col in range(n):
        piv = next(r for r in range(col, n) if mat[r][col] != 0)
        mat[col], mat[piv] = mat[piv], mat[col]
        p = mat[col][col]
        mat[col] = [x / p for x in mat[col]]
        for r in range(n):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    return [mat[r][n] for r in range(n)]


def embed(modulus, e):
    """The root of unity zeta_M^e; a homomorphism Z/M -> Q(zeta_M)^x."""
    return CyclotomicScalar.root_of_unity(modulus, e)


def common_modulus(*scalars):
    m = 1
    for s in scalars:
        if isinstance(s, CyclotomicScalar):
            m = lcm(m, s.modulus)
    return m


# ---------------------------------------------------------------------------
# sparse exact linear algebra


class SparseEchelon:
    """Incremental row echelon form over Q(zeta_M) with sparse rows.

    Rows are dicts column -> CyclotomicScalar.  ``add`` reduces a row against
    the stored pivots and keeps it if it is independent.  With ``track=True``
    every stored row carries the combination of input rows producing it, so
    that dependent inputs yield kernel vectors.
    """

    def __init__(self, track=False):
        self.pivots = {}  # leading column -> (row, combo)
        self.track = track
        self.kernel = []
        self._count = 0

    @property
    def rank(self):
        return len(self.pivots)

    def add(self, row):
        row = {c: v for c, v in row.items() if not v.is_zero()}
        combo = {self._count: None} if self.track else None
        if self.track:
            one = None
            for v in row.values():
                one = CyclotomicScalar.one(v.modulus)
                break
            combo = {self._count: one} if one is not None else {self._count: "one"}
        idx = self._count
        self._count += 1
        while row:
            lead = min(row)
            if lead not in self.pivots:
                inv = row[lead].inverse()
                row = {c: v * inv for c, v in row.items()}
                if self.track:
                    combo = {k: _scale(v, inv) for k, v in combo.items()}
                self.pivots[lead] = (row, combo)
                return True
            prow, pcombo = self.pivots[lead]
            f = row[lead]
            for c, v in prow.items():
                nv = row.get(c)
                nv = -(f * v) if nv is None else nv - f * v
                if nv.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = nv
            if self.track:
                for k, v in pcombo.items():
                    cur = combo.get(k)
                    term = _scale(v, f)
                    nv = _neg(term) if cur is None else _sub(cur, term)
                    if nv == "zero":
                        combo.pop(k, None)
                    else:
                        combo[k] = nv
        if self.track:
            self.kernel.append((idx, combo))
        return False


# helpers allowing a placeholder "one" before the field modulus is known


def _scale(v, f):
    if v == "one":
        return f
    return v * f


def _neg(v):
    if v == "one":
        return "minus_one"
    if v == "minus_one":
        return "one"
    return -v


def _sub(a, b):
    if isinstance(a, str) or isinstance(b, str):
        raise TypeError("untyped unit in kernel tracking")
    r = a - b
    return "zero" if r.is_zero() else r


def sparse_rank(rows):
    ech = SparseEchelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def sparse_kernel(images, modulus):
    """Kernel of the linear map sending basis vector i to ``images[i]``.

    Returns a list of dicts i -> coefficient spanning all combinations
    sum_i c_i e_i whose image vanishes.
    """
    one = CyclotomicScalar.one(modulus)
    pivots = {}
    kernel = []
    for i, img in enumerate(images):
        row = {c: v for c, v in img.items() if not v.is_zero()}
        combo = {i: one}
        while row:
            lead = min(row)
            if lead not in pivots:
                inv = row[lead].inverse()
                row = {c: v * inv for c, v in row.items()}
                combo = {k: v * inv for k, v in combo.items()}
                pivots[lead] = (row, combo)
                break
            prow, pcombo = pivots[lead]
            f = row[lead]
            _axpy(row, prow, f)
            _axpy(combo, pcombo, f)
        else:
            kernel.append(combo)
    return kernel


def _axpy(target, src, f):
    # target -= f * src, dropping zeros
    for c, v in src.items():
        cur = target.get(c)
        nv = -(f * v) if cur is None else cur - f * v
        if nv.is_zero():
            target.pop(c, None)
        else:
            target[c] = nv


# ---------------------------------------------------------------------------
# dense fraction-free elimination


def _to_integral_rows(matrix):
    # scale each row by the lcm of its denominators so entries lie in Z[zeta]
    out = []
    for row in matrix:
        den = 1
        for v in row:
            den = lcm(den, v.den)
        out.append([v * den for v in row])
    return out


def _exact_quotient(a, b):
    return a * b.inverse()


def bareiss(matrix):
    """Fraction-free Gaussian elimination; returns (rank, det or None).

    The matrix is a list of rows of CyclotomicScalar sharing a modulus.
    Row scaling by denominators changes the determinant, so the returned
    determinant is for the original matrix (rescaled back).
    """
    n_rows = len(matrix)
    if n_rows == 0:
        return 0, None
    n_cols = len(matrix[0])
    m = matrix[0][0].modulus if n_cols else 1
    scale = CyclotomicScalar.one(m)
    for row in matrix:
        den = 1
        for v in row:
            den = lcm(den, v.den)
        scale = scale * den
    a = _to_integral_rows(matrix)
    prev = CyclotomicScalar.one(m)
    rank = 0
    sign = 1
    row = 0
    for col in range(n_cols):
        piv = next((r for r in range(row, n_rows) if not a[r][col].is_zero()), None)
        if piv is None:
            continue
        if piv != row:
            a[row], a[piv] = a[piv], a[row]
            sign = -sign
        p = a[row][col]
        for r in range(row + 1, n_rows):
            f = a[r][col]
            new = []
            for c in range(n_cols):
                if c < col:
                    new.append(a[r][c])
                    continue
                val = p * a[r][c] - f * a[row][c]
                new.append(_exact_quotient(val, prev) if not val.is_zero() else val)
            a[r] = new
        prev = p
        row += 1
        rank += 1
        if row == n_rows:
            break
    det = None
    if n_rows == n_cols:
        if rank < n_rows:
            det = CyclotomicScalar.zero(m)
        else:
            det = a[n_rows - 1][n_cols - 1] * sign / scale
    return rank, det


def matrix_rank_cyclo(matrix):
    """Exact rank of a dense matrix over a cyclotomic field (Bareiss)."""
    rank, _ = bareiss(matrix)
    return rank


def is_invertible(matrix):
    if len(matrix) == 0:
        return True
    if len(matrix) != len(matrix[0]):
        return False
    return matrix_rank_cyclo(matrix) == len(matrix)


def determinant(matrix):
    _, det = bareiss(matrix)
    return det
