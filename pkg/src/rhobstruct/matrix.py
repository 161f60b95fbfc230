"""Dense exact matrices over Q or a cyclotomic field."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from . import _poly
from .errors import DimensionMismatch, SingularMatrix, SpectrumNotRational
from .scalars import CyclotomicNumber


def _coerce_entry(x):
    if isinstance(x, (Fraction, CyclotomicNumber)):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"unsupported matrix entry {x!r}")


class Matrix:
    """Immutable matrix whose entries share one exact field.

    Entries are Fractions or CyclotomicNumbers; ints and strings such as
    ``"-1/2"`` are converted to Fractions on construction.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_coerce_entry(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionMismatch("empty matrix")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction

    @classmethod
    def identity(cls, n: int, one=None) -> "Matrix":
        one = Fraction(1) if one is None else one
        zero = one * 0
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None, zero=None) -> "Matrix":
        zero = Fraction(0) if zero is None else zero
        return cls([[zero] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def diag(cls, values) -> "Matrix":
        values = [_coerce_entry(v) for v in values]
        zero = values[0] * 0
        n = len(values)
        return cls([[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def shift(cls, n: int) -> "Matrix":
        """The upper shift: ones on the superdiagonal."""
        return cls([[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, blocks) -> "Matrix":
        blocks = list(blocks)
        zero = blocks[0].zero
        size = sum(b.shape[0] for b in blocks)
        rows = [[zero] * size for _ in range(size)]
        off = 0
        for b in blocks:
            k = b.shape[0]
            for i in range(k):
                rows[off + i][off:off + k] = b.rows[i]
            off += k
        return cls(rows)

    # basic accessors

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def n(self) -> int:
        r, c = self.shape
        if r != c:
            raise DimensionMismatch(f"matrix is {r}x{c}, not square")
        return r

    @property
    def zero(self):
        return self.rows[0][0] * 0

    @property
    def one(self):
        return self.zero + 1

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def is_rational(self) -> bool:
        return all(isinstance(x, Fraction) for row in self.rows for x in row)

    def to_cyclotomic(self, conductor: int) -> "Matrix":
        def conv(x):
            if isinstance(x, CyclotomicNumber):
                return x.lift(conductor)
            return CyclotomicNumber.from_rational(x, conductor)

        return Matrix([[conv(x) for x in row] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    T = property(transpose)

    def trace(self):
        return sum((self.rows[i][i] for i in range(self.n)), self.zero)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def is_identity(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))

    def flat(self) -> tuple:
        return tuple(x for row in self.rows for x in row)

    def submatrix(self, rows, cols) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    # arithmetic

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_same(other)
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            return self.scale(other)
        return NotImplemented

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        zero = self.zero
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Matrix.identity(self.n, self.one)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "])"

    # elimination

    def echelon(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form and pivot columns."""
        m = [list(r) for r in self.rows]
        nrows, ncols = self.shape
        pivots = []
        pr = 0
        for c in range(ncols):
            if pr == nrows:
                break
            pivot = next((i for i in range(pr, nrows) if m[i][c] != 0), None)
            if pivot is None:
                continue
            m[pr], m[pivot] = m[pivot], m[pr]
            inv = 1 / m[pr][c]
            m[pr] = [x * inv for x in m[pr]]
            for i in range(nrows):
                if i != pr and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[pr])]
            pivots.append(c)
            pr += 1
        return m, pivots

    def rank(self) -> int:
        return len(self.echelon()[1])

    def nullspace(self) -> list[tuple]:
        """Basis of the right kernel as coordinate tuples."""
        m, pivots = self.echelon()
        ncols = self.shape[1]
        zero, one = self.zero, self.one
        free = [c for c in range(ncols) if c not in pivots]
        basis = []
        for f in free:
            v = [zero] * ncols
            v[f] = one
            for row, pc in zip(m, pivots):
                v[pc] = -row[f]
            basis.append(tuple(v))
        return basis

    def det(self):
        m = [list(r) for r in self.rows]
        n = self.n
        d = self.one
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
            if pivot is None:
                return self.zero
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                d = -d
            d = d * m[c][c]
            inv = 1 / m[c][c]
            for i in range(c + 1, n):
                if m[i][c] != 0:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return d

    def is_invertible(self) -> bool:
        return self.rank() == self.n

    def inverse(self) -> "Matrix":
        n = self.n
        ident = Matrix.identity(n, self.one)
        aug = Matrix([list(r) + list(s) for r, s in zip(self.rows, ident.rows)])
        m, pivots = aug.echelon()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Matrix([row[n:] for row in m])


def rank(m: Matrix) -> int:
    return m.rank()


def char_poly(m: Matrix) -> tuple:
    """Coefficients of det(x I - M), lowest degree first (monic).

    Faddeev-LeVerrier recursion; exact over Q.
    """
    n = m.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    ident = Matrix.identity(n, m.one)
    mk = Matrix.zeros(n, zero=m.zero)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return tuple(coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(poly, strict: bool = True) -> list[tuple[Fraction, int]]:
    """All rational roots with multiplicity, for a polynomial that splits over Q.

    Raises SpectrumNotRational when an irrational factor remains, unless
    ``strict`` is false, in which case the rational roots found so far are returned.
    """
    p = _poly.trim(poly)
    roots: dict[Fraction, int] = {}
    while len(p) > 1 and p[0] == 0:
        p = p[1:]
        roots[Fraction(0)] = roots.get(Fraction(0), 0) + 1
    while len(p) > 1:
        denom = 1
        for c in p:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        ints = [int(c * denom) for c in p]
        found = None
        for q in _divisors(ints[-1]):
            for r in _divisors(ints[0]):
                for cand in (Fraction(r, q), Fraction(-r, q)):
                    if _poly.evaluate(p, cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            if not strict:
                break
            raise SpectrumNotRational(f"characteristic polynomial has an irrational factor of degree {len(p) - 1}")
        p, r = _poly.divmod_poly(p, (-found, Fraction(1)))
        assert not r
        roots[found] = roots.get(found, 0) + 1
    return sorted(roots.items())


def rational_eigenvalues(m: Matrix) -> list[tuple[Fraction, int]]:
    return rational_roots(char_poly(m))
