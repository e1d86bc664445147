"""Dense exact matrix algebra over the rationals, matrix polynomials in x,
matrix Laurent polynomials, and the structural matrices of the weight:
the shift matrix A, the index matrix J, and the triangularizers K_n.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import RPoly, factorial, rat


class SingularMatrixError(ArithmeticError):
    pass


class MatQ:
    """Square N x N matrix of Fractions.  Rows are stored as a tuple of
    tuples; instances are immutable and hashable."""

    __slots__ = ("rows", "N")

    def __init__(self, rows):
        rows = tuple(tuple(rat(v) for v in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("MatQ must be square and nonempty")
        self.rows = rows
        self.N = n

    @staticmethod
    def zero(n: int) -> "MatQ":
        return MatQ([[0] * n for _ in range(n)])

    @staticmethod
    def identity(n: int) -> "MatQ":
        return MatQ([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def diag(entries) -> "MatQ":
        entries = [rat(e) for e in entries]
        n = len(entries)
        return MatQ([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def unit(n: int, i: int, j: int) -> "MatQ":
        """Matrix unit E_{ij}, 0-based indices."""
        return MatQ([[1 if (r, c) == (i, j) else 0 for c in range(n)] for r in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, MatQ):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other: "MatQ") -> "MatQ":
        self._check(other)
        return MatQ([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "MatQ") -> "MatQ":
        self._check(other)
        return MatQ([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __neg__(self) -> "MatQ":
        return MatQ([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, MatQ):
            self._check(other)
            cols = list(zip(*other.rows))
            return MatQ(
                [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
            )
        if isinstance(other, (int, str, Fraction)):
            s = rat(other)
            return MatQ([[a * s for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, str, Fraction)):
            return self * rat(other)
        return NotImplemented

    def _check(self, other: "MatQ"):
        if self.N != other.N:
            raise ValueError("dimension mismatch")

    def transpose(self) -> "MatQ":
        return MatQ(list(zip(*self.rows)))

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def inverse(self) -> "MatQ":
        """Exact inverse by Gauss-Jordan elimination; raises on singular."""
        n = self.N
        aug = [list(r) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
               for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return MatQ([row[n:] for row in aug])

    def det(self) -> Fraction:
        n = self.N
        m = [list(r) for r in self.rows]
        sign = 1
        out = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if m[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                m[col], m[piv] = m[piv], m[col]
                sign = -sign
            out *= m[col][col]
            inv = 1 / m[col][col]
            for r in range(col + 1, n):
                if m[r][col] != 0:
                    f = m[r][col] * inv
                    m[r] = [v - f * w for v, w in zip(m[r], m[col])]
        return sign * out

    def leading_minors(self):
        """Determinants of the leading principal submatrices, sizes 1..N."""
        return [MatQ([r[: k + 1] for r in self.rows[: k + 1]]).det() for k in range(self.N)]

    def is_positive_definite(self) -> bool:
        return self.is_symmetric() and all(d > 0 for d in self.leading_minors())

    def __repr__(self):
        return "MatQ(" + "; ".join(" ".join(str(v) for v in r) for r in self.rows) + ")"


def commutator(x: MatQ, y: MatQ) -> MatQ:
    return x * y - y * x


class MatPoly:
    """Matrix-valued polynomial in x: a list of MatQ coefficients, index =
    power of x.  The zero polynomial has no coefficients."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs, n: int | None = None):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        if coeffs:
            n = coeffs[0].N
            if any(c.N != n for c in coeffs):
                raise ValueError("mixed dimensions in MatPoly")
        elif n is None:
            raise ValueError("zero MatPoly needs an explicit dimension")
        self.coeffs = tuple(coeffs)
        self.N = n

    @staticmethod
    def zero(n: int) -> "MatPoly":
        return MatPoly([], n)

    @staticmethod
    def const(m: MatQ) -> "MatPoly":
        return MatPoly([m], m.N)

    @staticmethod
    def x_identity(n: int) -> "MatPoly":
        return MatPoly([MatQ.zero(n), MatQ.identity(n)], n)

    @staticmethod
    def monomial(k: int, m: MatQ) -> "MatPoly":
        return MatPoly([MatQ.zero(m.N)] * k + [m], m.N)

    @staticmethod
    def from_scalar(p: RPoly, n: int) -> "MatPoly":
        return MatPoly([MatQ.identity(n) * c for c in p.coeffs], n)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> MatQ:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return MatQ.zero(self.N)

    def is_zero(self) -> bool:
        return not self.coeffs

    def entry(self, i: int, j: int) -> RPoly:
        """Scalar polynomial sitting in position (i, j), 0-based."""
        return RPoly([c[i, j] for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __add__(self, other: "MatPoly") -> "MatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MatPoly([self.coeff(k) + other.coeff(k) for k in range(n)], self.N)

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return MatPoly([self.coeff(k) - other.coeff(k) for k in range(n)], self.N)

    def __neg__(self) -> "MatPoly":
        return MatPoly([-c for c in self.coeffs], self.N)

    def __mul__(self, other):
        if isinstance(other, MatPoly):
            if self.is_zero() or other.is_zero():
                return MatPoly.zero(self.N)
            out = [MatQ.zero(self.N) for _ in range(self.degree + other.degree + 1)]
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return MatPoly(out, self.N)
        if isinstance(other, MatQ):
            return MatPoly([c * other for c in self.coeffs], self.N)
        if isinstance(other, (int, str, Fraction)):
            s = rat(other)
            return MatPoly([c * s for c in self.coeffs], self.N)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, MatQ):
            return MatPoly([other * c for c in self.coeffs], self.N)
        if isinstance(other, (int, str, Fraction)):
            s = rat(other)
            return MatPoly([c * s for c in self.coeffs], self.N)
        return NotImplemented

    def scale_x(self, k: int) -> "MatPoly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return MatPoly([MatQ.zero(self.N)] * k + list(self.coeffs), self.N)

    def derivative(self) -> "MatPoly":
        return MatPoly([c * k for k, c in enumerate(self.coeffs)][1:], self.N)

    def __call__(self, x) -> MatQ:
        x = rat(x)
        out = MatQ.zero(self.N)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def transpose(self) -> "MatPoly":
        return MatPoly([c.transpose() for c in self.coeffs], self.N)

    def __repr__(self):
        return f"MatPoly(deg={self.degree}, N={self.N})"


class MatLaurent:
    """Matrix Laurent polynomial: finitely many MatQ coefficients keyed by
    integer powers of x (negative powers allowed)."""

    __slots__ = ("terms", "N")

    def __init__(self, terms, n: int):
        clean = {}
        for k, m in dict(terms).items():
            if not m.is_zero():
                clean[int(k)] = m
        self.terms = clean
        self.N = n

    @staticmethod
    def from_poly(p: MatPoly) -> "MatLaurent":
        return MatLaurent({k: c for k, c in enumerate(p.coeffs)}, p.N)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, k: int) -> MatQ:
        return self.terms.get(k, MatQ.zero(self.N))

    def __eq__(self, other):
        if not isinstance(other, MatLaurent):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __add__(self, other: "MatLaurent") -> "MatLaurent":
        keys = set(self.terms) | set(other.terms)
        return MatLaurent({k: self.coeff(k) + other.coeff(k) for k in keys}, self.N)

    def __sub__(self, other: "MatLaurent") -> "MatLaurent":
        keys = set(self.terms) | set(other.terms)
        return MatLaurent({k: self.coeff(k) - other.coeff(k) for k in keys}, self.N)

    def __neg__(self) -> "MatLaurent":
        return MatLaurent({k: -m for k, m in self.terms.items()}, self.N)

    def __mul__(self, other):
        if isinstance(other, MatLaurent):
            out = {}
            for i, a in self.terms.items():
                for j, b in other.terms.items():
                    k = i + j
                    out[k] = out.get(k, MatQ.zero(self.N)) + a * b
            return MatLaurent(out, self.N)
        if isinstance(other, MatQ):
            return MatLaurent({k: m * other for k, m in self.terms.items()}, self.N)
        s = rat(other)
        return MatLaurent({k: m * s for k, m in self.terms.items()}, self.N)

    def __rmul__(self, other):
        if isinstance(other, MatQ):
            return MatLaurent({k: other * m for k, m in self.terms.items()}, self.N)
        s = rat(other)
        return MatLaurent({k: m * s for k, m in self.terms.items()}, self.N)

    def shift(self, k: int) -> "MatLaurent":
        """Multiply by x^k (k may be negative)."""
        return MatLaurent({e + k: m for e, m in self.terms.items()}, self.N)

    def derivative(self) -> "MatLaurent":
        return MatLaurent({k - 1: m * k for k, m in self.terms.items() if k != 0}, self.N)

    def __repr__(self):
        ks = sorted(self.terms)
        return f"MatLaurent(powers={ks}, N={self.N})"


def build_J(n: int) -> MatQ:
    """J = diag(1, 2, ..., N)."""
    return MatQ.diag(range(1, n + 1))


def build_A(a, n: int | None = None) -> MatQ:
    """Strictly lower bidiagonal A with A[k+1, k] = a_k (1-based)."""
    a = [rat(v) for v in a]
    if n is None:
        n = len(a) + 1
    if len(a) != n - 1:
        raise ValueError(f"need {n - 1} subdiagonal entries, got {len(a)}")
    m = [[Fraction(0)] * n for _ in range(n)]
    for k, v in enumerate(a):
        m[k + 1][k] = v
    return MatQ(m)


def _check_strictly_lower(a: MatQ):
    for i in range(a.N):
        for j in range(i, a.N):
            if a[i, j] != 0:
                raise ValueError("matrix must be strictly lower triangular")


def matexp_nilpotent(a: MatQ) -> MatQ:
    """exp of a strictly lower triangular matrix, as an exact finite sum."""
    _check_strictly_lower(a)
    out = MatQ.identity(a.N)
    power = MatQ.identity(a.N)
    for m in range(1, a.N):
        power = power * a
        out = out + power * Fraction(1, factorial(m))
    return out


def exp_nilpotent(a: MatQ, sign: int = 1) -> MatPoly:
    """e^{sign * xA} for strictly lower triangular A, as an exact MatPoly:
    sum over m < N of (sign * A)^m x^m / m!."""
    _check_strictly_lower(a)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    coeffs = [MatQ.identity(a.N)]
    power = MatQ.identity(a.N)
    for m in range(1, a.N):
        power = power * (a * sign)
        coeffs.append(power * Fraction(1, factorial(m)))
    return MatPoly(coeffs, a.N)


def build_K(n: int, nu, a, N: int) -> MatQ:
    """Unipotent lower triangular K_n whose columns are the eigenvectors of
    A(n + nu + 1 + J) - (n + J); equals exp(A (n + nu + 1 + J)).

    Entrywise, (K_n)_{i,j} = (prod_{k=j..i-1} a_k) (n+nu+j+1)_{i-j} / (i-j)!
    in 1-based indices.
    """
    nu = rat(nu)
    A = build_A(a, N)
    J = build_J(N)
    B = A * (MatQ.identity(N) * (n + nu + 1) + J)
    return matexp_nilpotent(B)


def build_K_inverse(n: int, nu, a, N: int) -> MatQ:
    """Exact inverse of build_K: exp(-A (n + nu + 1 + J)); carries the
    alternating signs (-1)^{i-j}."""
    nu = rat(nu)
    A = build_A(a, N)
    J = build_J(N)
    B = A * (MatQ.identity(N) * (n + nu + 1) + J)
    return matexp_nilpotent(-B)
