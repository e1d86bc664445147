"""Weight specification and exact Gamma-normalized moment tables.

The weight on [0, infinity) is

    W(x) = e^{xA} T(x) e^{xA^T},   T(x) = e^{-x} sum_k delta_k x^{nu+k} E_kk,

with A strictly lower bidiagonal.  Dividing every moment by Gamma(nu+1)
makes the whole table rational:

    m_s[i,j] = sum_{r<=min(i,j)} delta_r c_{i,r} c_{j,r} (nu+1)_{s+i+j-r}

where c_{i,r} = (A^{i-r})_{i,r} / (i-r)! (1-based indices throughout the
formulas; storage is 0-based).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .matrices import MatPoly, MatQ, build_A, build_J, exp_nilpotent
from .scalar import RPoly, factorial, pochhammer, rat


class UnsupportedWeightError(ValueError):
    """Moment computation is only exact for phi(x) = x."""


@dataclass(frozen=True)
class WeightSpec:
    N: int
    nu: Fraction
    a: tuple
    delta: tuple
    phi: RPoly = field(default_factory=RPoly.x)

    def __post_init__(self):
        object.__setattr__(self, "nu", rat(self.nu))
        object.__setattr__(self, "a", tuple(rat(v) for v in self.a))
        object.__setattr__(self, "delta", tuple(rat(v) for v in self.delta))
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.nu <= 0:
            raise ValueError("nu must be > 0")
        if len(self.a) != self.N - 1:
            raise ValueError("need N-1 subdiagonal entries a_k")
        if any(v == 0 for v in self.a):
            raise ValueError("a_k must be nonzero")
        if len(self.delta) != self.N:
            raise ValueError("need N diagonal weights delta_k")
        if any(v <= 0 for v in self.delta):
            raise ValueError("delta_k must be positive")

    @property
    def A(self) -> MatQ:
        return build_A(self.a, self.N)

    @property
    def J(self) -> MatQ:
        return build_J(self.N)

    def phi_is_x(self) -> bool:
        return self.phi == RPoly.x()

    def to_dict(self) -> dict:
        from .scalar import rat_str

        return {
            "N": self.N,
            "nu": rat_str(self.nu),
            "a": [rat_str(v) for v in self.a],
            "delta": [rat_str(v) for v in self.delta],
        }


def _exp_coeff(spec: WeightSpec, i: int, r: int) -> Fraction:
    """c_{i,r} = prod_{k=r}^{i-1} a_k / (i-r)!, 1-based i >= r."""
    out = Fraction(1, factorial(i - r))
    for k in range(r, i):
        out *= spec.a[k - 1]
    return out


def moment(spec: WeightSpec, s: int) -> MatQ:
    """Normalized moment m_s = integral of x^s W(x) dx / Gamma(nu+1)."""
    if not spec.phi_is_x():
        raise UnsupportedWeightError("moments require phi(x) = x")
    n = spec.N
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            v = Fraction(0)
            for r in range(1, j + 1):
                v += (
                    spec.delta[r - 1]
                    * _exp_coeff(spec, i, r)
                    * _exp_coeff(spec, j, r)
                    * pochhammer(spec.nu + 1, s + i + j - r)
                )
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = v
    return MatQ(rows)


def moment_via_expansion(spec: WeightSpec, s: int) -> MatQ:
    """Independent moment path: expand e^{xA} T_pol(x) e^{xA^T} entrywise as
    a polynomial and integrate monomials against e^{-x} x^nu by Gamma ratios.
    Used as the oracle's oracle; must agree with `moment` exactly."""
    if not spec.phi_is_x():
        raise UnsupportedWeightError("moments require phi(x) = x")
    body = weight_polynomial_part(spec)
    n = spec.N
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            p = body.entry(i, j)
            row.append(sum(
                (c * pochhammer(spec.nu + 1, s + m) for m, c in enumerate(p.coeffs)),
                Fraction(0),
            ))
        rows.append(row)
    return MatQ(rows)


def weight_polynomial_part(spec: WeightSpec) -> MatPoly:
    """The matrix polynomial G(x) with W(x) = e^{-x} x^nu G(x):
    G = e^{xA} diag(delta_k x^k) e^{xA^T}."""
    n = spec.N
    left = exp_nilpotent(spec.A, +1)
    diag = MatPoly(
        [MatQ.zero(n)]
        + [MatQ.diag([spec.delta[k] if k == m else 0 for k in range(n)]) for m in range(n)],
        n,
    )
    # diag above is sum_k delta_k x^{k+1} E_kk written coefficient by coefficient
    return left * diag * left.transpose()


class MomentTable:
    """Read-only table m_0..m_depth for one WeightSpec."""

    def __init__(self, spec: WeightSpec, depth: int):
        self.spec = spec
        self.depth = depth
        self.moments = [moment(spec, s) for s in range(depth + 1)]

    def __getitem__(self, s: int) -> MatQ:
        if s > self.depth:
            raise IndexError(f"moment table depth {self.depth} < {s}")
        return self.moments[s]


def inner_product(p: MatPoly, q: MatPoly, table: MomentTable) -> MatQ:
    """<P, Q> = sum_{a,b} P_a m_{a+b} Q_b^T, exactly."""
    n = table.spec.N
    out = MatQ.zero(n)
    for a, pa in enumerate(p.coeffs):
        if pa.is_zero():
            continue
        for b, qb in enumerate(q.coeffs):
            if qb.is_zero():
                continue
            out = out + pa * table[a + b] * qb.transpose()
    return out


def h0_as_displayed(spec: WeightSpec) -> MatQ:
    """H_0 / Gamma(nu+1) evaluated with the Pochhammer index (nu)_{i+j-r}
    exactly as commonly quoted, for the index-discrepancy
    probe.  Dividing the printed Gamma(nu)-normalized value by Gamma(nu+1)
    turns (nu)_m Gamma(nu) into (nu)_m / nu."""
    n = spec.N
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = Fraction(0)
            for r in range(1, min(i, j) + 1):
                v += (
                    spec.delta[r - 1]
                    * _exp_coeff(spec, i, r)
                    * _exp_coeff(spec, j, r)
                    * pochhammer(spec.nu, i + j - r)
                    / spec.nu
                )
            rows[i - 1][j - 1] = v
    return MatQ(rows)


def h0_index_corrected(spec: WeightSpec) -> MatQ:
    """Same formula with the index raised by one, (nu)_{i+j-r+1}; this is the
    variant the direct integral produces."""
    n = spec.N
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            v = Fraction(0)
            for r in range(1, min(i, j) + 1):
                v += (
                    spec.delta[r - 1]
                    * _exp_coeff(spec, i, r)
                    * _exp_coeff(spec, j, r)
                    * pochhammer(spec.nu, i + j - r + 1)
                    / spec.nu
                )
            rows[i - 1][j - 1] = v
    return MatQ(rows)
