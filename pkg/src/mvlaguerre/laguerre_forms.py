"""Closed forms tying the matrix family to scalar Laguerre polynomials.

With K_n the unipotent eigenvector matrix of Gamma_n = A(n+nu+1+J) - (n+J)
and R(x,n) = K_n^{-1} P(x,n) e^{xA}, every entry of R is an exact rational
multiple of a scalar Laguerre polynomial:

    R(x,n)[i,j] = xi(n,i,j) L_{n+i-j}^{(nu+j)}(x),   zero when n+i-j < 0.

This module extracts the xi table from the oracle, rebuilds it from the
two-term recursions driven by the diagonal of G(n) and the superdiagonal of
I(n), and checks the nonlinear recursion for the squared norms.  Where a commonly
quoted recursion disagrees with the oracle (a handful of signs and one
Pochhammer subscript), the corrected form is used and the quoted variant's
status is reported alongside.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import OPSeq
from .matrices import MatPoly, MatQ, build_K, build_K_inverse, commutator, exp_nilpotent
from .operators import (DiffOp, casimir_mult, ladder_raising, right_mult,
                        second_order, second_order_diagonalized)
from .scalar import factorial, laguerre_poly, pochhammer, rat_str


class ClosedFormViolation(AssertionError):
    """An entry of R failed the Laguerre proportionality the theory forces."""


def _check(check_id, equation, ok, **extra):
    out = {"check_id": check_id, "equation": equation, "pass": bool(ok)}
    out.update(extra)
    return out


def compute_R(seq: OPSeq, n: int) -> MatPoly:
    spec = seq.spec
    kinv = build_K_inverse(n, spec.nu, spec.a, spec.N)
    return kinv * (seq.P[n] * exp_nilpotent(spec.A, +1))


def verify_K_properties(spec, n_max: int) -> list[dict]:
    """K_n Lambda_n K_n^{-1} = Gamma_n exactly, unit diagonal, and the
    closed-form entries (prod a_k) (n+nu+j+1)_{i-j} / (i-j)!."""
    checks = []
    N, nu = spec.N, spec.nu
    A, J = spec.A, spec.J
    i_mat = MatQ.identity(N)
    for n in range(n_max + 1):
        k = build_K(n, nu, spec.a, N)
        lam = MatQ.diag([-(n + r) for r in range(1, N + 1)])
        gamma = A * (i_mat * (n + nu + 1) + J) - i_mat * n - J
        checks.append(_check(f"K-conjugation n={n}", "triangularizer-conjugation",
                             k * lam * k.inverse() == gamma))
        checks.append(_check(f"K-unipotent n={n}", "triangularizer-unipotent",
                             all(k[r, r] == 1 for r in range(N))))
        entry_ok = True
        for ii in range(1, N + 1):
            for jj in range(1, ii + 1):
                prod = Fraction(1)
                for m in range(jj, ii):
                    prod *= spec.a[m - 1]
                expected = prod * pochhammer(nu + jj + n + 1, ii - jj) / factorial(ii - jj)
                if k[ii - 1, jj - 1] != expected:
                    entry_ok = False
        checks.append(_check(f"K-closed-form n={n}", "triangularizer-entries", entry_ok))
        checks.append(_check(f"K-inverse n={n}", "triangularizer-entries",
                             build_K_inverse(n, nu, spec.a, N) == k.inverse()))
    return checks


def verify_diagonalization(spec) -> list[dict]:
    """Conjugating the named operators by e^{xA} collapses them to their
    diagonal forms: the ladder to d_x x - x, the second-order operator to
    d_x^2 x + d_x(1+nu-x+J) - J, and the multiplication Ax - J to -J."""
    a = spec.A
    n = spec.N
    x_i = MatPoly.x_identity(n)
    ladder_diag = DiffOp([-x_i, x_i])
    checks = [
        _check("ladder diagonalization", "diagonalized-eigenproblem",
               ladder_raising(spec).conjugate_exp(a) == ladder_diag),
        _check("second-order diagonalization", "diagonalized-eigenproblem",
               second_order(spec).conjugate_exp(a) == second_order_diagonalized(spec)),
        _check("multiplication diagonalization", "diagonalized-eigenproblem",
               casimir_mult(spec).conjugate_exp(a)
               == right_mult(MatPoly.const(-spec.J))),
    ]
    return checks


def verify_R_eigen(seq: OPSeq) -> list[dict]:
    """R . D_Q = Lambda_n . R with D_Q the diagonalized second-order operator
    and Lambda_n = -(n+J)."""
    spec = seq.spec
    dq = second_order_diagonalized(spec)
    checks = []
    for n in range(seq.n_max + 1):
        r = compute_R(seq, n)
        lam = MatQ.diag([-(n + k) for k in range(1, spec.N + 1)])
        checks.append(_check(f"R eigen-equation n={n}", "diagonalized-eigenproblem",
                             dq.act(r) == MatPoly.const(lam) * r))
    return checks


class XiTable:
    """xi(n,i,j) for 0 <= n <= n_max, 1 <= i,j <= N; zero iff n+i-j < 0."""

    def __init__(self, n_dim: int, n_max: int):
        self.N = n_dim
        self.n_max = n_max
        self.values: dict = {}
        self.provenance: dict = {}

    def set(self, n, i, j, v, how):
        self.values[(n, i, j)] = v
        self.provenance[(n, i, j)] = how

    def get(self, n, i, j) -> Fraction:
        if n + i - j < 0:
            return Fraction(0)
        return self.values[(n, i, j)]

    def records(self):
        for (n, i, j) in sorted(self.values):
            yield {"n": n, "i": i, "j": j, "xi": rat_str(self.values[(n, i, j)]),
                   "provenance": self.provenance[(n, i, j)]}


def extract_xi(seq: OPSeq) -> XiTable:
    """Read xi off the oracle: every R entry must be an exact multiple of
    its Laguerre polynomial (full-polynomial proportionality, not just the
    value at zero); off-pattern entries must vanish identically."""
    spec = seq.spec
    table = XiTable(spec.N, seq.n_max)
    for n in range(seq.n_max + 1):
        r = compute_R(seq, n)
        for i in range(1, spec.N + 1):
            for j in range(1, spec.N + 1):
                p = r.entry(i - 1, j - 1)
                deg = n + i - j
                if deg < 0:
                    if not p.is_zero():
                        raise ClosedFormViolation(
                            f"R({n})[{i},{j}] nonzero below the degree pattern")
                    continue
                lag = laguerre_poly(spec.nu + j, deg)
                if p.is_zero():
                    table.set(n, i, j, Fraction(0), "extracted")
                    continue
                ratio = p.coeff(p.degree) / lag.coeff(p.degree) if p.degree == deg else None
                if ratio is None or ratio * lag != p:
                    raise ClosedFormViolation(
                        f"R({n})[{i},{j}] is not a multiple of L_{deg}^(nu+{j})")
                table.set(n, i, j, ratio, "extracted")
    return table


def compute_GI(seq: OPSeq):
    """G(n) = K_n^{-1} H_n (A^T - 1) H_{n-1}^{-1} K_{n-1} (n >= 1) and
    I(n) = K_n^{-1} H_n J H_n^{-1} K_n; returns (G list, I list, checks).

    Structural facts verified exactly: G diagonal; I bidiagonal upper with
    (I)_{ii} = i; the two identities relating their nontrivial entries back
    to H_n itself."""
    spec = seq.spec
    N, nu = spec.N, spec.nu
    A, J = spec.A, spec.J
    i_mat = MatQ.identity(N)
    ks = [build_K(n, nu, spec.a, N) for n in range(seq.n_max + 1)]
    kinvs = [build_K_inverse(n, nu, spec.a, N) for n in range(seq.n_max + 1)]
    G = [None]
    I = []
    checks = []
    for n in range(seq.n_max + 1):
        hjh = seq.H[n] * J * seq.H[n].inverse()
        i_n = kinvs[n] * hjh * ks[n]
        I.append(i_n)
        ok_struct = all(
            i_n[r, c] == (r + 1 if r == c else 0)
            for r in range(N) for c in range(N) if c != r + 1
        )
        checks.append(_check(f"I(n) bidiagonal n={n}", "coupling-structure", ok_struct))
        ok_super = all(i_n[r, r + 1] == hjh[r, r + 1] for r in range(N - 1))
        checks.append(_check(f"I(n) superdiagonal n={n}", "coupling-diagonal-entries", ok_super))
        if n >= 1:
            hth = seq.H[n] * (A.transpose() - i_mat) * seq.H[n - 1].inverse()
            g_n = kinvs[n] * hth * ks[n - 1]
            G.append(g_n)
            ok_diag = all(g_n[r, c] == 0 for r in range(N) for c in range(N) if r != c)
            checks.append(_check(f"G(n) diagonal n={n}", "coupling-structure", ok_diag))
            ok_eq = all(g_n[r, r] == hth[r, r] for r in range(N))
            checks.append(_check(f"G(n) diagonal entries n={n}", "coupling-diagonal-entries", ok_eq))
    return G, I, checks


def xi_by_recursion(seq: OPSeq, G, I) -> XiTable:
    """Rebuild the xi table from seeds and two-term recursions only; no
    polynomial extraction involved.

    Seeds: xi(0,i,j) = (K_0^{-1})_{ij} (i-j)!/(nu+j+1)_{i-j}, and the n = 1
    boundary xi(1,i,i+1) = -I(0)_{i,i+1} (the oracle fixes the minus sign;
    the printed form carries +).  Interior (n+i-j > 0):

        xi(n,1,j) = G(n)_{11} / (n+nu+1) xi(n-1,1,j)
        xi(n,i,j) = -a_{i-1} xi(n,i-1,j) + G(n)_{ii} / (n+nu+i) xi(n-1,i,j)

    (corrected sign on the a-term).  Boundary antidiagonal j = n+i advanced
    by the corrected relation

        a_{i-1} xi(n+1,i-1,j) = (G(n+1)_{ii}/(n+1+nu+i) + 1
                                 - a_i I(n)_{i,i+1}) xi(n,i,j)
                                + I(n)_{i,i+1} G(n)_{i+1,i+1}/(n+nu+i+1)
                                  xi(n-1,i+1,j).
    """
    spec = seq.spec
    N, nu = spec.N, spec.nu
    a = spec.a
    table = XiTable(N, seq.n_max)
    kinv0 = build_K_inverse(0, nu, a, N)
    for i in range(1, N + 1):
        for j in range(1, i + 1):
            v = kinv0[i - 1, j - 1] * factorial(i - j) / pochhammer(nu + j + 1, i - j)
            table.set(0, i, j, v, "recursed")
    if seq.n_max >= 1:
        for i in range(1, N):
            table.set(1, i, i + 1, -I[0][i - 1, i], "recursed")
    # boundary antidiagonals: for column j, entries (n, i) with n = j - i
    for j in range(1, N + 1):
        for i in range(j - 1, 0, -1):
            n = j - i  # producing xi(n, i, j) from (n-1, i+1) and (n-2, i+2)
            if n > seq.n_max or n < 2:
                continue
            m, ii = n - 1, i + 1
            lead = G[m + 1][ii - 1, ii - 1] / (m + 1 + nu + ii) + 1
            cross = Fraction(0)
            if ii < N:
                lead -= a[ii - 1] * I[m][ii - 1, ii]
                cross = I[m][ii - 1, ii] * G[m][ii, ii] / (m + nu + ii + 1)
            v = lead * table.get(m, ii, j)
            if ii < N:
                v += cross * table.get(m - 1, ii + 1, j)
            table.set(n, i, j, v / a[i - 1], "recursed")
    for n in range(1, seq.n_max + 1):
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if n + i - j <= 0 or (n, i, j) in table.values:
                    continue
                if i == 1:
                    v = G[n][0, 0] / (n + nu + 1) * table.get(n - 1, 1, j)
                else:
                    v = -a[i - 2] * table.get(n, i - 1, j) \
                        + G[n][i - 1, i - 1] / (n + nu + i) * table.get(n - 1, i, j)
                table.set(n, i, j, v, "recursed")
    return table


def verify_xi_tables(extracted: XiTable, recursed: XiTable) -> list[dict]:
    checks = []
    keys = sorted(set(extracted.values) | set(recursed.values))
    ok = True
    first_bad = None
    for k in keys:
        a = extracted.values.get(k)
        b = recursed.values.get(k)
        if a != b:
            ok = False
            first_bad = k
            break
    checks.append(_check("xi extraction equals recursion",
                         "multiplier-recursions", ok,
                         first_mismatch=str(first_bad) if first_bad else None))
    zero_ok = all(extracted.values.get((n, i, j)) is not None
                  for (n, i, j) in extracted.values if n + i - j >= 0)
    checks.append(_check("xi zero pattern", "multiplier-zero-pattern", zero_ok))
    return checks


def verify_displayed_xi_recursions(seq: OPSeq, xi: XiTable, G, I) -> list[dict]:
    """Status of the printed variants against the oracle table: the interior
    a-term sign, the n=1 boundary sign, and the printed N1/N2 coefficients of
    the i=1 boundary relation.  These are reports, not gates; the package's
    own recursion (the corrected one) is gated by verify_xi_tables."""
    spec = seq.spec
    nu, a, N = spec.nu, spec.a, spec.N
    out = []
    disp_ok, corr_ok = True, True
    for (n, i, j) in sorted(xi.values):
        if n < 1 or i < 2 or n + i - j <= 0:
            continue
        prev = xi.get(n, i - 1, j)
        up = xi.get(n - 1, i, j)
        tail = G[n][i - 1, i - 1] / (n + nu + i) * up
        if xi.get(n, i, j) != a[i - 2] * prev + tail:
            disp_ok = False
        if xi.get(n, i, j) != -a[i - 2] * prev + tail:
            corr_ok = False
    out.append(_check("interior recursion, corrected sign", "multiplier-interior-recursion", corr_ok,
                      displayed_form_pass=disp_ok))
    if seq.n_max >= 1:
        disp = all(xi.get(1, i, i + 1) == I[0][i - 1, i] for i in range(1, N))
        corr = all(xi.get(1, i, i + 1) == -I[0][i - 1, i] for i in range(1, N))
        out.append(_check("boundary seed xi(1,i,i+1), corrected sign",
                          "multiplier-boundary-seed", corr, displayed_form_pass=disp))
    disp_ok, corr_ok, tested = True, True, False
    for n in range(1, seq.n_max):
        j = n + 1
        if j > N or N < 2:
            continue
        tested = True
        n1_disp = (nu + 2 * n + 3) * G[n + 1][0, 0] / (n + nu + 2) + (n + 2 + nu) \
            + I[n][0, 1] * (nu + 2 * n + 2) * a[0]
        n2_disp = I[n][0, 1] * (nu + 2 * n + 2) * G[n][1, 1] / (n + nu + 2)
        if n1_disp * xi.get(n, 1, j) != n2_disp * xi.get(n - 1, 2, j):
            disp_ok = False
        n1 = G[n + 1][0, 0] / (n + nu + 2) + 1 - I[n][0, 1] * a[0]
        n2 = -I[n][0, 1] * G[n][1, 1] / (n + nu + 2)
        if n1 * xi.get(n, 1, j) != n2 * xi.get(n - 1, 2, j):
            corr_ok = False
    if tested:
        out.append(_check("i=1 boundary relation, derived coefficients",
                          "multiplier-boundary-relation", corr_ok, displayed_form_pass=disp_ok))
    return out


def h_recursion_next(H: list, A: MatQ, J: MatQ) -> MatQ:
    """H_{n+2} from (H_{n-1},) H_n, H_{n+1} through the delta-coefficient
    identities; the H_{n-1} term drops when producing H_2 because the
    sequence vanishes at negative indices."""
    i = MatQ.identity(A.N)
    am1 = A - i
    at1 = A.transpose() - i
    n = len(H) - 2  # producing index n+2
    hn, hn1 = H[n], H[n + 1]
    hjh_n = hn * J * hn.inverse()
    hjh_n1 = hn1 * J * hn1.inverse()
    bn = -commutator(J, hjh_n) + am1 * hn1 * at1 * hn.inverse()
    if n >= 1:
        bn = bn - hn * at1 * H[n - 1].inverse() * am1
    inner = (bn * am1 - i * 2 - hjh_n1 + hjh_n
             + am1 * commutator(J, hjh_n1) + am1 * (hn1 * at1 * hn.inverse()) * am1)
    return am1.inverse() * am1.inverse() * inner * hn1 * at1.inverse()


def verify_H_recursion(seq: OPSeq) -> list[dict]:
    checks = []
    if seq.n_max < 2:
        return checks
    H = [seq.H[0], seq.H[1]]
    for n in range(2, seq.n_max + 1):
        nxt = h_recursion_next(H, seq.spec.A, seq.spec.J)
        checks.append(_check(f"H-recursion n={n}", "norm-three-term-recursion", nxt == seq.H[n]))
        H.append(seq.H[n])
    return checks


def x1_from_h0(h0: MatQ, nu, a) -> MatQ:
    """Bootstrap X(1) from H_0 alone: zero pattern above the superdiagonal,
    superdiagonal X(1)_{i,i+1} = -(H_0 J H_0^{-1})_{i,i+1} (oracle-fixed
    sign), and the entrywise recursions filling each row right to left."""
    N = h0.N
    nu = Fraction(nu)
    J = MatQ.diag(range(1, N + 1))
    hjh = h0 * J * h0.inverse()
    x = [[Fraction(0)] * N for _ in range(N)]
    for i in range(1, N):
        x[i - 1][i] = -hjh[i - 1, i]
    for i in range(1, N + 1):
        for j in range(min(i, N), 0, -1):
            acc = Fraction(0)
            if j + 1 <= N:
                acc += a[j - 1] * (nu + j + 1) * x[i - 1][j]
            if i >= 2:
                acc -= a[i - 2] * (nu + i + 1) * x[i - 2][j - 1]
            if i == j:
                acc += 1 + nu + i
            x[i - 1][j - 1] = -acc / (1 + i - j)
    return MatQ(x)


def h1_from_h0(h0: MatQ, nu, a) -> MatQ:
    """H_1 = (X(1) + [J, X(1)]) H_0 (A^T - 1)^{-1}."""
    N = h0.N
    from .matrices import build_A

    x1 = x1_from_h0(h0, nu, a)
    J = MatQ.diag(range(1, N + 1))
    at1 = build_A(a, N).transpose() - MatQ.identity(N)
    return (x1 + commutator(J, x1)) * h0 * at1.inverse()


def verify_X1_bootstrap(seq: OPSeq) -> list[dict]:
    spec = seq.spec
    checks = []
    x1 = x1_from_h0(seq.H[0], spec.nu, spec.a)
    checks.append(_check("X(1) from H_0", "norm-bootstrap", x1 == seq.X[1]))
    zero_ok = all(seq.X[1][i, j] == 0
                  for i in range(spec.N) for j in range(spec.N) if j > i + 1)
    checks.append(_check("X(1) zero pattern", "norm-bootstrap", zero_ok))
    if seq.n_max >= 1:
        h1 = h1_from_h0(seq.H[0], spec.nu, spec.a)
        checks.append(_check("H_1 from H_0", "norm-bootstrap", h1 == seq.H[1]))
    return checks


def verify_Q_relation(seq: OPSeq) -> list[dict]:
    """-Q(x,n) J = x Q'(x,n) - (n+J) Q(x,n) + H_n (A-1)^* H_{n-1}^{-1}
    Q(x,n-1), with the last term absent at n = 0."""
    spec = seq.spec
    A, J = spec.A, spec.J
    i = MatQ.identity(spec.N)
    ex = exp_nilpotent(A, +1)
    checks = []
    q = [seq.P[n] * ex for n in range(seq.n_max + 1)]
    for n in range(seq.n_max + 1):
        lhs = -(q[n] * J)
        rhs = q[n].derivative().scale_x(1) - MatPoly.const(i * n + J) * q[n]
        if n >= 1:
            coupling = seq.H[n] * (A.transpose() - i) * seq.H[n - 1].inverse()
            rhs = rhs + MatPoly.const(coupling) * q[n - 1]
        checks.append(_check(f"Q relation n={n}", "conjugated-derivative-relation", lhs == rhs))
    return checks


def verify_X_recursion(seq: OPSeq, G, I) -> list[dict]:
    """Entrywise consequences of the zeroth-coefficient identity: row 1 and
    rows i >= 2, plus the G(n)_{ii} = X(n)_{ii} diagonal claim.

    The printed item (a) drops the X(n+1) term and swaps H_n J H_n^{-1} for
    I(n); its status is reported against the oracle."""
    spec = seq.spec
    nu, a, N = spec.nu, spec.a, spec.N
    checks = []
    corr_ok, disp_ok = True, True
    for n in range(1, seq.n_max):
        hjh = seq.H[n] * spec.J * seq.H[n].inverse()
        for jj in range(1, N + 1):
            xa = seq.X[n][0, jj] * a[jj - 1] if jj < N else Fraction(0)
            lhs_corr = (n if jj == 1 else 0) + xa - seq.X[n][0, jj - 1] + seq.X[n + 1][0, jj - 1]
            rhs_corr = -((n + 1 + nu) if jj == 1 else 0) - hjh[0, jj - 1]
            if lhs_corr != rhs_corr:
                corr_ok = False
            lhs_disp = (n if jj == 1 else 0) + xa - seq.X[n][0, jj - 1]
            rhs_disp = -((n + 1 + nu) if jj == 1 else 0) - I[n][0, jj - 1]
            if lhs_disp != rhs_disp:
                disp_ok = False
        for ii in range(2, N + 1):
            for jj in range(1, N + 1):
                xa = seq.X[n][ii - 1, jj] * a[jj - 1] if jj < N else Fraction(0)
                lhs = (n if ii == jj else 0) + xa - a[ii - 2] * seq.X[n + 1][ii - 2, jj - 1] \
                    - seq.X[n][ii - 1, jj - 1] + seq.X[n + 1][ii - 1, jj - 1]
                rhs = -((n + 1 + nu) if ii == jj else 0) - hjh[ii - 1, jj - 1]
                if lhs != rhs:
                    corr_ok = False
    checks.append(_check("X recursion rows, derived form", "zero-shift-coefficient-entrywise",
                         corr_ok, displayed_form_pass=disp_ok))
    gx_ok = all(G[n][r, r] == seq.X[n][r, r]
                for n in range(1, seq.n_max + 1) for r in range(N))
    checks.append(_check("G(n) diagonal equals X(n) diagonal",
                         "coupling-diagonal-claim", gx_ok))
    return checks
