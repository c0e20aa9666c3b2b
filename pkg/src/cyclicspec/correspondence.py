"""Spectral data for cyclic Higgs fields with equal ranks over a smooth curve.

Everything lives on the chart S = k[x][t]/(c). A module over S is a free
k[x]-module with a t-action matrix (an :class:`SLattice`); an effective
divisor is a finite-colength ideal of S, stored as the Hermite form of its
k[x]-lattice in the basis 1, t, ..., t^(p-1).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from math import ceil

from .errors import PreconditionError, UnsupportedRegime
from .higgs import CyclicHiggsData, SLattice, common_component_check, loop_composite
from .polyalg import linalg
from .polyalg.fields import PrimeField
from .polyalg.matrix import Matrix, adjugate, char_poly, companion, det, inverse_over_field
from .polyalg.normal_forms import hermite_form, lattice_length, resultant, smith_normal_form
from .polyalg.poly import (Poly, evaluate_x, gcd_over_fraction_field, partial_x, poly_gcd,
                           poly_lcm, poly_ring)
from .polyalg.ratfunc import RationalFunctionField
from .polyalg.roots import is_irreducible_fp, roots

SPECIALIZATION_TRIES = 40


# ------------------------------------------------------------------ the ring S

def s_ring(field):
    return poly_ring(poly_ring(field, "x"), "t")


def s_reduce(f: Poly, c: Poly) -> Poly:
    return f.divmod(c)[1]


def s_vector(f: Poly, c: Poly) -> list:
    """Coefficient vector of f mod c in the basis 1, t, ..., t^(p-1)."""
    f = s_reduce(f, c)
    p = c.degree()
    R = c.ring.base
    return [f.coeff(j) for j in range(p)]


def s_element(v, c: Poly) -> Poly:
    return Poly(c.ring, list(v))


def multiplication_matrix(f: Poly, c: Poly) -> Matrix:
    """Matrix of s -> f s on S in the power basis."""
    t = c.ring.gen
    cols = []
    g = s_reduce(f, c)
    for _ in range(c.degree()):
        cols.append(s_vector(g, c))
        g = s_reduce(g * t, c)
    return Matrix.from_columns(c.ring.base, cols, c.degree())


# ------------------------------------------------------------------ smoothness

@dataclass
class SmoothCertificate:
    verdict: str                      # "smooth" | "singular" | "unknown"
    witness: dict = dc_field(default_factory=dict)

    @property
    def smooth(self) -> bool:
        return self.verdict == "smooth"


def _specialize(f: Poly, x0) -> Poly:
    return evaluate_x(f, x0)


def smoothness_certificate(c: Poly) -> SmoothCertificate:
    if c.degree() < 1 or not c.is_monic():
        raise PreconditionError("spectral curve must be monic of positive degree in t")
    ct, cx = c.derivative(), partial_x(c)
    r1 = resultant(c, ct) if ct else c.ring.base.zero
    r2 = resultant(c, cx) if cx else c.ring.base.zero
    g = poly_gcd(r1, r2)
    if g.degree() == 0:
        return SmoothCertificate("smooth", {"resultant_gcd": g})
    if g.is_zero():
        # c and c_t share a factor over k(x): check whether c_x vanishes on it too
        h = gcd_over_fraction_field(c, ct) if ct else c
        if cx.is_zero() or gcd_over_fraction_field(h, cx).degree() > 0:
            return SmoothCertificate("singular", {"component": h})
        return SmoothCertificate("unknown", {"resultant_gcd": g})
    xs = roots(g)
    if xs is None:
        return SmoothCertificate("unknown", {"resultant_gcd": g})
    for x0 in xs:
        h = poly_gcd(poly_gcd(_specialize(c, x0), _specialize(ct, x0)), _specialize(cx, x0))
        if h.degree() > 0:
            ts = roots(h) or []
            w = {"x": x0, "t": ts[0]} if ts else {"x": x0, "t_factor": h}
            return SmoothCertificate("singular", w)
    return SmoothCertificate("unknown", {"resultant_gcd": g})


# ------------------------------------------------------------------ irreducibility

def _taylor_shift(a: Poly, x0, ring_u) -> Poly:
    """a(u + x0) as a polynomial in u."""
    u = ring_u.gen
    return a(u + x0)


def _newton_bound(c: Poly) -> int:
    p = c.degree()
    b = 0
    for j in range(p):
        a = c.coeff(j)
        if a:
            b = max(b, ceil(a.degree() / (p - j)))
    return b


def _good_point(c: Poly):
    """First x0 in k with c(x0, t) squarefree, or None."""
    F = c.ring.base.base
    cands = range(SPECIALIZATION_TRIES)
    if isinstance(F, PrimeField):
        cands = range(min(F.p, SPECIALIZATION_TRIES))
    for n in cands:
        x0 = F.convert(n)
        c0 = _specialize(c, x0)
        d0 = c0.derivative()
        if d0 and poly_gcd(c0, d0).degree() == 0:
            return x0
    return None


def linear_factor(c: Poly):
    """(found, g): g in k[x] with c(x, g(x)) = 0, via Newton lifting of simple
    roots at a squarefree fibre. ``found`` is None if no usable fibre exists."""
    Rx = c.ring.base
    F = Rx.base
    x0 = _good_point(c)
    if x0 is None:
        return None, None
    c0 = _specialize(c, x0)
    rs = roots(c0)
    if rs is None:
        return None, None
    B = _newton_bound(c)
    Ru = poly_ring(F, "u")
    cu = Poly(poly_ring(Ru, "t"), [_taylor_shift(a, x0, Ru) for a in c.coeffs])
    dcu = cu.derivative()
    back = Rx.gen - x0
    for r in rs:
        slope = dcu(Ru.convert(r)).coeff(0)
        inv = F.inv(slope)
        g = Ru.convert(r)
        for k in range(1, B + 1):
            val = cu(g)
            gk = F.neg(F.mul(val.coeff(k), inv))
            g = g + Ru.monomial(gk, k)
        gx = g(back)
        if c(gx).is_zero():
            return True, gx
    return False, None


def irreducibility(c: Poly) -> tuple[bool | None, str]:
    """Verdict on irreducibility of c over k(x), with the reason."""
    p = c.degree()
    if p <= 0:
        return False, "constant"
    if p == 1:
        return True, "linear in t"
    ct = c.derivative()
    if ct.is_zero():
        return None, "inseparable in t"
    if gcd_over_fraction_field(c, ct).degree() > 0:
        return False, "not squarefree"
    F = c.ring.base.base
    if isinstance(F, PrimeField):
        for n in range(min(F.p, SPECIALIZATION_TRIES)):
            if is_irreducible_fp(_specialize(c, F.convert(n))):
                return True, f"irreducible fibre at x={n}"
    found, g = linear_factor(c)
    if found:
        return False, f"linear factor t - ({g})"
    if found is False and p <= 3:
        return True, "no linear factor, degree <= 3"
    return None, "undecided"


def is_irreducible(c: Poly) -> bool | None:
    return irreducibility(c)[0]


def regime_check(c: Poly) -> None:
    cert = smoothness_certificate(c)
    if not cert.smooth:
        raise UnsupportedRegime(f"spectral curve not certified smooth ({cert.verdict})")
    verdict, why = irreducibility(c)
    if verdict is not True:
        raise UnsupportedRegime(f"spectral curve not certified irreducible ({why})")


def invertibility_certificate(F: SLattice, c: Poly, checked: bool = False) -> bool:
    if not checked:
        regime_check(c)
    return char_poly(F.T, "t") == c


# ------------------------------------------------------------------ divisors

@dataclass(frozen=True)
class EffectiveDivisor:
    lattice: Matrix     # p x p Hermite form over k[x]
    c: Poly

    @property
    def length(self) -> int:
        return lattice_length(self.lattice)

    def generators(self) -> list[Poly]:
        return [s_element(col, self.c) for col in self.lattice.columns()]

    def __eq__(self, other):
        return isinstance(other, EffectiveDivisor) and self.c == other.c and self.lattice == other.lattice

    def __hash__(self):
        return hash(self.c)

    def contains(self, f: Poly) -> bool:
        v = Matrix.from_columns(self.c.ring.base, [s_vector(f, self.c)], self.c.degree())
        return hermite_form(self.lattice.hstack(v)) == self.lattice

    def is_ideal(self) -> bool:
        t = self.c.ring.gen
        return all(self.contains(g * t) for g in self.generators())


def _divisor_from_generators(cols, c: Poly) -> EffectiveDivisor:
    M = Matrix.from_columns(c.ring.base, cols, c.degree())
    H = hermite_form(M)
    if H.ncols != c.degree():
        raise PreconditionError("ideal lattice does not have full rank")
    return EffectiveDivisor(H, c)


def divisor_of_map(psi: Matrix, F: SLattice, G: SLattice, c: Poly | None = None) -> EffectiveDivisor:
    """D = Ann_S(coker psi) for a t-equivariant injective psi: F -> G."""
    if psi @ F.T != G.T @ psi:
        raise PreconditionError("map is not t-equivariant")
    delta = det(psi)
    if delta.is_zero():
        raise PreconditionError("map has zero determinant: not an effective divisor")
    c = c if c is not None else char_poly(G.T, "t")
    p = c.degree()
    if p != G.rank:
        raise PreconditionError("S-rank mismatch between curve and target lattice")
    R = psi.ring
    # s annihilates coker psi  <=>  adj(psi) s(T_G) = 0 mod delta
    adj = adjugate(psi)
    cols, A = [], adj
    for _ in range(p):
        cols.append([a for row in A.rows for a in row])
        A = A @ G.T
    K = Matrix.from_columns(R, cols, G.rank * G.rank)
    _, D, V = smith_normal_form(K)
    scale = []
    for i in range(p):
        d = D[i, i]
        scale.append(R.one if d.is_zero() else delta.exact_div(poly_gcd(delta, d)))
    L = V @ Matrix.diagonal(R, scale)
    return _divisor_from_generators(L.columns(), c)


def divisor_of_function(f: Poly, c: Poly) -> EffectiveDivisor:
    M = multiplication_matrix(f, c)
    if det(M).is_zero():
        raise PreconditionError("zero divisor in S")
    S = SLattice(c.degree(), companion(c))
    return divisor_of_map(M, S, S, c)


def unit_divisor(c: Poly) -> EffectiveDivisor:
    return EffectiveDivisor(Matrix.identity(c.ring.base, c.degree()), c)


def sum_divisors(D: EffectiveDivisor, E: EffectiveDivisor) -> EffectiveDivisor:
    """Ideal product; lengths add on a smooth curve."""
    if D.c != E.c:
        raise PreconditionError("divisors on different curves")
    c = D.c
    cols = [s_vector(g * h, c) for g in D.generators() for h in E.generators()]
    return _divisor_from_generators(cols, c)


def divisor_sum(divs) -> EffectiveDivisor:
    divs = list(divs)
    acc = divs[0]
    for D in divs[1:]:
        acc = sum_divisors(acc, D)
    return acc


def check_divisor_relation(D, c: Poly) -> bool:
    total = divisor_sum(D) if D else unit_divisor(c)
    return total == divisor_of_function(c.ring.gen, c)


@dataclass
class CokernelModule:
    """coker(psi) as a k-vector space with commuting x and t action matrices."""
    dim: int
    X: list
    T: list
    field: object


def cokernel_module(psi: Matrix, G: SLattice) -> CokernelModule:
    """Independent construction via the Smith form of psi."""
    R = psi.ring
    F = R.base
    U, D, _ = smith_normal_form(psi)
    Uinv = inverse_over_field(U.change_ring(RationalFunctionField(R))).map(lambda a: a.num, R)
    n = psi.nrows
    ds = [D[i, i] for i in range(n)]
    blocks = []   # (component, power)
    for i, d in enumerate(ds):
        for a in range(d.degree()):
            blocks.append((i, a))
    index = {b: j for j, b in enumerate(blocks)}
    dim = len(blocks)

    def coords(vec):
        # vec in k[x]^n expressed in the U-basis, reduced mod each d_i
        w = [sum((U[i, j] * vec[j] for j in range(n)), R.zero) for i in range(n)]
        out = [F.zero] * dim
        for i, wi in enumerate(w):
            if ds[i].degree() <= 0:
                continue
            r = wi.divmod(ds[i])[1]
            for a in range(ds[i].degree()):
                out[index[(i, a)]] = r.coeff(a)
        return out

    X_cols, T_cols = [], []
    x = R.gen
    for (i, a) in blocks:
        # representative in k[x]^n of x^a e_i in U-coordinates is U^{-1}(x^a e_i)
        rep = [Uinv[r, i] * R.monomial(F.one, a) for r in range(n)]
        X_cols.append(coords([v * x for v in rep]))
        T_cols.append(coords([sum((G.T[r, s] * rep[s] for s in range(n)), R.zero) for r in range(n)]))
    X = [list(r) for r in zip(*X_cols)] if dim else []
    T = [list(r) for r in zip(*T_cols)] if dim else []
    return CokernelModule(dim, X, T, F)


def _mat_poly_eval(a: Poly, X, F):
    """a(X) for a square k-matrix X given as row lists."""
    n = len(X)
    acc = [[F.zero] * n for _ in range(n)]
    for coef in reversed(a.coeffs):
        acc = linalg.matmul(acc, X, F) if n else acc
        for i in range(n):
            acc[i][i] = F.add(acc[i][i], coef)
    return acc


def annihilator_matches(D: EffectiveDivisor, M: CokernelModule) -> bool:
    """Oracle: I_D kills M and S/I_D acts faithfully on M."""
    F = M.field
    n = M.dim
    if n == 0:
        return D.length == 0
    zero = [[F.zero] * n for _ in range(n)]

    def act(s: Poly):
        acc = zero
        Tp = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
        for j in range(s.degree() + 1):
            term = linalg.matmul(_mat_poly_eval(s.coeff(j), M.X, F), Tp, F)
            acc = [[F.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(acc, term)]
            Tp = linalg.matmul(Tp, M.T, F)
        return acc

    if any(act(g) != zero for g in D.generators()):
        return False
    H = D.lattice
    c = D.c
    Rx = c.ring.base
    flat = []
    for j in range(c.degree()):
        for a in range(H[j, j].degree()):
            s = c.ring.monomial(Rx.monomial(F.one, a), j)
            flat.append([v for row in act(s) for v in row])
    return linalg.rank(flat, n * n, F) == len(flat) if flat else True


# ------------------------------------------------------------------ forward / reverse

@dataclass
class SpectralData:
    c: Poly
    L0: SLattice
    divisors: list

    @property
    def m(self) -> int:
        return len(self.divisors)


def forward_spectral_data(H: CyclicHiggsData, checked: bool = False) -> SpectralData:
    if len(set(H.dims)) != 1:
        raise UnsupportedRegime("forward spectral data needs equal ranks")
    rep = common_component_check(H)
    if not rep.strict or any(rep.q):
        raise UnsupportedRegime("spectral curves do not coincide")
    c = rep.common
    if not checked:
        regime_check(c)
    Fs = [SLattice(H.dims[i], loop_composite(H, i)) for i in range(H.m)]
    for Fi in Fs:
        if not invertibility_certificate(Fi, c, checked=True):
            raise UnsupportedRegime("vertex lattice is not an invertible S-module")
    divs = [divisor_of_map(H.phi[i], Fs[i], Fs[(i + 1) % H.m], c) for i in range(H.m)]
    return SpectralData(c, Fs[0], divs)


def _to_k(M: Matrix, K: RationalFunctionField) -> Matrix:
    return M.change_ring(K)


def _integral(M: Matrix, R) -> Matrix:
    def conv(a):
        if a.den != R.one:
            raise ArithmeticError(f"entry {a} is not a polynomial")
        return a.num
    return M.map(conv, R)


def _normalize_basis(B: Matrix, K: RationalFunctionField) -> Matrix:
    """Canonical basis of the lattice spanned by the columns of B (entries in k(x))."""
    R = K.R
    den = R.one
    for r in B.rows:
        for a in r:
            den = poly_lcm(den, a.den)
    Bi = B.map(lambda a: a.num * den.exact_div(a.den), R)
    H = hermite_form(Bi)
    inv_den = K.make(R.one, den)
    return H.change_ring(K).scale(inv_den)


def reverse_construct(sd: SpectralData, checked: bool = False) -> CyclicHiggsData:
    c, L0, D = sd.c, sd.L0, sd.divisors
    if not check_divisor_relation(D, c):
        raise PreconditionError("divisors do not add up to div(t)")
    if not checked:
        regime_check(c)
    if char_poly(L0.T, "t") != c:
        raise PreconditionError("L0 is not an invertible S-module")
    R = L0.T.ring
    K = RationalFunctionField(R)
    p, m = L0.rank, len(D)
    T0 = _to_k(L0.T, K)
    B = [Matrix.identity(K, p)]
    for i in range(m - 1):
        Bi = B[-1]
        TL = _integral(inverse_over_field(Bi) @ T0 @ Bi, R)
        blocks = None
        for g in D[i].generators():
            Ag = Matrix.zeros(R, p, p)
            P = Matrix.identity(R, p)
            for j in range(g.degree() + 1):
                Ag = Ag + P.scale(g.coeff(j))
                P = P @ TL
            blocks = Ag if blocks is None else blocks.vstack(Ag)
        _, Dm, V = smith_normal_form(blocks)
        W = V.change_ring(K) @ Matrix.diagonal(K, [K.make(R.one, Dm[k, k]) for k in range(p)])
        B.append(_normalize_basis(Bi @ W, K))
    phi = []
    for i in range(m - 1):
        phi.append(_integral(inverse_over_field(B[i + 1]) @ B[i], R))
    phi.append(_integral(T0 @ B[m - 1], R))
    return CyclicHiggsData(m, R.base, (p,) * m, phi)


# ------------------------------------------------------------------ round trip

@dataclass
class RoundTripReport:
    spectral_invariants_equal: bool
    intertwiner_found: bool
    intertwiner_source: str | None
    curves_equal: bool
    divisors_equal: bool
    reconstructed: CyclicHiggsData
    intertwiner: list | None = None

    def to_json(self) -> dict:
        return {
            "spectral_invariants_equal": self.spectral_invariants_equal,
            "intertwiner_found": self.intertwiner_found,
            "intertwiner_source": self.intertwiner_source,
            "curves_equal": self.curves_equal,
            "divisors_equal": self.divisors_equal,
        }


def is_intertwiner(X, H: CyclicHiggsData, H2: CyclicHiggsData) -> bool:
    m = H.m
    for i in range(m):
        d = det(X[i])
        if d.degree() != 0:
            return False
        if X[(i + 1) % m] @ H.phi[i] != H2.phi[i] @ X[i]:
            return False
    return True


def constructive_intertwiner(H: CyclicHiggsData, H2: CyclicHiggsData):
    """X_0 = I, X_i = (phi'_{i-1}...phi'_0)(phi_{i-1}...phi_0)^{-1}; kept only if it is an intertwiner."""
    R = H.ring
    K = RationalFunctionField(R)
    m, p = H.m, H.dims[0]
    X = [Matrix.identity(R, p)]
    acc = Matrix.identity(K, p)      # phi_{i-1}...phi_0 over k(x)
    acc2 = Matrix.identity(K, p)     # phi'_{i-1}...phi'_0
    for i in range(1, m):
        acc = _to_k(H.phi[i - 1], K) @ acc
        acc2 = _to_k(H2.phi[i - 1], K) @ acc2
        try:
            X.append(_integral(acc2 @ inverse_over_field(acc), R))
        except (ArithmeticError, ZeroDivisionError):
            return None
    return X if is_intertwiner(X, H, H2) else None


def ansatz_intertwiner(H: CyclicHiggsData, H2: CyclicHiggsData, cap: int = 2, tries: int = 24,
                       seed: int = 0):
    """Search X_i with entries of x-degree <= cap by a linear solve over k."""
    R = H.ring
    F = R.base
    m, p = H.m, H.dims[0]
    nunk = m * p * p * (cap + 1)
    maxdeg = max(max((a.degree() for row in A.rows for a in row), default=0) for A in H.phi + H2.phi)
    span = cap + max(maxdeg, 0) + 1

    def build(vec):
        X = []
        k = 0
        for _ in range(m):
            rows = []
            for _r in range(p):
                row = []
                for _c in range(p):
                    row.append(Poly(R, vec[k:k + cap + 1]))
                    k += cap + 1
                rows.append(row)
            X.append(Matrix(R, rows, p))
        return X

    cols = []
    for u in range(nunk):
        vec = [F.zero] * nunk
        vec[u] = F.one
        X = build(vec)
        col = []
        for i in range(m):
            Rm = X[(i + 1) % m] @ H.phi[i] - H2.phi[i] @ X[i]
            for a in (v for row in Rm.rows for v in row):
                col.extend(a.coeff(d) for d in range(span))
        cols.append(col)
    rows = [list(r) for r in zip(*cols)]
    basis = linalg.nullspace(rows, nunk, F)
    if not basis:
        return None
    rng = random.Random(seed)
    cands = list(basis)
    for _ in range(tries):
        coeffs = [F.convert(rng.randrange(1, 97)) for _ in basis]
        cands.append([
            _sum_field(F, (F.mul(a, v[j]) for a, v in zip(coeffs, basis))) for j in range(nunk)
        ])
    for vec in cands:
        X = build(vec)
        if is_intertwiner(X, H, H2):
            return X
    return None


def _sum_field(F, items):
    acc = F.zero
    for a in items:
        acc = F.add(acc, a)
    return acc


def round_trip(H: CyclicHiggsData, cap: int = 2, checked: bool = False) -> RoundTripReport:
    sd = forward_spectral_data(H, checked=checked)
    H2 = reverse_construct(sd, checked=True)
    sd2 = forward_spectral_data(H2, checked=True)
    curves_equal = sd.c == sd2.c
    divisors_equal = len(sd.divisors) == len(sd2.divisors) and all(
        a == b for a, b in zip(sd.divisors, sd2.divisors))
    X = ansatz_intertwiner(H, H2, cap=cap)
    source = "ansatz" if X is not None else None
    if X is None:
        X = constructive_intertwiner(H, H2)
        source = "constructive" if X is not None else None
    return RoundTripReport(
        spectral_invariants_equal=curves_equal and divisors_equal,
        intertwiner_found=X is not None,
        intertwiner_source=source,
        curves_equal=curves_equal,
        divisors_equal=divisors_equal,
        reconstructed=H2,
        intertwiner=X,
    )

