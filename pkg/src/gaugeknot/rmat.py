"""Construction of the gauge-parametrized trigonometric R-matrix, its spectral
limits, and the four constant quantum R-matrices.

Operators act on a two-site space (C^4 tensor C^4).  An entry stored under the
key ``(a, b, c, d)`` is the coefficient of the matrix unit ``e^{ab}_{cd}``
sending ``|c,d>`` to ``|a,b>``.  All entries conserve the grading
weight w(1)=0, w(2)=w(3)=1, w(4)=2, which keeps every linear-algebra step
block-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .ring import (CRat, LaurentPoly, QUANTUM, RationalLaurent, RingError,
                   TRIG, divexact, evaluate, map_poly, qbracket)

WEIGHT = {1: 0, 2: 1, 3: 1, 4: 2}

#: Exact rational sample points (p, Q, y, sign) with
#: p**2 + p**-2 - Q**2 - Q**-2 equal to +y**2 (sign +1, Y = y) or
#: -y**2 (sign -1, Y = i*y).
SAMPLE_POINTS = [
    (Fraction(3, 5), Fraction(25, 39), Fraction(176, 325), 1),
    (Fraction(3, 14), Fraction(7, 26), Fraction(110, 39), 1),
    (Fraction(1, 9), Fraction(9, 17), Fraction(448, 51), 1),
    (Fraction(3, 14), Fraction(6, 17), Fraction(440, 119), 1),
    (Fraction(1, 18), Fraction(6, 13), Fraction(2090, 117), 1),
    (Fraction(3, 5), Fraction(29, 37), Fraction(15232, 16095), 1),
    (Fraction(1, 13), Fraction(5, 37), Fraction(25704, 2405), 1),
    (Fraction(3, 14), Fraction(15, 29), Fraction(8569, 2030), 1),
    (Fraction(1, 4), Fraction(33, 4), Fraction(238, 33), -1),
    (Fraction(1, 4), Fraction(32, 7), Fraction(495, 224), -1),
    (Fraction(3, 11), Fraction(33, 4), Fraction(325, 44), -1),
    (Fraction(1, 9), Fraction(5, 37), Fraction(8528, 1665), 1),
]


def sample_assignment(point):
    """Turn a SAMPLE_POINTS row into an {name: CRat} assignment."""
    p, q, y, sign = point
    yv = CRat(y) if sign > 0 else CRat(0, y)
    return {"p": CRat(p), "Q": CRat(q), "Y": yv}


class SparseROp:
    """Sparse two-site operator over a Laurent ring."""

    def __init__(self, ring, entries):
        self.ring = ring
        self.entries = {k: v for k, v in entries.items() if not _is_zero(v)}

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SparseROp):
            return NotImplemented
        if set(self.entries) != set(other.entries):
            return False
        return all(self.entries[k] == other.entries[k] for k in self.entries)

    def get(self, a, b, c, d):
        v = self.entries.get((a, b, c, d))
        if v is None:
            return self.ring.zero
        return v

    def map_entries(self, fn):
        out = {k: fn(v) for k, v in self.entries.items()}
        ring = next(iter(out.values())).ring if out else self.ring
        return SparseROp(ring, out)

    def scale(self, s):
        return self.map_entries(lambda v: v * s)

    def conserves_weight(self):
        return all(WEIGHT[a] + WEIGHT[b] == WEIGHT[c] + WEIGHT[d]
                   for (a, b, c, d) in self.entries)

    def compose(self, other):
        """Operator product self . other (apply other first)."""
        bycol = {}
        for (a, b, c, d), v in self.entries.items():
            bycol.setdefault((c, d), []).append(((a, b), v))
        out = {}
        for (m1, m2, c, d), v in other.entries.items():
            for (row, w) in bycol.get((m1, m2), ()):
                k = (row[0], row[1], c, d)
                cur = out.get(k)
                prod = w * v
                out[k] = prod if cur is None else cur + prod
        return SparseROp(self.ring, out)

    def sorted_items(self):
        return sorted(self.entries.items())

    def __repr__(self):
        return f"SparseROp({len(self.entries)} entries over {self.ring})"


def _is_zero(v):
    return v.is_zero()


def identity_op(ring):
    one = ring.one
    return SparseROp(ring, {(a, b, a, b): one
                            for a in range(1, 5) for b in range(1, 5)})


def identity_rop(ring):
    """Identity with RationalLaurent entries."""
    return SparseROp(ring, {(a, b, a, b): RationalLaurent(ring.one)
                            for a in range(1, 5) for b in range(1, 5)})


# ---------------------------------------------------------------------------
# Trigonometric operators.

def _trig_pieces():
    R = TRIG
    br = lambda **kw: qbracket(R, **kw)
    m = R.mono
    pieces = {
        "bA": br(alpha=1),                 # [alpha]
        "b1A": br(const=1, alpha=1),       # [1 + alpha]
        "bAp": br(alpha=1, u=1),           # [alpha + u]
        "b1Ap": br(const=1, alpha=1, u=1),  # [1 + alpha + u]
        "bAm": br(alpha=1, u=-1),          # [alpha - u]
        "b1Am": br(const=1, alpha=1, u=-1),  # [1 + alpha - u]
        "bu": br(u=1),                     # [u]
        "b1mu": br(const=1, u=-1),         # [1 - u]
    }
    delta = m(1, Q=2) - m(1, Q=-2)         # q - 1/q
    fq = (-2 * m(1, Q=2) + m(1, X=2) * delta
          + m(1, Q=2, Aa=2) + m(1, Q=-2, Aa=-2))
    fqb = (-2 * m(1, Q=-2) - m(1, X=-2) * delta
           + m(1, Q=2, Aa=2) + m(1, Q=-2, Aa=-2))
    pieces["delta"] = RationalLaurent(delta)
    pieces["fq"] = RationalLaurent(fq)
    pieces["fqb"] = RationalLaurent(fqb)
    # [alpha]^(1/2) [1+alpha]^(1/2) as the adjoined symbol over q - 1/q.
    pieces["yhalf"] = RationalLaurent(R.var("Y"), delta)
    return pieces


def _trig_table(gauged):
    """The 36-component table; gauge monomials dropped when gauged=False."""
    R = TRIG
    m = R.mono
    g = lambda **kw: m(1, **kw) if gauged else R.one
    P = _trig_pieces()
    D1 = P["bAm"]
    D2 = P["bAm"] * P["b1Am"]
    one = RationalLaurent(R.one)

    ent = {}
    ent[(1, 1, 1, 1)] = one
    ent[(2, 2, 2, 2)] = P["bAp"] / D1
    ent[(3, 3, 3, 3)] = P["bAp"] / D1
    ent[(4, 4, 4, 4)] = (P["bAp"] * P["b1Ap"]) / D2

    gA = P["bA"] / D1
    ent[(1, 2, 1, 2)] = gA * (g(Ru=1) * m(1, X=-1))
    ent[(1, 3, 1, 3)] = gA * (g(Su=1) * m(1, X=-1))
    ent[(2, 1, 2, 1)] = gA * (g(Ru=-1) * m(1, X=1))
    ent[(3, 1, 3, 1)] = gA * (g(Su=-1) * m(1, X=1))

    gAA = (P["bA"] * P["b1A"]) / D2
    ent[(1, 4, 1, 4)] = gAA * (g(Ru=1) * g(Su=1) * m(1, X=-2))
    ent[(4, 1, 4, 1)] = gAA * (g(Ru=-1) * g(Su=-1) * m(1, X=2))

    gF = one / (P["delta"] * P["delta"] * D2)
    ent[(2, 3, 2, 3)] = gF * P["fqb"] * (g(Ru=-1) * g(Su=1))
    ent[(3, 2, 3, 2)] = gF * P["fq"] * (g(Ru=1) * g(Su=-1))

    g1A = (P["b1A"] * P["bAp"]) / D2
    ent[(2, 4, 2, 4)] = g1A * (g(Su=1) * m(1, X=-1))
    ent[(3, 4, 3, 4)] = g1A * (g(Ru=1) * m(1, X=-1))
    ent[(4, 2, 4, 2)] = g1A * (g(Su=-1) * m(1, X=1))
    ent[(4, 3, 4, 3)] = g1A * (g(Ru=-1) * m(1, X=1))

    swap1 = -(P["bu"] / D1)
    for k in ((1, 2, 2, 1), (1, 3, 3, 1), (2, 1, 1, 2), (3, 1, 1, 3)):
        ent[k] = swap1

    far = -(P["b1mu"] * P["bu"]) / D2
    ent[(1, 4, 4, 1)] = far
    ent[(4, 1, 1, 4)] = far

    mid = -(P["bu"] * P["bu"]) / D2
    ent[(2, 3, 3, 2)] = mid
    ent[(3, 2, 2, 3)] = mid

    swap2 = (P["bu"] * P["bAp"]) / D2
    for k in ((2, 4, 4, 2), (3, 4, 4, 3), (4, 2, 2, 4), (4, 3, 3, 4)):
        ent[k] = swap2

    gy = (P["yhalf"] * P["bu"]) / D2
    t1 = gy * (g(Ru=1) * m(1, X=-1, Q=1))
    t2 = -(gy * (g(Ru=-1) * m(1, X=1, Q=-1)))
    t3 = gy * (g(Su=-1) * m(1, X=1, Q=1))
    t4 = -(gy * (g(Su=1) * m(1, X=-1, Q=-1)))
    ent[(1, 4, 3, 2)] = t1
    ent[(3, 2, 1, 4)] = t1
    ent[(4, 1, 2, 3)] = t2
    ent[(2, 3, 4, 1)] = t2
    ent[(3, 2, 4, 1)] = t3
    ent[(4, 1, 3, 2)] = t3
    ent[(2, 3, 1, 4)] = t4
    ent[(1, 4, 2, 3)] = t4
    return ent


def build_trig_gauged():
    """The 36-component trigonometric braid operator with gauge monomials
    Ru = r**u and Su = s**u."""
    return SparseROp(TRIG, _trig_table(gauged=True))


def build_trig_gauge_free():
    """The r = s = 1 trigonometric braid operator."""
    return SparseROp(TRIG, _trig_table(gauged=False))


# ---------------------------------------------------------------------------
# Gauge matrices and cases.

@dataclass(frozen=True)
class GaugeMatrix:
    """Diagonal one-site gauge A(u) = diag of four monomials of TRIG."""

    diag: tuple

    def __post_init__(self):
        if len(self.diag) != 4:
            raise RingError("gauge diagonal must have 4 entries")
        for d in self.diag:
            if not d.is_monomial():
                raise RingError("gauge entries must be monomials")

    @staticmethod
    def standard():
        """diag{1, r**u, s**u, r**u s**u}."""
        m = TRIG.mono
        return GaugeMatrix((TRIG.one, m(1, Ru=1), m(1, Su=1), m(1, Ru=1, Su=1)))

    @staticmethod
    def identity():
        return GaugeMatrix((TRIG.one,) * 4)

    def inverse(self):
        """A(-u): every exponent negated."""
        return GaugeMatrix(tuple(d.invert_monomial() for d in self.diag))


@dataclass(frozen=True)
class GaugeCase:
    """Gauge choice i with r**u = X**ru_exp and s**u = X**su_exp (X = q**u)."""

    index: int
    ru_exp: Fraction
    su_exp: Fraction

    @staticmethod
    def standard(index, gamma=Fraction(1, 2)):
        table = {
            1: (Fraction(0), Fraction(0)),
            2: (Fraction(0), Fraction(1)),
            3: (Fraction(1), Fraction(1)),
            4: (Fraction(gamma), 2 - Fraction(gamma)),
        }
        if index not in table:
            raise RingError(f"no gauge case {index}")
        if index == 4 and not (0 < Fraction(gamma) < 1):
            raise RingError("case 4 requires 0 < gamma < 1")
        return GaugeCase(index, *table[index])


def apply_gauge(R, A):
    """Conjugate a trigonometric braid operator by the diagonal gauge.

    The component at e^{ij}_{kl} picks up A(u)[j] * A(-u)[k].
    """
    Ainv = A.inverse()
    out = {}
    for (i, j, k, l), v in R.entries.items():
        out[(i, j, k, l)] = v * (A.diag[j - 1] * Ainv.diag[k - 1])
    return SparseROp(R.ring, out)


# ---------------------------------------------------------------------------
# Spectral limit and the hand-transcribed quantum operators.

def spectral_limit(R, case):
    """The formal X -> infinity limit of the gauged operator under a case's
    (Ru, Su) substitution, expressed over the quantum ring {p, Q, Y}."""
    L = 1
    for fr in (case.ru_exp, case.su_exp):
        L = L * Fraction(fr).denominator // _gcd(L, Fraction(fr).denominator)
    out = {}
    for key, v in R.entries.items():
        num = _subst_case(v.num, case, L)
        den = _subst_case(v.den, case, L)
        dn = num.degree_in("X")
        dd = den.degree_in("X")
        if dn is None:
            continue
        if dn > dd:
            raise RingError(f"divergent spectral limit at {key} "
                            f"(X-degree {dn} > {dd})")
        if dn < dd:
            continue
        lead_n = _to_quantum(num.coeff_of("X", dn))
        lead_d = _to_quantum(den.coeff_of("X", dd))
        out[key] = divexact(lead_n, lead_d)
    return SparseROp(QUANTUM, out)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _subst_case(poly, case, scale):
    """
    Refine the X grid by ``scale`` and fold Ru, Su into X powers."""
    from .ring import substitute
    p = substitute(poly, "X", {"X": scale})
    p = substitute(p, "Ru", {"X": case.ru_exp * scale})
    return substitute(p, "Su", {"X": case.su_exp * scale})


def _to_quantum(poly):
    """Map an X-free trigonometric polynomial into {p, Q, Y} via Aa = p/Q."""
    Qr = QUANTUM
    images = {
        "Q": Qr.var("Q"), "Aa": Qr.mono(1, p=1, Q=-1), "Y": Qr.var("Y"),
        "X": Qr.one, "Xv": Qr.one, "Ru": Qr.one, "Rv": Qr.one,
        "Su": Qr.one, "Sv": Qr.one,
    }
    return map_poly(poly, Qr, images)


def quantum_r(index):
    """The constant quantum R-matrices, transcribed component by component."""
    m = QUANTUM.mono
    one = QUANTUM.one
    # shared building blocks
    neg_p2Qb2 = m(-1, p=2, Q=-2)
    lower = one - m(1, p=2, Q=-2)            # -pQ^-1 (pQ^-1 - Q/p)
    raiser = m(1, p=4) - m(1, p=2, Q=-2)     # p^3 Q^-1 (pQ - 1/(pQ))
    ent = {
        (1, 1, 1, 1): one,
        (2, 2, 2, 2): neg_p2Qb2,
        (3, 3, 3, 3): neg_p2Qb2,
        (4, 4, 4, 4): m(1, p=4),
        (1, 2, 2, 1): m(1, p=1, Q=-1), (1, 3, 3, 1): m(1, p=1, Q=-1),
        (2, 1, 1, 2): m(1, p=1, Q=-1), (3, 1, 1, 3): m(1, p=1, Q=-1),
        (2, 4, 4, 2): m(1, p=3, Q=-1), (3, 4, 4, 3): m(1, p=3, Q=-1),
        (4, 2, 2, 4): m(1, p=3, Q=-1), (4, 3, 3, 4): m(1, p=3, Q=-1),
        (1, 4, 4, 1): m(1, p=2, Q=-2), (4, 1, 1, 4): m(1, p=2, Q=-2),
        (2, 3, 3, 2): m(-1, p=2), (3, 2, 2, 3): m(-1, p=2),
    }
    if index == 4:
        return SparseROp(QUANTUM, ent)
    if index == 3:
        ent[(3, 2, 3, 2)] = m(1, p=2, Q=2) - m(1, p=2, Q=-2)
        return SparseROp(QUANTUM, ent)
    if index == 2:
        ent[(2, 1, 2, 1)] = lower
        ent[(4, 3, 4, 3)] = raiser
        yterm = m(-1, p=2, Q=-1, Y=1)
        ent[(4, 1, 2, 3)] = yterm
        ent[(2, 3, 4, 1)] = yterm
        return SparseROp(QUANTUM, ent)
    if index == 1:
        ent[(3, 2, 3, 2)] = m(1, p=2, Q=2) - m(1, p=2, Q=-2)
        ent[(2, 1, 2, 1)] = lower
        ent[(3, 1, 3, 1)] = lower
        ent[(4, 2, 4, 2)] = raiser
        ent[(4, 3, 4, 3)] = raiser
        # p^2 (pQ^-1 - Q/p)(pQ - 1/(pQ)) = p^2 * Y^2
        ent[(4, 1, 4, 1)] = m(1, p=2) * QUANTUM.y_square
        ymin = m(-1, p=2, Q=-1, Y=1)
        yplu = m(1, p=2, Q=1, Y=1)
        ent[(4, 1, 2, 3)] = ymin
        ent[(2, 3, 4, 1)] = ymin
        ent[(3, 2, 4, 1)] = yplu
        ent[(4, 1, 3, 2)] = yplu
        return SparseROp(QUANTUM, ent)
    raise RingError(f"no quantum R-matrix {index}")


#: Table of claimed eigenvalue lists per gauge case (distinct values).
def claimed_eigenvalues(index):
    m = QUANTUM.mono
    base = [QUANTUM.one, m(-1, p=2, Q=-2), m(1, p=4)]
    plus = [m(1, p=1, Q=-1), m(-1, p=1, Q=-1),
            m(1, p=3, Q=-1), m(-1, p=3, Q=-1)]
    if index == 1:
        return base
    if index == 2:
        return base + plus
    if index == 3:
        return base + plus + [m(1, p=2, Q=-2), m(1, p=2, Q=2)]
    if index == 4:
        return base + plus + [m(1, p=2, Q=-2), m(1, p=2), m(-1, p=2)]
    raise RingError(f"no gauge case {index}")


# ---------------------------------------------------------------------------
# Exact linear algebra on two-site operators.

def _blocks(op):
    """Group the 16 pair-indices into grading sectors (falls back to one
    block when the operator mixes sectors)."""
    pairs = [(a, b) for a in range(1, 5) for b in range(1, 5)]
    if op.conserves_weight():
        sectors = {}
        for ab in pairs:
            sectors.setdefault(WEIGHT[ab[0]] + WEIGHT[ab[1]], []).append(ab)
        return list(sectors.values())
    return [pairs]


def _conj_y(poly):
    """Negate the Y-odd part."""
    if poly.ring.y_index is None:
        return poly
    yk = poly.ring.y_index
    return LaurentPoly(poly.ring,
                       {e: ((a, b) if e[yk] % 2 == 0 else (-a, -b))
                        for e, (a, b) in poly.terms.items()})


def _rl_div(x, y):
    """x / y for RationalLaurent with the denominator kept Y-free."""
    n, d = y.num, y.den
    nc = _conj_y(n)
    return RationalLaurent(x.num * d * nc, x.den * (n * nc))


def invert(R):
    """Exact inverse of a two-site operator; entries of the result are
    polynomials whenever the exact divisions succeed, else rationals."""
    ring = R.ring
    rational_in = R.entries and isinstance(next(iter(R.entries.values())),
                                           RationalLaurent)
    as_rl = (lambda v: v) if rational_in else (lambda v: RationalLaurent(v))
    zero = RationalLaurent(ring.zero)
    one = RationalLaurent(ring.one)
    out_entries = {}
    for block in _blocks(R):
        idx = {ab: i for i, ab in enumerate(block)}
        n = len(block)
        M = [[zero] * n for _ in range(n)]
        for (a, b, c, d), v in R.entries.items():
            if (a, b) in idx and (c, d) in idx:
                M[idx[(a, b)]][idx[(c, d)]] = as_rl(v)
        A = [[one if i == j else zero for j in range(n)] for i in range(n)]
        # Gauss-Jordan over the fraction field.
        for col in range(n):
            piv = None
            best = None
            for r in range(col, n):
                if not M[r][col].is_zero():
                    size = len(M[r][col].num.terms) + len(M[r][col].den.terms)
                    if best is None or size < best:
                        best, piv = size, r
            if piv is None:
                raise RingError("singular operator")
            M[col], M[piv] = M[piv], M[col]
            A[col], A[piv] = A[piv], A[col]
            pv = M[col][col]
            M[col] = [_rl_div(x, pv) for x in M[col]]
            A[col] = [_rl_div(x, pv) for x in A[col]]
            for r in range(n):
                if r != col and not M[r][col].is_zero():
                    f = M[r][col]
                    M[r] = [x - f * y for x, y in zip(M[r], M[col])]
                    A[r] = [x - f * y for x, y in zip(A[r], A[col])]
        for i, ab in enumerate(block):
            for j, cd in enumerate(block):
                v = A[i][j]
                if not v.is_zero():
                    out_entries[ab + cd] = v
    if not rational_in:
        out_entries = {k: divexact(v.num, v.den) for k, v in out_entries.items()}
    inv = SparseROp(ring, out_entries)
    ident = identity_rop(ring) if rational_in else identity_op(ring)
    if R.compose(inv) != ident:
        raise RingError("inverse verification failed")
    return inv


# ---------------------------------------------------------------------------
# Eigen-data checks at exact rational sample points.

def _eval_matrix(R, assignment):
    """16x16 CRat matrix of the operator at an exact point."""
    idx = lambda a, b: 4 * (a - 1) + (b - 1)
    M = [[CRat(0)] * 16 for _ in range(16)]
    for (a, b, c, d), v in R.entries.items():
        if isinstance(v, RationalLaurent):
            val = evaluate(v.num, assignment) / evaluate(v.den, assignment)
        else:
            val = evaluate(v, assignment)
        M[idx(a, b)][idx(c, d)] = M[idx(a, b)][idx(c, d)] + val
    return M


def charpoly(M):
    """Monic characteristic polynomial coefficients [c0..cn] (c0 = x^n term)
    by the Faddeev-LeVerrier recursion over exact rationals."""
    n = len(M)
    coeffs = [CRat(1)]
    Mk = [[CRat(1) if i == j else CRat(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        Mk = _mat_mul(M, Mk)
        tr = sum((Mk[i][i] for i in range(n)), CRat(0))
        c = tr / CRat(-k)
        coeffs.append(c)
        for i in range(n):
            Mk[i][i] = Mk[i][i] + c
    return coeffs


def _mat_mul(A, B):
    n = len(A)
    out = [[CRat(0)] * n for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for k in range(n):
            a = Ai[k]
            if a:
                Bk = B[k]
                row = out[i]
                for j in range(n):
                    if Bk[j]:
                        row[j] = row[j] + a * Bk[j]
    return out


def _root_multiplicity(coeffs, lam):
    """Divide (x - lam) out of the monic coefficient list as often as exact."""
    mult = 0
    cur = coeffs
    while len(cur) > 1:
        quo = [cur[0]]
        for c in cur[1:-1]:
            quo.append(c + lam * quo[-1])
        rem = cur[-1] + lam * quo[-1]
        if rem:
            break
        mult += 1
        cur = quo
    return mult, cur


@dataclass
class EigenReport:
    ok: bool
    distinct: int
    multiplicities: dict
    points_used: int
    message: str = ""


def eigen_check(R, claimed, points=None, min_points=5):
    """Confirm at exact sample points that the 16x16 spectrum equals the
    claimed list of polynomials (with multiplicities found from the
    characteristic polynomial)."""
    if points is None:
        points = [sample_assignment(pt) for pt in SAMPLE_POINTS]
    used = 0
    mults = None
    for assignment in points:
        vals = [evaluate(c, assignment) for c in claimed]
        if len(set(vals)) != len(vals):
            continue  # eigenvalue collision at this point; skip it
        M = _eval_matrix(R, assignment)
        coeffs = charpoly(M)
        got = {}
        for c, v in zip(claimed, vals):
            m, coeffs = _root_multiplicity(coeffs, v)
            if m == 0:
                return EigenReport(False, len(claimed), {}, used,
                                   f"claimed eigenvalue {c} absent at {assignment}")
            got[str(c)] = m
        if len(coeffs) != 1:
            return EigenReport(False, len(claimed), got, used,
                               "spectrum not exhausted by the claimed list")
        if mults is None:
            mults = got
        elif mults != got:
            return EigenReport(False, len(claimed), got, used,
                               "multiplicities differ between sample points")
        used += 1
        if used >= min_points:
            break
    if used < min_points:
        return EigenReport(False, len(claimed), mults or {}, used,
                           f"only {used} usable sample points")
    return EigenReport(True, len(claimed), mults, used)


def _kernel_dim(M):
    """dim ker of a square CRat matrix by Gaussian elimination."""
    n = len(M)
    M = [row[:] for row in M]
    rank = 0
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if M[r][col]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        pv = M[row][col]
        M[row] = [x / pv for x in M[row]]
        for r in range(n):
            if r != row and M[r][col]:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[row])]
        rank += 1
        row += 1
    return n - rank


def _poly_quorem(a, b):
    """Divide coefficient lists (highest degree first) over CRat."""
    a = a[:]
    q = []
    while len(a) >= len(b) and len(a) > 1:
        f = a[0] / b[0]
        q.append(f)
        for i in range(len(b)):
            a[i] = a[i] - f * b[i]
        a.pop(0)
    if len(a) == 1 and len(b) == 1:
        q.append(a[0] / b[0])
        a = [CRat(0)]
    while len(a) > 1 and not a[0]:
        a.pop(0)
    return q, a


def _poly_gcd(a, b):
    while len(b) > 1 or b[0]:
        _, r = _poly_quorem(a, b)
        a, b = b, r
    return [c / a[0] for c in a]


def _squarefree_part(coeffs):
    """Radical of a monic coefficient list (highest degree first)."""
    n = len(coeffs) - 1
    deriv = [c * CRat(n - i) for i, c in enumerate(coeffs[:-1])]
    g = _poly_gcd(coeffs, deriv)
    q, _ = _poly_quorem(coeffs, g)
    return q


def eigenvector_deficiency(R, points=None):
    """Total eigenvector count of the 16x16 operator at an exact sample
    point: the sum over distinct eigenvalues of dim ker(R - lambda I),
    computed as dim ker g(R) for the squarefree part g of the
    characteristic polynomial (16 means diagonalizable)."""
    if points is None:
        points = [sample_assignment(pt) for pt in SAMPLE_POINTS]
    totals = set()
    for assignment in points[:3]:
        M = _eval_matrix(R, assignment)
        g = _squarefree_part(charpoly(M))
        acc = [[g[0] if i == j else CRat(0) for j in range(16)]
               for i in range(16)]
        for c in g[1:]:
            acc = _mat_mul(acc, M)
            for i in range(16):
                acc[i][i] = acc[i][i] + c
        totals.add(_kernel_dim(acc))
    return max(totals)
