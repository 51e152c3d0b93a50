"""Independent classical oracles: Alexander-Conway via the reduced Burau
representation and Jones via brute-force Kauffman-bracket state sums.

These share no code with the state-model engine; they exist to check the
engine's Case 2 / Case 3 outputs entry for entry.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidError, BraidWord, closure_components
from .engine import model, tangle_invariant
from .ring import QUANTUM


class OracleError(ValueError):
    pass


class OnePoly:
    """Univariate integer Laurent polynomial in t, on the half-integer
    exponent grid: ``terms`` maps doubled exponents to coefficients, so
    terms = {1: 2} means 2*t^(1/2)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @staticmethod
    def t(double_exp=2, coeff=1):
        return OnePoly({double_exp: coeff})

    @staticmethod
    def const(c):
        return OnePoly({0: c})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return OnePoly(out)

    def __neg__(self):
        return OnePoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return OnePoly(out)

    def __eq__(self, other):
        return isinstance(other, OnePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def bar(self):
        """t -> 1/t."""
        return OnePoly({-e: c for e, c in self.terms.items()})

    def shift(self, double_exp):
        return OnePoly({e + double_exp: c for e, c in self.terms.items()})

    def at_one(self):
        return sum(self.terms.values())

    def span(self):
        if not self.terms:
            return (0, 0)
        return (min(self.terms), max(self.terms))

    def divexact(self, den):
        """Exact Laurent division (raises OracleError on a remainder)."""
        if den.is_zero():
            raise OracleError("division by zero")
        num = dict(self.terms)
        dmax = max(den.terms)
        dc = den.terms[dmax]
        quo = {}
        while num:
            e = max(num)
            q, r = divmod(num[e], dc)
            if r:
                raise OracleError("inexact coefficient division")
            quo[e - dmax] = q
            for de, c in den.terms.items():
                k = e - dmax + de
                v = num.get(k, 0) - q * c
                if v:
                    num[k] = v
                else:
                    num.pop(k, None)
        return OnePoly(quo)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                var = ""
            elif e % 2 == 0:
                var = f"t^{e // 2}"
            else:
                var = f"t^{e}/2"
            mag = "" if abs(c) == 1 and var else str(abs(c))
            body = (mag + ("*" if mag and var else "") + var) or "1"
            bits.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(bits)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    __repr__ = __str__


def _require_knot(word):
    if closure_components(word) != 1:
        raise OracleError(f"closure of {word} is not a knot")


# ---------------------------------------------------------------------------
# Alexander-Conway via reduced Burau.

def _burau_generator(i, n, inverse=False):
    """(n-1)x(n-1) reduced Burau matrix of generator i (1-based)."""
    t = OnePoly.t(2)
    tbar = OnePoly.t(-2)
    one = OnePoly.const(1)
    M = [[one if r == c else OnePoly() for c in range(n - 1)]
         for r in range(n - 1)]
    r = i - 1
    if not inverse:
        M[r][r] = -t
        if r - 1 >= 0:
            M[r][r - 1] = t
        if r + 1 < n - 1:
            M[r][r + 1] = one
    else:
        M[r][r] = -tbar
        if r - 1 >= 0:
            M[r][r - 1] = one
        if r + 1 < n - 1:
            M[r][r + 1] = tbar
    return M


def _mat_mul(A, B):
    n = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(n)), OnePoly())
             for j in range(n)] for i in range(n)]


def _det(M):
    n = len(M)
    if n == 0:
        return OnePoly.const(1)
    if n == 1:
        return M[0][0]
    out = OnePoly()
    sign = 1
    for j in range(n):
        if not M[0][j].is_zero():
            minor = [[M[r][c] for c in range(n) if c != j] for r in range(1, n)]
            term = M[0][j] * _det(minor)
            out = out + (term if sign > 0 else -term)
        sign = -sign
    return out


def _burau_ok():
    """Generator/inverse pairs really are inverse (checked once)."""
    for n in (3, 4):
        for i in range(1, n):
            P = _mat_mul(_burau_generator(i, n), _burau_generator(i, n, True))
            for r in range(n - 1):
                for c in range(n - 1):
                    want = OnePoly.const(1 if r == c else 0)
                    if P[r][c] != want:
                        return False
    return True


assert _burau_ok()


def alexander(word):
    """Symmetric Alexander-Conway polynomial of the closure, normalized so
    that Delta(t) = Delta(1/t) and Delta(1) = 1."""
    _require_knot(word)
    n = word.strands
    if n == 1:
        return OnePoly.const(1)
    rho = [[OnePoly.const(1 if r == c else 0) for c in range(n - 1)]
           for r in range(n - 1)]
    for k in word.letters:
        rho = _mat_mul(rho, _burau_generator(abs(k), n, inverse=k < 0))
    IM = [[OnePoly.const(1 if r == c else 0) - rho[r][c] for c in range(n - 1)]
          for r in range(n - 1)]
    det = _det(IM)
    cyc = OnePoly({2 * k: 1 for k in range(n)})  # 1 + t + ... + t^(n-1)
    delta = det.divexact(cyc)
    if delta.is_zero():
        raise OracleError("vanishing Burau determinant for a knot closure")
    lo, hi = delta.span()
    if (lo + hi) % 2:
        raise OracleError("asymmetric exponent span")
    delta = delta.shift(-(lo + hi) // 2)
    if delta != delta.bar():
        raise OracleError("Alexander normalization failed: not palindromic")
    v = delta.at_one()
    if abs(v) != 1:
        raise OracleError(f"Delta(1) = {v}, closure is not a knot?")
    return delta if v == 1 else -delta


# ---------------------------------------------------------------------------
# Jones via the Kauffman bracket.

MAX_BRACKET_LETTERS = 24


class _UnionFind:
    def __init__(self, size):
        self.p = list(range(size))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[ra] = rb


def _bracket(word):
    """Kauffman bracket of the closed diagram as a polynomial in A."""
    n, L = word.strands, len(word.letters)
    if L == 0:
        d = OnePoly({4: -1, -4: -1})        # -A^2 - A^-2
        out = OnePoly.const(1)
        for _ in range(n - 1):
            out = out * d
        return out
    # nodes (level, strand) with levels mod L (closure glues L to 0)
    node = lambda lev, j: (lev % L) * n + j
    total = OnePoly()
    d = OnePoly({4: -1, -4: -1})
    for state in range(1 << L):
        uf = _UnionFind(n * L)
        exp = 0                             # power of A
        for lev, k in enumerate(word.letters):
            i = abs(k) - 1
            for j in range(n):
                if j != i and j != i + 1:
                    uf.union(node(lev, j), node(lev + 1, j))
            # smoothing A: for a positive letter the "identity" smoothing
            smooth_id = bool(state & (1 << lev)) == (k > 0)
            exp += 1 if bool(state & (1 << lev)) else -1
            if smooth_id:
                uf.union(node(lev, i), node(lev + 1, i))
                uf.union(node(lev, i + 1), node(lev + 1, i + 1))
            else:
                uf.union(node(lev, i), node(lev, i + 1))
                uf.union(node(lev + 1, i), node(lev + 1, i + 1))
        loops = len({uf.find(x) for x in range(n * L)})
        term = OnePoly({2 * exp: 1})
        for _ in range(loops - 1):
            term = term * d
        total = total + term
    return total


def jones(word):
    """Jones polynomial of the closure, V(unknot) = 1, in the convention
    where the right trefoil "2 : 1 1 1" gives -t^4 + t^3 + t."""
    _require_knot(word)
    if len(word.letters) > MAX_BRACKET_LETTERS:
        raise OracleError(
            f"bracket state sum over 2^{len(word.letters)} states refused")
    w = word.writhe
    bracket = _bracket(word)
    # multiply by (-A^3)^(-w)
    norm = bracket.shift(-6 * w)
    if w % 2:
        norm = -norm
    # substitute t = A^-4
    out = {}
    for e, c in norm.terms.items():
        if e % 4:
            raise OracleError("bracket exponent off the t-grid")
        out[-e // 4] = c
    return OnePoly(out)


# ---------------------------------------------------------------------------
# Comparisons against the engine's regular-isotopy formulas.

@dataclass
class CompareReport:
    ok: bool
    case: int
    word: BraidWord
    unit: str
    detail: str = ""
    diag: list = None

    def __bool__(self):
        return self.ok


def _subst_quantum(poly, q_exp, p_exp):
    """t^(e/2) -> Q^(e*q_exp/2) * p^(e*p_exp/2) for a OnePoly."""
    out = QUANTUM.zero
    for e, c in poly.terms.items():
        if (e * q_exp) % 2 or (e * p_exp) % 2:
            raise OracleError("substitution leaves the integer grid")
        out = out + QUANTUM.mono(c, Q=e * q_exp // 2, p=e * p_exp // 2)
    return out


def _match_unit(got, want):
    """got == unit * want for a monomial unit; returns unit or None."""
    if got == want:
        return QUANTUM.one
    if got.is_zero() or want.is_zero():
        return None
    if len(got.terms) != len(want.terms):
        return None
    (ge, gc) = got.leading()
    (we, wc) = want.leading()
    if gc == wc:
        coeff = 1
    elif gc == (-wc[0], -wc[1]):
        coeff = -1
    else:
        return None
    unit = QUANTUM.poly({tuple(g - w for g, w in zip(ge, we)): coeff})
    if unit * want == got:
        return unit
    return None


def compare_case2(word):
    """Engine Case 2 regular vs diag{pbar^w D(Q^2 pbar^2) (x2),
    p^w D(Q^2 p^2) (x2)} built from the Burau oracle."""
    delta = alexander(word)
    w = word.writhe
    diag = tangle_invariant(word, model(2, "regular")).diagonal()
    m = QUANTUM.mono
    minus = m(1, p=-w) * _subst_quantum(delta, 2, -2)
    plus = m(1, p=w) * _subst_quantum(delta, 2, 2)
    expected = [minus, minus, plus, plus]
    return _compare(2, word, diag, expected)


def compare_case3(word):
    """Engine Case 3 regular vs diag{pbar^2w, (-Qbar^4)^w V(Q^4) (x2),
    p^2w} built from the bracket oracle; V(Q^4) is our Jones convention
    under t -> Q^4 directly (not t -> Q^-4), fixed empirically once."""
    v = jones(word)
    w = word.writhe
    diag = tangle_invariant(word, model(3, "regular")).diagonal()
    m = QUANTUM.mono
    mid = m(1 if w % 2 == 0 else -1, Q=-4 * w) * _subst_quantum(v, 4, 0)
    expected = [m(1, p=-2 * w), mid, mid, m(1, p=2 * w)]
    return _compare(3, word, diag, expected)


def _compare(case, word, diag, expected):
    units = []
    for got, want in zip(diag, expected):
        u = _match_unit(got, want)
        if u is None:
            return CompareReport(False, case, word, "",
                                 f"mismatch: got {got}, expected {want}", diag)
        units.append(u)
    if any(u != units[0] for u in units):
        return CompareReport(False, case, word, "",
                             "entry-dependent unit " +
                             ", ".join(str(u) for u in units), diag)
    return CompareReport(True, case, word, str(units[0]), diag=diag)
