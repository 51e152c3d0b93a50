"""State-model evaluator for (1,1)-tangle invariants.

A model is a braid generator sigma = kappa * Rhat together with a diagonal
left handle C.  A word on n strands is represented on (C^4)^{x n} with the
generator's first tensor slot on the higher strand, so that closing every
strand but the first with C turns the single-loop identity

    sum_c C[c] * sigma^{c a}_{c b} = delta^a_b

into invariance of the closure under Markov stabilization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .braid import BraidWord, closure_components
from .ring import CONST, LaurentPoly, QONLY, QUANTUM, RingError, map_poly
from .rmat import SparseROp, invert, quantum_r


class EngineError(RingError):
    pass


#: Term budget for represent(): ~8 GiB at ~120 bytes per stored term.
DEFAULT_TERM_BUDGET = (8 * 2**30) // 120


@dataclass(frozen=True)
class StateModel:
    case: int
    isotopy: str
    sigma: SparseROp
    sigma_inv: SparseROp
    C: tuple          # 4 diagonal handle entries (LaurentPoly)
    kappa: LaurentPoly

    @property
    def ring(self):
        return self.sigma.ring


@dataclass
class TangleInvariant:
    matrix: list      # 4x4 of LaurentPoly

    def diagonal(self):
        return [self.matrix[a][a] for a in range(4)]

    def is_diagonal(self):
        return all(self.matrix[a][b].is_zero()
                   for a in range(4) for b in range(4) if a != b)

    def scalar(self):
        """The scalar when the matrix is that multiple of the identity."""
        d = self.matrix[0][0]
        if not self.is_diagonal() or any(x != d for x in self.diagonal()):
            raise EngineError("tangle invariant is not scalar")
        return d


def _scaled(R, kappa):
    kinv = kappa.invert_monomial()
    return R.scale(kappa), invert(R).scale(kinv)


@lru_cache(maxsize=None)
def model(case, isotopy):
    """The supported state models.

    Ambient exists for cases 1, 2 (at p = 1) and 4 (at p = Q = 1);
    regular for cases 2 and 3.
    """
    if isotopy == "ambient":
        if case == 1:
            m = QUANTUM.mono
            # The single-loop identity forces C = 1/p**2 * A for this kappa.
            kappa = m(1, p=-2, Q=2)
            sig, sig_inv = _scaled(quantum_r(1), kappa)
            C = (m(1, p=-2, Q=2), m(-1, p=-2, Q=2),
                 m(-1, p=-2, Q=-2), m(1, p=-2, Q=-2))
            return StateModel(1, "ambient", sig, sig_inv, C, kappa)
        if case == 2:
            # p = +1 branch; Y specializes to i(Q - 1/Q).
            m = QONLY.mono
            i = QONLY.gauss(0, 1)
            images = {"p": QONLY.one, "Q": QONLY.var("Q"),
                      "Y": i * (m(1, Q=1) - m(1, Q=-1))}
            R = quantum_r(2).map_entries(lambda v: map_poly(v, QONLY, images))
            kappa = m(1, Q=1)
            sig, sig_inv = _scaled(R, kappa)
            C = (m(1, Q=1), m(-1, Q=1), m(-1, Q=-1), m(1, Q=-1))
            return StateModel(2, "ambient", sig, sig_inv, C, kappa)
        if case == 4:
            # p = Q = +1 branch; everything is integer.
            images = {"p": CONST.one, "Q": CONST.one, "Y": CONST.zero}
            R = quantum_r(4).map_entries(lambda v: map_poly(v, CONST, images))
            kappa = CONST.one
            sig, sig_inv = _scaled(R, kappa)
            C = (CONST.one, -CONST.one, -CONST.one, CONST.one)
            return StateModel(4, "ambient", sig, sig_inv, C, kappa)
        raise EngineError(f"no ambient model for case {case}")
    if isotopy == "regular":
        m = QUANTUM.mono
        if case == 2:
            kappa = m(1, p=-2, Q=1)
            sig, sig_inv = _scaled(quantum_r(2), kappa)
            C = (m(1, p=-1, Q=1), m(-1, p=-1, Q=1),
                 m(-1, p=-1, Q=-1), m(1, p=-1, Q=-1))
            return StateModel(2, "regular", sig, sig_inv, C, kappa)
        if case == 3:
            kappa = m(1, p=-2)
            sig, sig_inv = _scaled(quantum_r(3), kappa)
            C = (QUANTUM.one, m(1, Q=2), m(1, Q=-2), QUANTUM.one)
            return StateModel(3, "regular", sig, sig_inv, C, kappa)
        raise EngineError(f"no regular model for case {case}")
    raise EngineError(f"unknown isotopy {isotopy!r}")


def handle_diagonal(mod):
    """The expected one-loop contraction diag for a regular model."""
    m = QUANTUM.mono
    if (mod.case, mod.isotopy) == (2, "regular"):
        return (m(1, p=-1), m(1, p=-1), m(1, p=1), m(1, p=1))
    if (mod.case, mod.isotopy) == (3, "regular"):
        return (m(1, p=-2), m(-1, Q=-4), m(-1, Q=-4), m(1, p=2))
    raise EngineError(f"no handle diagonal for {mod.case} {mod.isotopy}")


def _contract_handle(mod, op):
    """T[a][b] = sum_c C[c] * op^{c a}_{c b}."""
    zero = mod.ring.zero
    T = [[zero] * 4 for _ in range(4)]
    for (c1, a, c2, b), v in op.entries.items():
        if c1 == c2:
            T[a - 1][b - 1] = T[a - 1][b - 1] + mod.C[c1 - 1] * v
    return T


def verify_handle(mod):
    """Single-loop identity: ambient models contract to the identity for
    both crossing signs; regular models to the stated diagonal and its
    inverse."""
    ring = mod.ring
    if mod.isotopy == "ambient":
        exp_plus = (ring.one,) * 4
        exp_minus = exp_plus
    else:
        exp_plus = handle_diagonal(mod)
        exp_minus = tuple(d.invert_monomial() for d in exp_plus)
    for op, expected in ((mod.sigma, exp_plus), (mod.sigma_inv, exp_minus)):
        T = _contract_handle(mod, op)
        for a in range(4):
            for b in range(4):
                want = expected[a] if a == b else ring.zero
                if T[a][b] != want:
                    return False
    return True


def _letter_map(op):
    """Transition map keyed by the (lower, upper) strand values."""
    m = {}
    for (a, b, c, d), v in op.entries.items():
        # first slot on the upper strand: input (d, c) -> output (b, a)
        m.setdefault((d, c), []).append(((b, a), v))
    return m


def represent(word, mod, term_budget=DEFAULT_TERM_BUDGET):
    """Sparse representation of a braid word: a map from each input basis
    multi-index to its sparse image {output multi-index: coefficient}."""
    n = word.strands
    maps = {1: _letter_map(mod.sigma), -1: _letter_map(mod.sigma_inv)}
    out = {}
    stored = 0
    for s in product((1, 2, 3, 4), repeat=n):
        vec = {s: mod.ring.one}
        for k in word.letters:
            mp = maps[1 if k > 0 else -1]
            pos = abs(k)
            new = {}
            for state, coeff in vec.items():
                for pair, v in mp.get((state[pos - 1], state[pos]), ()):
                    t = state[:pos - 1] + pair + state[pos + 1:]
                    cur = new.get(t)
                    prod = coeff * v
                    acc = prod if cur is None else cur + prod
                    if acc.is_zero():
                        new.pop(t, None)
                    else:
                        new[t] = acc
            vec = new
        stored += sum(len(c.terms) for c in vec.values())
        if stored > term_budget:
            raise EngineError("term budget exceeded; braid beyond desk scale")
        if vec:
            out[s] = vec
    return out


def tangle_invariant(word, mod, term_budget=DEFAULT_TERM_BUDGET):
    """Close all strands but the first with C and return the 4x4 matrix."""
    if closure_components(word) != 1:
        raise EngineError(f"closure of {word} is not a knot")
    rep = represent(word, mod, term_budget)
    zero = mod.ring.zero
    M = [[zero] * 4 for _ in range(4)]
    for s, images in rep.items():
        weight = mod.ring.one
        for c in s[1:]:
            weight = weight * mod.C[c - 1]
        b = s[0]
        for a in range(1, 5):
            v = images.get((a,) + s[1:])
            if v is not None:
                M[a - 1][b - 1] = M[a - 1][b - 1] + weight * v
    return TangleInvariant(M)


def ambient_invariant(word, case, term_budget=DEFAULT_TERM_BUDGET):
    """The scalar of the (necessarily scalar) ambient 4x4 invariant."""
    return tangle_invariant(word, model(case, "ambient"), term_budget).scalar()


def matveev_test(mod):
    """Whether the model's representation separates the two 3-braids
    s1 s2^-1 s1 and s2 s1^-1 s2; a model failing this separates nothing.

    For case 4 the comparison is additionally run on the bare quantum
    operator with p, Q fully symbolic.
    """
    from .braid import matveev_pair

    def equal_reps(m):
        w1, w2 = matveev_pair()
        return represent(w1, m) == represent(w2, m)

    distinguishes = not equal_reps(mod)
    if mod.case == 4:
        R = quantum_r(4)
        sym = StateModel(4, "symbolic", R, invert(R),
                         (QUANTUM.one,) * 4, QUANTUM.one)
        if not equal_reps(sym):
            raise EngineError("case 4 symbolic representations differ")
        if distinguishes:
            raise EngineError("case 4 specialization distinguishes the pair")
    return distinguishes
