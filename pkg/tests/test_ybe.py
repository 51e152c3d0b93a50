"""Yang-Baxter and gauge-property verifiers."""

import pytest

from gaugeknot import rmat, ybe
from gaugeknot.ring import QUANTUM, TRIG, RingError


def test_embed_identity():
    ident = rmat.identity_op(QUANTUM)
    emb = ybe.embed(ident, 12)
    assert len(emb) == 64
    for (rows, cols), v in emb.items():
        assert rows == cols and v.is_one()


def test_embed_slots():
    R = rmat.quantum_r(1)
    e12 = ybe.embed(R, 12)
    e23 = ybe.embed(R, 23)
    e13 = ybe.embed(R, 13)
    for (a, b, c, d), v in R.entries.items():
        for x in (1, 2, 3, 4):
            assert e12[((a, b, x), (c, d, x))] == v
            assert e23[((x, a, b), (x, c, d))] == v
            assert e13[((a, x, b), (c, x, d))] == v
    with pytest.raises(RingError):
        ybe.embed(R, 21)


def test_embed_13_is_flip_conjugated_12():
    R = rmat.quantum_r(2)
    e13 = ybe.embed(R, 13)
    flip = {((a, b, c), (a, c, b)) for a in range(1, 5)
            for b in range(1, 5) for c in range(1, 5)}
    e12 = ybe.embed(R, 12)
    conj = {((ra, rc, rb), (ca, cc, cb)): v
            for ((ra, rb, rc), (ca, cb, cc)), v in e12.items()}
    assert e13 == conj


def test_distant_commutativity(rng):
    """embed(R, 12) commutes with any operator acting only on site 3."""
    R = rmat.quantum_r(3)
    e12 = ybe.embed(R, 12)
    diag = {x: QUANTUM.mono((rng.randint(1, 5), 0), Q=rng.randint(-2, 2))
            for x in (1, 2, 3, 4)}
    D = {((a, b, x), (a, b, x)): diag[x] for a in range(1, 5)
         for b in range(1, 5) for x in (1, 2, 3, 4)}
    left = ybe._three_mul(e12, D)
    right = ybe._three_mul(D, e12)
    assert left == right


def test_qybe_passes():
    assert ybe.verify_qybe(rmat.identity_op(QUANTUM))
    assert ybe.verify_qybe(rmat.quantum_r(1))


def test_qybe_perturbation_fails_with_witness():
    R = rmat.quantum_r(1)
    entries = dict(R.entries)
    entries[(2, 3, 3, 2)] = -entries[(2, 3, 3, 2)]
    rep = ybe.verify_qybe(rmat.SparseROp(QUANTUM, entries))
    assert not rep.ok
    assert rep.witness is not None
    assert rep.lhs != rep.rhs


def test_tybe_perturbation_fails():
    free = rmat.build_trig_gauge_free()
    entries = dict(free.entries)
    entries[(2, 3, 3, 2)] = entries[(2, 3, 3, 2)] * 2
    rep = ybe.verify_tybe_additive(rmat.SparseROp(TRIG, entries))
    assert not rep.ok


def test_gauge_properties_pass():
    free = rmat.build_trig_gauge_free()
    assert ybe.verify_gauge_properties(rmat.GaugeMatrix.standard(), free)
    assert ybe.verify_gauge_properties(rmat.GaugeMatrix.identity(), free)


def test_gauge_properties_bad_diagonal():
    free = rmat.build_trig_gauge_free()
    m = TRIG.mono
    bad = rmat.GaugeMatrix((TRIG.one, m(1, Ru=1), m(1, Su=1),
                            m(1, Ru=1, Su=1, X=1)))
    rep = ybe.verify_gauge_properties(bad, free)
    assert not rep.ok
    assert rep.witness == ("diag", 4)


def test_gauge_properties_nonzero_at_zero():
    free = rmat.build_trig_gauge_free()
    m = TRIG.mono
    bad = rmat.GaugeMatrix((TRIG.one, m(1, Q=2, Ru=1), m(1, Su=1),
                            m(1, Q=2, Ru=1, Su=1)))
    rep = ybe.verify_gauge_properties(bad, free)
    assert not rep.ok


def test_gauge_covariance_of_tybe():
    """Conjugating a TYBE solution by a valid gauge keeps it a solution;
    checked via the standard gauge (the gauged operator's own TYBE run is
    the acceptance gate, so use a lighter gauge here)."""
    free = rmat.build_trig_gauge_free()
    m = TRIG.mono
    A = rmat.GaugeMatrix((TRIG.one, m(1, Ru=1), TRIG.one, m(1, Ru=1)))
    assert ybe.verify_gauge_properties(A, free)
    assert ybe.verify_tybe_additive(rmat.apply_gauge(free, A))
