import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from siggb.f5engine import EngineOptions, certify_all, incremental_basis, rejection_events
from siggb.polyring import DomainError, PolyRing, StructureError, compare, Cmp, top_reduce
from siggb.signature import LabeledPoly, Signature
from siggb.syzygy import (
    ModuleVector,
    TRepresentation,
    check_t_representation,
    evaluate,
    mht,
    principal_syzygy,
)


def mv(ring, entries):
    return ModuleVector(ring, {pos: ring.parse(s) for pos, s in entries.items()})


# -- evaluate -------------------------------------------------------------------

def test_evaluate_trivial_syzygy(golden_state, golden_ring):
    v = ModuleVector.unit(1, golden_ring) - ModuleVector.unit(1, golden_ring)
    assert evaluate(v, golden_state).is_zero


def test_evaluate_principal(golden_state, golden_ring):
    p1, p2 = golden_state.poly(1), golden_state.poly(2)
    v = ModuleVector(golden_ring, {1: p2}) - ModuleVector(golden_ring, {2: p1})
    assert evaluate(v, golden_state).is_zero


def test_evaluate_creation_relation(golden_state, golden_ring):
    # x e1 - yz e2 - e6 evaluates to zero on the computed basis
    v = mv(golden_ring, {1: "x", 2: "-y*z", 6: "-1"})
    assert evaluate(v, golden_state).is_zero


def test_evaluate_unknown_position(golden_state, golden_ring):
    v = ModuleVector.unit(99, golden_ring)
    with pytest.raises(StructureError):
        evaluate(v, golden_state)


def test_evaluate_linear(golden_state, golden_ring):
    rng = random.Random(7)

    def rand_poly():
        terms = {}
        for _ in range(rng.randint(0, 3)):
            e = tuple(rng.randrange(3) for _ in range(4))
            terms[e] = Fraction(rng.randint(-5, 5))
        return golden_ring.build(terms)

    for _ in range(50):
        v = ModuleVector(golden_ring, {rng.randint(1, 10): rand_poly() for _ in range(2)})
        w = ModuleVector(golden_ring, {rng.randint(1, 10): rand_poly() for _ in range(2)})
        a = rand_poly()
        left = evaluate(v.mul_poly(a) + w, golden_state)
        right = a * evaluate(v, golden_state) + evaluate(w, golden_state)
        assert left == right


# -- mht --------------------------------------------------------------------------

def test_mht_known_values(golden_state, golden_ring):
    v = mv(golden_ring, {1: "x", 2: "-y*z", 6: "-1"})
    assert mht(v, golden_state) == Signature((1, 0, 0, 0), 1)
    assert mht(ModuleVector.unit(3, golden_ring), golden_state) == Signature((0, 0, 0, 0), 3)
    s12 = principal_syzygy(2, 1, golden_state)
    assert mht(s12, golden_state) == Signature((1, 0, 2, 0), 1)  # xz^2 e1


def test_mht_zero_vector(golden_state, golden_ring):
    with pytest.raises(DomainError):
        mht(ModuleVector(golden_ring), golden_state)


# -- principal syzygies ------------------------------------------------------------

def test_principal_syzygy_known_value(golden_state, golden_ring):
    s = principal_syzygy(2, 1, golden_state)
    assert s == mv(golden_ring, {1: "x*z^2 - y^2*t", 2: "-y*z^3 + x^2*t^2"})


def test_principal_syzygy_antisymmetry(golden_state, golden_ring):
    assert principal_syzygy(3, 3, golden_state).is_zero


def test_principal_syzygies_evaluate_to_zero(golden_state):
    for a in range(1, golden_state.size + 1):
        for b in range(1, golden_state.size + 1):
            assert evaluate(principal_syzygy(a, b, golden_state), golden_state).is_zero


# -- t-representations ---------------------------------------------------------------

def test_t_representation_valid(golden_state, golden_ring):
    # Spol(p1, p3) = x*p6 - z*p4 is admissible below t = x^2yz^3
    target = LabeledPoly(
        Signature((2, 0, 0, 0), 1), golden_ring.parse("z^5*t - x^4*t^2")
    )
    rep = TRepresentation(
        target, (2, 1, 3, 0), mv(golden_ring, {6: "x", 4: "-z"})
    )
    out = check_t_representation(rep, golden_state)
    assert out.valid


def test_t_representation_head_term_boundary(golden_state, golden_ring):
    # a combination term whose head reaches t exactly is rejected
    target = LabeledPoly(Signature((0, 0, 0, 0), 1), golden_state.poly(1))
    rep = TRepresentation(target, golden_state.poly(1).ht, mv(golden_ring, {1: "1"}))
    out = check_t_representation(rep, golden_state)
    assert not out.valid and out.reason == "head-term"


def test_t_representation_signature_bound(golden_state, golden_ring):
    # evaluation matches but the combination uses a too-large signature
    target = LabeledPoly(
        Signature((0, 0, 0, 0), 3), golden_state.poly(1).mul_term((0, 0, 0, 1))
    )
    rep = TRepresentation(target, (5, 5, 5, 5), mv(golden_ring, {1: "t"}))
    out = check_t_representation(rep, golden_state)
    assert not out.valid and out.reason == "signature"


def test_t_representation_empty_for_zero(golden_state, golden_ring):
    target = LabeledPoly(Signature((0, 0, 0, 0), 1), golden_ring.zero)
    rep = TRepresentation(target, (1, 0, 0, 0), ModuleVector(golden_ring))
    assert check_t_representation(rep, golden_state).valid


def test_t_representation_implies_reduction_below_t(golden_state, golden_ring):
    # a valid representation means top reduction cannot get stuck at or above t
    target = LabeledPoly(
        Signature((2, 0, 0, 0), 1), golden_ring.parse("z^5*t - x^4*t^2")
    )
    t = (2, 1, 3, 0)
    rep = TRepresentation(target, t, mv(golden_ring, {6: "x", 4: "-z"}))
    assert check_t_representation(rep, golden_state).valid
    listed = [golden_state.poly(p) for p in rep.combination.positions()]
    nf = top_reduce(target.poly, listed)
    assert nf.is_zero or compare(nf.ht, t, golden_ring.order) is Cmp.LT


# -- certificates ----------------------------------------------------------------------

def test_certificates_all_valid(golden_state_certified):
    certs = certify_all(golden_state_certified)
    assert len(certs) == len(rejection_events(golden_state_certified))
    assert all(c.valid for c in certs)


def test_certificate_requires_witnesses(golden_state):
    with pytest.raises(DomainError):
        certify_all(golden_state)


def test_certificate_mht_cancellation(golden_state_certified):
    # the two combined syzygies share their module head term
    for c in certify_all(golden_state_certified):
        assert c.mht_b == c.bound_sig
        if c.mht_a is not None:
            assert c.mht_a == c.bound_sig


def test_certificate_trivial_syzygy_case(golden_state_certified, golden_ring):
    # input-component rejection: the certificate is the rewriter syzygy alone
    state = golden_state_certified
    ev = next(
        e
        for e in rejection_events(state)
        if (e.pair.i, e.pair.j) == (1, 3) and e.kind == "rewrite"
    )
    from siggb.syzygy import certify_rejection

    cert = certify_rejection(ev.pair, ev, state)
    assert cert.valid
    assert cert.vector == mv(golden_ring, {1: "-x^2", 2: "x*y*z", 6: "x"})


def test_certificate_rendering(golden_state_certified):
    certs = certify_all(golden_state_certified)
    text = certs[0].render(golden_state_certified)
    assert "syzygy:" in text and "verdict: valid" in text
