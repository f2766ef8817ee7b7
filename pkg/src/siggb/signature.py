"""Module terms, signatures, and labeled polynomials.

A signature is a coefficient-free module term ``gamma * e_index``.  The order
puts a *larger* generator index lower: any term on e_2 is below any term on
e_1; equal indices compare by the monomial order on gamma.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import (
    Cmp,
    DomainError,
    MonomialOrder,
    Polynomial,
    compare,
    exp_div,
    exp_mul,
    lcm_term,
    spol,
)


class SignatureCollisionError(DomainError):
    """Both components of an S-pair carry the same module term."""


@dataclass(frozen=True)
class Signature:
    gamma: tuple[int, ...]
    index: int

    def render(self, ring) -> str:
        mono = ring.render_exp(self.gamma)
        if mono == "1":
            return f"e{self.index}"
        return f"{mono}*e{self.index}"


def sig_compare(a: Signature, b: Signature, order: MonomialOrder) -> Cmp:
    """Index-first module term order: larger index is smaller."""
    if a.index != b.index:
        return Cmp.LT if a.index > b.index else Cmp.GT
    return compare(a.gamma, b.gamma, order)


def sig_mul(u: tuple[int, ...], s: Signature) -> Signature:
    return Signature(exp_mul(u, s.gamma), s.index)


def sig_key(s: Signature, order: MonomialOrder):
    """Sort key ascending in the module term order."""
    return (-s.index, order.key(s.gamma))


@dataclass
class LabeledPoly:
    """A signature together with a polynomial, optionally with a full
    module-vector witness (certificate mode)."""

    sig: Signature
    poly: Polynomial
    witness: object | None = None

    @property
    def index(self) -> int:
        return self.sig.index


def spol_labeled(
    r1: LabeledPoly,
    r2: LabeledPoly,
    order: MonomialOrder | None = None,
    pos1: int | None = None,
    pos2: int | None = None,
) -> LabeledPoly:
    """Labeled S-polynomial; the result carries the larger multiplied signature.

    Arguments are swapped if needed so that the second component's multiplied
    signature is the smaller one.  Equal module terms are rejected.
    In certificate mode (both witnesses present, or positions given) the
    result carries the combined witness.
    """
    p1, p2 = r1.poly, r2.poly
    if p1.is_zero or p2.is_zero:
        raise DomainError("S-polynomial of a zero labeled polynomial")
    order = order if order is not None else p1.ring.order
    l = lcm_term(p1.ht, p2.ht)
    u1 = exp_div(l, p1.ht)
    u2 = exp_div(l, p2.ht)
    s1 = sig_mul(u1, r1.sig)
    s2 = sig_mul(u2, r2.sig)
    c = sig_compare(s1, s2, order)
    if c is Cmp.EQ:
        # proportional polynomials cancel exactly; anything else is ambiguous
        _, _, s = spol(p1, p2)
        if not s.is_zero:
            raise SignatureCollisionError(
                f"signature collision on {s1.gamma}*e{s1.index}"
            )
    if c is Cmp.LT:
        r1, r2 = r2, r1
        u1, u2 = u2, u1
        s1 = s2
        p1, p2 = p2, p1
        pos1, pos2 = pos2, pos1
    _, _, s = spol(p1, p2)
    witness = None
    if r1.witness is not None and r2.witness is not None:
        witness = r1.witness.mul_term(u1, p2.hc) - r2.witness.mul_term(u2, p1.hc)
    elif pos1 is not None and pos2 is not None:
        from .syzygy import ModuleVector

        ring = p1.ring
        witness = ModuleVector.unit(pos1, ring).mul_term(u1, p2.hc) - ModuleVector.unit(
            pos2, ring
        ).mul_term(u2, p1.hc)
    return LabeledPoly(s1, s, witness)
