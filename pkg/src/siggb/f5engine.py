"""Incremental signature-based Groebner basis engine.

Generators are processed from the last index up to the first; critical pairs
are filtered by the F5 criterion (not normalized) and the Rewritten criterion,
and survivors go through signature-safe top reduction.  All discard decisions
are recorded as structured events that render to a line-oriented trace.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field as dfield
from typing import Iterable, Sequence

from .polyring import (
    Cmp,
    DomainError,
    MonomialOrder,
    Polynomial,
    StructureError,
    exp_degree,
    exp_div,
    exp_divides,
    exp_mul,
    lcm_term,
    reduced_basis,
)
from .signature import LabeledPoly, Signature, sig_compare, sig_key, sig_mul
from .syzygy import ModuleVector, evaluate, mht


class EngineError(RuntimeError):
    pass


@dataclass(frozen=True)
class EngineOptions:
    """Knobs for the choices the algorithm's description leaves open."""

    certify: bool = False              # carry module-vector witnesses
    validate_witnesses: bool = False   # check admissibility after every step
    check_on_creation: bool = True     # run both criteria at pair creation
    recheck_on_pop: bool = True        # and again when the pair is popped
    max_elements: int = 4000           # safety valve for runaway runs


@dataclass
class Stats:
    pairs_created: int = 0
    rejected_not_normalized: int = 0
    rejected_rewritable: int = 0
    signature_collisions: int = 0
    reductions_to_zero: int = 0
    reduction_steps: int = 0
    splits: int = 0
    elements_added: int = 0

    def lines(self) -> list[str]:
        return [
            f"pairs created: {self.pairs_created}",
            f"rejected not-normalized: {self.rejected_not_normalized}",
            f"rejected rewritable: {self.rejected_rewritable}",
            f"signature collisions: {self.signature_collisions}",
            f"reductions to zero: {self.reductions_to_zero}",
            f"reduction steps: {self.reduction_steps}",
            f"splits: {self.splits}",
            f"elements added: {self.elements_added}",
        ]


@dataclass(frozen=True)
class Snapshot:
    """What the basis looked like when a pair was created."""

    max_pos: int
    min_index: int
    rule_seq: int


@dataclass
class RewriteRule:
    gamma: tuple[int, ...]
    index: int
    seq: int
    label: object = None  # basis position, or "syzygy:<n>" for zero reductions

    def render_label(self) -> str:
        return str(self.label)


@dataclass
class CriticalPair:
    """S-pair bookkeeping; component i carries the larger multiplied signature."""

    i: int
    j: int
    u_i: tuple[int, ...]
    u_j: tuple[int, ...]
    lcm: tuple[int, ...]
    degree: int
    sig: Signature
    seq: int
    snapshot: Snapshot

    def component(self, comp: str) -> tuple[tuple[int, ...], int]:
        return (self.u_i, self.i) if comp == "i" else (self.u_j, self.j)


@dataclass
class NormalizedVerdict:
    normalized: bool
    witnesses: tuple  # ((comp, prev_pos), ...)

    @property
    def component(self):
        return self.witnesses[0][0] if self.witnesses else None

    @property
    def witness(self):
        return self.witnesses[0][1] if self.witnesses else None


@dataclass
class RewritableVerdict:
    rewritable: bool
    component: str | None = None
    rule: RewriteRule | None = None


# ---------------------------------------------------------------------------
# events

@dataclass
class IterationBegin:
    index: int

    def render(self, state) -> str:
        return f"# iteration index={self.index}"


@dataclass
class PairCreated:
    pair: CriticalPair

    def render(self, state) -> str:
        p = self.pair
        return f"PAIR d={p.degree} sig={p.sig.render(state.ring)} ({p.i},{p.j})"


@dataclass
class PairRejected:
    pair: CriticalPair
    kind: str  # "f5crit" | "rewrite"
    stage: str  # "creation" | "pop"
    component: str
    witnesses: tuple = ()  # f5crit: ((comp, prev_pos), ...)
    rule: RewriteRule | None = None

    def render(self, state) -> str:
        ring = state.ring
        p = self.pair
        lines = []
        if self.kind == "f5crit":
            for comp, prev in self.witnesses:
                u, pos = p.component(comp)
                lines.append(
                    f"REJECT f5crit pair=({p.i},{p.j}) comp={comp} "
                    f"u={ring.render_exp(u)} sig={state.sig(pos).render(ring)} "
                    f"witness={prev}"
                )
        else:
            u, pos = p.component(self.component)
            lines.append(
                f"REJECT rewrite pair=({p.i},{p.j}) comp={self.component} "
                f"u={ring.render_exp(u)} sig={state.sig(pos).render(ring)} "
                f"rule={self.rule.render_label()}"
            )
        return "\n".join(lines)


@dataclass
class SignatureCollision:
    a: int
    b: int
    sig: Signature

    def render(self, state) -> str:
        return f"REJECT collision pair=({self.a},{self.b}) sig={self.sig.render(state.ring)}"


@dataclass
class PairAdmitted:
    pair: CriticalPair

    def render(self, state) -> str:
        p = self.pair
        return f"REDUCE pair=({p.i},{p.j}) sig={p.sig.render(state.ring)}"


@dataclass
class ReducedToZero:
    sig: Signature
    trail_label: str

    def render(self, state) -> str:
        return f"ZERO sig={self.sig.render(state.ring)}"


@dataclass
class ElementAdded:
    pos: int
    sig: Signature
    ht: tuple[int, ...]

    def render(self, state) -> str:
        ring = state.ring
        return f"NEW pos={self.pos} sig={self.sig.render(ring)} ht={ring.render_exp(self.ht)}"


@dataclass
class RuleOutOfOrder:
    index: int
    gamma: tuple[int, ...]

    def render(self, state) -> str:
        return (
            f"# rule-out-of-order index={self.index} "
            f"gamma={state.ring.render_exp(self.gamma)}"
        )


# ---------------------------------------------------------------------------
# basis state

class BasisState:
    """Growing labeled basis, rewrite-rule table, stats, and event log."""

    def __init__(self, ring, m: int, opts: EngineOptions | None = None):
        self.ring = ring
        self.m = m
        self.opts = opts or EngineOptions()
        self.elements: list[LabeledPoly] = []
        self.element_rule: list[RewriteRule | None] = []
        self.rules: dict[int, list[RewriteRule]] = {i: [] for i in range(1, m + 1)}
        self.stats = Stats()
        self.events: list = []
        self.syzygy_trails: dict[str, ModuleVector] = {}
        self.current_index = m
        self._rule_seq = 0
        self._pair_seq = 0
        self._trail_seq = 0
        self._heap: list | None = None

    # accessors (1-based positions) -----------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def element(self, pos: int) -> LabeledPoly:
        if not 1 <= pos <= self.size:
            raise StructureError(f"unknown basis position {pos}")
        return self.elements[pos - 1]

    def poly(self, pos: int) -> Polynomial:
        return self.element(pos).poly

    def sig(self, pos: int) -> Signature:
        return self.element(pos).sig

    def active_positions(self, snapshot: Snapshot | None = None):
        max_pos = snapshot.max_pos if snapshot else self.size
        min_index = snapshot.min_index if snapshot else self.current_index
        for pos in range(1, max_pos + 1):
            if pos > self.m or pos >= min_index:
                yield pos

    def snapshot(self) -> Snapshot:
        return Snapshot(self.size, self.current_index, self._rule_seq)

    def polys(self) -> list[Polynomial]:
        return [e.poly for e in self.elements]

    # mutation ---------------------------------------------------------------

    def add_rule(self, gamma: tuple[int, ...], index: int, label=None) -> RewriteRule:
        self._rule_seq += 1
        rule = RewriteRule(gamma, index, self._rule_seq, label)
        lst = self.rules.setdefault(index, [])
        if lst and compare_gamma(lst[-1].gamma, gamma, self.ring.order) is Cmp.GT:
            self.events.append(RuleOutOfOrder(index, gamma))
        lst.append(rule)
        return rule

    def append_input(self, lp: LabeledPoly) -> int:
        self.elements.append(lp)
        pos = self.size
        rule = self.add_rule(self.ring.zero_exp, pos, label=pos)
        self.element_rule.append(rule)
        return pos

    def add_element(self, lp: LabeledPoly, rule: RewriteRule) -> int:
        if self.size >= self.opts.max_elements:
            raise EngineError(f"basis exceeded {self.opts.max_elements} elements")
        self.elements.append(lp)
        pos = self.size
        self.element_rule.append(rule)
        rule.label = pos
        self.stats.elements_added += 1
        self.events.append(ElementAdded(pos, lp.sig, lp.poly.ht))
        return pos

    def new_trail_label(self) -> str:
        self._trail_seq += 1
        return f"syzygy:{self._trail_seq}"

    def validate_witnesses(self):
        """Admissibility: every witness evaluates to its polynomial and has
        the stored signature as module head term."""
        for pos in range(1, self.size + 1):
            elt = self.element(pos)
            if elt.witness is None:
                raise EngineError(f"element {pos} has no witness")
            if evaluate(elt.witness, self) != elt.poly:
                raise EngineError(f"witness of element {pos} does not evaluate to it")
            if mht(elt.witness, self) != elt.sig:
                raise EngineError(f"witness of element {pos} has wrong module head term")


def compare_gamma(a, b, order) -> Cmp:
    from .polyring import compare

    return compare(a, b, order)


# ---------------------------------------------------------------------------
# the two criteria

def component_f5_witnesses(
    u: tuple[int, ...], pos: int, state: BasisState,
    snapshot: Snapshot | None = None, first_only: bool = False,
) -> list[int]:
    """Basis elements of larger index whose head divides u * Gamma(Sig(r_pos))."""
    elt = state.element(pos)
    k0 = elt.sig.index
    t = exp_mul(u, elt.sig.gamma)
    out = []
    for prev in state.active_positions(snapshot):
        pe = state.elements[prev - 1]
        if pe.sig.index > k0 and exp_divides(pe.poly.ht, t):
            out.append(prev)
            if first_only:
                break
    return out


def component_rewriter(
    u: tuple[int, ...], pos: int, state: BasisState, snapshot: Snapshot | None = None
) -> RewriteRule | None:
    """Newest rule of the component's index dividing u * Gamma(Sig(r_pos)).

    The newest divisor decides: the component's own creation rule means "not
    rewritable", any other rule rewrites the component.
    """
    elt = state.element(pos)
    own = state.element_rule[pos - 1]
    t = exp_mul(u, elt.sig.gamma)
    max_seq = snapshot.rule_seq if snapshot else None
    for rule in reversed(state.rules.get(elt.sig.index, [])):
        if max_seq is not None and rule.seq > max_seq:
            continue
        if exp_divides(rule.gamma, t):
            return None if rule is own else rule
    return None


def is_normalized(
    pair: CriticalPair, state: BasisState, snapshot: Snapshot | None = None
) -> NormalizedVerdict:
    """F5 criterion: both components are scanned and all witnesses collected."""
    witnesses = []
    for comp in ("i", "j"):
        u, pos = pair.component(comp)
        for prev in component_f5_witnesses(u, pos, state, snapshot):
            witnesses.append((comp, prev))
    return NormalizedVerdict(not witnesses, tuple(witnesses))


def is_rewritable(
    pair: CriticalPair, state: BasisState, snapshot: Snapshot | None = None
) -> RewritableVerdict:
    """Rewritten criterion on both components, larger-signature side first."""
    for comp in ("i", "j"):
        u, pos = pair.component(comp)
        rule = component_rewriter(u, pos, state, snapshot)
        if rule is not None:
            return RewritableVerdict(True, comp, rule)
    return RewritableVerdict(False)


# ---------------------------------------------------------------------------
# signature-safe top reduction

@dataclass
class TRResult:
    kind: str  # "reduced" | "zero" | "split"
    element: LabeledPoly
    new_element: LabeledPoly | None = None


def _monicize(lp: LabeledPoly) -> LabeledPoly:
    if lp.poly.is_zero:
        return lp
    f = lp.poly.ring.field
    c = lp.poly.hc
    if c == f.one:
        return lp
    inv = f.inv(c)
    w = lp.witness.scale(inv) if lp.witness is not None else None
    return LabeledPoly(lp.sig, lp.poly.scale(inv), w)


def _find_reductor(poly: Polynomial, sig: Signature, state: BasisState):
    """First eligible reductor in insertion order.

    A reductor multiple must not share the working signature, must be
    normalized, and must not be rewritable (same predicates as pair
    components).
    """
    ht = poly.ht
    order = state.ring.order
    for pos in state.active_positions():
        elt = state.elements[pos - 1]
        u = exp_div(ht, elt.poly.ht)
        if u is None:
            continue
        msig = sig_mul(u, elt.sig)
        cm = sig_compare(msig, sig, order)
        if cm is Cmp.EQ:
            continue
        if component_f5_witnesses(u, pos, state, first_only=True):
            continue
        if component_rewriter(u, pos, state) is not None:
            continue
        return u, pos, elt, cm
    return None


def top_reduction_signed(
    r: LabeledPoly, state: BasisState, order: MonomialOrder | None = None
) -> TRResult:
    """Reduce the head of r by eligible reductors.

    Smaller-signature reductors rewrite the head in place (the signature never
    changes); a larger-signature reductor splits the computation: the element
    is returned untouched together with the new S-polynomial against the
    reductor.  Reduction to the zero polynomial reports zero.
    """
    opts = state.opts
    if r.poly.is_zero:
        return TRResult("zero", r)
    while True:
        found = _find_reductor(r.poly, r.sig, state)
        if found is None:
            return TRResult("reduced", _monicize(r))
        u, pos, elt, cm = found
        if cm is Cmp.LT:
            c = state.ring.field.div(r.poly.hc, elt.poly.hc)
            poly = r.poly.sub_mul(c, u, elt.poly)
            witness = r.witness
            if witness is not None:
                witness = witness - ModuleVector.unit(pos, state.ring).mul_term(u, c)
            state.stats.reduction_steps += 1
            r = _monicize(LabeledPoly(r.sig, poly, witness))
            if opts.certify and opts.validate_witnesses and not r.poly.is_zero:
                if evaluate(r.witness, state) != r.poly:
                    raise EngineError("working witness diverged during reduction")
            if r.poly.is_zero:
                return TRResult("zero", r)
        else:
            # Spol(r_red, r) with the larger multiplied signature
            new_sig = sig_mul(u, elt.sig)
            new_poly = elt.poly.mul_term(u, r.poly.hc).sub_mul(elt.poly.hc, state.ring.zero_exp, r.poly)
            new_witness = None
            if r.witness is not None:
                new_witness = ModuleVector.unit(pos, state.ring).mul_term(
                    u, r.poly.hc
                ) - r.witness.mul_term(state.ring.zero_exp, elt.poly.hc)
            state.stats.splits += 1
            return TRResult(
                "split", r, _monicize(LabeledPoly(new_sig, new_poly, new_witness))
            )


# ---------------------------------------------------------------------------
# the incremental engine

def _make_pair(state: BasisState, a: int, b: int) -> None:
    """Create the critical pair of positions a and b, run creation-time checks,
    and enqueue it if it survives."""
    order = state.ring.order
    pa, pb = state.poly(a), state.poly(b)
    l = lcm_term(pa.ht, pb.ht)
    ua, ub = exp_div(l, pa.ht), exp_div(l, pb.ht)
    sa, sb = sig_mul(ua, state.sig(a)), sig_mul(ub, state.sig(b))
    cmpab = sig_compare(sa, sb, order)
    state.stats.pairs_created += 1
    if cmpab is Cmp.EQ:
        state.stats.signature_collisions += 1
        state.events.append(SignatureCollision(a, b, sa))
        return
    if cmpab is Cmp.LT:
        a, b, ua, ub, sa, sb = b, a, ub, ua, sb, sa
    state._pair_seq += 1
    pair = CriticalPair(
        i=a, j=b, u_i=ua, u_j=ub, lcm=l, degree=exp_degree(l), sig=sa,
        seq=state._pair_seq, snapshot=state.snapshot(),
    )
    state.events.append(PairCreated(pair))
    if state.opts.check_on_creation:
        nv = is_normalized(pair, state)
        if not nv.normalized:
            state.stats.rejected_not_normalized += 1
            state.events.append(
                PairRejected(pair, "f5crit", "creation", nv.component, nv.witnesses)
            )
            return
        rw = is_rewritable(pair, state)
        if rw.rewritable:
            state.stats.rejected_rewritable += 1
            state.events.append(
                PairRejected(pair, "rewrite", "creation", rw.component, rule=rw.rule)
            )
            return
    heapq.heappush(
        state._heap, (pair.degree, sig_key(pair.sig, order), pair.seq, pair)
    )


def _spol_of_pair(state: BasisState, pair: CriticalPair) -> LabeledPoly:
    pi, pj = state.poly(pair.i), state.poly(pair.j)
    s = pi.mul_term(pair.u_i, pj.hc).sub_mul(pi.hc, pair.u_j, pj)
    witness = None
    if state.opts.certify:
        ring = state.ring
        witness = ModuleVector.unit(pair.i, ring).mul_term(
            pair.u_i, pj.hc
        ) - ModuleVector.unit(pair.j, ring).mul_term(pair.u_j, pi.hc)
    return _monicize(LabeledPoly(pair.sig, s, witness))


def _reduce_admitted(state: BasisState, pair: CriticalPair, rule: RewriteRule) -> None:
    order = state.ring.order
    start = _spol_of_pair(state, pair)
    pending: list = []
    seq = 0
    heapq.heappush(pending, (sig_key(start.sig, order), seq, start, rule))
    while pending:
        _, _, lp, lp_rule = heapq.heappop(pending)
        res = top_reduction_signed(lp, state)
        if res.kind == "zero":
            state.stats.reductions_to_zero += 1
            label = state.new_trail_label()
            lp_rule.label = label
            if res.element.witness is not None:
                state.syzygy_trails[label] = res.element.witness
            state.events.append(ReducedToZero(res.element.sig, label))
        elif res.kind == "reduced":
            pos = state.add_element(res.element, lp_rule)
            if state.opts.certify and state.opts.validate_witnesses:
                state.validate_witnesses()
            for other in list(state.active_positions()):
                if other != pos:
                    _make_pair(state, pos, other)
        else:  # split
            new_rule = state.add_rule(res.new_element.sig.gamma, res.new_element.sig.index)
            seq += 1
            heapq.heappush(
                pending, (sig_key(res.element.sig, order), seq, res.element, lp_rule)
            )
            seq += 1
            heapq.heappush(
                pending,
                (sig_key(res.new_element.sig, order), seq, res.new_element, new_rule),
            )


def incremental_basis(
    F: Sequence[Polynomial],
    order: MonomialOrder | None = None,
    opts: EngineOptions | None = None,
) -> tuple[BasisState, list]:
    """Signature-based Groebner basis of <F>, computed index by index.

    Returns the final basis state (whose stored polynomials generate the same
    ideal and form a Groebner basis) and the event trace.
    """
    F = list(F)
    if not F:
        raise DomainError("empty generator sequence")
    ring = F[0].ring
    for f in F:
        if f.is_zero:
            raise DomainError("zero generator")
        if f.ring != ring:
            raise StructureError("generators from different rings")
    if order is not None and order != ring.order:
        raise StructureError("order does not match the ring's order")
    state = BasisState(ring, len(F), opts)
    for i, f in enumerate(F, 1):
        witness = ModuleVector.unit(i, ring) if state.opts.certify else None
        state.append_input(LabeledPoly(Signature(ring.zero_exp, i), f.monic(), witness))
    for k in range(state.m - 1, 0, -1):
        state.current_index = k
        state.events.append(IterationBegin(k))
        state._heap = []
        for pos in list(state.active_positions()):
            if pos != k:
                _make_pair(state, k, pos)
        while state._heap:
            _, _, _, pair = heapq.heappop(state._heap)
            if state.opts.recheck_on_pop:
                nv = is_normalized(pair, state)
                if not nv.normalized:
                    state.stats.rejected_not_normalized += 1
                    state.events.append(
                        PairRejected(pair, "f5crit", "pop", nv.component, nv.witnesses)
                    )
                    continue
                rw = is_rewritable(pair, state)
                if rw.rewritable:
                    state.stats.rejected_rewritable += 1
                    state.events.append(
                        PairRejected(pair, "rewrite", "pop", rw.component, rule=rw.rule)
                    )
                    continue
            rule = state.add_rule(pair.sig.gamma, pair.sig.index)
            state.events.append(PairAdmitted(pair))
            _reduce_admitted(state, pair, rule)
    state.current_index = 1
    if state.opts.certify and state.opts.validate_witnesses:
        state.validate_witnesses()
    return state, state.events


def interreduce(basis, order: MonomialOrder | None = None) -> list[Polynomial]:
    """Unique reduced monic Groebner basis of the given basis."""
    if isinstance(basis, BasisState):
        polys = basis.polys()
    else:
        polys = list(basis)
    return reduced_basis(polys)


def rejection_events(state: BasisState) -> list[PairRejected]:
    return [e for e in state.events if isinstance(e, PairRejected)]


def certify_all(state: BasisState) -> list:
    """Build and verify a certificate for every criterion rejection."""
    from .syzygy import certify_rejection

    out = []
    for ev in rejection_events(state):
        out.append(certify_rejection(ev.pair, ev, state))
    return out
