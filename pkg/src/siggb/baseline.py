"""Independent Buchberger engine with Gebauer-Moeller pair elimination.

Used as the correctness oracle for the signature engine.  Shares only the
plain polynomial arithmetic; no signature machinery is involved, so a bug in
the signature logic cannot mask itself here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .polyring import (
    DomainError,
    Polynomial,
    StructureError,
    exp_degree,
    exp_div,
    exp_divides,
    exp_mul,
    lcm_term,
    reduce_full,
    reduced_basis,
    spol,
)


@dataclass
class PairQueue:
    """Pending S-pairs plus a log of pairs removed by a criterion."""

    pending: dict = field(default_factory=dict)  # (i, j) -> lcm
    removed: list = field(default_factory=list)  # ((i, j), criterion)

    def discard(self, key, criterion: str):
        if key in self.pending:
            del self.pending[key]
            self.removed.append((key, criterion))


@dataclass
class BaselineStats:
    pairs_created: int = 0
    rejected_product: int = 0
    rejected_chain: int = 0
    reductions_to_zero: int = 0
    reduction_steps: int = 0
    elements_added: int = 0

    def lines(self) -> list[str]:
        return [
            f"pairs created: {self.pairs_created}",
            f"rejected product-criterion: {self.rejected_product}",
            f"rejected chain-criterion: {self.rejected_chain}",
            f"reductions to zero: {self.reductions_to_zero}",
            f"elements added: {self.elements_added}",
        ]


def _update(G, queue: PairQueue, f: Polynomial, stats: BaselineStats, strategy: str):
    """Add f to the basis, building new pairs under the chosen elimination."""
    ring = f.ring
    t = len(G)
    lmf = f.ht
    new_lcms = {i: lcm_term(G[i].ht, lmf) for i in range(t)}
    for i in range(t):
        stats.pairs_created += 1

    if strategy == "none":
        for i in range(t):
            queue.pending[(i, t)] = new_lcms[i]
        G.append(f)
        return

    # chain criterion on old pairs: drop (i, j) when lmf divides its lcm
    # strictly (the two pairs with f survive)
    for key in list(queue.pending):
        i, j = key
        l = queue.pending[key]
        if (
            exp_divides(lmf, l)
            and l != new_lcms[i]
            and l != new_lcms[j]
        ):
            queue.discard(key, "chain")
            stats.rejected_chain += 1

    # group the new pairs by lcm and keep only minimal lcms, one pair each
    by_lcm: dict[tuple[int, ...], list[int]] = {}
    for i in range(t):
        by_lcm.setdefault(new_lcms[i], []).append(i)
    minimal: list[tuple[int, ...]] = []
    for l in sorted(by_lcm, key=ring.key):
        if any(exp_divides(l2, l) for l2 in minimal):
            for i in by_lcm[l]:
                stats.rejected_chain += 1
            continue
        minimal.append(l)
    for l in minimal:
        members = by_lcm[l]
        coprime = any(exp_mul(G[i].ht, lmf) == l for i in members)
        if coprime:
            stats.rejected_product += 1
            stats.rejected_chain += len(members) - 1
            continue
        keep = min(members)
        queue.pending[(keep, t)] = l
        for i in members:
            if i != keep:
                stats.rejected_chain += 1
    G.append(f)


def buchberger_basis(
    F: Sequence[Polynomial],
    order=None,
    stats: BaselineStats | None = None,
    strategy: str = "gebauermoeller",
    queue: PairQueue | None = None,
) -> list[Polynomial]:
    """Reduced monic Groebner basis of <F> via Buchberger's algorithm.

    Pairs are selected by (degree, order key) of the lcm; elimination is
    Gebauer-Moeller by default, or "none" for the differential test.
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
    stats = stats if stats is not None else BaselineStats()
    queue = queue if queue is not None else PairQueue()
    G: list[Polynomial] = []
    for f in F:
        _update(G, queue, f.monic(), stats, strategy)
        stats.elements_added += 1
    while queue.pending:
        key = min(
            queue.pending,
            key=lambda k: (exp_degree(queue.pending[k]), ring.key(queue.pending[k]), k),
        )
        i, j = key
        del queue.pending[key]
        _, _, s = spol(G[i], G[j])
        r = reduce_full(s, G)
        if r.is_zero:
            stats.reductions_to_zero += 1
        else:
            _update(G, queue, r.monic(), stats, strategy)
            stats.elements_added += 1
    return reduced_basis(G)


def ideal_equal(A: Sequence[Polynomial], B: Sequence[Polynomial], order=None) -> bool:
    """True iff the interreduced monic forms of A and B coincide as sets."""
    ra = reduced_basis(A)
    rb = reduced_basis(B)
    return {p.terms for p in ra} == {p.terms for p in rb}
