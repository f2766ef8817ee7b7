import pytest

from siggb.baseline import BaselineStats, PairQueue, buchberger_basis, ideal_equal
from siggb.corpus import random_ideal
from siggb.polyring import DomainError, PolyRing, top_reduce, spol


def test_golden_basis(golden_gens, golden_expected):
    assert buchberger_basis(golden_gens) == golden_expected


def test_small_known_bases():
    ring = PolyRing(("x", "y"))
    F = [ring.parse("x^2"), ring.parse("x*y")]
    assert buchberger_basis(F) == [ring.parse("x*y"), ring.parse("x^2")]
    assert buchberger_basis([ring.parse("x")]) == [ring.parse("x")]


def test_zero_generator():
    ring = PolyRing(("x",))
    with pytest.raises(DomainError):
        buchberger_basis([ring.zero])


def test_ideal_equal_examples(golden_gens):
    ring = PolyRing(("x", "y"))
    assert ideal_equal([ring.parse("x")], [ring.parse("2x")])
    assert not ideal_equal([ring.parse("x")], [ring.parse("y")])


def test_buchberger_criterion_on_output():
    # every S-polynomial of the final basis top-reduces to zero
    for seed in (11, 12, 13):
        gens = random_ideal(3, 3, 3, seed)
        G = buchberger_basis(gens)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                _, _, s = spol(G[i], G[j])
                assert top_reduce(s, G).is_zero


def test_gebauer_moeller_matches_plain_buchberger(golden_gens):
    # the criteria change the pair count, never the reduced basis
    for seed in (21, 22, 23, 24):
        gens = random_ideal(2, 2, 3, seed)
        with_gm = buchberger_basis(gens, strategy="gebauermoeller")
        plain = buchberger_basis(gens, strategy="none")
        assert with_gm == plain
    assert buchberger_basis(golden_gens, strategy="none") == buchberger_basis(golden_gens)


def test_pair_queue_logs_removals(golden_gens):
    stats = BaselineStats()
    queue = PairQueue()
    buchberger_basis(golden_gens, stats=stats, queue=queue)
    assert stats.pairs_created > 0
    assert not queue.pending
    assert all(crit in ("chain", "product") for _, crit in queue.removed)


def test_stats_block(golden_gens):
    stats = BaselineStats()
    buchberger_basis(golden_gens, stats=stats)
    lines = stats.lines()
    assert any(line.startswith("pairs created:") for line in lines)
    assert any(line.startswith("reductions to zero:") for line in lines)
