import pytest

from siggb import (
    EngineOptions,
    PolyRing,
    buchberger_basis,
    incremental_basis,
    interreduce,
)
from siggb.corpus import corpus_shapes, cyclic, katsura, random_ideal

GOLDEN_GENERATORS = (
    "y*z^3 - x^2*t^2",
    "x*z^2 - y^2*t",
    "x^2*y - z^2*t",
)

# the reference reduced basis, head-ascending
GOLDEN_BASIS = (
    "x*z^2 - y^2*t",
    "x^2*y - z^2*t",
    "y*z^3 - x^2*t^2",
    "y^3*z*t - x^3*t^2",
    "x*y^3*t - z^4*t",
    "z^5*t - x^4*t^2",
    "y^5*t^2 - x^4*z*t^2",
    "x^5*t^2 - z^2*t^5",
)

CORPUS_SIZE = 100


@pytest.fixture(scope="session")
def golden_ring():
    return PolyRing(("x", "y", "z", "t"))


@pytest.fixture(scope="session")
def golden_gens(golden_ring):
    return [golden_ring.parse(s) for s in GOLDEN_GENERATORS]


@pytest.fixture(scope="session")
def golden_expected(golden_ring):
    return [golden_ring.parse(s) for s in GOLDEN_BASIS]


@pytest.fixture(scope="session")
def golden_state(golden_gens):
    state, _ = incremental_basis(golden_gens)
    return state


@pytest.fixture(scope="session")
def golden_state_certified(golden_gens):
    state, _ = incremental_basis(
        golden_gens, opts=EngineOptions(certify=True, validate_witnesses=True)
    )
    return state


@pytest.fixture(scope="session")
def corpus_runs():
    """One pass over the full oracle corpus, shared by the acceptance tests."""
    runs = []
    for k, d, n, seed in corpus_shapes(CORPUS_SIZE):
        gens = random_ideal(k, d, n, seed)
        state, _ = incremental_basis(gens)
        runs.append(
            {
                "name": f"random(k={k},d={d},n={n},seed={seed})",
                "gens": gens,
                "state": state,
                "f5": interreduce(state),
                "gm": buchberger_basis(gens),
            }
        )
    for name, gens in (("cyclic-4", cyclic(4)), ("katsura-4", katsura(4))):
        state, _ = incremental_basis(gens)
        runs.append(
            {
                "name": name,
                "gens": gens,
                "state": state,
                "f5": interreduce(state),
                "gm": buchberger_basis(gens),
            }
        )
    return runs
