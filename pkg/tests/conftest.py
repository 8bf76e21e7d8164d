import json
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from partruth.polyring import Polynomial, Ring

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def expected_report(name: str) -> dict:
    stem = name[:-5] if name.endswith(".json") else name
    return json.loads((FIXTURES / f"{stem}.expected.json").read_text())


def polynomials(ring: Ring, max_terms=4, max_exp=3, coeff=5):
    mono = st.tuples(*[st.integers(0, max_exp)] * ring.arity)
    return st.dictionaries(mono, st.integers(-coeff, coeff), max_size=max_terms).map(
        lambda d: Polynomial(ring, d))


def bounded_degree(ring: Ring, degree=3, max_terms=4, coeff=5):
    """Polynomials of total degree at most ``degree``."""
    mono = st.tuples(*[st.integers(0, degree)] * ring.arity).filter(
        lambda m: sum(m) <= degree)
    return st.dictionaries(mono, st.integers(-coeff, coeff), min_size=1,
                           max_size=max_terms).map(lambda d: Polynomial(ring, d))


@pytest.fixture
def xyz():
    return Ring(("x", "y", "z"))


def _random_factor(rng, ring, degree):
    d = {}
    for _ in range(rng.randint(1, 3)):
        k = rng.randint(0, degree)
        m = [0] * ring.arity
        for _ in range(k):
            m[rng.randrange(ring.arity)] += 1
        d[tuple(m)] = d.get(tuple(m), 0) + rng.choice([-2, -1, 1, 1, 2, 3])
    p = Polynomial(ring, d)
    return p if not p.is_constant else ring.var(rng.choice(ring.names)) - p


def random_statement_data(rng):
    """Hypotheses and thesis built as products of small factors.

    Products make reducible varieties common, so every verdict shows up.
    At most four variables, three hypotheses and total degree three.
    """
    n = rng.randint(2, 4)
    ring = Ring(("a", "b", "c", "d")[:n])
    factors = [_random_factor(rng, ring, rng.choice([1, 1, 2])) for _ in range(4)]

    def product():
        p = ring.one()
        for _ in range(rng.randint(1, 2)):
            q = p * rng.choice(factors)
            if q.total_degree() > 3:
                break
            p = q
        return p if not p.is_constant else rng.choice(factors)

    hyps = tuple(product() for _ in range(rng.randint(1, 3)))
    return ring, hyps, product()


def random_ideal(rng, ring, max_gens=3, degree=3):
    from partruth.groebner import Ideal
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = {}
        for _ in range(rng.randint(1, 4)):
            k = rng.randint(0, degree)
            m = [0] * ring.arity
            for _ in range(k):
                m[rng.randrange(ring.arity)] += 1
            d[tuple(m)] = rng.randint(-5, 5)
        p = Polynomial(ring, d)
        if not p.is_zero:
            gens.append(p)
    return Ideal(ring, tuple(gens))


# -- acceptance summary ------------------------------------------------------

ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
