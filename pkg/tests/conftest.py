import numpy as np
import pytest

from zpwave import idft
from zpwave.numtheory import divisors

SMALL_PRIMES = (3, 5, 7, 11, 13)

# criterion label -> (passed, detail); filled by test_acceptance.py
ACCEPTANCE_RESULTS = {}


def random_signal(rng, p, unit=False):
    x = rng.standard_normal(p) + 1j * rng.standard_normal(p)
    return x / np.linalg.norm(x) if unit else x


def prime_divisor_pairs(primes=SMALL_PRIMES):
    return [(p, M) for p in primes for M in divisors(p - 1)]


def window_from_spectrum(spectrum):
    return idft(np.asarray(spectrum, dtype=complex))


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[label]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
