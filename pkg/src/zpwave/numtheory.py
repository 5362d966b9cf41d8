"""Exact arithmetic on Z_p and its multiplicative group U_p.

Everything here works on plain Python integers. The :class:`PrimeContext`
also carries the table of p-th roots of unity used by the Fourier routines in
:mod:`zpwave.signal`, so that it is computed once per prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

__all__ = [
    "PrimeContext",
    "SubgroupDecomposition",
    "is_prime",
    "prime_factors",
    "prime_context",
    "mod_inverse",
    "find_primitive_root",
    "element_order",
    "subgroup_of_order",
    "divisors",
]


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of ``n`` in ascending order (empty for n = 1)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return tuple(factors)


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n``, ascending."""
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    large = [n // d for d in reversed(small) if d * d != n]
    return small + large


def _generates(g: int, p: int, factors: tuple[int, ...]) -> bool:
    return all(pow(g, (p - 1) // q, p) != 1 for q in factors)


def find_primitive_root(p: int) -> int:
    """Smallest generator of U_p.

    >>> find_primitive_root(7)
    3
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = prime_factors(p - 1)
    for g in range(2, p):
        if _generates(g, p, factors):
            return g
    raise AssertionError("unreachable: U_p is cyclic")


@dataclass(frozen=True)
class PrimeContext:
    """A validated prime together with the data derived from it.

    ``twiddles`` is the unitary DFT matrix ``exp(-2*pi*i*l*k/p)/sqrt(p)``.
    Entries are looked up from a single table of p roots of unity indexed by
    ``l*k mod p``, so no phase is accumulated by repeated multiplication.
    """

    p: int
    factors_of_p_minus_1: tuple[int, ...]
    primitive_root: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p > 2 and not _generates(
            self.primitive_root, self.p, self.factors_of_p_minus_1
        ):
            raise ValueError(f"{self.primitive_root} does not generate U_{self.p}")

    @property
    def order(self) -> int:
        """|U_p| = p - 1."""
        return self.p - 1

    @cached_property
    def roots_of_unity(self) -> np.ndarray:
        j = np.arange(self.p)
        return np.exp(-2j * np.pi * j / self.p)

    @cached_property
    def twiddles(self) -> np.ndarray:
        j = np.arange(self.p)
        table = self.roots_of_unity[np.outer(j, j) % self.p] / np.sqrt(self.p)
        table.setflags(write=False)
        return table

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        """``inverses[m]`` is m_p for m in U_p; index 0 holds 0 as a placeholder."""
        return (0,) + tuple(mod_inverse(m, self) for m in range(1, self.p))


@lru_cache(maxsize=None)
def prime_context(p: int) -> PrimeContext:
    """Cached :class:`PrimeContext` for ``p``; raises ``ValueError`` if p is not prime."""
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return PrimeContext(p, prime_factors(p - 1), find_primitive_root(p))


def _check_unit(m: int, p: int) -> int:
    m = int(m)
    if m % p == 0:
        raise ValueError(f"{m} is not invertible modulo {p}")
    return m % p


def mod_inverse(m: int, ctx: PrimeContext) -> int:
    """Return m_p in U_p with ``m * m_p = 1 (mod p)``, via the extended Euclidean algorithm."""
    p = ctx.p
    m = _check_unit(m, p)
    # invariant: old_s * m = old_r (mod p)
    old_r, r = m, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % p


def element_order(m: int, ctx: PrimeContext) -> int:
    """Multiplicative order of ``m`` in U_p.

    Found by stripping prime factors from p - 1 while m still maps to 1.
    """
    p = ctx.p
    m = _check_unit(m, p)
    n = p - 1
    for q in ctx.factors_of_p_minus_1:
        while n % q == 0 and pow(m, n // q, p) == 1:
            n //= q
    return n


@dataclass(frozen=True)
class SubgroupDecomposition:
    """The order-M subgroup of U_p and its cosets ``H_t = eps^t * M``.

    ``elements`` and each coset are kept in generator-power order:
    ``elements[j] = g^j`` with ``g = eps^a`` and ``cosets[t][j] = eps^(j*a + t)``.
    Use :attr:`sorted_elements` / :attr:`sorted_cosets` for ascending lists.
    """

    p: int
    order_M: int
    index_a: int
    generator: int
    elements: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    @property
    def sorted_elements(self) -> list[int]:
        return sorted(self.elements)

    @property
    def sorted_cosets(self) -> list[list[int]]:
        return [sorted(h) for h in self.cosets]

    @property
    def is_full(self) -> bool:
        return self.order_M == self.p - 1

    @cached_property
    def coset_labels(self) -> np.ndarray:
        """Length-p integer array: label t of the coset containing each residue, -1 at 0."""
        labels = np.full(self.p, -1, dtype=int)
        for t, h in enumerate(self.cosets):
            labels[list(h)] = t
        labels.setflags(write=False)
        return labels

    def coset_index(self, ell: int) -> int:
        """The t with ``ell`` in H_t."""
        ell = _check_unit(ell, self.p)
        return int(self.coset_labels[ell])

    def __contains__(self, m) -> bool:
        return int(m) % self.p in self.elements


def subgroup_of_order(ctx: PrimeContext, M: int) -> SubgroupDecomposition:
    """The unique subgroup of U_p with ``M`` elements, with its full coset list."""
    p = ctx.p
    M = int(M)
    if M < 1 or (p - 1) % M:
        raise ValueError(f"M={M} does not divide p-1={p - 1}")
    a = (p - 1) // M
    eps = ctx.primitive_root
    g = pow(eps, a, p)
    elements = [1]
    for _ in range(M - 1):
        elements.append(elements[-1] * g % p)
    cosets = []
    shift = 1
    for _ in range(a):
        cosets.append(tuple(shift * m % p for m in elements))
        shift = shift * eps % p
    return SubgroupDecomposition(p, M, a, g, tuple(elements), tuple(cosets))
