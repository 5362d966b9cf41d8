"""The finite wavelet group W_p = U_p x Z_p and its action on signals.

The group law is ``(m, k) * (m', k') = (m m', k + m k')`` and an element acts
on a signal by ``sigma(m, k) y = T_k D_m y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .numtheory import PrimeContext, SubgroupDecomposition, subgroup_of_order
from .signal import as_signal, dilate, translate

__all__ = [
    "GroupElement",
    "IndexSet",
    "identity",
    "compose",
    "invert",
    "act",
    "group_elements",
    "enumerate_index_set",
]


class GroupElement(NamedTuple):
    m: int
    k: int


def identity() -> GroupElement:
    return GroupElement(1, 0)


def _check(g, p: int) -> GroupElement:
    m, k = int(g[0]), int(g[1])
    if not (1 <= m <= p - 1 and 0 <= k <= p - 1):
        raise ValueError(f"({m}, {k}) is not an element of W_{p}")
    return GroupElement(m, k)


def compose(g, h, ctx: PrimeContext) -> GroupElement:
    """Group product ``g * h``."""
    p = ctx.p
    m, k = _check(g, p)
    m2, k2 = _check(h, p)
    return GroupElement(m * m2 % p, (k + m * k2) % p)


def invert(g, ctx: PrimeContext) -> GroupElement:
    """``(m, k)^-1 = (m_p, m_p (p - k))``."""
    p = ctx.p
    m, k = _check(g, p)
    mp = ctx.inverses[m]
    return GroupElement(mp, mp * (p - k) % p)


def act(g, y, ctx: PrimeContext | None = None) -> np.ndarray:
    """``sigma(m, k) y = T_k D_m y``."""
    y = as_signal(y)
    m, k = _check(g, y.shape[0])
    return translate(dilate(y, m, ctx), k)


def group_elements(ctx: PrimeContext) -> list[GroupElement]:
    """All p(p-1) elements of W_p, m outer ascending, k inner ascending."""
    return [GroupElement(m, k) for m in range(1, ctx.p) for k in range(ctx.p)]


@dataclass(frozen=True)
class IndexSet:
    """An enumerated subset of W_p.

    ``kind`` is ``"full"`` (all of W_p), ``"subgroup"`` (M x Z_p for a proper
    subgroup M) or ``"custom"`` (any other list of elements, for which
    ``subgroup`` is None).
    """

    p: int
    kind: str
    elements: tuple[GroupElement, ...]
    subgroup: SubgroupDecomposition | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def is_subgroup_product(self) -> bool:
        return self.subgroup is not None

    @classmethod
    def custom(cls, ctx: PrimeContext, elements) -> "IndexSet":
        checked = tuple(_check(g, ctx.p) for g in elements)
        if len(set(checked)) != len(checked):
            raise ValueError("index set contains duplicate elements")
        return cls(ctx.p, "custom", checked, None)


def enumerate_index_set(
    ctx: PrimeContext, sub: SubgroupDecomposition | None = None
) -> IndexSet:
    """Enumerate ``M x Z_p``; ``sub=None`` means the full group (M = U_p).

    Order is fixed: m in generator-power order of the subgroup, then k ascending.
    """
    if sub is None:
        sub = subgroup_of_order(ctx, ctx.p - 1)
    if sub.p != ctx.p:
        raise ValueError(f"subgroup is for p={sub.p}, context is for p={ctx.p}")
    elements = tuple(GroupElement(m, k) for m in sub.elements for k in range(ctx.p))
    kind = "full" if sub.is_full else "subgroup"
    return IndexSet(ctx.p, kind, elements, sub)
