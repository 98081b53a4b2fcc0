"""Named elements: idempotents e_(i,j), E_A, the Jucys-Murphy X_k, g_w and u_(i,k)."""

from __future__ import annotations

from typing import Callable

from yokonuma.combi.partition import SetPartition
from yokonuma.kernel.context import AlgebraContext
from yokonuma.kernel.element import Element


def set_idempotent(context: AlgebraContext, blocks) -> Element:
    """E_A = prod over blocks I of prod_{i<j in I} e_(i,j); E_I = 1 for |I| = 1."""
    partition = blocks if isinstance(blocks, SetPartition) else SetPartition(blocks, context.n)
    if partition.n != context.n:
        raise ValueError(f"set partition of {partition.n} used in rank {context.n}")
    return context.product(context.e(i, j) for i, j in partition.pairs())


def framing_projector(context: AlgebraContext, i: int, k: int) -> Element:
    """u_(i,k) = prod_{l != k} (t_i - zeta_l)."""
    if not 1 <= k <= context.r:
        raise IndexError(f"root of unity index {k} outside 1..{context.r}")
    return context.product(
        context.t(i) - context.zeta(l) for l in range(1, context.r + 1) if l != k
    )


SPECIAL_REGISTRY: dict[str, Callable[..., Element]] = {
    "one": lambda context: context.one(),
    "t": lambda context, j: context.t(j),
    "g": lambda context, i: context.g(i),
    "g_inverse": lambda context, i: context.g_inverse(i),
    "e": lambda context, i, j=None: context.e(i, j),
    "E": set_idempotent,
    "X": lambda context, k: context.X(k),
    "X_inverse": lambda context, k: context.X_inverse(k),
    "g_w": lambda context, w: context.g_w(w),
    "u": framing_projector,
}


def make_special(context: AlgebraContext, kind: str, *args) -> Element:
    """Builds a named element in normal form, e.g. ``make_special(ctx, "E", [[1, 2], [3]])``."""
    builder = SPECIAL_REGISTRY.get(kind)
    if builder is None:
        raise ValueError(
            f"Unknown special element {kind}. Available: {list(SPECIAL_REGISTRY.keys())}"
        )
    return builder(context, *args)
