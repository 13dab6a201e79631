"""Exact distinguishing numbers by pruned exhaustive coloring search.

A coloring distinguishes a graph when no nonidentity automorphism preserves
it. The search enumerates colorings in lexicographic order, restricted to
canonical color order (color c+1 never appears before color c), which is a
pure color-permutation symmetry reduction and so never excludes all
witnesses. A partial assignment is abandoned as soon as some nonidentity
automorphism preserves the assigned prefix while fixing every unassigned
vertex, because such a map survives every extension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import FiniteGraph, VertexColoring, adjacency_masks

DEFAULT_COLORING_BUDGET = 5_000_000


class SearchBudgetExceeded(RuntimeError):
    """The coloring search visited more partial colorings than allowed."""

    def __init__(self, budget: int):
        super().__init__(f"coloring search exceeded budget {budget}")
        self.budget = budget


@dataclass(frozen=True)
class DistinguishingResult:
    """Distinguishing number together with a witness coloring."""

    number: int
    witness: VertexColoring


def _exists_surviving(masks: list[int], colors: list[int], assigned: int) -> bool:
    """Is there a nonidentity automorphism that preserves the colors of
    vertices below `assigned` and fixes every vertex from `assigned` on?

    With assigned == n this is exactly the distinguishing test for a full
    coloring. Candidate images are confined to the assigned prefix: a
    permutation fixing the suffix pointwise maps the prefix to itself.
    """
    n = len(masks)
    suffix = ((1 << n) - 1) ^ ((1 << assigned) - 1)
    same_color: dict[int, list[int]] = {}
    for v in range(assigned):
        same_color.setdefault(colors[v], []).append(v)
    below = [[u for u in range(v) if masks[v] >> u & 1] for v in range(assigned)]
    image = [0] * assigned

    def extend(v: int, used: int, moved: bool) -> bool:
        if v == assigned:
            return moved
        req = 0
        for u in below[v]:
            req |= 1 << image[u]
        want_suffix = masks[v] & suffix
        for w in same_color[colors[v]]:
            bit = 1 << w
            if used & bit:
                continue
            if masks[w] & suffix != want_suffix:
                continue
            if masks[w] & used != req:
                continue
            image[v] = w
            if extend(v + 1, used | bit, moved or w != v):
                return True
        return False

    return extend(0, 0, False)


def find_distinguishing_coloring(
    graph: FiniteGraph, palette: int, budget: int = DEFAULT_COLORING_BUDGET
) -> VertexColoring | None:
    """Search for a distinguishing coloring with at most `palette` colors.

    Exhaustive modulo recoloring by color permutations; returns the first
    witness in canonical lexicographic order, or None when none exists.
    Visiting more than `budget` partial colorings raises
    SearchBudgetExceeded instead of returning a wrong answer.
    """
    if palette < 1:
        raise ValueError("palette must be positive")
    n = graph.vertex_count
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    masks = adjacency_masks(graph)
    colors = [0] * n
    examined = 0

    def extend(v: int, used_colors: int) -> bool:
        nonlocal examined
        for c in range(min(palette, used_colors + 1)):
            colors[v] = c
            examined += 1
            if examined > budget:
                raise SearchBudgetExceeded(budget)
            if _exists_surviving(masks, colors, v + 1):
                continue
            if v + 1 == n or extend(v + 1, max(used_colors, c + 1)):
                return True
        return False

    if extend(0, 0):
        return VertexColoring(tuple(colors), palette)
    return None


def distinguishing_number(
    graph: FiniteGraph, budget: int = DEFAULT_COLORING_BUDGET
) -> DistinguishingResult:
    """Smallest palette size admitting a distinguishing coloring.

    Palettes are tried in ascending order, so an exhausted search at size
    k-1 certifies the returned number. The all-distinct coloring always
    distinguishes, hence the loop terminates by k = vertex_count.
    """
    if graph.vertex_count < 1:
        raise ValueError("graph must have at least one vertex")
    for k in range(1, graph.vertex_count + 1):
        witness = find_distinguishing_coloring(graph, k, budget)
        if witness is not None:
            return DistinguishingResult(k, witness)
    raise AssertionError("the all-distinct coloring must distinguish")


_BINOMIAL_GUARD = 10**9


def union_complete_distinguishing(copies: int, size: int) -> int:
    """Distinguishing number of `copies` disjoint copies of a complete
    graph on `size` vertices, in closed form.

    Each copy must be rainbow colored and no two copies may use the same
    color set, so the answer is the least k >= size with C(k, size) >= copies.
    """
    if copies < 1 or size < 1:
        raise ValueError("copies and size must be positive")
    if copies > _BINOMIAL_GUARD:
        raise ValueError(f"copies exceeds the binomial guard {_BINOMIAL_GUARD}")
    k = size
    while math.comb(k, size) < copies:
        k += 1
    return k
