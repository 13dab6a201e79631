"""Distinguishing-number search tests.

Numbers are cross-checked against a brute-force oracle that enumerates every
coloring over every palette and applies the definition with the brute-force
automorphism listing, independent of the pruned search.
"""

import itertools

import pytest

from distcolor.distnum import (
    DistinguishingResult,
    SearchBudgetExceeded,
    distinguishing_number,
    find_distinguishing_coloring,
    union_complete_distinguishing,
)
from distcolor.graphs import (
    FiniteGraph,
    Permutation,
    VertexColoring,
    automorphism_group,
    complete_graph,
    cycle_graph,
    is_distinguishing,
    path_graph,
    union_of_complete_graphs,
)

PATH_PLUS_PENDANT = FiniteGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
RIGID_SIX = FiniteGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 5)])


def brute_distinguishing_number(graph):
    # oracle: try every coloring of every palette size against every
    # nonidentity permutation that preserves adjacency
    nontrivial = []
    for images in itertools.permutations(range(graph.vertex_count)):
        p = Permutation(images)
        if p.is_identity():
            continue
        if all(
            graph.has_edge(images[u], images[v]) == graph.has_edge(u, v)
            for u, v in itertools.combinations(range(graph.vertex_count), 2)
        ):
            nontrivial.append(p)
    for k in range(1, graph.vertex_count + 1):
        for colors in itertools.product(range(k), repeat=graph.vertex_count):
            if all(
                any(colors[p.apply(v)] != colors[v] for v in range(graph.vertex_count))
                for p in nontrivial
            ):
                return k
    raise AssertionError("all-distinct coloring must distinguish")


def test_matches_brute_oracle():
    for g in (
        complete_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        path_graph(4),
        PATH_PLUS_PENDANT,
        RIGID_SIX,
        union_of_complete_graphs(3, 2),
    ):
        assert distinguishing_number(g).number == brute_distinguishing_number(g)


def test_complete_graphs_need_all_colors():
    for q in range(2, 6):
        assert distinguishing_number(complete_graph(q)).number == q


def test_cycles():
    for n in (3, 4, 5):
        assert distinguishing_number(cycle_graph(n)).number == 3
    for n in (6, 9, 12):
        assert distinguishing_number(cycle_graph(n)).number == 2


def test_witness_is_valid_and_minimal():
    for g in (cycle_graph(5), cycle_graph(8), PATH_PLUS_PENDANT, complete_graph(4)):
        result = distinguishing_number(g)
        auts = automorphism_group(g)
        ok, _ = is_distinguishing(g, result.witness, auts)
        assert ok
        assert result.witness.palette == result.number
        if result.number > 1:
            assert find_distinguishing_coloring(g, result.number - 1) is None


def test_number_is_one_iff_group_trivial():
    assert distinguishing_number(RIGID_SIX).number == 1
    assert distinguishing_number(PATH_PLUS_PENDANT).number == 2


def test_triangle_two_colors_exhausted():
    assert find_distinguishing_coloring(complete_graph(3), 2) is None


def test_six_cycle_two_color_witness():
    g = cycle_graph(6)
    witness = find_distinguishing_coloring(g, 2)
    ok, _ = is_distinguishing(g, witness, automorphism_group(g))
    assert ok
    # the hand-checked two-coloring of the six-cycle distinguishes as well
    hand = VertexColoring((0, 0, 1, 0, 1, 1), 2)
    ok, _ = is_distinguishing(g, hand, automorphism_group(g))
    assert ok


def test_monotone_in_palette():
    g = cycle_graph(5)
    assert find_distinguishing_coloring(g, 2) is None
    for k in (3, 4, 5):
        assert find_distinguishing_coloring(g, k) is not None


def test_witness_is_in_canonical_color_order():
    # color c+1 never appears before c has appeared
    for g in (cycle_graph(7), complete_graph(4)):
        witness = distinguishing_number(g).witness
        seen = -1
        for c in witness.colors:
            assert c <= seen + 1
            seen = max(seen, c)
        assert witness.colors[0] == 0


def test_budget_exhaustion_raises():
    with pytest.raises(SearchBudgetExceeded) as exc:
        find_distinguishing_coloring(cycle_graph(6), 1, budget=3)
    assert exc.value.budget == 3
    with pytest.raises(SearchBudgetExceeded):
        distinguishing_number(cycle_graph(12), budget=10)


def test_input_validation():
    with pytest.raises(ValueError):
        find_distinguishing_coloring(cycle_graph(3), 0)
    with pytest.raises(ValueError):
        distinguishing_number(FiniteGraph(0, frozenset()))


def test_result_shape():
    result = distinguishing_number(complete_graph(2))
    assert isinstance(result, DistinguishingResult)
    assert result.number == 2
    assert result.witness.colors == (0, 1)


# ---------- unions of complete graphs ----------


def test_union_complete_worked_examples():
    assert union_complete_distinguishing(1, 3) == 3
    assert union_complete_distinguishing(3, 2) == 3
    assert union_complete_distinguishing(4, 2) == 4


def test_union_complete_single_copy_is_rainbow():
    for q in range(1, 7):
        assert union_complete_distinguishing(1, q) == q


def test_union_complete_matches_search():
    # the acceptance suite runs the full sweep; keep a fast subset here
    for copies in range(1, 4):
        for size in range(1, 4):
            expected = distinguishing_number(
                union_of_complete_graphs(copies, size)
            ).number
            assert union_complete_distinguishing(copies, size) == expected


def test_union_complete_guards():
    with pytest.raises(ValueError):
        union_complete_distinguishing(0, 2)
    with pytest.raises(ValueError):
        union_complete_distinguishing(2, 0)
    with pytest.raises(ValueError):
        union_complete_distinguishing(10**9 + 1, 2)
