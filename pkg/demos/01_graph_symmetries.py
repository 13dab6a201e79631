"""Walkthrough: graph symmetries and exact distinguishing numbers.

Run with: python3 demos/01_graph_symmetries.py
"""

from distcolor import (
    VertexColoring,
    automorphism_group,
    complete_graph,
    cycle_graph,
    distinguishing_number,
    find_distinguishing_coloring,
    is_distinguishing,
    orbits,
    union_complete_distinguishing,
    union_of_complete_graphs,
)


def main():
    print("== The six-cycle ==")
    c6 = cycle_graph(6)
    group = automorphism_group(c6)
    print(f"automorphisms: {len(group)} (rotations and reflections)")
    print(f"vertex orbits: {orbits(c6, group)} (one orbit: every vertex looks alike)")

    constant = VertexColoring.constant(6)
    ok, witness = is_distinguishing(c6, constant, group)
    print(f"constant coloring distinguishing? {ok}")
    print(f"  surviving symmetry: {witness.images} (any rotation preserves one color)")

    result = distinguishing_number(c6)
    print(f"distinguishing number: {result.number}")
    print(f"  witness colors: {result.witness.colors}")
    ok, _ = is_distinguishing(c6, result.witness, group)
    print(f"  witness verified against the full group: {ok}")

    print()
    print("== Complete graphs are the stubborn case ==")
    k4 = complete_graph(4)
    print(f"K4 with 3 colors: {find_distinguishing_coloring(k4, 3)}")
    print("  every permutation of the vertices is a symmetry, so two vertices")
    print("  sharing a color can always be swapped; only a rainbow works:")
    print(f"K4 needs {distinguishing_number(k4).number} colors")

    print()
    print("== Unions of triangles: closed form against search ==")
    for copies in range(1, 5):
        graph = union_of_complete_graphs(copies, 3)
        searched = distinguishing_number(graph).number
        formula = union_complete_distinguishing(copies, 3)
        print(f"{copies} x K3: search={searched} formula={formula}")
    print("  each triangle must be rainbow and no two triangles may share a")
    print("  color set, so the answer is the least k with C(k,3) >= copies")


if __name__ == "__main__":
    main()
