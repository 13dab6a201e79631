"""Component system tests: class derivation, transversal indexing, the
class-injective coloring, and minimal-color transversal extraction.

Randomized systems are checked against the definitions directly (injectivity
within classes, disjointness across classes) and bridged to the graph engine
through the induced path-union graph.
"""

import random

import pytest

from distcolor.graphs import (
    FileFormatError,
    Permutation,
    VertexColoring,
    automorphism_group,
    is_distinguishing,
)
from distcolor.smoothsim import (
    ComponentSystem,
    SubsetAssignment,
    class_path_graph,
    default_assignment,
    default_transversal,
    derive_classes,
    min_color_transversal,
    parse_system,
    smooth_coloring,
    transversal_index,
    with_transversal_closure,
)


def swap(n, a, b):
    images = list(range(n))
    images[a], images[b] = b, a
    return Permutation(tuple(images))


def double_swap(n, a, b, c, d):
    images = list(range(n))
    images[a], images[b] = b, a
    images[c], images[d] = d, c
    return Permutation(tuple(images))


# ---------- class derivation ----------


def test_classes_from_single_swap():
    system = derive_classes(3, [swap(3, 0, 1)])
    assert system.classes == ((0, 1), (2,))
    assert system.class_of(1) == 0 and system.class_of(2) == 1


def test_classes_merge_through_chains():
    system = derive_classes(4, [double_swap(4, 0, 1, 2, 3), swap(4, 1, 2)])
    assert system.classes == ((0, 1, 2, 3),)


def test_classes_without_involutions_are_singletons():
    system = derive_classes(3, [])
    assert system.classes == ((0,), (1,), (2,))


def test_derive_classes_validation():
    with pytest.raises(ValueError):
        derive_classes(3, [Permutation((1, 2, 0))])
    with pytest.raises(ValueError):
        derive_classes(3, [swap(4, 0, 1)])
    with pytest.raises(ValueError):
        derive_classes(0, [])
    with pytest.raises(ValueError):
        derive_classes(3, []).class_of(7)


# ---------- transversals and indices ----------


def test_default_transversal_takes_least_points():
    system = derive_classes(4, [swap(4, 0, 1)])
    assert default_transversal(system) == frozenset({0, 2, 3})


def test_transversal_index_examples():
    # chain of three points; the third reaches the transversal only after
    # closure appends a transposition, landing at index 4
    system = derive_classes(3, [swap(3, 0, 1), swap(3, 1, 2)])
    closed = with_transversal_closure(system)
    t = default_transversal(closed)
    assert [transversal_index(x, closed, t) for x in range(3)] == [1, 2, 4]


def test_transversal_index_requires_closure():
    system = derive_classes(3, [swap(3, 0, 1), swap(3, 1, 2)])
    with pytest.raises(ValueError, match="close the system"):
        transversal_index(2, system, default_transversal(system))


def test_transversal_index_validation():
    system = derive_classes(2, [swap(2, 0, 1)])
    with pytest.raises(ValueError):
        transversal_index(5, system, {0})
    with pytest.raises(ValueError):
        transversal_index(0, system, {0, 1})
    with pytest.raises(ValueError):
        transversal_index(0, system, set())


def test_closure_is_a_no_op_when_every_point_reaches():
    system = derive_classes(2, [swap(2, 0, 1)])
    assert with_transversal_closure(system) is system


def test_closure_preserves_classes():
    system = derive_classes(5, [swap(5, 0, 1), swap(5, 1, 2)])
    closed = with_transversal_closure(system)
    assert closed.classes == system.classes
    assert len(closed.involutions) > len(system.involutions)
    t = default_transversal(closed)
    for x in range(5):
        transversal_index(x, closed, t)


def test_indices_are_injective_within_classes():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 10)
        invs = []
        for _ in range(rng.randint(0, 3)):
            a, b = rng.sample(range(n), 2)
            invs.append(swap(n, a, b))
        closed = with_transversal_closure(derive_classes(n, invs))
        t = default_transversal(closed)
        for cls in closed.classes:
            indices = [transversal_index(x, closed, t) for x in cls]
            assert len(set(indices)) == len(indices)
            assert min(indices) == 1


# ---------- assignments and the smooth coloring ----------


def test_subset_assignment_validation():
    SubsetAssignment(3, (0, 2))
    with pytest.raises(ValueError):
        SubsetAssignment(0, ())
    with pytest.raises(ValueError):
        SubsetAssignment(3, (1, 1))
    with pytest.raises(ValueError):
        SubsetAssignment(3, (0, 3))


def test_default_assignment():
    system = derive_classes(4, [swap(4, 0, 1)])
    assign = default_assignment(system)
    assert assign.modulus == 3 and assign.residues == (0, 1, 2)


def test_smooth_coloring_progression():
    # one class of three points with indices 1, 2, 4: colors follow the
    # class progression in index order
    system = with_transversal_closure(derive_classes(3, [swap(3, 0, 1), swap(3, 1, 2)]))
    coloring = smooth_coloring(system)
    assert coloring.colors == (0, 1, 2)
    spaced = smooth_coloring(system, assignment=SubsetAssignment(2, (0,)))
    assert spaced.colors == (0, 2, 4)


def test_smooth_coloring_two_classes():
    system = derive_classes(4, [swap(4, 0, 1), swap(4, 2, 3)])
    coloring = smooth_coloring(system)
    assert coloring.colors == (0, 2, 1, 3)
    assert coloring.palette == 4


def test_smooth_coloring_class_color_sets_are_disjoint():
    rng = random.Random(99)
    for _ in range(20):
        n = rng.randint(2, 12)
        invs = []
        for _ in range(rng.randint(0, 3)):
            a, b = rng.sample(range(n), 2)
            invs.append(swap(n, a, b))
        system = with_transversal_closure(derive_classes(n, invs))
        coloring = smooth_coloring(system)
        sets = [frozenset(coloring.colors[x] for x in cls) for cls in system.classes]
        for i, si in enumerate(sets):
            assert len(si) == len(system.classes[i])
            for sj in sets[i + 1 :]:
                assert not (si & sj)


def test_smooth_coloring_validation():
    system = derive_classes(4, [swap(4, 0, 1), swap(4, 2, 3)])
    with pytest.raises(ValueError):
        smooth_coloring(system, assignment=SubsetAssignment(2, (0,)))
    with pytest.raises(ValueError):
        smooth_coloring(system, assignment=SubsetAssignment(1, (0,)))


# ---------- minimal-color transversals ----------


def test_min_color_transversal_unique_minima():
    system = derive_classes(4, [swap(4, 0, 1), swap(4, 2, 3)])
    report = min_color_transversal(system, VertexColoring((0, 2, 1, 3), 4))
    assert report.points == (0, 2)
    assert report.is_transversal and report.tied_classes == ()


def test_min_color_transversal_reports_ties():
    system = derive_classes(4, [swap(4, 0, 1), swap(4, 2, 3)])
    report = min_color_transversal(system, VertexColoring((0, 0, 1, 2), 3))
    assert not report.is_transversal
    assert report.tied_classes == (0,)
    assert report.points == (0, 1, 2)


def test_min_color_transversal_of_smooth_coloring_is_the_transversal():
    system = with_transversal_closure(
        derive_classes(6, [swap(6, 0, 3), swap(6, 1, 4), swap(6, 4, 5)])
    )
    coloring = smooth_coloring(system)
    report = min_color_transversal(system, coloring)
    assert report.is_transversal
    assert set(report.points) == set(default_transversal(system))


def test_min_color_transversal_size_mismatch():
    system = derive_classes(3, [])
    with pytest.raises(ValueError):
        min_color_transversal(system, VertexColoring((0,), 1))


# ---------- bridge to the graph engine ----------


def test_class_path_graph_shape():
    system = with_transversal_closure(derive_classes(3, [swap(3, 0, 1), swap(3, 1, 2)]))
    graph = class_path_graph(system)
    assert graph.vertex_count == 3
    assert graph.sorted_edges() == [(0, 1), (1, 2)]


def test_smooth_coloring_distinguishes_the_path_union():
    system = with_transversal_closure(
        derive_classes(7, [swap(7, 0, 1), swap(7, 2, 3), swap(7, 3, 4)])
    )
    graph = class_path_graph(system)
    coloring = smooth_coloring(system)
    ok, witness = is_distinguishing(graph, coloring, automorphism_group(graph))
    assert ok, witness


# ---------- parsing ----------


def test_parse_system():
    system = parse_system("# demo\npoints 4\ninv (0 1)(2 3)\ninv (1 2)\n")
    assert system.point_count == 4
    assert system.classes == ((0, 1, 2, 3),)
    assert len(system.involutions) == 2


def test_parse_system_errors():
    cases = [
        ("inv (0 1)\n", 1, "points line must come first"),
        ("points 2\npoints 2\n", 2, "duplicate points"),
        ("points x\n", 1, "expected `points"),
        ("points 0\n", 1, "positive"),
        ("points 2\ninv\n", 2, "empty involution"),
        ("points 2\ninv 0 1\n", 2, "malformed cycle"),
        ("points 2\ninv (0 5)\n", 2, "out of range"),
        ("points 3\ninv (0 1)(1 2)\n", 2, "repeated"),
        ("points 3\ninv (0 1 2)\n", 2, "do not describe an involution"),
        ("points 2\nfoo bar\n", 2, "unrecognized directive"),
        ("", 0, "missing points"),
    ]
    for text, line, fragment in cases:
        with pytest.raises(FileFormatError) as exc:
            parse_system(text)
        assert exc.value.line_no == line, text
        assert fragment in str(exc.value), text


def test_parse_system_matches_manual_construction():
    parsed = parse_system("points 3\ninv (0 1)\n")
    built = derive_classes(3, [swap(3, 0, 1)])
    assert isinstance(parsed, ComponentSystem)
    assert parsed == built
