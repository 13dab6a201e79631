"""Finite systems of involutions: orbit classes, transversal indexing, and
colorings that are injective within each class with disjoint palettes across
classes.

Points are integers 0..point_count-1. A list of involutions generates an
equivalence relation whose classes are the connected components of the union
of the involution graphs. Given a transversal (one marked point per class),
every point gets an index: 1 on the transversal, otherwise 2 plus the first
involution carrying it onto the transversal. Ordering each class by index
and paying out colors along an arithmetic progression per class yields a
coloring whose color sets are disjoint across classes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graphs import FileFormatError, FiniteGraph, Permutation, VertexColoring


@dataclass(frozen=True)
class ComponentSystem:
    """Points partitioned into classes by a list of involutions."""

    point_count: int
    involutions: tuple[Permutation, ...]
    classes: tuple[tuple[int, ...], ...]

    def class_of(self, point: int) -> int:
        for idx, cls in enumerate(self.classes):
            if point in cls:
                return idx
        raise ValueError(f"point {point} outside the system")


def derive_classes(point_count: int, involutions) -> ComponentSystem:
    """Build a ComponentSystem, validating that every generator is a
    self-inverse permutation of the declared points."""
    if point_count < 1:
        raise ValueError("point_count must be positive")
    invs = tuple(involutions)
    for g in invs:
        if g.degree != point_count:
            raise ValueError("involution degree does not match point_count")
        if not g.compose(g).is_identity():
            raise ValueError(f"generator {g.images} is not an involution")

    parent = list(range(point_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in invs:
        for x in range(point_count):
            rx, ry = find(x), find(g.apply(x))
            if rx != ry:
                parent[ry] = rx
    groups: dict[int, list[int]] = {}
    for x in range(point_count):
        groups.setdefault(find(x), []).append(x)
    classes = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
    return ComponentSystem(point_count, invs, classes)


def default_transversal(system: ComponentSystem) -> frozenset[int]:
    """Least point of every class."""
    return frozenset(cls[0] for cls in system.classes)


def _check_transversal(system: ComponentSystem, transversal) -> frozenset[int]:
    t = frozenset(transversal)
    for cls in system.classes:
        if len(t.intersection(cls)) != 1:
            raise ValueError(f"transversal must meet class {cls} exactly once")
    if len(t) != len(system.classes):
        raise ValueError("transversal contains points outside the system")
    return t


def with_transversal_closure(
    system: ComponentSystem, transversal=None
) -> ComponentSystem:
    """Append transpositions so every point reaches the transversal in one
    step of some listed involution. Classes are unchanged."""
    t = _check_transversal(
        system, default_transversal(system) if transversal is None else transversal
    )
    rep = {}
    for cls in system.classes:
        (marked,) = [x for x in cls if x in t]
        for x in cls:
            rep[x] = marked
    extra = []
    for x in range(system.point_count):
        if x in t:
            continue
        if any(g.apply(x) in t for g in system.involutions):
            continue
        images = list(range(system.point_count))
        images[x], images[rep[x]] = rep[x], x
        extra.append(Permutation(tuple(images)))
    if not extra:
        return system
    return derive_classes(system.point_count, system.involutions + tuple(extra))


def transversal_index(point: int, system: ComponentSystem, transversal) -> int:
    """Index of a point relative to a transversal: 1 on the transversal,
    otherwise 2 plus the position of the first involution mapping the point
    onto it. Injective within each class whenever it is total, because a
    single involution cannot carry two points onto the same marked point."""
    t = _check_transversal(system, transversal)
    if not 0 <= point < system.point_count:
        raise ValueError(f"point {point} outside the system")
    if point in t:
        return 1
    for pos, g in enumerate(system.involutions):
        if g.apply(point) in t:
            return pos + 2
    raise ValueError(
        f"no involution sends point {point} into the transversal;"
        " close the system with with_transversal_closure first"
    )


@dataclass(frozen=True)
class SubsetAssignment:
    """Distinct residue per class; class k receives the color progression
    residues[k], residues[k] + modulus, residues[k] + 2*modulus, ..."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")
        if len(set(self.residues)) != len(self.residues):
            raise ValueError("residues must be pairwise distinct")
        for r in self.residues:
            if not 0 <= r < self.modulus:
                raise ValueError("residues must lie in [0, modulus)")


def default_assignment(system: ComponentSystem) -> SubsetAssignment:
    count = len(system.classes)
    return SubsetAssignment(count, tuple(range(count)))


def smooth_coloring(
    system: ComponentSystem, transversal=None, assignment: SubsetAssignment | None = None
) -> VertexColoring:
    """Color every point so that classes use pairwise disjoint color sets
    and no two points of a class share a color.

    Within a class, points are ordered by transversal_index; the k-th point
    receives the k-th element of the class's arithmetic progression.
    """
    t = default_transversal(system) if transversal is None else transversal
    assign = default_assignment(system) if assignment is None else assignment
    if len(assign.residues) != len(system.classes):
        raise ValueError("assignment must name one residue per class")
    if assign.modulus < len(system.classes):
        raise ValueError("modulus must be at least the number of classes")

    colors = [0] * system.point_count
    for cls_no, cls in enumerate(system.classes):
        indexed = [(transversal_index(x, system, t), x) for x in cls]
        seen = {}
        for idx, x in indexed:
            if idx in seen:
                raise ValueError(
                    f"transversal index collision between points {seen[idx]} and {x}"
                )
            seen[idx] = x
        for k, (_, x) in enumerate(sorted(indexed)):
            colors[x] = assign.residues[cls_no] + k * assign.modulus
    return VertexColoring(tuple(colors), max(colors) + 1)


@dataclass(frozen=True)
class TransversalReport:
    """Points of minimal color per class, with tie diagnostics."""

    points: tuple[int, ...]
    is_transversal: bool
    tied_classes: tuple[int, ...]


def min_color_transversal(system: ComponentSystem, coloring: VertexColoring) -> TransversalReport:
    """Points whose color is minimal on their class: exactly the points x
    with c(x) <= c(g(x)) for every generated group element g. Ties are
    reported, never hidden; with ties the result is not a transversal."""
    if len(coloring.colors) != system.point_count:
        raise ValueError("coloring size does not match the system")
    picked: list[int] = []
    tied: list[int] = []
    for cls_no, cls in enumerate(system.classes):
        best = min(coloring.colors[x] for x in cls)
        minima = [x for x in cls if coloring.colors[x] == best]
        picked.extend(minima)
        if len(minima) > 1:
            tied.append(cls_no)
    return TransversalReport(tuple(sorted(picked)), not tied, tuple(tied))


def class_path_graph(system: ComponentSystem, transversal=None) -> FiniteGraph:
    """Disjoint union of paths, one per class, threading each class's points
    in transversal_index order. Cross-validation bridge to the graph engine."""
    t = default_transversal(system) if transversal is None else transversal
    edges = []
    for cls in system.classes:
        ordered = [x for _, x in sorted((transversal_index(x, system, t), x) for x in cls)]
        edges.extend((ordered[i], ordered[i + 1]) for i in range(len(ordered) - 1))
    return FiniteGraph.from_edges(system.point_count, edges)


def parse_system(text: str) -> ComponentSystem:
    """Parse a system file: first nonblank line `points <N>`, then lines
    `inv <cycle notation>` such as `inv (0 1)(2 3)`. # starts a comment."""
    point_count = None
    involutions = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split(None, 1)
        if fields[0] == "points":
            if point_count is not None:
                raise FileFormatError(line_no, "duplicate points line")
            try:
                point_count = int(fields[1])
            except (IndexError, ValueError):
                raise FileFormatError(line_no, "expected `points <N>`") from None
            if point_count < 1:
                raise FileFormatError(line_no, "point count must be positive")
        elif fields[0] == "inv":
            if point_count is None:
                raise FileFormatError(line_no, "points line must come first")
            if len(fields) < 2:
                raise FileFormatError(line_no, "empty involution")
            try:
                involutions.append(_parse_cycles(fields[1], point_count))
            except ValueError as exc:
                raise FileFormatError(line_no, str(exc)) from None
        else:
            raise FileFormatError(line_no, f"unrecognized directive {fields[0]!r}")
    if point_count is None:
        raise FileFormatError(0, "missing points line")
    try:
        return derive_classes(point_count, involutions)
    except ValueError as exc:
        raise FileFormatError(0, str(exc)) from None


def _parse_cycles(text: str, point_count: int) -> Permutation:
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s+\d+)*\s*\)\s*)+", text):
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(point_count))
    seen = set()
    for cycle_text in re.findall(r"\(([^)]*)\)", text):
        cycle = [int(tok) for tok in cycle_text.split()]
        for x in cycle:
            if x >= point_count:
                raise ValueError(f"point {x} out of range")
            if x in seen:
                raise ValueError(f"point {x} repeated across cycles")
            seen.add(x)
        for pos, x in enumerate(cycle):
            images[x] = cycle[(pos + 1) % len(cycle)]
    perm = Permutation(tuple(images))
    if not perm.compose(perm).is_identity():
        raise ValueError(f"cycles {text!r} do not describe an involution")
    return perm
