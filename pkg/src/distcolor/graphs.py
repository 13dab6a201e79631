"""Finite graphs, vertex permutations, and exact automorphism enumeration.

Graphs are small and undirected, stored as normalized unordered edge pairs.
The automorphism search first refines the unit partition into the coarsest
equitable partition (iterated degree-in-cell splitting), then backtracks
over vertex images cell by cell, so the whole group is enumerated exactly
and in lexicographic order of permutation images.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

DEFAULT_GROUP_CAP = 10**6


class FileFormatError(ValueError):
    """A text input file violates its grammar."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class GroupSizeExceeded(RuntimeError):
    """The automorphism group is larger than the caller's cap."""

    def __init__(self, cap: int):
        super().__init__(f"automorphism group exceeds cap {cap}")
        self.cap = cap


@dataclass(frozen=True)
class Permutation:
    """A permutation of 0..n-1 stored as its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(n)):
            raise ValueError("images must be a bijection on 0..n-1")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, v: int) -> int:
        return self.images[v]

    def compose(self, other: "Permutation") -> "Permutation":
        """Return self after other, so compose(p, q)(v) = p(q(v))."""
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(self.images[w] for w in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for v, w in enumerate(self.images):
            inv[w] = v
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.images))


@dataclass(frozen=True)
class FiniteGraph:
    """An undirected graph on vertices 0..vertex_count-1 without self-loops."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge {e} is not a normalized in-range pair")

    @classmethod
    def from_edges(cls, vertex_count: int, pairs) -> "FiniteGraph":
        edges = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in edges:
                raise ValueError(f"duplicate edge {e}")
            edges.add(e)
        return cls(vertex_count, frozenset(edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class VertexColoring:
    """Vertex colors drawn from a declared palette 0..palette-1."""

    colors: tuple[int, ...]
    palette: int

    def __post_init__(self):
        if self.palette < 1:
            raise ValueError("palette must be positive")
        for v, c in enumerate(self.colors):
            if not (0 <= c < self.palette):
                raise ValueError(f"vertex {v} has color {c} outside palette {self.palette}")

    @classmethod
    def constant(cls, vertex_count: int, color: int = 0) -> "VertexColoring":
        return cls((color,) * vertex_count, color + 1)


# ---------- file formats ----------


def parse_graph(text: str) -> FiniteGraph:
    """Parse the graph grammar: one 'p <n>' line, then 'e <u> <v>' lines."""
    vertex_count = None
    edges = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if vertex_count is None:
            if parts[0] != "p" or len(parts) != 2:
                raise FileFormatError(line_no, "expected 'p <vertex_count>' first")
            try:
                vertex_count = int(parts[1])
            except ValueError:
                raise FileFormatError(line_no, f"bad vertex count {parts[1]!r}") from None
            if vertex_count < 0:
                raise FileFormatError(line_no, "vertex count must be nonnegative")
            continue
        if parts[0] == "p":
            raise FileFormatError(line_no, "duplicate 'p' line")
        if parts[0] != "e" or len(parts) != 3:
            raise FileFormatError(line_no, "expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FileFormatError(line_no, "edge endpoints must be integers") from None
        if u == v:
            raise FileFormatError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise FileFormatError(line_no, f"endpoint out of range in edge {u} {v}")
        e = (min(u, v), max(u, v))
        if e in edges:
            raise FileFormatError(line_no, f"duplicate edge {u} {v}")
        edges.add(e)
    if vertex_count is None:
        raise FileFormatError(1, "missing 'p <vertex_count>' line")
    return FiniteGraph(vertex_count, frozenset(edges))


def parse_coloring(text: str, vertex_count: int, palette: int | None = None) -> VertexColoring:
    """Parse 'v <vertex> <color>' lines; unlisted vertices default to color 0."""
    colors = [0] * vertex_count
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "v" or len(parts) != 3:
            raise FileFormatError(line_no, "expected 'v <vertex> <color>'")
        try:
            v, c = int(parts[1]), int(parts[2])
        except ValueError:
            raise FileFormatError(line_no, "vertex and color must be integers") from None
        if not 0 <= v < vertex_count:
            raise FileFormatError(line_no, f"vertex {v} out of range")
        if v in seen:
            raise FileFormatError(line_no, f"vertex {v} assigned twice")
        if c < 0:
            raise FileFormatError(line_no, "colors must be nonnegative")
        seen.add(v)
        colors[v] = c
    k = palette if palette is not None else max(colors, default=0) + 1
    return VertexColoring(tuple(colors), k)


def format_coloring(coloring: VertexColoring) -> str:
    """Render a coloring in the coloring-file grammar, one line per vertex."""
    return "\n".join(f"v {v} {c}" for v, c in enumerate(coloring.colors))


# ---------- builders ----------


def complete_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> FiniteGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return FiniteGraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> FiniteGraph:
    return FiniteGraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def disjoint_union(graphs) -> FiniteGraph:
    total = 0
    edges = []
    for g in graphs:
        edges.extend((u + total, v + total) for u, v in g.sorted_edges())
        total += g.vertex_count
    return FiniteGraph.from_edges(total, edges)


def union_of_complete_graphs(copies: int, size: int) -> FiniteGraph:
    if copies < 1 or size < 1:
        raise ValueError("copies and size must be positive")
    return disjoint_union([complete_graph(size)] * copies)


# ---------- automorphisms ----------


def adjacency_masks(graph: FiniteGraph) -> list[int]:
    masks = [0] * graph.vertex_count
    for u, v in graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def adjacency_lists(graph: FiniteGraph) -> list[list[int]]:
    nbrs = [[] for _ in range(graph.vertex_count)]
    for u, v in graph.sorted_edges():
        nbrs[u].append(v)
        nbrs[v].append(u)
    return [sorted(ns) for ns in nbrs]


def equitable_partition(graph: FiniteGraph) -> tuple[tuple[int, ...], ...]:
    """Coarsest equitable partition via iterated degree-in-cell refinement.

    Cell ids are renumbered by first occurrence in vertex order each round,
    which keeps the fixpoint test and the cell order deterministic.
    """
    n = graph.vertex_count
    nbrs = adjacency_lists(graph)
    color = [0] * n
    while True:
        sigs = [(color[v], tuple(sorted(color[u] for u in nbrs[v]))) for v in range(n)]
        first_seen: dict = {}
        for s in sigs:
            if s not in first_seen:
                first_seen[s] = len(first_seen)
        nxt = [first_seen[s] for s in sigs]
        if nxt == color:
            break
        color = nxt
    cells: list[list[int]] = [[] for _ in range(max(color, default=-1) + 1)]
    for v in range(n):
        cells[color[v]].append(v)
    return tuple(tuple(c) for c in cells)


def automorphism_group(graph: FiniteGraph, cap: int = DEFAULT_GROUP_CAP) -> list[Permutation]:
    """Enumerate the full automorphism group, lexicographic on images.

    Raises GroupSizeExceeded as soon as more than `cap` elements are found,
    so a too-symmetric input never silently truncates the listing.
    """
    n = graph.vertex_count
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    masks = adjacency_masks(graph)
    cells = equitable_partition(graph)
    cell_of = [0] * n
    for i, cell in enumerate(cells):
        for v in cell:
            cell_of[v] = i
    candidates = [cells[cell_of[v]] for v in range(n)]
    below = [[u for u in range(v) if masks[v] >> u & 1] for v in range(n)]
    found: list[Permutation] = []
    image = [0] * n

    def extend(v: int, used: int):
        if v == n:
            found.append(Permutation(tuple(image)))
            if len(found) > cap:
                raise GroupSizeExceeded(cap)
            return
        req = 0
        for u in below[v]:
            req |= 1 << image[u]
        for w in candidates[v]:
            bit = 1 << w
            if used & bit:
                continue
            if masks[w] & used != req:
                continue
            image[v] = w
            extend(v + 1, used | bit)

    extend(0, 0)
    return found


def is_distinguishing(
    graph: FiniteGraph, coloring: VertexColoring, automorphisms
) -> tuple[bool, Permutation | None]:
    """Check that only the identity preserves the coloring.

    `automorphisms` must be the full group listing. On failure the first
    surviving nonidentity permutation is returned as a witness.
    """
    if len(coloring.colors) != graph.vertex_count:
        raise ValueError("coloring size does not match the graph")
    cols = coloring.colors
    for p in automorphisms:
        if p.is_identity():
            continue
        if all(cols[w] == cols[v] for v, w in enumerate(p.images)):
            return False, p
    return True, None


def orbits(graph: FiniteGraph, automorphisms) -> tuple[tuple[int, ...], ...]:
    """Vertex orbits under the given group, each sorted, ordered by least vertex."""
    n = graph.vertex_count
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in automorphisms:
        for v, w in enumerate(p.images):
            rv, rw = find(v), find(w)
            if rv != rw:
                parent[max(rv, rw)] = min(rv, rw)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
