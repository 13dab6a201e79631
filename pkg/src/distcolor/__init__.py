"""Exact distinguishing numbers for small graphs, plus equivariant orbit
colorings of bi-infinite sequences with periodic tails.

Two engines under one roof. The graph engine enumerates automorphism groups
and searches colorings exhaustively, so every reported number is certified by
an exhausted search. The sequence engine represents points of a full shift
with finitely many data, colors their shift orbits, and checks trajectory
injectivity and reflection-avoidance either exactly (on canonical encodings)
or through finite windows that report undecided outcomes instead of hiding
them. A small simulation of involution-generated equivalence classes and a
pair of numeric experiments tie the two together.
"""

__version__ = "0.1.0"

from .distnum import (
    DistinguishingResult,
    SearchBudgetExceeded,
    distinguishing_number,
    find_distinguishing_coloring,
    union_complete_distinguishing,
)
from .experiments import (
    BoundaryAmbiguity,
    CirclePoint,
    WordCensus,
    circle_color,
    circle_window_check,
    cylinder_injectivity_experiment,
    word_census,
)
from .graphs import (
    FileFormatError,
    FiniteGraph,
    GroupSizeExceeded,
    Permutation,
    VertexColoring,
    automorphism_group,
    complete_graph,
    cycle_graph,
    disjoint_union,
    equitable_partition,
    is_distinguishing,
    orbits,
    parse_coloring,
    parse_graph,
    path_graph,
    union_of_complete_graphs,
)
from .shiftspace import (
    BiSeq,
    MarkedLetter,
    NotFreeError,
    TrajectoryColoring,
    TrajectoryWindow,
    UnsupportedRepresentation,
    as_shifted_spike,
    check_trajectories,
    orbit_color,
    orbit_encoding,
    parse_sample,
    parse_seq_spec,
    spike,
    spin,
    spiral_compare,
    trajectory,
)
from .smoothsim import (
    ComponentSystem,
    SubsetAssignment,
    class_path_graph,
    derive_classes,
    min_color_transversal,
    parse_system,
    smooth_coloring,
    transversal_index,
    with_transversal_closure,
)
