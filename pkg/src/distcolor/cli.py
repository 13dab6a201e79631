"""Command-line interface: a single executable dispatching every engine,
with line-oriented key=value output.

Exit status contract: 0 when the computation succeeds and every check
passes; 1 when a check is violated, accompanied by a machine-readable
violation= line; 2 for usage, input, and resource errors.
"""

from __future__ import annotations

import argparse
import difflib
import sys

from . import __version__
from .distnum import (
    DEFAULT_COLORING_BUDGET,
    SearchBudgetExceeded,
    distinguishing_number,
    union_complete_distinguishing,
)
from .experiments import circle_window_check, cylinder_injectivity_experiment
from .graphs import (
    DEFAULT_GROUP_CAP,
    FileFormatError,
    GroupSizeExceeded,
    automorphism_group,
    format_coloring,
    is_distinguishing,
    parse_coloring,
    parse_graph,
)
from .shiftspace import (
    DEFAULT_WINDOW,
    MarkedLetter,
    NAMED_COLORINGS,
    NotFreeError,
    ORBIT_COLORING,
    UnsupportedRepresentation,
    check_trajectories,
    parse_sample,
    parse_seq_spec,
    trajectory,
)
from .smoothsim import (
    SubsetAssignment,
    min_color_transversal,
    parse_system,
    smooth_coloring,
    with_transversal_closure,
)

_FORMATS = """\
graph file:
  first nonblank line `p <vertex_count>`, then one line `e <u> <v>` per edge
  with u != v; `#` starts a comment.
coloring file:
  lines `v <vertex> <color>`; unlisted vertices default to color 0.
sequence spec:
  `seq n=<alphabet> left=(<w>) middle=[<w>] start=<i> right=(<w>)` where <w>
  is a comma-separated symbol list (tails nonempty, middle may be empty), or
  `spike m=<m> n=<n> [shift=<i>]` for a shifted single-spike sequence.
sample file:
  one sequence spec per line; `#` starts a comment.
system file:
  first nonblank line `points <N>`, then lines `inv <cycle notation>` such
  as `inv (0 1)(2 3)`; cycles must describe involutions; `#` comments.
"""

_VALUE_FLAGS = {"--window", "--bases", "--seed"}


def _merge_negative_values(argv: list[str]) -> list[str]:
    # `--window -2,2` would otherwise be parsed as two options
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if (
            tok in _VALUE_FLAGS
            and nxt is not None
            and len(nxt) > 1
            and nxt[0] == "-"
            and (nxt[1].isdigit() or nxt[1] == ".")
        ):
            merged.append(f"{tok}={nxt}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _perm_text(perm) -> str:
    return ",".join(str(v) for v in perm.images)


def _cmd_distnum(args) -> int:
    graph = parse_graph(_read(args.graph_file))
    result = distinguishing_number(graph, args.budget)
    print(f"D={result.number}")
    print(format_coloring(result.witness))
    return 0


def _cmd_aut(args) -> int:
    graph = parse_graph(_read(args.graph_file))
    auts = automorphism_group(graph, args.cap)
    print(f"count={len(auts)}")
    for perm in auts:
        print(f"perm={_perm_text(perm)}")
    return 0


def _cmd_verify(args) -> int:
    graph = parse_graph(_read(args.graph_file))
    coloring = parse_coloring(_read(args.coloring_file), graph.vertex_count)
    auts = automorphism_group(graph, args.cap)
    ok, witness = is_distinguishing(graph, coloring, auts)
    if ok:
        print("distinguishing=true")
        return 0
    print("distinguishing=false")
    print(f"violation=surviving-automorphism perm={_perm_text(witness)}")
    return 1


def _parse_window_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError("window must be two comma-separated integers a,b")
    lo, hi = int(parts[0]), int(parts[1])
    if lo > hi:
        raise ValueError("window bounds must satisfy a <= b")
    return lo, hi


def _cmd_shift_color(args) -> int:
    seq = parse_seq_spec(args.seq)
    lo, hi = _parse_window_pair(args.window)
    window = trajectory(ORBIT_COLORING, seq, lo, hi)
    for i in window.indices():
        code = window.color_at(i)
        print(f"i={i} color={code} symbol={MarkedLetter.from_code(code).render()}")
    return 0


def _cmd_check_c(args) -> int:
    sample = parse_sample(_read(args.sample))
    coloring = NAMED_COLORINGS[args.coloring]
    report = check_trajectories(coloring, sample, args.window)
    print(f"coloring={report.coloring}")
    print(f"mode={'exact' if report.exact else 'window'}")
    print(f"sample={report.sample_size}")
    print(f"pairs_checked={report.pairs_checked}")
    for v in report.violations:
        decided = "true" if v.decided else "false"
        print(f"violation={v.kind} first={v.first} second={v.second} decided={decided}")
    print(f"result={'pass' if report.ok else 'fail'}")
    return 0 if report.ok else 1


def _cmd_smooth(args) -> int:
    system = parse_system(_read(args.system))
    closed = with_transversal_closure(system)
    assignment = None
    if args.modulus is not None:
        assignment = SubsetAssignment(args.modulus, tuple(range(len(closed.classes))))
    coloring = smooth_coloring(closed, assignment=assignment)
    modulus = assignment.modulus if assignment else len(closed.classes)
    print(f"classes={len(closed.classes)}")
    print(f"modulus={modulus}")
    print(format_coloring(coloring))
    return 0


def _cmd_transversal(args) -> int:
    system = parse_system(_read(args.system))
    coloring = parse_coloring(_read(args.coloring), system.point_count)
    report = min_color_transversal(system, coloring)
    print(f"points={','.join(str(p) for p in report.points)}")
    print(f"exact={'true' if report.is_transversal else 'false'}")
    for cls_no in report.tied_classes:
        print(f"violation=tie class={cls_no}")
    return 0 if report.is_transversal else 1


def _cmd_circle(args) -> int:
    bases = [float(part) for part in args.bases.split(",") if part.strip()]
    report = circle_window_check(bases, args.window, args.seed)
    for c in report.checks:
        center = "none" if c.center is None else str(c.center)
        found = "none" if c.separating_index is None else str(c.separating_index)
        print(
            f"check={c.kind} first={c.first} second={c.second}"
            f" center={center} separating_index={found} skipped={c.skipped}"
        )
    for c in report.undecided():
        print(f"violation=undecided kind={c.kind} first={c.first} second={c.second}")
    print(f"result={'pass' if report.ok else 'fail'}")
    return 0 if report.ok else 1


def _cmd_cylinder(args) -> int:
    report = cylinder_injectivity_experiment(args.n, args.L)
    for line in report.to_lines():
        print(line)
    print(f"result={'pass' if report.ok else 'fail'}")
    return 0 if report.ok else 1


def _cmd_union_complete(args) -> int:
    print(f"D={union_complete_distinguishing(args.m, args.q)}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="distcolor",
        description="Exact distinguishing numbers and orbit colorings of sequences.",
    )
    sub = parser.add_subparsers(dest="command", metavar="<subcommand>")

    p = sub.add_parser("distnum", help="distinguishing number of a graph file")
    p.add_argument("graph_file")
    p.add_argument("--budget", type=int, default=DEFAULT_COLORING_BUDGET)
    p.set_defaults(handler=_cmd_distnum)

    p = sub.add_parser("aut", help="list all automorphisms of a graph file")
    p.add_argument("graph_file")
    p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP)
    p.set_defaults(handler=_cmd_aut)

    p = sub.add_parser("verify", help="check a coloring file against a graph file")
    p.add_argument("graph_file")
    p.add_argument("coloring_file")
    p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("shift-color", help="orbit colors along a sequence's shifts")
    p.add_argument("--seq", required=True)
    p.add_argument("--window", default=f"{-DEFAULT_WINDOW},{DEFAULT_WINDOW}")
    p.set_defaults(handler=_cmd_shift_color)

    p = sub.add_parser("check-c", help="trajectory injectivity/reflection checks")
    p.add_argument("--sample", required=True)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--coloring", choices=sorted(NAMED_COLORINGS), default="orbit")
    p.set_defaults(handler=_cmd_check_c)

    p = sub.add_parser("smooth", help="class-injective coloring of a system file")
    p.add_argument("--system", required=True)
    p.add_argument("--modulus", type=int, default=None)
    p.set_defaults(handler=_cmd_smooth)

    p = sub.add_parser("transversal", help="minimal-color points of each class")
    p.add_argument("--system", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(handler=_cmd_transversal)

    p = sub.add_parser("circle", help="windowed separation scans on rotation orbits")
    p.add_argument("--bases", required=True)
    p.add_argument("--window", type=int, default=1000)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_circle)

    p = sub.add_parser("cylinder", help="exhaustive finite-support encoding checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--L", type=int, required=True)
    p.set_defaults(handler=_cmd_cylinder)

    p = sub.add_parser("union-complete", help="closed-form D for unions of complete graphs")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(handler=_cmd_union_complete)

    return parser


_KNOWN_COMMANDS = (
    "distnum",
    "aut",
    "verify",
    "shift-color",
    "check-c",
    "smooth",
    "transversal",
    "circle",
    "cylinder",
    "union-complete",
)


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    argv = _merge_negative_values(argv)

    if argv and argv[0] == "--version":
        print(f"distcolor {__version__}")
        return 0
    if argv and argv[0] == "--formats":
        print(f"distcolor {__version__}")
        print(_FORMATS, end="")
        return 0
    if argv and not argv[0].startswith("-") and argv[0] not in _KNOWN_COMMANDS:
        print(f"error: unknown subcommand {argv[0]!r}", file=sys.stderr)
        close = difflib.get_close_matches(argv[0], _KNOWN_COMMANDS, n=1)
        if close:
            print(f"did you mean: {close[0]}", file=sys.stderr)
        else:
            print(f"valid subcommands: {', '.join(_KNOWN_COMMANDS)}", file=sys.stderr)
        return 2

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "handler", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.handler(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GroupSizeExceeded, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotFreeError, UnsupportedRepresentation, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
