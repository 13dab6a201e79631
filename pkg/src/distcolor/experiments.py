"""Quantitative experiments: a two-color coloring of circle rotation orbits
checked through finite windows, word-complexity censuses with entropy
estimates, and exhaustive small-scale injectivity runs for the orbit
encoding of finite-support sequences.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .shiftspace import BiSeq, marked_alphabet_size, orbit_encoding

TOLERANCE = 1e-9

TWO_PI = 2 * math.pi

# open arcs whose indicator colors the circle; endpoints listed for the
# boundary guard
_ARCS = ((0.0, math.pi / 2), (4 * math.pi / 6, 5 * math.pi / 6))
_ENDPOINTS = tuple(e for arc in _ARCS for e in arc)


class BoundaryAmbiguity(ValueError):
    """The evaluated angle falls within floating tolerance of an arc
    endpoint, where the color cannot be trusted."""

    def __init__(self, angle: float):
        super().__init__(f"angle {angle!r} is within {TOLERANCE} of an arc endpoint")
        self.angle = angle


@dataclass(frozen=True)
class CirclePoint:
    """The point at angle base_angle + steps radians on the unit circle;
    one step is a rotation by exactly 1 radian."""

    base_angle: float
    steps: int = 0

    def angle(self) -> float:
        return (self.base_angle + self.steps) % TWO_PI


def circle_color(point: CirclePoint) -> int:
    """1 iff the point's reduced angle lies in (0, pi/2) union
    (4pi/6, 5pi/6), else 0; refuses to classify within TOLERANCE of an
    endpoint rather than guess."""
    theta = point.angle()
    for endpoint in _ENDPOINTS:
        delta = abs(theta - endpoint) % TWO_PI
        if min(delta, TWO_PI - delta) < TOLERANCE:
            raise BoundaryAmbiguity(theta)
    return 1 if any(lo < theta < hi for lo, hi in _ARCS) else 0


@dataclass(frozen=True)
class CircleCheck:
    """One separation scan. kind is 'direct' (two orbits compared index by
    index), 'reflected' (one orbit against the other reversed through the
    given center), or 'self-reflection' (an orbit against itself reversed).
    separating_index is None when the window was exhausted undecided."""

    kind: str
    first: int
    second: int
    center: int | None
    separating_index: int | None
    skipped: int


@dataclass(frozen=True)
class CircleCheckReport:
    window: int
    seed: int
    checks: tuple[CircleCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.separating_index is not None for c in self.checks)

    def undecided(self) -> tuple[CircleCheck, ...]:
        return tuple(c for c in self.checks if c.separating_index is None)


def _spiral(window: int):
    yield 0
    for k in range(1, window + 1):
        yield k
        yield -k


def _scan(base_a: float, base_b: float, center: int | None, window: int, skip_zero: bool):
    """First offset k in spiral order with color(base_a + k) differing from
    color(base_b + center - k) (direct comparison when center is None).
    Returns (k or None, boundary skips)."""
    skipped = 0
    for k in _spiral(window):
        if skip_zero and k == 0:
            continue
        other = k if center is None else center - k
        try:
            ca = circle_color(CirclePoint(base_a, k))
            cb = circle_color(CirclePoint(base_b, other))
        except BoundaryAmbiguity:
            skipped += 1
            continue
        if ca != cb:
            return k, skipped
    return None, skipped


def circle_window_check(bases, window: int, seed: int) -> CircleCheckReport:
    """Scan rotation orbits for separating color indices.

    Every pair of bases is compared directly and against each other's
    reflection; every single base is compared against its own reflection
    through center 0 (offset 0 skipped, it is trivially equal) and through
    a seeded random odd center, which reflects the orbit without a fixed
    point. Undecided scans are reported, never dropped.
    """
    bases = [float(b) for b in bases]
    if not bases:
        raise ValueError("at least one base angle is required")
    if window < 1:
        raise ValueError("window must be positive")
    for i, a in enumerate(bases):
        for b in bases[i + 1 :]:
            delta = abs(a - b) % TWO_PI
            if min(delta, TWO_PI - delta) < TOLERANCE:
                raise ValueError(f"bases {a!r} and {b!r} coincide on the same orbit base")

    rng = random.Random(seed)
    checks = []
    for i in range(len(bases)):
        for j in range(i + 1, len(bases)):
            k, skipped = _scan(bases[i], bases[j], None, window, False)
            checks.append(CircleCheck("direct", i, j, None, k, skipped))
            k, skipped = _scan(bases[i], bases[j], 0, window, False)
            checks.append(CircleCheck("reflected", i, j, 0, k, skipped))
    for i in range(len(bases)):
        k, skipped = _scan(bases[i], bases[i], 0, window, True)
        checks.append(CircleCheck("self-reflection", i, i, 0, k, skipped))
        center = 2 * rng.randint(-5, 5) + 1
        k, skipped = _scan(bases[i], bases[i], center, window, False)
        checks.append(CircleCheck("self-reflection", i, i, center, k, skipped))
    return CircleCheckReport(window, seed, tuple(checks))


@dataclass
class WordCensus:
    """Counts of every length-L factor occurring in a batch of words."""

    length: int
    counts: dict
    distinct: int

    @property
    def entropy_estimate(self) -> float:
        return math.log(self.distinct) / self.length


def word_census(words, length: int) -> WordCensus:
    """Census of all length-L factors across the input words."""
    if length < 1:
        raise ValueError("length must be positive")
    counts: dict = {}
    for word in words:
        seq = tuple(word)
        if len(seq) < length:
            raise ValueError(f"word of length {len(seq)} is shorter than {length}")
        for t in range(len(seq) - length + 1):
            factor = seq[t : t + length]
            counts[factor] = counts.get(factor, 0) + 1
    return WordCensus(length, counts, len(counts))


DEFAULT_CYLINDER_BUDGET = 100_000


@dataclass(frozen=True)
class CylinderReport:
    """Outcome of the exhaustive finite-support injectivity run."""

    alphabet_size: int
    length: int
    points_checked: int
    pairs_checked: int
    collisions: int
    reflection_collisions: int
    realized_codes: tuple[int, ...]
    distinct_words: int
    entropy_estimate: float
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_lines(self) -> list[str]:
        lines = [
            f"points={self.points_checked}",
            f"pairs_checked={self.pairs_checked}",
            f"collisions={self.collisions}",
            f"reflection_collisions={self.reflection_collisions}",
            f"alphabet_realized={len(self.realized_codes)}",
            f"distinct_words={self.distinct_words}",
            f"entropy_estimate={self.entropy_estimate:.6f}",
        ]
        lines.extend(f"violation={f}" for f in self.failures)
        return lines


def cylinder_injectivity_experiment(
    alphabet_size: int, length: int, budget: int = DEFAULT_CYLINDER_BUDGET
) -> CylinderReport:
    """Enumerate every not-all-zero pattern on positions [0, length) as a
    finite-support sequence, encode each orbit exactly, and check: encodings
    pairwise distinct, no encoding the reflection of another (or of itself),
    the marked alphabet fully realized (code 0 is unreachable at length 1,
    where every pattern is a spike), and the length-L factor count of the
    trajectory windows [-L, 2L) between alphabet_size^L and (2*alphabet_size-1)^L.
    """
    if alphabet_size < 3:
        raise ValueError("alphabet_size must be at least 3")
    if length < 1:
        raise ValueError("length must be positive")
    total = alphabet_size**length
    if total > budget:
        raise ValueError(f"{total} patterns exceed the budget {budget}")

    points = [
        BiSeq(alphabet_size, (0,), pattern, 0, (0,))
        for pattern in itertools.product(range(alphabet_size), repeat=length)
        if any(pattern)
    ]
    encodings = [orbit_encoding(p) for p in points]

    failures = []
    index_of: dict[BiSeq, int] = {}
    collisions = 0
    for i, enc in enumerate(encodings):
        if enc in index_of:
            collisions += 1
            failures.append(
                f"encoding collision between {points[index_of[enc]].spec_string()!r}"
                f" and {points[i].spec_string()!r}"
            )
        else:
            index_of[enc] = i
    reflection_collisions = 0
    for i, enc in enumerate(encodings):
        j = index_of.get(enc.reflect())
        if j is not None and j >= i:
            reflection_collisions += 1
            failures.append(
                f"encoding of {points[i].spec_string()!r} is the reflection of"
                f" that of {points[j].spec_string()!r}"
            )

    realized = set()
    for enc in encodings:
        realized.update(enc.left_tail)
        realized.update(enc.middle)
        realized.update(enc.right_tail)
    code_count = marked_alphabet_size(alphabet_size)
    expected = set(range(code_count)) if length > 1 else set(range(1, code_count))
    if realized != expected:
        failures.append(
            f"realized codes {sorted(realized)} differ from expected {sorted(expected)}"
        )

    windows = [
        tuple(enc.value(j) for j in range(-length, 2 * length)) for enc in encodings
    ]
    census = word_census(windows, length)
    if census.distinct < total:
        failures.append(f"distinct factor count {census.distinct} below {total}")
    if census.distinct > code_count**length:
        failures.append(
            f"distinct factor count {census.distinct} above {code_count**length}"
        )

    count = len(points)
    return CylinderReport(
        alphabet_size,
        length,
        count,
        count * count,
        collisions,
        reflection_collisions,
        tuple(sorted(realized)),
        census.distinct,
        census.entropy_estimate,
        tuple(failures),
    )
