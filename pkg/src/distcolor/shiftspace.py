"""Bi-infinite sequences with periodic tails and equivariant orbit colorings.

A sequence here is a map from the integers to a finite alphabet, stored as a
finite middle word flanked by two periodic tails. Canonicalization makes
representation equality coincide with pointwise equality, so sequences can be
hashed, compared, and used as dictionary keys.

On top of that sit the shift and reflection maps, a spiral linear order on
sequences, and a family of colorings of shift orbits. The centerpiece is the
orbit coloring: a marked-letter color chosen so that, along any aperiodic
orbit, the resulting color trajectory recovers the sequence and is never the
reflection of another trajectory.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Callable

UP = "up"
DOWN = "down"


class NotFreeError(ValueError):
    """Raised when an operation defined only on aperiodic sequences is
    applied to a periodic one."""


class UnsupportedRepresentation(ValueError):
    """Raised when an exact whole-sequence result is requested for an input
    whose representation does not support it; windowed trajectories remain
    available for such inputs."""


def _primitive(word: tuple[int, ...]) -> tuple[int, ...]:
    n = len(word)
    for p in range(1, n):
        if n % p == 0 and word == word[:p] * (n // p):
            return word[:p]
    return word


def _rot_left(word: tuple[int, ...]) -> tuple[int, ...]:
    return word[1:] + word[:1]


def _rot_right(word: tuple[int, ...]) -> tuple[int, ...]:
    return word[-1:] + word[:-1]


@dataclass(frozen=True)
class BiSeq:
    """A bi-infinite sequence with eventually periodic behavior on both
    sides: left_tail repeats toward -infinity, middle occupies positions
    [middle_start, middle_start + len(middle)), right_tail repeats toward
    +infinity.

    The constructor canonicalizes: tails are reduced to their primitive
    periods, middle letters absorbable into a tail are absorbed, a purely
    periodic sequence is anchored at position 0, and an empty middle between
    genuinely different tails is slid to the leftmost equivalent boundary.
    Two instances are equal exactly when they agree at every position.
    """

    alphabet_size: int
    left_tail: tuple[int, ...]
    middle: tuple[int, ...]
    middle_start: int
    right_tail: tuple[int, ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet_size must be at least 2")
        left = tuple(self.left_tail)
        mid = tuple(self.middle)
        right = tuple(self.right_tail)
        if not left or not right:
            raise ValueError("tail words must be nonempty")
        for sym in left + mid + right:
            if not 0 <= sym < self.alphabet_size:
                raise ValueError(f"symbol {sym} outside alphabet of size {self.alphabet_size}")
        left = _primitive(left)
        right = _primitive(right)
        start = self.middle_start

        while mid:
            if mid[-1] == right[-1]:
                right = _rot_right(right)
                mid = mid[:-1]
            elif mid[0] == left[0]:
                left = _rot_left(left)
                mid = mid[1:]
                start += 1
            else:
                break

        if not mid:
            if left == right:
                # purely periodic: anchor the period word at position 0
                word = left
                for _ in range(start % len(word)):
                    word = _rot_right(word)
                left = right = word
                start = 0
            else:
                # slide the boundary to its leftmost equivalent position;
                # must terminate before a full lcm of the two periods, else
                # the sequence would be purely periodic
                bound = math.lcm(len(left), len(right))
                slid = 0
                while left[-1] == right[-1]:
                    left = _rot_right(left)
                    right = _rot_right(right)
                    start -= 1
                    slid += 1
                    if slid >= bound:
                        raise AssertionError("boundary slide failed to terminate")

        object.__setattr__(self, "left_tail", left)
        object.__setattr__(self, "middle", mid)
        object.__setattr__(self, "middle_start", start)
        object.__setattr__(self, "right_tail", right)

    def value(self, index: int) -> int:
        """Symbol at the given position."""
        k = index - self.middle_start
        if k < 0:
            return self.left_tail[k % len(self.left_tail)]
        if k < len(self.middle):
            return self.middle[k]
        return self.right_tail[(k - len(self.middle)) % len(self.right_tail)]

    def shift(self, amount: int) -> "BiSeq":
        """Sequence s with s(j) = self(j + amount)."""
        return BiSeq(
            self.alphabet_size,
            self.left_tail,
            self.middle,
            self.middle_start - amount,
            self.right_tail,
        )

    def reflect(self) -> "BiSeq":
        """Sequence s with s(j) = self(-j)."""
        return BiSeq(
            self.alphabet_size,
            tuple(reversed(self.right_tail)),
            tuple(reversed(self.middle)),
            1 - self.middle_start - len(self.middle),
            tuple(reversed(self.left_tail)),
        )

    def is_free(self) -> bool:
        """True iff no shift by p >= 1 maps the sequence to itself.

        A canonical form is purely periodic exactly when the middle is empty
        and both tails carry the same primitive word.
        """
        return bool(self.middle) or self.left_tail != self.right_tail

    def support_window(self) -> tuple[int, int]:
        """Half-open index range [a, b) outside of which both tails rule."""
        return self.middle_start, self.middle_start + len(self.middle)

    def spec_string(self) -> str:
        """Render in the sequence spec grammar accepted by parse_seq_spec."""
        left = ",".join(str(s) for s in self.left_tail)
        mid = ",".join(str(s) for s in self.middle)
        right = ",".join(str(s) for s in self.right_tail)
        return (
            f"seq n={self.alphabet_size} left=({left}) middle=[{mid}]"
            f" start={self.middle_start} right=({right})"
        )


def _spiral_positions():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def spiral_compare(a: BiSeq, b: BiSeq) -> int:
    """Total order on sequences: compare symbols at positions 0, 1, -1,
    2, -2, ... and decide at the first difference. Returns -1, 0, or 1.

    If the two sequences agree on the window spanning both middles plus one
    lcm of the tail periods on each side, they agree everywhere, so the scan
    is bounded.
    """
    if a.alphabet_size != b.alphabet_size:
        raise ValueError("spiral_compare requires a common alphabet")
    if a == b:
        return 0
    lo = min(a.middle_start, b.middle_start) - math.lcm(
        len(a.left_tail), len(b.left_tail)
    )
    hi = max(a.support_window()[1], b.support_window()[1]) + math.lcm(
        len(a.right_tail), len(b.right_tail)
    )
    for pos in _spiral_positions():
        if pos >= hi and -pos < lo:
            break
        if not lo <= pos < hi:
            continue
        va, vb = a.value(pos), b.value(pos)
        if va != vb:
            return -1 if va < vb else 1
    raise AssertionError("distinct sequences must differ inside the scan window")


def spike(letter: int, alphabet_size: int) -> BiSeq:
    """The sequence with a single nonzero symbol, `letter`, at position 0."""
    if alphabet_size < 2:
        raise ValueError("alphabet_size must be at least 2")
    if not 1 <= letter <= alphabet_size - 1:
        raise ValueError(f"spike letter must lie in [1, {alphabet_size - 1}]")
    return BiSeq(alphabet_size, (0,), (letter,), 0, (0,))


def as_shifted_spike(seq: BiSeq) -> tuple[int, int] | None:
    """If seq has exactly one nonzero symbol, return (i, m) with
    seq = spike(m, n).shift(i); otherwise None.

    The lone nonzero symbol sits at position -i.
    """
    if seq.left_tail == (0,) and seq.right_tail == (0,) and len(seq.middle) == 1:
        return -seq.middle_start, seq.middle[0]
    return None


def spin(seq: BiSeq) -> str:
    """The up/down mark comparing a sequence against its reflection.

    Up when the symbol at 0 is zero, or when the sequence is >= its
    reflection in spiral order; down otherwise. Undefined on the spike
    family (which gets its mark from the step rule) and on periodic input.
    """
    if not seq.is_free():
        raise NotFreeError("spin is defined only for aperiodic sequences")
    if as_shifted_spike(seq) is not None:
        raise ValueError("spin is undefined on the spike family")
    if seq.value(0) == 0:
        return UP
    return UP if spiral_compare(seq, seq.reflect()) >= 0 else DOWN


@dataclass(frozen=True)
class MarkedLetter:
    """A letter paired with an up/down mark; letter 0 only ever carries up.

    The marked alphabet therefore has 2n - 1 symbols for a base alphabet of
    size n, packed into integer codes 0, 1, ..., 2n - 2.
    """

    letter: int
    mark: str

    def __post_init__(self):
        if self.letter < 0:
            raise ValueError("letter must be nonnegative")
        if self.mark not in (UP, DOWN):
            raise ValueError(f"mark must be {UP!r} or {DOWN!r}")
        if self.letter == 0 and self.mark != UP:
            raise ValueError("letter 0 admits only the up mark")

    @property
    def code(self) -> int:
        if self.letter == 0:
            return 0
        return 2 * self.letter - 1 if self.mark == UP else 2 * self.letter

    @classmethod
    def from_code(cls, code: int) -> "MarkedLetter":
        if code < 0:
            raise ValueError("code must be nonnegative")
        if code == 0:
            return cls(0, UP)
        if code % 2 == 1:
            return cls((code + 1) // 2, UP)
        return cls(code // 2, DOWN)

    def render(self) -> str:
        return f"({self.letter},{self.mark})"


def orbit_color(seq: BiSeq) -> MarkedLetter:
    """Marked-letter color of a single aperiodic sequence.

    Shifted spikes take their spike letter, marked up exactly when the spike
    sits at or left of position 0. Every other sequence takes its symbol at
    position 0, marked by spin.
    """
    if not seq.is_free():
        raise NotFreeError("orbit_color is defined only for aperiodic sequences")
    hit = as_shifted_spike(seq)
    if hit is not None:
        i, m = hit
        return MarkedLetter(m, UP if i >= 0 else DOWN)
    letter = seq.value(0)
    if letter == 0:
        return MarkedLetter(0, UP)
    return MarkedLetter(letter, spin(seq))


def marked_alphabet_size(alphabet_size: int) -> int:
    """Size of the marked-letter code alphabet for a base alphabet."""
    return 2 * alphabet_size - 1


def orbit_encoding(seq: BiSeq) -> BiSeq:
    """The whole color trajectory of the orbit coloring, as a sequence of
    marked-letter codes: position j holds orbit_color(seq.shift(j)).code.

    Exact output is available for shifted spikes (a down-step followed by an
    up-step at the spike position) and for finite-support sequences (codes
    over the support, code 0 outside). Other representations have no exact
    encoding here; use trajectory windows instead.
    """
    if not seq.is_free():
        raise NotFreeError("orbit_encoding is defined only for aperiodic sequences")
    codes_n = marked_alphabet_size(seq.alphabet_size)
    hit = as_shifted_spike(seq)
    if hit is not None:
        _, m = hit
        down = MarkedLetter(m, DOWN).code
        up = MarkedLetter(m, UP).code
        return BiSeq(codes_n, (down,), (), seq.middle_start, (up,))
    if seq.left_tail == (0,) and seq.right_tail == (0,):
        lo, hi = seq.support_window()
        codes = tuple(orbit_color(seq.shift(j)).code for j in range(lo, hi))
        return BiSeq(codes_n, (0,), codes, lo, (0,))
    raise UnsupportedRepresentation(
        "exact encoding requires a shifted spike or a finite-support sequence"
    )


def letter_sequence(encoded: BiSeq) -> BiSeq:
    """First components of a marked-letter code sequence, as a sequence over
    the base alphabet. Inverse of the encoding off the spike family."""
    base_n = (encoded.alphabet_size + 1) // 2

    def letters(word):
        return tuple(MarkedLetter.from_code(c).letter for c in word)

    return BiSeq(
        base_n,
        letters(encoded.left_tail),
        letters(encoded.middle),
        encoded.middle_start,
        letters(encoded.right_tail),
    )


@dataclass(frozen=True)
class TrajectoryWindow:
    """A finite window of a color trajectory. word[k] is the color at shift
    index k - center_offset, so word[center_offset] sits over index 0."""

    center_offset: int
    word: tuple[int, ...]

    def color_at(self, index: int) -> int:
        k = index + self.center_offset
        if not 0 <= k < len(self.word):
            raise IndexError(f"index {index} outside trajectory window")
        return self.word[k]

    def indices(self) -> range:
        return range(-self.center_offset, len(self.word) - self.center_offset)


@dataclass(frozen=True)
class TrajectoryColoring:
    """A named coloring of aperiodic sequences, yielding integer color ids.

    exact_encoding, when present, maps a supported sequence to its whole
    trajectory as a BiSeq over color codes; colorings without one are
    checked through finite windows only.
    """

    name: str
    color_of: Callable[[BiSeq], int]
    exact_encoding: Callable[[BiSeq], BiSeq] | None = None

    def __call__(self, seq: BiSeq) -> int:
        return self.color_of(seq)


ORBIT_COLORING = TrajectoryColoring("orbit", lambda s: orbit_color(s).code, orbit_encoding)
LETTER_COLORING = TrajectoryColoring("letter", lambda s: s.value(0))
CONSTANT_COLORING = TrajectoryColoring("constant", lambda s: 0)

NAMED_COLORINGS = {
    c.name: c for c in (ORBIT_COLORING, LETTER_COLORING, CONSTANT_COLORING)
}

DEFAULT_WINDOW = 32


def trajectory(coloring: TrajectoryColoring, seq: BiSeq, lo: int, hi: int) -> TrajectoryWindow:
    """Colors of seq's orbit over shift indices lo..hi inclusive:
    word[i - lo] = coloring(seq.shift(i))."""
    if lo > hi:
        raise ValueError("window bounds must satisfy lo <= hi")
    if not seq.is_free():
        raise NotFreeError("trajectories are defined along aperiodic orbits")
    word = tuple(coloring(seq.shift(i)) for i in range(lo, hi + 1))
    return TrajectoryWindow(-lo, word)


@dataclass(frozen=True)
class TrajectoryViolation:
    """A failed trajectory check. kind is 'injectivity' (two sample points
    share a trajectory) or 'reflection' (one trajectory is the reflection of
    another, possibly itself). decided is False when the evidence is only
    window equality, which is reported rather than silently passed."""

    kind: str
    first: int
    second: int
    decided: bool


@dataclass(frozen=True)
class TrajectoryCheckReport:
    coloring: str
    exact: bool
    sample_size: int
    pairs_checked: int
    violations: tuple[TrajectoryViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_trajectories(
    coloring: TrajectoryColoring, sample: list[BiSeq], window: int = DEFAULT_WINDOW
) -> TrajectoryCheckReport:
    """Check that trajectories of the sample points are pairwise distinct
    and that no trajectory equals the reflection of any (including itself).

    When the coloring carries exact encodings and every sample point
    supports one, the comparison is exact on canonical encodings. Otherwise
    trajectories are compared on the window [-window, window]; a pair equal
    on the whole window is undecided and is reported as a violation with
    decided=False, never silently passed.
    """
    if not sample:
        raise ValueError("sample must be nonempty")
    alphabet = sample[0].alphabet_size
    for s in sample:
        if s.alphabet_size != alphabet:
            raise ValueError("sample mixes alphabets")
        if not s.is_free():
            raise NotFreeError("sample points must be aperiodic")
    if len(set(sample)) != len(sample):
        raise ValueError("sample points must be pairwise distinct")

    def capable(s: BiSeq) -> bool:
        return as_shifted_spike(s) is not None or (
            s.left_tail == (0,) and s.right_tail == (0,)
        )

    exact = coloring.exact_encoding is not None and all(capable(s) for s in sample)
    n = len(sample)
    violations: list[TrajectoryViolation] = []
    pairs = 0

    if exact:
        encodings = [coloring.exact_encoding(s) for s in sample]
        reflected = [e.reflect() for e in encodings]
        for i in range(n):
            for j in range(i + 1, n):
                pairs += 1
                if encodings[i] == encodings[j]:
                    violations.append(TrajectoryViolation("injectivity", i, j, True))
            for j in range(i, n):
                pairs += 1
                if encodings[i] == reflected[j]:
                    violations.append(TrajectoryViolation("reflection", i, j, True))
    else:
        words = [trajectory(coloring, s, -window, window).word for s in sample]
        for i in range(n):
            for j in range(i + 1, n):
                pairs += 1
                if words[i] == words[j]:
                    violations.append(TrajectoryViolation("injectivity", i, j, False))
            for j in range(i, n):
                pairs += 1
                if words[i] == tuple(reversed(words[j])):
                    violations.append(TrajectoryViolation("reflection", i, j, False))

    return TrajectoryCheckReport(
        coloring.name, exact, n, pairs, tuple(violations)
    )


_SEQ_RE = re.compile(
    r"^seq\s+n=(?P<n>\d+)\s+left=\((?P<left>[\d,]*)\)\s+middle=\[(?P<mid>[\d,]*)\]"
    r"\s+start=(?P<start>-?\d+)\s+right=\((?P<right>[\d,]*)\)$"
)
_SPIKE_RE = re.compile(
    r"^spike\s+m=(?P<m>\d+)\s+n=(?P<n>\d+)(?:\s+shift=(?P<shift>-?\d+))?$"
)


def _parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def parse_seq_spec(text: str) -> BiSeq:
    """Parse one sequence spec.

    Grammar: `seq n=<alphabet> left=(<w>) middle=[<w>] start=<i> right=(<w>)`
    with comma-separated symbol lists, or `spike m=<m> n=<n> [shift=<i>]`
    for shifted single-spike sequences.
    """
    text = " ".join(text.split())
    m = _SEQ_RE.match(text)
    if m:
        return BiSeq(
            int(m.group("n")),
            _parse_word(m.group("left")),
            _parse_word(m.group("mid")),
            int(m.group("start")),
            _parse_word(m.group("right")),
        )
    m = _SPIKE_RE.match(text)
    if m:
        base = spike(int(m.group("m")), int(m.group("n")))
        amount = int(m.group("shift") or 0)
        return base.shift(amount)
    raise ValueError(f"unrecognized sequence spec: {text!r}")


def parse_sample(text: str) -> list[BiSeq]:
    """Parse a sample file: one sequence spec per line, # comments allowed."""
    from .graphs import FileFormatError

    sample = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            sample.append(parse_seq_spec(line))
        except ValueError as exc:
            raise FileFormatError(line_no, str(exc)) from exc
    return sample
