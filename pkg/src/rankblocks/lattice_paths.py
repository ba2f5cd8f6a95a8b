"""Ballot and Dyck paths with marked returns, and the maj / vmr statistics.

A path is a word over {u, d} that never dips below the x-axis.  A valley is a
d step immediately followed by a u step; its x-coordinate is the step index of
the d.  A return is a valley sitting on the x-axis, and a marked path selects
a subset of its returns.  The path endpoint is never a valley (there is no
following u step), so the final return of a Dyck path is never markable.
"""

from dataclasses import dataclass
from itertools import combinations

from .qseries import QSeries

UP = "u"
DOWN = "d"


@dataclass(frozen=True)
class MarkedBallotPath:
    """A ballot-path word plus the x-coordinates of its marked returns."""

    steps: str
    marks: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", "".join(self.steps))
        marks = tuple(self.marks)
        object.__setattr__(self, "marks", marks)
        height = 0
        for ch in self.steps:
            if ch == UP:
                height += 1
            elif ch == DOWN:
                height -= 1
            else:
                raise ValueError(f"steps must be over 'u'/'d', got {ch!r}")
            if height < 0:
                raise ValueError(f"path dips below the x-axis: {self.steps!r}")
        rets = set(self.returns())
        prev = 0
        for x in marks:
            if x <= prev:
                raise ValueError("marks must be strictly increasing")
            if x not in rets:
                raise ValueError(f"mark at x={x} is not a return of {self.steps!r}")
            prev = x

    @property
    def s(self) -> int:
        return self.steps.count(UP)

    @property
    def t(self) -> int:
        return self.steps.count(DOWN)

    def valleys(self) -> tuple[int, ...]:
        """x-coordinates where a d step is immediately followed by a u step."""
        steps = self.steps
        return tuple(i + 1 for i in range(len(steps) - 1)
                     if steps[i] == DOWN and steps[i + 1] == UP)

    def returns(self) -> tuple[int, ...]:
        """Valleys lying on the x-axis (these are the markable positions)."""
        out = []
        height = 0
        steps = self.steps
        for i, ch in enumerate(steps):
            height += 1 if ch == UP else -1
            if height == 0 and ch == DOWN and i + 1 < len(steps) and steps[i + 1] == UP:
                out.append(i + 1)
        return tuple(out)

    def bar_string(self) -> str:
        """Render with a vertical bar after each marked return, e.g. ``udud|u``."""
        marks = set(self.marks)
        out = []
        for i, ch in enumerate(self.steps, start=1):
            out.append(ch)
            if i in marks:
                out.append("|")
        return "".join(out)

    @classmethod
    def from_string(cls, text: str) -> "MarkedBallotPath":
        """Parse the bar notation produced by :meth:`bar_string`."""
        steps = []
        marks = []
        for ch in text:
            if ch in (UP, DOWN):
                steps.append(ch)
            elif ch == "|":
                marks.append(len(steps))
            elif not ch.isspace():
                raise ValueError(f"unexpected character {ch!r} in path {text!r}")
        return cls("".join(steps), tuple(marks))

    def to_json_dict(self) -> dict:
        return {"steps": self.steps, "marks": list(self.marks)}

    def __str__(self):
        return self.bar_string()


def maj_path(p: MarkedBallotPath) -> int:
    """Sum of the x-coordinates of all valleys."""
    return sum(p.valleys())


def vmr(p: MarkedBallotPath) -> int:
    """maj minus half the sum of marked-return x-coordinates (always an integer:
    returns sit at even x)."""
    total = sum(p.marks)
    return maj_path(p) - total // 2


def enumerate_ballot_words(s: int, t: int):
    """All ballot words with s up-steps and t down-steps, lexicographic (d < u)."""
    if s < 0 or t < 0:
        raise ValueError("step counts must be nonnegative")

    def rec(u_left, d_left, height, prefix):
        if u_left == 0 and d_left == 0:
            yield prefix
            return
        if d_left > 0 and height > 0:
            yield from rec(u_left, d_left - 1, height - 1, prefix + DOWN)
        if u_left > 0:
            yield from rec(u_left - 1, d_left, height + 1, prefix + UP)

    yield from rec(s, t, 0, "")


def enumerate_marked_paths(s: int, t: int, min_marks: int = 0):
    """Every (path, mark-subset) pair with at least min_marks marked returns.

    The same underlying word appears once per qualifying mark subset; subsets
    are generated in binary-counter order over the word's return list.
    """
    if s < t:
        raise ValueError(f"need s >= t, got s={s}, t={t}")
    if min_marks < 0:
        raise ValueError("min_marks must be nonnegative")
    for word in enumerate_ballot_words(s, t):
        rets = MarkedBallotPath(word).returns()
        k = len(rets)
        if k < min_marks:
            continue
        for mask in range(1 << k):
            if mask.bit_count() < min_marks:
                continue
            marks = tuple(rets[j] for j in range(k) if mask >> j & 1)
            yield MarkedBallotPath(word, marks)


def enumerate_exact_marks(s: int, r: int):
    """Dyck paths to (2s, 0) carrying exactly r marked returns."""
    if s < 1:
        raise ValueError("s must be positive")
    if r < 0:
        raise ValueError("r must be nonnegative")
    for word in enumerate_ballot_words(s, s):
        rets = MarkedBallotPath(word).returns()
        if len(rets) < r:
            continue
        for marks in combinations(rets, r):
            yield MarkedBallotPath(word, marks)


def enumerate_fixed_returns(d: int, positions):
    """Dyck paths of length 2d whose mark set is exactly {2*p for p in positions}.

    Positions must be strictly increasing and lie strictly between 0 and d;
    the empty tuple gives all unmarked Dyck paths.
    """
    if d < 1:
        raise ValueError("d must be positive")
    positions = tuple(positions)
    prev = 0
    for p in positions:
        if p <= prev:
            raise ValueError(f"positions must be strictly increasing, got {positions}")
        if p >= d:
            raise ValueError(f"positions must be < d={d}, got {positions}")
        prev = p
    marks = tuple(2 * p for p in positions)
    for word in enumerate_ballot_words(d, d):
        rets = set(MarkedBallotPath(word).returns())
        if all(x in rets for x in marks):
            yield MarkedBallotPath(word, marks)


def gf_vmr(objects, precision: int | None = None) -> QSeries:
    """Sum of q**vmr over a finite collection of marked paths.

    With ``precision=None`` the result is the exact polynomial (precision =
    largest vmr seen, or 0 for an empty collection).
    """
    exponents = [vmr(p) for p in objects]
    if precision is None:
        precision = max(exponents, default=0)
    coeffs = [0] * (precision + 1)
    for e in exponents:
        if e <= precision:
            coeffs[e] += 1
    return QSeries(tuple(coeffs))
