"""Integer partitions, Frobenius symbols, successive ranks, and parity blocks.

The counting functions here are deliberately brute force: they enumerate
Frobenius symbols (pairs of strictly decreasing rows) directly and classify
them column by column.  They serve as the enumeration oracle against which the
closed-form series of :mod:`rankblocks.qseries` are verified, so they must not
share any code path with those series.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .qseries import MINUS, PLUS, check_sign

POSITIVE = "P"
NEGATIVE = "N"
SIGN_LETTER = {PLUS: POSITIVE, MINUS: NEGATIVE}


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the partition of 0."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def durfee_side(self) -> int:
        """Side of the largest square fitting in the Ferrers graph."""
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
        return d

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(tuple(cols))

    def to_json_dict(self) -> dict:
        return {"parts": list(self.parts)}


def enumerate_partitions(n: int):
    """Yield every partition of n exactly once, in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n if n else 1):
        yield Partition(parts)


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two equal-length strictly decreasing rows of nonnegative integers.

    Column i carries the pair (top[i], bottom[i]); the represented partition
    has size sum(top) + sum(bottom) + d where d is the number of columns.
    """

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        if len(top) != len(bottom) or not top:
            raise ValueError("rows must have equal positive length")
        for row in (top, bottom):
            for i, x in enumerate(row):
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise ValueError(f"entries must be nonnegative integers, got {x!r}")
                if i and row[i - 1] <= x:
                    raise ValueError(f"rows must be strictly decreasing, got {row}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def d(self) -> int:
        return len(self.top)

    @property
    def size(self) -> int:
        return sum(self.top) + sum(self.bottom) + self.d

    def __str__(self):
        return "({} / {})".format(
            " ".join(map(str, self.top)), " ".join(map(str, self.bottom)))

    def to_json_dict(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "FrobeniusSymbol":
        return cls(tuple(int(x) for x in data["top"]),
                   tuple(int(x) for x in data["bottom"]))


def to_frobenius(p: Partition) -> FrobeniusSymbol:
    """Read the symbol off the Ferrers graph: arms and legs along the diagonal."""
    d = p.durfee_side()
    if d == 0:
        raise ValueError("the empty partition has no Frobenius symbol")
    conj = p.conjugate().parts
    top = tuple(p.parts[i] - (i + 1) for i in range(d))
    bottom = tuple(conj[i] - (i + 1) for i in range(d))
    return FrobeniusSymbol(top, bottom)


def from_frobenius(f: FrobeniusSymbol) -> Partition:
    """Rebuild the unique partition with the given symbol."""
    d = f.d
    parts = [f.top[i] + (i + 1) for i in range(d)]
    col_lengths = [f.bottom[i] + (i + 1) for i in range(d)]
    j = d + 1
    while True:
        row = sum(1 for c in col_lengths if c >= j)
        if row == 0:
            break
        parts.append(row)
        j += 1
    return Partition(tuple(parts))


def successive_ranks(f: FrobeniusSymbol) -> tuple[int, ...]:
    """The i-th rank is top[i] - bottom[i]."""
    return tuple(x - y for x, y in zip(f.top, f.bottom))


@dataclass(frozen=True)
class ParityBlocks:
    """Maximal runs of same-sign columns; sign P means rank >= 1, N means rank <= 0."""

    sizes: tuple[int, ...]
    signs: tuple[str, ...]
    column_ranks: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(self.sizes)
        signs = tuple(self.signs)
        ranks = tuple(self.column_ranks)
        if len(sizes) != len(signs) or not sizes:
            raise ValueError("sizes and signs must have equal positive length")
        if sum(sizes) != len(ranks):
            raise ValueError("block sizes must partition the columns")
        for i, s in enumerate(signs):
            if s not in (POSITIVE, NEGATIVE):
                raise ValueError(f"signs must be 'P' or 'N', got {s!r}")
            if i and signs[i - 1] == s:
                raise ValueError("consecutive blocks must alternate in sign")
        pos = 0
        for size, s in zip(sizes, signs):
            for r in ranks[pos:pos + size]:
                if (r >= 1) != (s == POSITIVE):
                    raise ValueError(f"column rank {r} inconsistent with block sign {s}")
            pos += size
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "signs", signs)
        object.__setattr__(self, "column_ranks", ranks)

    @property
    def m(self) -> int:
        return len(self.sizes)

    @property
    def sign_word(self) -> str:
        return "".join(self.signs)

    @property
    def last_sign(self) -> str:
        return self.signs[-1]

    def to_json_dict(self) -> dict:
        return {"sizes": list(self.sizes), "signs": self.sign_word}


def split_parity_runs(ranks) -> tuple[tuple[int, ...], tuple[str, ...]]:
    """Split a rank sequence into maximal same-sign runs; returns (sizes, signs)."""
    ranks = tuple(ranks)
    if not ranks:
        raise ValueError("need at least one column")
    sizes = []
    signs = []
    for r in ranks:
        s = POSITIVE if r >= 1 else NEGATIVE
        if signs and signs[-1] == s:
            sizes[-1] += 1
        else:
            sizes.append(1)
            signs.append(s)
    return tuple(sizes), tuple(signs)


def parity_blocks(f: FrobeniusSymbol) -> ParityBlocks:
    ranks = successive_ranks(f)
    sizes, signs = split_parity_runs(ranks)
    return ParityBlocks(sizes, signs, ranks)


# ----------------------------------------------------------------------
# symbol enumeration
# ----------------------------------------------------------------------


def _strict_desc_exact(length, total, cap=None):
    # Strictly decreasing nonnegative tuples of the given length and sum,
    # entries < cap, in reverse-lexicographic order.
    if length == 0:
        if total == 0:
            yield ()
        return
    hi = total - (length - 1) * (length - 2) // 2
    if cap is not None:
        hi = min(hi, cap - 1)
    max_tail = (length - 1) * length // 2
    for first in range(hi, length - 2, -1):
        tail_total = total - first
        if tail_total > (length - 1) * first - max_tail:
            break
        for tail in _strict_desc_exact(length - 1, tail_total, cap=first):
            yield (first,) + tail


def _strict_desc_at_most(length, max_total, cap=None):
    # Same shape as above but with sum <= max_total.
    if length == 0:
        yield ()
        return
    hi = max_total - (length - 1) * (length - 2) // 2
    if cap is not None:
        hi = min(hi, cap - 1)
    for first in range(hi, length - 2, -1):
        for tail in _strict_desc_at_most(length - 1, max_total - first, cap=first):
            yield (first,) + tail


def iter_frobenius_symbols(n: int, d: int):
    """All Frobenius symbols of size n with exactly d columns, deterministically
    ordered (top row reverse-lexicographic, then bottom row)."""
    if d < 1 or n < d * d:
        return
    budget = n - d
    stair = d * (d - 1) // 2
    for top in _strict_desc_at_most(d, budget - stair):
        for bottom in _strict_desc_exact(d, budget - sum(top)):
            yield FrobeniusSymbol(top, bottom)


# ----------------------------------------------------------------------
# brute-force counts
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _block_census(n: int, d: int) -> dict:
    """Counts of symbols of size n with d columns, keyed by (m, last block sign)."""
    counts: dict[tuple[int, str], int] = {}
    for f in iter_frobenius_symbols(n, d):
        sizes, signs = split_parity_runs(successive_ranks(f))
        key = (len(sizes), signs[-1])
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_exact(n: int, d: int, m: int, sign: str) -> int:
    """Partitions of n with exactly d columns and m parity blocks, last block of
    the given sign.  Returns 0 whenever the combination is impossible."""
    check_sign(sign)
    if n < 1 or d < 1 or m < 1:
        return 0
    return _block_census(n, d).get((m, SIGN_LETTER[sign]), 0)


def count_by_blocks(n: int, m: int, sign: str) -> int:
    """Partitions of n with exactly m parity blocks (any column count)."""
    check_sign(sign)
    if n < 1:
        return 0
    return sum(count_exact(n, d, m, sign) for d in range(1, isqrt(n) + 1))


def count_by_columns(n: int, d: int, sign: str) -> int:
    """Partitions of n with exactly d columns (any number of blocks)."""
    check_sign(sign)
    if n < 1 or d < 1:
        return 0
    return sum(count_exact(n, d, m, sign) for m in range(1, d + 1))


def count_all_columns(n: int, d: int) -> int:
    """Partitions of n with exactly d columns, regardless of block structure.

    Conventions: one empty partition with zero columns, so the (0, 0) case
    counts 1; negative n counts 0.
    """
    if n < 0:
        return 0
    if d == 0:
        return 1 if n == 0 else 0
    if n < 1:
        return 0
    return sum(_block_census(n, d).values())


# ----------------------------------------------------------------------
# sign-word prefix counting
# ----------------------------------------------------------------------


@lru_cache(maxsize=None)
def _sign_word_census(n: int) -> tuple[tuple[str, int], ...]:
    """Multiplicities of parity-block sign words over all partitions of n."""
    counts: dict[str, int] = {}
    for p in enumerate_partitions(n):
        word = parity_blocks(to_frobenius(p)).sign_word
        counts[word] = counts.get(word, 0) + 1
    return tuple(sorted(counts.items()))


def alternating_sign_word(length: int, last: str) -> str:
    """The alternating P/N word of the given length ending with the given letter."""
    if length < 1:
        raise ValueError("length must be positive")
    if last not in (POSITIVE, NEGATIVE):
        raise ValueError(f"last must be 'P' or 'N', got {last!r}")
    other = NEGATIVE if last == POSITIVE else POSITIVE
    letters = [last if (length - i) % 2 == 0 else other for i in range(1, length + 1)]
    return "".join(letters)


def count_prefix_pattern(n: int, pattern) -> int:
    """Partitions of n whose parity-block sign word starts with the pattern.

    The pattern (a string or sequence over {'P','N'}) must alternate, since
    parity blocks always do; the empty pattern counts every nonempty partition.
    """
    word = "".join(pattern)
    for i, ch in enumerate(word):
        if ch not in (POSITIVE, NEGATIVE):
            raise ValueError(f"pattern letters must be 'P' or 'N', got {ch!r}")
        if i and word[i - 1] == ch:
            raise ValueError(f"pattern must alternate in sign, got {word!r}")
    if n < 1:
        return 0
    return sum(c for w, c in _sign_word_census(n) if w.startswith(word))
