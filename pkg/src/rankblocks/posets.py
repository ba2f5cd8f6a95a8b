"""The two-row block poset, its natural labeling, linear extensions, and
order-reversing partitions.

For a composition (b_1, ..., b_m) the poset is the ordinal sum of m grids,
each grid two rows deep and b_l wide.  Block l occupies rows {l, l+1} and the
columns r_{l-1}+1 .. r_l (r_i the partial sums), and (i1,j1) <= (i2,j2) holds
exactly when i1 <= i2 and j1 <= j2.  The natural labeling assigns
``r_{l-1} + j + (i - l) * b_l`` to the element (i, j) of block l, so block l
uses the labels 2 r_{l-1} + 1 .. 2 r_l with the top row first.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .lattice_paths import DOWN, UP, MarkedBallotPath, enumerate_ballot_words


@dataclass(frozen=True)
class Composition:
    """Ordered sequence of positive parts with partial sums r_0 = 0 < r_1 < ... < r_m."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        if not parts:
            raise ValueError("composition must have at least one part")
        for b in parts:
            if not isinstance(b, int) or isinstance(b, bool) or b < 1:
                raise ValueError(f"parts must be positive integers, got {b!r}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def m(self) -> int:
        return len(self.parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        sums = [0]
        for b in self.parts:
            sums.append(sums[-1] + b)
        return tuple(sums)

    def block_of_column(self, j: int) -> int:
        """1-based index of the block containing column j."""
        sums = self.partial_sums
        for l in range(1, self.m + 1):
            if sums[l - 1] < j <= sums[l]:
                return l
        raise ValueError(f"column {j} outside 1..{self.d}")


def compositions(d: int):
    """All compositions of d, first part ascending then recursively."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in compositions(d - first):
            yield (first,) + rest


class SBetaStructure:
    """The labeled poset for one composition.

    Attributes:
        beta: the composition.
        elements: the 2d cells (i, j), indexed so elements[k] carries label k+1.
        lower_covers: for each label index, the label indices covered below it.
    """

    def __init__(self, beta):
        beta = beta if isinstance(beta, Composition) else Composition(tuple(beta))
        self.beta = beta
        sums = beta.partial_sums
        d = beta.d
        label_of = {}
        for l, b in enumerate(beta.parts, start=1):
            for j in range(sums[l - 1] + 1, sums[l] + 1):
                for i in (l, l + 1):
                    label_of[(i, j)] = sums[l - 1] + j + (i - l) * b
        if sorted(label_of.values()) != list(range(1, 2 * d + 1)):
            raise AssertionError("labeling is not a bijection onto 1..2d")
        elements = [None] * (2 * d)
        for cell, lab in label_of.items():
            elements[lab - 1] = cell
        self.elements = tuple(elements)
        self.label_of = label_of
        self.lower_covers = self._compute_lower_covers()
        self._check_natural()
        rows: dict[int, list[int]] = {}
        for (i, j) in self.elements:
            rows.setdefault(i, []).append(j)
        self._row_columns = {i: tuple(sorted(js)) for i, js in rows.items()}

    # -- order ----------------------------------------------------------

    @staticmethod
    def less_eq(a, b) -> bool:
        return a[0] <= b[0] and a[1] <= b[1]

    def _compute_lower_covers(self):
        n = len(self.elements)
        covers = []
        for bi in range(n):
            below = [ai for ai in range(n)
                     if ai != bi and self.less_eq(self.elements[ai], self.elements[bi])]
            direct = []
            for ai in below:
                if not any(ci != ai and self.less_eq(self.elements[ai], self.elements[ci])
                           for ci in below):
                    direct.append(ai)
            covers.append(tuple(direct))
        return tuple(covers)

    def _check_natural(self):
        # exhaustive pair scan: strictly smaller elements carry smaller labels
        n = len(self.elements)
        for ai in range(n):
            for bi in range(n):
                if ai != bi and self.less_eq(self.elements[ai], self.elements[bi]):
                    if ai >= bi:
                        raise AssertionError("labeling is not natural")

    # -- layout helpers ---------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    def row_columns(self, i: int) -> tuple[int, ...]:
        return self._row_columns.get(i, ())

    def rows(self) -> list[int]:
        return sorted(self._row_columns)

    def label(self, i: int, j: int) -> int:
        return self.label_of[(i, j)]

    def __eq__(self, other):
        if not isinstance(other, SBetaStructure):
            return NotImplemented
        return self.beta == other.beta

    def __hash__(self):
        return hash(self.beta)

    def __repr__(self):
        return f"SBetaStructure(beta={self.beta.parts})"

    def to_json_dict(self) -> dict:
        return {"beta": list(self.beta.parts),
                "labels": [[i, j, self.label_of[(i, j)]] for (i, j) in self.elements]}


@lru_cache(maxsize=None)
def _cached_structure(parts: tuple[int, ...]) -> SBetaStructure:
    return SBetaStructure(Composition(parts))


def build_s_beta(beta) -> SBetaStructure:
    """Build (or fetch, structures are immutable) the poset for a composition."""
    parts = tuple(beta.parts) if isinstance(beta, Composition) else tuple(beta)
    return _cached_structure(parts)


# ----------------------------------------------------------------------
# linear extensions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class LinearExtensionWord:
    """A linear extension, recorded as the permutation of labels it reads off."""

    word: tuple[int, ...]
    source: SBetaStructure

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = self.source.size
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"word must be a permutation of 1..{n}")
        pos = {label: k for k, label in enumerate(word)}
        for bi, covers in enumerate(self.source.lower_covers):
            for ai in covers:
                if pos[ai + 1] >= pos[bi + 1]:
                    raise ValueError("word does not extend the poset order")

    def __len__(self):
        return len(self.word)


@lru_cache(maxsize=None)
def _grid_extension_words(b: int) -> tuple[tuple[int, ...], ...]:
    # Extensions of one two-row grid, via its Catalan words: positions of the
    # u steps receive 1..b in order, positions of the d steps receive b+1..2b.
    words = []
    for dyck in enumerate_ballot_words(b, b):
        perm = []
        next_low, next_high = 1, b + 1
        for ch in dyck:
            if ch == UP:
                perm.append(next_low)
                next_low += 1
            else:
                perm.append(next_high)
                next_high += 1
        words.append(tuple(perm))
    return tuple(words)


def linear_extensions(structure: SBetaStructure) -> list[LinearExtensionWord]:
    """All linear extensions, generated blockwise: each block contributes an
    independent grid extension, shifted by twice the preceding column count."""
    sums = structure.beta.partial_sums
    per_block = []
    for l, b in enumerate(structure.beta.parts, start=1):
        shift = 2 * sums[l - 1]
        per_block.append([tuple(x + shift for x in w) for w in _grid_extension_words(b)])
    out = []
    for combo in product(*per_block):
        word = tuple(x for blk in combo for x in blk)
        out.append(LinearExtensionWord(word, structure))
    return out


def linear_extensions_generic(structure: SBetaStructure) -> list[LinearExtensionWord]:
    """Test oracle: plain topological backtracking over the whole poset."""
    n = structure.size
    covers = structure.lower_covers
    chosen: list[int] = []
    used = [False] * n
    out = []

    def rec():
        if len(chosen) == n:
            out.append(LinearExtensionWord(tuple(i + 1 for i in chosen), structure))
            return
        for idx in range(n):
            if used[idx]:
                continue
            if all(used[c] for c in covers[idx]):
                used[idx] = True
                chosen.append(idx)
                rec()
                chosen.pop()
                used[idx] = False

    rec()
    return out


def maj_word(w: LinearExtensionWord) -> int:
    """Sum of descent positions (1-based k with w_k > w_{k+1})."""
    word = w.word
    return sum(k for k in range(1, len(word)) if word[k - 1] > word[k])


# ----------------------------------------------------------------------
# order-reversing partitions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PosetPartition:
    """Order-reversing assignment of nonnegative integers, stored in label order."""

    structure: SBetaStructure
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.structure.size:
            raise ValueError("one value per poset element required")
        for v in values:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"values must be nonnegative integers, got {v!r}")
        for bi, covers in enumerate(self.structure.lower_covers):
            for ai in covers:
                if values[ai] < values[bi]:
                    raise ValueError(
                        f"assignment is not order-reversing at elements "
                        f"{self.structure.elements[ai]} < {self.structure.elements[bi]}")

    @property
    def weight(self) -> int:
        return sum(self.values)

    def value(self, i: int, j: int) -> int:
        return self.values[self.structure.label(i, j) - 1]

    def rows(self) -> list[list[int]]:
        return [[self.value(i, j) for j in self.structure.row_columns(i)]
                for i in self.structure.rows()]

    @classmethod
    def from_rows(cls, structure: SBetaStructure, rows) -> "PosetPartition":
        values = [0] * structure.size
        for i, row in zip(structure.rows(), rows):
            cols = structure.row_columns(i)
            if len(cols) != len(row):
                raise ValueError(f"row {i} expects {len(cols)} entries, got {len(row)}")
            for j, v in zip(cols, row):
                values[structure.label(i, j) - 1] = v
        return cls(structure, tuple(values))

    def to_json_dict(self) -> dict:
        return {"beta": list(self.structure.beta.parts), "rows": self.rows(),
                "weight": self.weight}


def _bounded_values(structure: SBetaStructure, max_weight: int):
    # Shared DFS skeleton: yields (values, total) at every completed assignment.
    n = structure.size
    covers = structure.lower_covers
    values = [0] * n

    def rec(idx, total):
        if idx == n:
            yield tuple(values), total
            return
        cap = max_weight - total
        for c in covers[idx]:
            if values[c] < cap:
                cap = values[c]
        for v in range(cap + 1):
            values[idx] = v
            yield from rec(idx + 1, total + v)

    yield from rec(0, 0)


def iter_poset_partitions(structure: SBetaStructure, max_weight: int):
    """Materialized order-reversing assignments of weight <= max_weight
    (intended for small posets; the histogram form is the workhorse)."""
    for values, _total in _bounded_values(structure, max_weight):
        yield PosetPartition(structure, values)


def enumerate_poset_partitions(structure: SBetaStructure, max_weight: int) -> list[int]:
    """Histogram: entry n counts the order-reversing assignments of weight n."""
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    hist = [0] * (max_weight + 1)
    for _values, total in _bounded_values(structure, max_weight):
        hist[total] += 1
    return hist


def word_to_dyck(w: LinearExtensionWord) -> MarkedBallotPath:
    """Map a linear extension to a marked Dyck path, block by block.

    Within block l a label in the top row (shifted value <= b_l) becomes a u
    step and a bottom-row label becomes a d step; the block paths are
    concatenated with marks at the junctions 2 r_1, ..., 2 r_{m-1}.
    """
    beta = w.source.beta
    sums = beta.partial_sums
    steps = []
    pos = 0
    for l, b in enumerate(beta.parts, start=1):
        shift = 2 * sums[l - 1]
        for _ in range(2 * b):
            label = w.word[pos] - shift
            steps.append(UP if label <= b else DOWN)
            pos += 1
    marks = tuple(2 * r for r in sums[1:-1])
    return MarkedBallotPath("".join(steps), marks)
