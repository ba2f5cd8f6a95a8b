"""The weight-controlled chain between Frobenius symbols and poset partitions.

Forward direction: remove the staircase from a symbol to get a weakly
decreasing two-row array, flip the rows inside every negative parity block,
drop the columns into the block poset (giving gamma), then subtract a fixed
constant from each row (giving pi).  Every step is invertible given the
composition and the sign of the last block, and every step's weight change is
checked explicitly, so a wrong assumption fails loudly instead of producing a
plausible-looking array.
"""

from dataclasses import dataclass

from .partitions import (
    NEGATIVE,
    POSITIVE,
    SIGN_LETTER,
    FrobeniusSymbol,
    ParityBlocks,
    split_parity_runs,
)
from .posets import Composition, PosetPartition, build_s_beta
from .qseries import MINUS, PLUS, check_sign


@dataclass(frozen=True)
class FrobeniusArray:
    """Two equal-length weakly decreasing rows of nonnegative integers.

    Obtained from a d-column symbol by subtracting d-1, d-2, ..., 0 from the
    entries of each row; the subtraction is the same in both rows of a column,
    so the column ranks (and hence the parity blocks) are untouched while the
    weight drops by exactly d*(d-1).
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
                if i and row[i - 1] < x:
                    raise ValueError(f"rows must be weakly decreasing, got {row}")
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def d(self) -> int:
        return len(self.top)

    @property
    def weight(self) -> int:
        return sum(self.top) + sum(self.bottom)

    def ranks(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.top, self.bottom))

    def blocks(self) -> ParityBlocks:
        ranks = self.ranks()
        sizes, signs = split_parity_runs(ranks)
        return ParityBlocks(sizes, signs, ranks)

    def to_json_dict(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}


def symbol_to_array(f: FrobeniusSymbol) -> FrobeniusArray:
    """Subtract the staircase d-1, ..., 1, 0 from each row."""
    d = f.d
    return FrobeniusArray(
        tuple(x - (d - 1 - i) for i, x in enumerate(f.top)),
        tuple(y - (d - 1 - i) for i, y in enumerate(f.bottom)),
    )


def array_to_symbol(a: FrobeniusArray) -> FrobeniusSymbol:
    """Add the staircase back; weak decrease turns into strict decrease."""
    d = a.d
    return FrobeniusSymbol(
        tuple(x + (d - 1 - i) for i, x in enumerate(a.top)),
        tuple(y + (d - 1 - i) for i, y in enumerate(a.bottom)),
    )


def sign_of_last_block(f) -> str:
    """'plus' or 'minus' according to the sign of the final parity block."""
    if isinstance(f, FrobeniusArray):
        letter = f.blocks().last_sign
    else:
        _, signs = split_parity_runs(tuple(x - y for x, y in zip(f.top, f.bottom)))
        letter = signs[-1]
    return PLUS if letter == POSITIVE else MINUS


def _expected_signs(m: int, sign: str) -> tuple[str, ...]:
    # Parity blocks alternate, so the last block's sign fixes every sign.
    last = SIGN_LETTER[check_sign(sign)]
    other = NEGATIVE if last == POSITIVE else POSITIVE
    return tuple(last if (m - i) % 2 == 0 else other for i in range(1, m + 1))


def _flip_negative_blocks(top, bottom, sizes, signs):
    # Swap the two entries of every column belonging to a negative block.
    new_top = list(top)
    new_bottom = list(bottom)
    pos = 0
    for size, s in zip(sizes, signs):
        if s == NEGATIVE:
            for j in range(pos, pos + size):
                new_top[j], new_bottom[j] = new_bottom[j], new_top[j]
        pos += size
    return tuple(new_top), tuple(new_bottom)


def flipped_rows(a: FrobeniusArray) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The array rows after interchanging top and bottom in each negative block."""
    blocks = a.blocks()
    return _flip_negative_blocks(a.top, a.bottom, blocks.sizes, blocks.signs)


def array_to_gamma(a: FrobeniusArray) -> PosetPartition:
    """Flip the negative blocks, then drop block l's columns into rows l, l+1
    of the block poset.  The composition is read off the array itself."""
    blocks = a.blocks()
    beta = Composition(blocks.sizes)
    structure = build_s_beta(beta)
    hat_top, hat_bottom = _flip_negative_blocks(a.top, a.bottom, blocks.sizes, blocks.signs)
    values = [0] * structure.size
    sums = beta.partial_sums
    for l in range(1, beta.m + 1):
        for j in range(sums[l - 1] + 1, sums[l] + 1):
            values[structure.label(l, j) - 1] = hat_top[j - 1]
            values[structure.label(l + 1, j) - 1] = hat_bottom[j - 1]
    gamma = PosetPartition(structure, tuple(values))
    if gamma.weight != a.weight:
        raise AssertionError("placement must preserve the weight")
    return gamma


def _row_offsets(m: int, sign: str) -> tuple[int, ...]:
    # Constant subtracted from each of the m+1 rows, indexed from the top.
    # Counted from the bottom these are 0,1,1,2,2,... for the plus case and
    # 0,0,1,1,2,... for minus.
    check_sign(sign)
    if sign == PLUS:
        return tuple((m + 2 - i) // 2 for i in range(1, m + 2))
    return tuple((m + 1 - i) // 2 for i in range(1, m + 2))


def _expected_drop(beta: Composition, sign: str) -> int:
    sums = beta.partial_sums
    if sign == PLUS:
        return sum(sums[1:])
    return sum(sums[1:-1])


def gamma_to_pi(g: PosetPartition, sign: str) -> PosetPartition:
    """Subtract the per-row constants; valid only for gamma arising from an
    array whose last block matches the sign (otherwise entries go negative or
    the order-reversing check fails, both of which raise)."""
    beta = g.structure.beta
    offsets = _row_offsets(beta.m, sign)
    new_rows = []
    for offset, row in zip(offsets, g.rows()):
        shifted = [v - offset for v in row]
        if any(v < 0 for v in shifted):
            raise ValueError(
                f"row subtraction drives an entry negative; gamma is not a "
                f"{sign}-case image (row offsets {offsets})")
        new_rows.append(shifted)
    pi = PosetPartition.from_rows(g.structure, new_rows)
    drop = g.weight - pi.weight
    if drop != _expected_drop(beta, sign):
        raise AssertionError(
            f"weight drop {drop} disagrees with the partial-sum total "
            f"{_expected_drop(beta, sign)}")
    return pi


def pi_to_gamma(p: PosetPartition, sign: str) -> PosetPartition:
    """Add the per-row constants back."""
    beta = p.structure.beta
    offsets = _row_offsets(beta.m, sign)
    new_rows = [[v + offset for v in row] for offset, row in zip(offsets, p.rows())]
    return PosetPartition.from_rows(p.structure, new_rows)


def gamma_to_array(g: PosetPartition, sign: str) -> FrobeniusArray:
    """Split gamma back into a two-row array and unflip the negative blocks.

    Raises ValueError when the result is not a weakly decreasing array whose
    parity blocks reproduce the structure's composition with the requested
    last-block sign (i.e. the input was not in the forward image).
    """
    beta = g.structure.beta
    sums = beta.partial_sums
    signs = _expected_signs(beta.m, sign)
    hat_top = []
    hat_bottom = []
    for l in range(1, beta.m + 1):
        for j in range(sums[l - 1] + 1, sums[l] + 1):
            hat_top.append(g.value(l, j))
            hat_bottom.append(g.value(l + 1, j))
    top, bottom = _flip_negative_blocks(hat_top, hat_bottom, beta.parts, signs)
    array = FrobeniusArray(top, bottom)
    blocks = array.blocks()
    if blocks.sizes != beta.parts or blocks.signs != signs:
        raise ValueError(
            f"reconstructed array has blocks {blocks.sizes}/{''.join(blocks.signs)}, "
            f"expected {beta.parts}/{''.join(signs)}; not in the forward image")
    return array


def pi_to_lambda(p: PosetPartition, sign: str) -> FrobeniusSymbol:
    """Inverse of the full chain: add row constants, split the grid, unflip,
    add the staircase.  Raises ValueError when p is not in the forward image."""
    gamma = pi_to_gamma(p, sign)
    array = gamma_to_array(gamma, sign)
    return array_to_symbol(array)


def lambda_to_pi(f: FrobeniusSymbol, sign: str | None = None) -> PosetPartition:
    """Full forward chain.  The sign, when supplied, must match the symbol's
    last parity block."""
    inferred = sign_of_last_block(f)
    if sign is None:
        sign = inferred
    elif check_sign(sign) != inferred:
        raise ValueError(f"symbol's last block is {inferred}, not {sign}")
    return gamma_to_pi(array_to_gamma(symbol_to_array(f)), sign)


def bijection_trace(f: FrobeniusSymbol, sign: str | None = None) -> list[dict]:
    """JSON-friendly stage-by-stage record of the forward chain."""
    inferred = sign_of_last_block(f)
    if sign is None:
        sign = inferred
    elif check_sign(sign) != inferred:
        raise ValueError(f"symbol's last block is {inferred}, not {sign}")
    array = symbol_to_array(f)
    blocks = array.blocks()
    hat_top, hat_bottom = flipped_rows(array)
    gamma = array_to_gamma(array)
    pi = gamma_to_pi(gamma, sign)
    return [
        {"stage": "lambda", "top": list(f.top), "bottom": list(f.bottom),
         "blocks": blocks.to_json_dict(), "sign": sign, "weight": f.size},
        {"stage": "mu", "top": list(array.top), "bottom": list(array.bottom),
         "weight": array.weight},
        {"stage": "mu_hat", "top": list(hat_top), "bottom": list(hat_bottom),
         "weight": sum(hat_top) + sum(hat_bottom)},
        {"stage": "gamma", "beta": list(gamma.structure.beta.parts),
         "rows": gamma.rows(), "weight": gamma.weight},
        {"stage": "pi", "beta": list(pi.structure.beta.parts),
         "rows": pi.rows(), "weight": pi.weight},
    ]
