"""Exact truncated power-series arithmetic in q, plus closed-form generating functions.

Everything in this module is integer arithmetic.  A :class:`QSeries` stores
exact coefficients for the exponents ``0..precision``, and every operation
truncates to the smaller operand precision instead of silently padding, so an
equality between two series is always a statement about coefficients that were
actually computed on both sides.
"""

from dataclasses import dataclass
from functools import lru_cache

PLUS = "plus"
MINUS = "minus"
SIGNS = (PLUS, MINUS)


def check_sign(sign: str) -> str:
    if sign not in SIGNS:
        raise ValueError(f"sign must be one of {SIGNS}, got {sign!r}")
    return sign


@dataclass(frozen=True, eq=False)
class QSeries:
    """Formal power series in q truncated at a fixed precision.

    ``coeffs[k]`` is the coefficient of ``q**k`` for ``0 <= k <= precision``;
    ``len(coeffs)`` is always ``precision + 1``.  Two series compare equal when
    they agree coefficient-wise up to the smaller of the two precisions.
    Instances are immutable and safe to share between threads.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a QSeries tracks at least the constant coefficient")
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficients must be exact integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "QSeries":
        return cls((0,) * (precision + 1))

    @classmethod
    def one(cls, precision: int) -> "QSeries":
        return cls.constant(1, precision)

    @classmethod
    def constant(cls, value: int, precision: int) -> "QSeries":
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        return cls((value,) + (0,) * precision)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coefficient: int = 1) -> "QSeries":
        """``coefficient * q**exponent`` truncated; zero when exponent > precision."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        coeffs = [0] * (precision + 1)
        if exponent <= precision:
            coeffs[exponent] = coefficient
        return cls(tuple(coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, precision: int) -> "QSeries":
        """Pad a finite coefficient list with zeros, or truncate it, to the precision."""
        coeffs = list(coeffs)
        if len(coeffs) < precision + 1:
            coeffs.extend([0] * (precision + 1 - len(coeffs)))
        return cls(tuple(coeffs[: precision + 1]))

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        if not 0 <= exponent <= self.precision:
            raise ValueError(
                f"exponent {exponent} outside the tracked range 0..{self.precision}")
        return self.coeffs[exponent]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncate(self, precision: int) -> "QSeries":
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        if precision > self.precision:
            raise ValueError("truncate cannot extend precision")
        return QSeries(self.coeffs[: precision + 1])

    # ------------------------------------------------------------------
    # arithmetic: results always carry the minimum operand precision
    # ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QSeries):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return QSeries.constant(other, self.precision)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        return QSeries(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return QSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return QSeries(tuple(out))

    __rmul__ = __mul__

    def invert_unit(self) -> "QSeries":
        """Multiplicative inverse, defined when the constant coefficient is +/-1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError(
                f"series is not invertible over the integers: constant coefficient {c0}")
        n = self.precision
        out = [0] * (n + 1)
        out[0] = c0
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                aj = self.coeffs[j]
                if aj:
                    acc += aj * out[k - j]
            out[k] = -c0 * acc
        return QSeries(tuple(out))

    # ------------------------------------------------------------------
    # comparison / rendering / serialization
    # ------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(f"q^{k}" if k > 1 else "q")
            elif c == -1:
                terms.append(f"-q^{k}" if k > 1 else "-q")
            else:
                terms.append(f"{c}*q^{k}" if k > 1 else f"{c}*q")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"QSeries({body}; prec={self.precision})"

    def to_json_dict(self) -> dict:
        """Coefficients go out as decimal strings; they can exceed 64-bit range."""
        return {"precision": self.precision, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "QSeries":
        precision = int(data["precision"])
        coeffs = tuple(int(c) for c in data["coeffs"])
        if len(coeffs) != precision + 1:
            raise ValueError("coeffs length does not match precision + 1")
        return cls(coeffs)


# ----------------------------------------------------------------------
# q-Pochhammer products and Gaussian binomials
# ----------------------------------------------------------------------


def pochhammer(start_exp: int, count: int, precision: int) -> QSeries:
    """Product of ``(1 - q**(start_exp + j))`` for ``j in 0..count-1``, truncated."""
    if start_exp < 1:
        raise ValueError("start_exp must be a positive integer")
    if count < 0:
        raise ValueError("count must be nonnegative")
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    for j in range(count):
        a = start_exp + j
        if a > precision:
            break
        for k in range(precision, a - 1, -1):
            coeffs[k] -= coeffs[k - a]
    return QSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def _qbinomial_coeffs(n: int, k: int) -> tuple[int, ...]:
    # Pascal recurrence: [n,k] = [n-1,k] + q^(n-k) [n-1,k-1]; degree is k*(n-k).
    if k < 0 or k > n:
        return (0,)
    if k == 0 or k == n:
        return (1,)
    low = _qbinomial_coeffs(n - 1, k)
    high = _qbinomial_coeffs(n - 1, k - 1)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(low):
        out[i] += c
    shift = n - k
    for i, c in enumerate(high):
        out[i + shift] += c
    return tuple(out)


def qbinomial(n: int, k: int, precision: int | None = None) -> QSeries:
    """Gaussian binomial coefficient as an exact polynomial in q.

    Returns the zero series unless ``n >= k >= 0``.  With ``precision=None``
    the natural polynomial degree ``k*(n-k)`` is kept; a polynomial may be
    padded to any requested precision since its higher coefficients are
    genuinely zero.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = _qbinomial_coeffs(n, k)
    if precision is None:
        return QSeries(coeffs)
    return QSeries.from_coeffs(coeffs, precision)


# ----------------------------------------------------------------------
# partition numbers and the partition generating function
# ----------------------------------------------------------------------

_PARTITION_CACHE = [1]


def partition_number(n: int) -> int:
    """p(n), computed by the pentagonal-number recurrence; p(0) = 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    while len(_PARTITION_CACHE) <= n:
        t = len(_PARTITION_CACHE)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > t:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * _PARTITION_CACHE[t - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= t:
                total += sign * _PARTITION_CACHE[t - g2]
            k += 1
        _PARTITION_CACHE.append(total)
    return _PARTITION_CACHE[n]


def partition_number_or_zero(n: int) -> int:
    """p(n) with the convention p(n) = 0 for negative n (for shifted arguments)."""
    return partition_number(n) if n >= 0 else 0


def euler_inverse(precision: int) -> QSeries:
    """Truncation of ``prod_{j>=1} 1/(1 - q**j)``.

    Built by the bounded-largest-part sweep (after processing j, coefficient k
    counts partitions of k into parts <= j), deliberately independent of the
    pentagonal recurrence behind :func:`partition_number` so the two can
    cross-check each other.
    """
    if precision < 0:
        raise ValueError("precision must be nonnegative")
    coeffs = [0] * (precision + 1)
    coeffs[0] = 1
    for j in range(1, precision + 1):
        for k in range(j, precision + 1):
            coeffs[k] += coeffs[k - j]
    return QSeries(tuple(coeffs))


# ----------------------------------------------------------------------
# closed-form generating functions for the parity-block counts
# ----------------------------------------------------------------------


def series_exact(d: int, m: int, sign: str, precision: int) -> QSeries:
    """Series whose q^n coefficient counts partitions of n with exactly d
    Frobenius columns and m parity blocks, the last block of the given sign.

    Requires ``d >= m >= 1``.  The rational factor (1 - q^m)/(1 - q^d) is
    evaluated in truncated arithmetic (numerator times inverted denominator);
    it is not a polynomial in general but the full series is.
    """
    check_sign(sign)
    if not d >= m >= 1:
        raise ValueError(f"need d >= m >= 1, got d={d}, m={m}")
    shift = d * d + m * (m - 1) // 2 + (d if sign == PLUS else 0)
    one = QSeries.one(precision)
    out = QSeries.monomial(shift, precision)
    out = out * pochhammer(1, 2 * d, precision).invert_unit()
    out = out * (one - QSeries.monomial(m, precision))
    out = out * (one - QSeries.monomial(d, precision)).invert_unit()
    out = out * qbinomial(2 * d, d + m, precision)
    return out


def pentagonal_kernel(m: int, sign: str, precision: int) -> QSeries:
    """Alternating sum of pentagonal-shifted binomial-free terms.

    ``sum_{l=0}^{m-1} (-1)^l q^(l(3l+1)/2) (1 - q^(2l+1))`` for the plus sign,
    and ``sum_{l=0}^{m-1} (-1)^l q^(l(3l-1)/2) (1 - q^(4l+2))`` for minus.
    """
    check_sign(sign)
    if m < 1:
        raise ValueError("m must be positive")
    out = QSeries.zero(precision)
    for l in range(m):
        if sign == PLUS:
            e1 = l * (3 * l + 1) // 2
            e2 = e1 + 2 * l + 1
        else:
            e1 = l * (3 * l - 1) // 2
            e2 = e1 + 4 * l + 2
        term = QSeries.monomial(e1, precision) - QSeries.monomial(e2, precision)
        out = out + (term if l % 2 == 0 else -term)
    return out


def series_by_blocks(m: int, sign: str, precision: int) -> QSeries:
    """Series counting partitions of n with exactly m parity blocks, any number
    of columns, the last block of the given sign."""
    check_sign(sign)
    if m < 1:
        raise ValueError("m must be positive")
    sign_m = 1 if m % 2 == 0 else -1
    kernel = pentagonal_kernel(m, sign, precision)
    return QSeries.constant(sign_m, precision) + (-sign_m) * (euler_inverse(precision) * kernel)


def series_by_columns(d: int, sign: str, precision: int) -> QSeries:
    """Series counting partitions of n with exactly d Frobenius columns, any
    number of parity blocks, the last block of the given sign."""
    check_sign(sign)
    if d < 1:
        raise ValueError("d must be positive")
    shift = d * d + (d if sign == PLUS else 0)
    poch = pochhammer(1, d, precision)
    one_plus = QSeries.one(precision) + QSeries.monomial(d, precision)
    return QSeries.monomial(shift, precision) * (poch * poch).invert_unit() * one_plus.invert_unit()


def block_count_formula(n: int, m: int, sign: str) -> int:
    """Finite alternating partition-number formula for the by-blocks counts.

    Evaluates, with p(negative) = 0,
    ``(-1)^(m-1) sum_{l=0}^{m-1} (-1)^l (p(n - l(3l+1)/2) - p(n - (3(l+1)^2-(l+1))/2))``
    for the plus sign and the variant with ``l(3l-1)/2`` and
    ``(3(l+1)^2+(l+1))/2`` for minus.
    """
    check_sign(sign)
    if m < 1:
        raise ValueError("m must be positive")
    total = 0
    for l in range(m):
        if sign == PLUS:
            e1 = l * (3 * l + 1) // 2
            e2 = (3 * (l + 1) ** 2 - (l + 1)) // 2
        else:
            e1 = l * (3 * l - 1) // 2
            e2 = (3 * (l + 1) ** 2 + (l + 1)) // 2
        term = partition_number_or_zero(n - e1) - partition_number_or_zero(n - e2)
        total += term if l % 2 == 0 else -term
    return total if m % 2 == 1 else -total


def qbinomial_column_sum_check(d: int) -> bool:
    """Exact polynomial check of the signed Gaussian-binomial column sum.

    Both sides are multiplied by ``(1 + q^d)`` so the comparison stays between
    polynomials; the working precision sits safely above both degrees.
    """
    if d < 1:
        raise ValueError("d must be positive")
    precision = 2 * d * d + 2 * d
    one = QSeries.one(precision)
    q_d = QSeries.monomial(d, precision)
    lhs = QSeries.zero(precision)
    for m in range(1, d + 1):
        term = QSeries.monomial(m * (m - 1) // 2, precision)
        term = term * (one - QSeries.monomial(m, precision))
        term = term * qbinomial(2 * d, d + m, precision)
        lhs = lhs + term
    return lhs * (one + q_d) == (one - q_d) * qbinomial(2 * d, d, precision)
