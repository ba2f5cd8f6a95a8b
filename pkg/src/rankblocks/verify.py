"""Named verification checks pairing enumeration oracles with closed forms.

Each check computes its two sides through independent code paths (the
enumeration side never touches the closed-form series and vice versa) and
reports per-coefficient agreement.  On failure the report carries the first
discrepant exponent plus up to five witness objects from the enumeration side
at that weight.
"""

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .lattice_paths import (
    enumerate_exact_marks,
    enumerate_fixed_returns,
    enumerate_marked_paths,
    gf_vmr,
    maj_path,
    vmr,
)
from .partitions import (
    NEGATIVE,
    POSITIVE,
    SIGN_LETTER,
    alternating_sign_word,
    count_all_columns,
    count_by_blocks,
    count_by_columns,
    count_exact,
    count_prefix_pattern,
    enumerate_partitions,
    iter_frobenius_symbols,
    parity_blocks,
    to_frobenius,
)
from .posets import (
    build_s_beta,
    compositions,
    enumerate_poset_partitions,
    iter_poset_partitions,
    linear_extensions,
    maj_word,
    word_to_dyck,
)
from .qseries import (
    MINUS,
    PLUS,
    SIGNS,
    QSeries,
    block_count_formula,
    check_sign,
    euler_inverse,
    partition_number,
    partition_number_or_zero,
    pentagonal_kernel,
    pochhammer,
    qbinomial,
    series_by_blocks,
    series_by_columns,
    series_exact,
)


@dataclass
class VerificationReport:
    """Outcome of one check at one grid point; pass iff no discrepancy."""

    target: str
    parameters: dict
    status: str
    first_discrepancy: dict | None
    elapsed: float
    witnesses: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "parameters": self.parameters,
            "status": self.status,
            "first_discrepancy": self.first_discrepancy,
            "elapsed": round(self.elapsed, 6),
            "witnesses": self.witnesses,
        }


@dataclass(frozen=True)
class GridConfig:
    """Pinned default grid bounds; the full sweep stays well under two minutes."""

    precision: int = 40
    max_d: int = 5
    max_m: int = 5
    max_s: int = 6
    max_r: int = 6
    max_path_length: int = 12
    pp_max_d: int = 4
    pp_precision: int = 20
    word_path_max_d: int = 5
    prefix_max_m: int = 4
    prefix_precision: int = 30
    relations_max_m: int = 4
    relations_max_d: int = 4
    relations_precision: int = 30
    unity_precision: int = 30
    column_sum_max_d: int = 10


def _report(target, parameters, started, discrepancy=None, witnesses=None):
    elapsed = time.perf_counter() - started
    if discrepancy is None:
        return VerificationReport(target, parameters, "pass", None, elapsed)
    return VerificationReport(target, parameters, "fail", discrepancy, elapsed,
                              list(witnesses or []))


def _take(iterable, k=5):
    out = []
    for item in iterable:
        out.append(item)
        if len(out) == k:
            break
    return out


# ----------------------------------------------------------------------
# series vs brute-force counts
# ----------------------------------------------------------------------


def _witness_symbols(n, d, m, sign):
    letter = SIGN_LETTER[sign]
    found = []
    for f in iter_frobenius_symbols(n, d):
        pb = parity_blocks(f)
        if pb.m == m and pb.last_sign == letter:
            found.append(f.to_json_dict())
            if len(found) == 5:
                break
    return found


def verify_exact_series(d, m, sign, precision=40):
    """Counts with fixed column number and block number vs their closed form."""
    check_sign(sign)
    if not d >= m >= 1:
        raise ValueError(f"need d >= m >= 1, got d={d}, m={m}")
    started = time.perf_counter()
    params = {"d": d, "m": m, "sign": sign, "precision": precision}
    closed = series_exact(d, m, sign, precision)
    for n in range(1, precision + 1):
        expected = count_exact(n, d, m, sign)
        actual = closed.coefficient(n)
        if expected != actual:
            disc = {"exponent": n, "expected": expected, "actual": actual}
            return _report("thm-main", params, started, disc,
                           _witness_symbols(n, d, m, sign))
    return _report("thm-main", params, started)


def verify_block_series(m, sign, precision=40):
    """Counts with fixed block number vs both the finite partition-number
    formula and the pentagonal-kernel series."""
    check_sign(sign)
    if m < 1:
        raise ValueError("m must be positive")
    started = time.perf_counter()
    params = {"m": m, "sign": sign, "precision": precision}
    closed = series_by_blocks(m, sign, precision)
    letter = SIGN_LETTER[sign]
    for n in range(1, precision + 1):
        expected = count_by_blocks(n, m, sign)
        for side, actual in (("formula", block_count_formula(n, m, sign)),
                             ("series", closed.coefficient(n))):
            if expected != actual:
                disc = {"exponent": n, "expected": expected, "actual": actual,
                        "side": side}
                wits = _take(p.to_json_dict() for p in enumerate_partitions(n)
                             if (pb := parity_blocks(to_frobenius(p))).m == m
                             and pb.last_sign == letter)
                return _report("thm-1.2", params, started, disc, wits)
    return _report("thm-1.2", params, started)


def verify_column_series(d, sign, precision=40):
    """Counts with fixed column number vs their closed form."""
    check_sign(sign)
    if d < 1:
        raise ValueError("d must be positive")
    started = time.perf_counter()
    params = {"d": d, "sign": sign, "precision": precision}
    closed = series_by_columns(d, sign, precision)
    letter = SIGN_LETTER[sign]
    for n in range(1, precision + 1):
        expected = count_by_columns(n, d, sign)
        actual = closed.coefficient(n)
        if expected != actual:
            disc = {"exponent": n, "expected": expected, "actual": actual}
            wits = _take(f.to_json_dict() for f in iter_frobenius_symbols(n, d)
                         if parity_blocks(f).last_sign == letter)
            return _report("thm-1.4", params, started, disc, wits)
    return _report("thm-1.4", params, started)


def verify_euler_expansion(m, precision=40):
    """Truncated pentagonal kernel over the partition product vs the sum of the
    exact closed forms over all column counts (cut off where q^(d^2) exceeds
    the precision), for both sign variants."""
    if m < 1:
        raise ValueError("m must be positive")
    started = time.perf_counter()
    params = {"m": m, "precision": precision}
    sign_factor = 1 if m % 2 == 1 else -1
    for variant in SIGNS:
        lhs = euler_inverse(precision) * pentagonal_kernel(m, variant, precision)
        rhs = QSeries.one(precision)
        for d in range(m, isqrt(precision) + 1):
            rhs = rhs + sign_factor * series_exact(d, m, variant, precision)
        for n in range(precision + 1):
            if lhs.coefficient(n) != rhs.coefficient(n):
                disc = {"exponent": n, "expected": lhs.coefficient(n),
                        "actual": rhs.coefficient(n), "variant": variant}
                return _report("cor-1.3", params, started, disc)
    return _report("cor-1.3", params, started)


def verify_qbinomial_column_sum(d):
    """Signed Gaussian-binomial column sum as an exact polynomial identity,
    both sides multiplied by (1 + q^d)."""
    if d < 1:
        raise ValueError("d must be positive")
    started = time.perf_counter()
    params = {"d": d}
    precision = 2 * d * d + 2 * d
    one = QSeries.one(precision)
    q_d = QSeries.monomial(d, precision)
    lhs = QSeries.zero(precision)
    for m in range(1, d + 1):
        term = QSeries.monomial(m * (m - 1) // 2, precision)
        term = term * (one - QSeries.monomial(m, precision))
        lhs = lhs + term * qbinomial(2 * d, d + m, precision)
    lhs = lhs * (one + q_d)
    rhs = (one - q_d) * qbinomial(2 * d, d, precision)
    for n in range(precision + 1):
        if lhs.coefficient(n) != rhs.coefficient(n):
            disc = {"exponent": n, "expected": lhs.coefficient(n),
                    "actual": rhs.coefficient(n)}
            return _report("cor-1.5", params, started, disc)
    return _report("cor-1.5", params, started)


# ----------------------------------------------------------------------
# marked-path generating functions
# ----------------------------------------------------------------------


def _compare_path_gf(target, params, started, objects, closed_shift, closed_poly):
    """Exact polynomial comparison of sum q^vmr against q^shift * poly."""
    objects = list(objects)
    degree = closed_shift + closed_poly.precision
    precision = max([degree] + [vmr(p) for p in objects]) if objects else degree
    lhs = gf_vmr(objects, precision)
    rhs = QSeries.monomial(closed_shift, precision) * QSeries.from_coeffs(
        closed_poly.coeffs, precision)
    for n in range(precision + 1):
        if lhs.coefficient(n) != rhs.coefficient(n):
            disc = {"exponent": n, "expected": lhs.coefficient(n),
                    "actual": rhs.coefficient(n)}
            wits = _take(p.bar_string() for p in objects if vmr(p) == n)
            return _report(target, params, started, disc, wits)
    return _report(target, params, started)


def verify_ballot_gf(s, t, r):
    """Marked ballot paths with at least r marks vs the shifted bracket."""
    if not s > t >= 0:
        raise ValueError(f"need s > t >= 0, got s={s}, t={t}")
    if r < 0:
        raise ValueError("r must be nonnegative")
    started = time.perf_counter()
    params = {"s": s, "t": t, "r": r}
    return _compare_path_gf("lemma-2.2", params, started,
                            enumerate_marked_paths(s, t, r),
                            r * (r + 1) // 2, qbinomial(s + t, s + r))


def verify_dyck_gf(s, r):
    """Marked Dyck paths with at least r marks vs the shifted bracket."""
    if s < 1:
        raise ValueError("s must be positive")
    if r < 0:
        raise ValueError("r must be nonnegative")
    started = time.perf_counter()
    params = {"s": s, "r": r}
    return _compare_path_gf("lemma-2.4", params, started,
                            enumerate_marked_paths(s, s, r),
                            r * (r + 1) // 2, qbinomial(2 * s - 1, s + r))


def verify_exact_mark_gf(s, r):
    """Dyck paths with exactly r marks: gf * (1 - q^s) vs the bracket form,
    multiplied through so both sides stay polynomial."""
    if s < 1:
        raise ValueError("s must be positive")
    if r < 0:
        raise ValueError("r must be nonnegative")
    started = time.perf_counter()
    params = {"s": s, "r": r}
    objects = list(enumerate_exact_marks(s, r))
    shift = r * (r + 1) // 2
    bracket = qbinomial(2 * s, s + r + 1)
    degree = shift + r + 1 + bracket.precision
    precision = max([degree + s] + [vmr(p) + s for p in objects])
    one = QSeries.one(precision)
    lhs = gf_vmr(objects, precision) * (one - QSeries.monomial(s, precision))
    rhs = QSeries.monomial(shift, precision)
    rhs = rhs * (one - QSeries.monomial(r + 1, precision))
    rhs = rhs * QSeries.from_coeffs(bracket.coeffs, precision)
    for n in range(precision + 1):
        if lhs.coefficient(n) != rhs.coefficient(n):
            disc = {"exponent": n, "expected": lhs.coefficient(n),
                    "actual": rhs.coefficient(n)}
            wits = _take(p.bar_string() for p in objects if vmr(p) == n)
            return _report("cor-2.5", params, started, disc, wits)
    return _report("cor-2.5", params, started)


# ----------------------------------------------------------------------
# poset-partition and word/path identities
# ----------------------------------------------------------------------


def verify_poset_partition_gf(beta, precision=20):
    """Weight histogram of order-reversing assignments vs the descent series
    over linear extensions divided by the length-2d Pochhammer product."""
    structure = build_s_beta(beta)
    started = time.perf_counter()
    params = {"beta": list(structure.beta.parts), "precision": precision}
    hist = enumerate_poset_partitions(structure, precision)
    series = pochhammer(1, structure.size, precision).invert_unit()
    maj_counts = [0] * (precision + 1)
    for w in linear_extensions(structure):
        e = maj_word(w)
        if e <= precision:
            maj_counts[e] += 1
    series = series * QSeries(tuple(maj_counts))
    for n in range(precision + 1):
        if hist[n] != series.coefficient(n):
            disc = {"exponent": n, "expected": hist[n], "actual": series.coefficient(n)}
            wits = _take(p.to_json_dict() for p in iter_poset_partitions(structure, n)
                         if p.weight == n)
            return _report("prop-3.9", params, started, disc, wits)
    return _report("prop-3.9", params, started)


def verify_word_path_gf(beta):
    """Descent statistic over linear extensions vs the shifted valley statistic
    over Dyck paths with the prescribed marked returns; also checks that the
    word-to-path map is a bijection onto that path family."""
    structure = build_s_beta(beta)
    started = time.perf_counter()
    params = {"beta": list(structure.beta.parts)}
    sums = structure.beta.partial_sums
    positions = sums[1:-1]
    shift = 2 * sum(positions)
    words = linear_extensions(structure)
    paths = list(enumerate_fixed_returns(structure.beta.d, positions))
    word_exps = [maj_word(w) for w in words]
    path_exps = [maj_path(p) - shift for p in paths]
    precision = max(word_exps + path_exps, default=0)
    lhs = [0] * (precision + 1)
    for e in word_exps:
        lhs[e] += 1
    rhs = [0] * (precision + 1)
    for e in path_exps:
        rhs[e] += 1
    for n in range(precision + 1):
        if lhs[n] != rhs[n]:
            disc = {"exponent": n, "expected": lhs[n], "actual": rhs[n]}
            wits = _take(" ".join(map(str, w.word)) for w in words if maj_word(w) == n)
            return _report("prop-3.10", params, started, disc, wits)
    images = [word_to_dyck(w) for w in words]
    if len(set(images)) != len(images) or set(images) != set(paths):
        disc = {"exponent": None, "expected": len(paths),
                "actual": len(set(images)),
                "detail": "word-to-path images do not match the path family"}
        return _report("prop-3.10", params, started, disc,
                       _take(p.bar_string() for p in paths))
    return _report("prop-3.10", params, started)


# ----------------------------------------------------------------------
# prefix patterns and count relations
# ----------------------------------------------------------------------


def verify_prefix_counts(m, precision=30):
    """Sign-word prefix counts vs pentagonal-shifted partition numbers.

    For each terminal letter, partitions whose alternating sign word starts
    with the length-m pattern or the length-(m+1) pattern (two disjoint
    classes) together number p(n - (3m^2 -+ m)/2).
    """
    if m < 1:
        raise ValueError("m must be positive")
    started = time.perf_counter()
    params = {"m": m, "precision": precision}
    cases = ((NEGATIVE, (3 * m * m - m) // 2), (POSITIVE, (3 * m * m + m) // 2))
    for letter, offset in cases:
        pattern_short = alternating_sign_word(m, letter)
        pattern_long = alternating_sign_word(m + 1, letter)
        for n in range(1, precision + 1):
            expected = (count_prefix_pattern(n, pattern_short)
                        + count_prefix_pattern(n, pattern_long))
            actual = partition_number_or_zero(n - offset)
            if expected != actual:
                disc = {"exponent": n, "expected": expected, "actual": actual,
                        "last_letter": letter}
                wits = _take(p.to_json_dict() for p in enumerate_partitions(n)
                             if parity_blocks(to_frobenius(p)).sign_word.startswith(
                                 (pattern_short, pattern_long)))
                return _report("thm-5.1", params, started, disc, wits)
    return _report("thm-5.1", params, started)


def verify_count_relations(precision=30, max_m=4, max_d=4):
    """Three relations between the count families, all by double enumeration:
    (1) the minus/plus by-blocks difference equals a difference of shifted
    partition numbers, (2) the minus counts shift into plus counts at n + d,
    (3) the by-columns minus/plus difference telescopes into counts one column
    narrower."""
    started = time.perf_counter()
    params = {"precision": precision, "max_m": max_m, "max_d": max_d}

    for m in range(1, max_m + 1):
        lo = (3 * m * m - m) // 2
        hi = (3 * m * m + m) // 2
        for n in range(1, precision + 1):
            expected = count_by_blocks(n, m, MINUS) - count_by_blocks(n, m, PLUS)
            actual = partition_number_or_zero(n - lo) - partition_number_or_zero(n - hi)
            if expected != actual:
                disc = {"item": 1, "exponent": n, "m": m,
                        "expected": expected, "actual": actual}
                return _report("remarks", params, started, disc)

    for d in range(1, max_d + 1):
        for m in range(1, d + 1):
            for n in range(1, precision + 1):
                expected = count_exact(n, d, m, MINUS)
                actual = count_exact(n + d, d, m, PLUS)
                if expected != actual:
                    disc = {"item": 2, "exponent": n, "d": d, "m": m,
                            "expected": expected, "actual": actual}
                    return _report("remarks", params, started, disc)

    for d in range(1, max_d + 1):
        for n in range(1, precision + 1):
            expected = count_by_columns(n, d, MINUS) - count_by_columns(n, d, PLUS)
            actual = 0
            j = 1
            while n - 2 * d * j + 1 >= 0:
                actual += count_all_columns(n - 2 * d * j + 1, d - 1)
                j += 1
            if expected != actual:
                disc = {"item": 3, "exponent": n, "d": d,
                        "expected": expected, "actual": actual}
                return _report("remarks", params, started, disc)

    return _report("remarks", params, started)


def verify_partition_unity(precision=30):
    """Every nonempty partition is counted once over all (d, m, sign) classes."""
    started = time.perf_counter()
    params = {"precision": precision}
    for n in range(1, precision + 1):
        total = 0
        for d in range(1, isqrt(n) + 1):
            for m in range(1, d + 1):
                for sign in SIGNS:
                    total += count_exact(n, d, m, sign)
        if total != partition_number(n):
            disc = {"exponent": n, "expected": total, "actual": partition_number(n)}
            return _report("partition-unity", params, started, disc)
    return _report("partition-unity", params, started)


# ----------------------------------------------------------------------
# grid sweeps and the target registry
# ----------------------------------------------------------------------


def _pick(overrides, key):
    value = (overrides or {}).get(key)
    return value


def _sweep_thm_main(config, overrides):
    d_fix = _pick(overrides, "d")
    m_fix = _pick(overrides, "m")
    sign_fix = _pick(overrides, "sign")
    if d_fix is not None and m_fix is not None and m_fix > d_fix:
        raise ValueError(f"m={m_fix} exceeds d={d_fix}")
    reports = []
    for d in ([d_fix] if d_fix is not None else range(1, config.max_d + 1)):
        ms = [m_fix] if m_fix is not None else range(1, min(d, config.max_m) + 1)
        for m in ms:
            if m > d:
                continue
            for sign in ([sign_fix] if sign_fix else SIGNS):
                reports.append(verify_exact_series(d, m, sign, config.precision))
    return reports


def _sweep_thm12(config, overrides):
    m_fix = _pick(overrides, "m")
    sign_fix = _pick(overrides, "sign")
    reports = []
    for m in ([m_fix] if m_fix is not None else range(1, config.max_m + 1)):
        for sign in ([sign_fix] if sign_fix else SIGNS):
            reports.append(verify_block_series(m, sign, config.precision))
    return reports


def _sweep_thm14(config, overrides):
    d_fix = _pick(overrides, "d")
    sign_fix = _pick(overrides, "sign")
    reports = []
    for d in ([d_fix] if d_fix is not None else range(1, config.max_d + 1)):
        for sign in ([sign_fix] if sign_fix else SIGNS):
            reports.append(verify_column_series(d, sign, config.precision))
    return reports


def _sweep_cor13(config, overrides):
    m_fix = _pick(overrides, "m")
    return [verify_euler_expansion(m, config.precision)
            for m in ([m_fix] if m_fix is not None else range(1, config.max_m + 1))]


def _sweep_cor15(config, overrides):
    d_fix = _pick(overrides, "d")
    return [verify_qbinomial_column_sum(d)
            for d in ([d_fix] if d_fix is not None
                      else range(1, config.column_sum_max_d + 1))]


def _sweep_lemma22(config, overrides):
    s_fix = _pick(overrides, "s")
    t_fix = _pick(overrides, "t")
    r_fix = _pick(overrides, "r")
    if s_fix is not None and t_fix is not None and not s_fix > t_fix:
        raise ValueError(f"need s > t, got s={s_fix}, t={t_fix}")
    pairs = []
    for s in range(1, config.max_path_length + 1):
        for t in range(0, s):
            if s + t > config.max_path_length:
                continue
            if s_fix is not None and s != s_fix:
                continue
            if t_fix is not None and t != t_fix:
                continue
            pairs.append((s, t))
    reports = []
    for s, t in pairs:
        for r in ([r_fix] if r_fix is not None else range(config.max_r + 1)):
            reports.append(verify_ballot_gf(s, t, r))
    return reports


def _sweep_lemma24(config, overrides):
    s_fix = _pick(overrides, "s")
    r_fix = _pick(overrides, "r")
    reports = []
    for s in ([s_fix] if s_fix is not None else range(1, config.max_s + 1)):
        for r in ([r_fix] if r_fix is not None else range(config.max_r + 1)):
            reports.append(verify_dyck_gf(s, r))
    return reports


def _sweep_cor25(config, overrides):
    s_fix = _pick(overrides, "s")
    r_fix = _pick(overrides, "r")
    reports = []
    for s in ([s_fix] if s_fix is not None else range(1, config.max_s + 1)):
        for r in ([r_fix] if r_fix is not None else range(config.max_r + 1)):
            reports.append(verify_exact_mark_gf(s, r))
    return reports


def _sweep_prop39(config, overrides):
    reports = []
    for d in range(1, config.pp_max_d + 1):
        for beta in compositions(d):
            reports.append(verify_poset_partition_gf(beta, config.pp_precision))
    return reports


def _sweep_prop310(config, overrides):
    reports = []
    for d in range(1, config.word_path_max_d + 1):
        for beta in compositions(d):
            reports.append(verify_word_path_gf(beta))
    return reports


def _sweep_thm51(config, overrides):
    m_fix = _pick(overrides, "m")
    return [verify_prefix_counts(m, config.prefix_precision)
            for m in ([m_fix] if m_fix is not None
                      else range(1, config.prefix_max_m + 1))]


def _sweep_remarks(config, overrides):
    return [verify_count_relations(config.relations_precision,
                                   config.relations_max_m, config.relations_max_d)]


def _sweep_unity(config, overrides):
    return [verify_partition_unity(config.unity_precision)]


TARGETS = {
    "thm-main": _sweep_thm_main,
    "thm-1.2": _sweep_thm12,
    "thm-1.4": _sweep_thm14,
    "cor-1.3": _sweep_cor13,
    "cor-1.5": _sweep_cor15,
    "lemma-2.2": _sweep_lemma22,
    "lemma-2.4": _sweep_lemma24,
    "cor-2.5": _sweep_cor25,
    "prop-3.9": _sweep_prop39,
    "prop-3.10": _sweep_prop310,
    "thm-5.1": _sweep_thm51,
    "remarks": _sweep_remarks,
    "partition-unity": _sweep_unity,
}


def run_reports(targets="all", config=None, overrides=None, jobs=1):
    """Run the requested verification targets and return the reports in
    canonical (target, parameters) order regardless of scheduling."""
    config = config or GridConfig()
    if isinstance(targets, str):
        targets = [targets]
    names = list(TARGETS) if "all" in targets else list(targets)
    unknown = [n for n in names if n not in TARGETS]
    if unknown:
        raise ValueError(f"unknown verification targets: {unknown}; "
                         f"known: {sorted(TARGETS)}")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda n: TARGETS[n](config, overrides), names))
    else:
        chunks = [TARGETS[n](config, overrides) for n in names]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.target, json.dumps(r.parameters, sort_keys=True)))
    return reports
