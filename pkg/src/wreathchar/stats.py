"""Divisibility censuses (exact / sampled / certificate-only), exact uniform
sampling of multipartitions, and finite-N checks of the counting asymptotics.

Randomness: a single 64-bit seed feeds a counter-based SHA-256 stream; the
stream for sample i is keyed by (seed, i), so results are independent of
worker count and evaluation order.  Sampled and certificate censuses draw
identical (lambda, mu) streams for equal (n, seed), which makes seed-paired
soundness comparisons exact.
"""

from __future__ import annotations

import hashlib
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from statistics import NormalDist
from typing import Optional

from .base_group import GroupData
from .congruence import mash_canonical, require_prime, zero_certificate
from .partitions import (
    MultiPartition,
    _completion_tables,
    _count_array,
    count_multipartitions,
    unrank_multipartition,
)
from .wreath_chars import DEFAULT_CELL_BUDGET, character_table, mn_character

HR_COEFF = 2.0 * math.pi / math.sqrt(6.0)
DEFAULT_CONFIDENCE = 0.99

_MASK64 = (1 << 64) - 1
_DOMAIN = b"wreathchar.v1"


class CounterStream:
    """Deterministic byte stream: block c is SHA-256(domain, seed, index, c)."""

    def __init__(self, seed: int, index: int):
        self._prefix = _DOMAIN + (seed & _MASK64).to_bytes(8, "big") + (index & _MASK64).to_bytes(8, "big")
        self._counter = 0
        self._buf = b""

    def take(self, nbytes: int) -> bytes:
        while len(self._buf) < nbytes:
            block = hashlib.sha256(self._prefix + self._counter.to_bytes(8, "big")).digest()
            self._counter += 1
            self._buf += block
        out, self._buf = self._buf[:nbytes], self._buf[nbytes:]
        return out

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by masked rejection; exact for any size."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        bits = (bound - 1).bit_length()
        nbytes = (bits + 7) // 8
        mask = (1 << bits) - 1
        while True:
            r = int.from_bytes(self.take(nbytes), "big") & mask
            if r < bound:
                return r


def random_multipartition(n: int, k: int, stream: CounterStream) -> MultiPartition:
    """Exactly uniform k-multipartition of n: a uniform rank, unranked."""
    return unrank_multipartition(n, k, stream.below(count_multipartitions(n, k)))


def wilson_interval(hits: int, trials: int, confidence: float) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    z = NormalDist().inv_cdf(0.5 + confidence / 2.0)
    phat = hits / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = phat + z2 / (2.0 * trials)
    spread = z * math.sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials))
    return max(0.0, (center - spread) / denom), min(1.0, (center + spread) / denom)


def ln_big(x: int) -> float:
    """Natural log of a positive big integer: top 128 bits plus a power of 2.

    Relative error is a few ulps, far inside the 10-significant-digit
    requirement for the asymptotic ratios.
    """
    if x <= 0:
        raise ValueError("x must be positive")
    shift = max(0, x.bit_length() - 128)
    return math.log(x >> shift) + shift * math.log(2.0)


# ---------------------------------------------------------------------------
# reports

CSV_COLUMNS = (
    "mode",
    "group",
    "n",
    "p",
    "samples",
    "divisible",
    "evaluated",
    "proportion",
    "ci_low",
    "ci_high",
    "seed",
    "coverage",
)


@dataclass(frozen=True)
class CensusReport:
    mode: str
    group: str
    n: int
    p: int
    cells_evaluated: int
    divisible_count: int
    proportion: Fraction
    samples: Optional[int] = None
    ci_low: Optional[float] = None
    ci_high: Optional[float] = None
    seed: Optional[int] = None
    coverage: Optional[Fraction] = None

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "group": self.group,
            "n": self.n,
            "p": self.p,
            "samples": self.samples,
            "divisible": self.divisible_count,
            "evaluated": self.cells_evaluated,
            "proportion": f"{self.proportion.numerator}/{self.proportion.denominator}",
            "proportion_decimal": float(self.proportion),
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
            "seed": self.seed,
            "coverage": (
                None
                if self.coverage is None
                else f"{self.coverage.numerator}/{self.coverage.denominator}"
            ),
        }

    def csv_row(self) -> list[str]:
        blank = ""
        return [
            self.mode,
            self.group,
            str(self.n),
            str(self.p),
            blank if self.samples is None else str(self.samples),
            str(self.divisible_count),
            str(self.cells_evaluated),
            repr(float(self.proportion)),
            blank if self.ci_low is None else repr(self.ci_low),
            blank if self.ci_high is None else repr(self.ci_high),
            blank if self.seed is None else str(self.seed),
            blank if self.coverage is None else repr(float(self.coverage)),
        ]


# ---------------------------------------------------------------------------
# censuses


def exact_census(
    group: GroupData,
    n: int,
    p: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    workers: int = 1,
) -> CensusReport:
    """Build the full table and count entries divisible by p (exact rational)."""
    require_prime(p)
    table = character_table(group, n, cell_budget=cell_budget, workers=workers)
    cells = 0
    divisible = 0
    for row in table.values:
        for v in row:
            cells += 1
            if v % p == 0:
                divisible += 1
    return CensusReport(
        mode="exact",
        group=group.name,
        n=n,
        p=p,
        cells_evaluated=cells,
        divisible_count=divisible,
        proportion=Fraction(divisible, cells),
    )


def _draw_pair(n: int, k: int, total: int, seed: int, index: int):
    stream = CounterStream(seed, index)
    lam = unrank_multipartition(n, k, stream.below(total))
    mu = unrank_multipartition(n, k, stream.below(total))
    return lam, mu


def _sampled_chunk(args) -> int:
    group, n, p, seed, start, stop = args
    total = count_multipartitions(n, group.k)
    hits = 0
    for i in range(start, stop):
        lam, mu = _draw_pair(n, group.k, total, seed, i)
        if mn_character(group, lam, mu) % p == 0:
            hits += 1
    return hits


def sampled_census(
    group: GroupData,
    n: int,
    p: int,
    samples: int,
    seed: int,
    workers: int = 1,
    confidence: float = DEFAULT_CONFIDENCE,
    value_cache: Optional[dict] = None,
) -> CensusReport:
    """Uniform (lambda, mu) pairs, exact evaluation mod p, Wilson interval.

    value_cache (optional, single-process only) maps (lambda, mu) tuple pairs
    to already-computed exact values and is filled as a side effect; it only
    avoids recomputation and cannot change the report.
    """
    require_prime(p)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    total = count_multipartitions(n, group.k)
    _completion_tables(n, group.k)  # built before any fork, shared by workers
    if workers > 1:
        bounds = _chunk_bounds(samples, workers)
        jobs = [(group, n, p, seed, a, b) for a, b in bounds]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_sampled_chunk, jobs))
    else:
        hits = 0
        for i in range(samples):
            lam, mu = _draw_pair(n, group.k, total, seed, i)
            if value_cache is None:
                value = mn_character(group, lam, mu)
            else:
                key = (lam.as_tuples(), mu.as_tuples())
                value = value_cache.get(key)
                if value is None:
                    value = mn_character(group, lam, mu)
                    value_cache[key] = value
            if value % p == 0:
                hits += 1
    low, high = wilson_interval(hits, samples, confidence)
    return CensusReport(
        mode="sampled",
        group=group.name,
        n=n,
        p=p,
        cells_evaluated=samples,
        divisible_count=hits,
        proportion=Fraction(hits, samples),
        samples=samples,
        ci_low=low,
        ci_high=high,
        seed=seed,
    )


def _certificate_chunk(args) -> int:
    k, n, p, seed, start, stop = args
    total = count_multipartitions(n, k)
    hits = 0
    for i in range(start, stop):
        lam, mu = _draw_pair(n, k, total, seed, i)
        if zero_certificate(lam, mash_canonical(mu, p)):
            hits += 1
    return hits


def certificate_census(
    group_k: int,
    n: int,
    p: int,
    samples: int,
    seed: int,
    workers: int = 1,
) -> CensusReport:
    """Certificate-only census: evaluates predicted divisibility, never
    characters, so it scales to n in the thousands.  Coverage is a certified
    lower bound on the true divisible proportion."""
    require_prime(p)
    if group_k < 1:
        raise ValueError("group_k must be >= 1")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    _completion_tables(n, group_k)
    if workers > 1:
        bounds = _chunk_bounds(samples, workers)
        jobs = [(group_k, n, p, seed, a, b) for a, b in bounds]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(_certificate_chunk, jobs))
    else:
        hits = _certificate_chunk((group_k, n, p, seed, 0, samples))
    frac = Fraction(hits, samples)
    return CensusReport(
        mode="certificate",
        group=f"k={group_k}",
        n=n,
        p=p,
        cells_evaluated=samples,
        divisible_count=hits,
        proportion=frac,
        samples=samples,
        seed=seed,
        coverage=frac,
    )


def _chunk_bounds(total: int, parts: int) -> list[tuple[int, int]]:
    step = (total + parts - 1) // parts
    return [(a, min(a + step, total)) for a in range(0, total, step)]


# ---------------------------------------------------------------------------
# asymptotics


def asymptotic_check(k: int, n: int) -> float:
    """ln p_k(n) / ((2 pi / sqrt 6) * sqrt(k n)); tends to 1 from below."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    return ln_big(count_multipartitions(n, k)) / (HR_COEFF * math.sqrt(k * n))


def _as_fraction(delta) -> Fraction:
    # str() first so a literal like 0.3 means 3/10, not its binary neighbour
    return delta if isinstance(delta, Fraction) else Fraction(str(delta))


def concentration_check(k: int, n: int, delta) -> Fraction:
    """Exact fraction of k-multipartitions with every component size inside
    the open window (n/k (1-delta), n/k (1+delta)); no enumeration, just
    partition counts over size compositions."""
    d = _as_fraction(delta)
    if not 0 < d < 1:
        raise ValueError("delta must be in (0, 1)")
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    lo = Fraction(n, k) * (1 - d)
    hi = Fraction(n, k) * (1 + d)
    counts = _count_array(n, 1)

    def admissible(a: int) -> bool:
        return lo < a < hi

    def rec(i: int, remaining: int) -> int:
        if i == k - 1:
            return counts[remaining] if admissible(remaining) else 0
        sub = 0
        for a in range(remaining + 1):
            if admissible(a):
                sub += counts[a] * rec(i + 1, remaining - a)
        return sub

    return Fraction(rec(0, n), count_multipartitions(n, k))
