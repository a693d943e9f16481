"""Type-D Weyl group census built on the B_N = Z/2Z wr S_N engine.

D_N (signed permutation matrices with an even number of -1 entries) is the
index-2 kernel of the sign-product character psi, so Clifford theory labels
its irreducibles by unordered pairs {lambda, mu} of partitions: pairs with
lambda != mu restrict irreducibly, diagonal pairs split in two.  The census
here covers the sub-table whose rows are the nonsplit restrictions and whose
columns are whole B_N classes inside D_N; values there equal B_N values.
Split-class corrections are out of scope, so every report carries a coverage
fraction (a lower bound: it treats each covered B_N class as one column of
the full D_N table, whose column count equals the total irrep count)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .base_group import builtin
from .congruence import require_prime
from .partitions import (
    MultiPartition,
    _completion_tables,
    count_multipartitions,
    count_partitions,
    multipartitions_of,
    unrank_multipartition,
)
from .stats import CensusReport, CounterStream, wilson_interval, DEFAULT_CONFIDENCE
from .wreath_chars import DEFAULT_CELL_BUDGET, CellBudgetExceeded, character_column, mn_character


def bn_class_in_dn(mu: MultiPartition) -> bool:
    """True iff the B_N class mu lies inside D_N: psi(mu) = (-1)^(#parts of
    mu_2) = 1, since each cycle with product -1 carries an odd sign count."""
    if mu.k != 2:
        raise ValueError("type D needs 2-multipartition labels")
    return len(mu.components[1].parts) % 2 == 0


def psi_value(mu: MultiPartition) -> int:
    """The sign-product character on the class mu of B_N."""
    if mu.k != 2:
        raise ValueError("type D needs 2-multipartition labels")
    return -1 if len(mu.components[1].parts) % 2 else 1


@dataclass(frozen=True)
class DnIrrepCensus:
    nonsplit: int
    split_halves: int

    @property
    def total(self) -> int:
        return self.nonsplit + self.split_halves


def dn_irrep_census(n: int) -> DnIrrepCensus:
    """Irreducible counts for D_N: (p_2(n) - p(n/2))/2 nonsplit pairs plus
    2 p(n/2) split halves for even n; p_2(n)/2 and 0 for odd n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p2 = count_multipartitions(n, 2)
    if n % 2:
        assert p2 % 2 == 0
        return DnIrrepCensus(nonsplit=p2 // 2, split_halves=0)
    diag = count_partitions(n // 2)
    return DnIrrepCensus(nonsplit=(p2 - diag) // 2, split_halves=2 * diag)


@lru_cache(maxsize=None)
def _partitions_with_parts(m: int, r: int, max_part: int) -> int:
    """Partitions of m into exactly r parts, each <= max_part."""
    if m == 0:
        return 1 if r == 0 else 0
    if r == 0 or max_part == 0:
        return 0
    # first part equals max_part, or all parts <= max_part - 1
    out = _partitions_with_parts(m, r, max_part - 1)
    if m >= max_part:
        out += _partitions_with_parts(m - max_part, r - 1, max_part)
    return out


def _even_part_count(m: int) -> int:
    return sum(_partitions_with_parts(m, r, m) for r in range(0, m + 1, 2))


def dn_half_classes_property(n: int) -> Fraction:
    """Exact fraction of B_N classes lying inside D_N; always >= 1/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    inside = sum(
        count_partitions(a) * _even_part_count(n - a) for a in range(n + 1)
    )
    return Fraction(inside, count_multipartitions(n, 2))


def nonsplit_rows(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """One representative per unordered pair {lambda, mu}, lambda != mu: the
    lexicographically smaller of the two orderings."""
    rows = []
    for mp in multipartitions_of(n, 2):
        swapped = (mp[1], mp[0])
        if mp < swapped:
            rows.append(mp)
    return rows


def dn_restricted_census(
    n: int,
    p: int,
    mode: str = "exact",
    samples: int | None = None,
    seed: int | None = None,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    confidence: float = DEFAULT_CONFIDENCE,
) -> CensusReport:
    """Divisibility census over the determined D_N sub-table.

    exact: every (nonsplit row, D_N column) cell via the column recursion.
    sampled: uniform cells, rows by rejection on ordered pairs (reject the
    diagonal), columns by rejection on psi = 1; needs samples and seed.
    """
    require_prime(p)
    group = builtin("Z2")
    census = dn_irrep_census(n)
    dn_cols = [mp for mp in multipartitions_of(n, 2) if len(mp[1]) % 2 == 0]
    coverage = Fraction(census.nonsplit * len(dn_cols), census.total * census.total)
    if mode == "exact":
        rows = nonsplit_rows(n)
        if len(rows) * len(dn_cols) > cell_budget:
            raise CellBudgetExceeded(
                f"sub-table needs {len(rows) * len(dn_cols)} cells, budget is {cell_budget}"
            )
        hits = 0
        cells = 0
        for mu in dn_cols:
            col = character_column(group, n, mu)
            for lam in rows:
                cells += 1
                if col.get(lam, 0) % p == 0:
                    hits += 1
        return CensusReport(
            mode="dn-exact",
            group="D",
            n=n,
            p=p,
            cells_evaluated=cells,
            divisible_count=hits,
            proportion=Fraction(hits, cells),
            coverage=coverage,
        )
    if mode != "sampled":
        raise ValueError(f"mode must be 'exact' or 'sampled', got {mode!r}")
    if samples is None or seed is None:
        raise ValueError("sampled mode needs samples and seed")
    total = count_multipartitions(n, 2)
    _completion_tables(n, 2)
    hits = 0
    for i in range(samples):
        stream = CounterStream(seed, i)
        while True:  # ordered pair, diagonal rejected: uniform on unordered pairs
            lam = unrank_multipartition(n, 2, stream.below(total))
            if lam.components[0] != lam.components[1]:
                break
        while True:  # uniform over B_N classes inside D_N
            mu = unrank_multipartition(n, 2, stream.below(total))
            if bn_class_in_dn(mu):
                break
        if mn_character(group, lam, mu) % p == 0:
            hits += 1
    low, high = wilson_interval(hits, samples, confidence)
    return CensusReport(
        mode="dn-sampled",
        group="D",
        n=n,
        p=p,
        cells_evaluated=samples,
        divisible_count=hits,
        proportion=Fraction(hits, samples),
        samples=samples,
        ci_low=low,
        ci_high=high,
        seed=seed,
        coverage=coverage,
    )
