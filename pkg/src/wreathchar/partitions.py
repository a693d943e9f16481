"""Integer partitions and k-multipartitions: enumeration, exact counting,
hooks, rimhooks, t-cores, dominance, and rank/unrank in the canonical order.

Canonical orders (used everywhere downstream):
  * partitions of n: descending lexicographic on part tuples,
    e.g. n=4 -> (4), (3,1), (2,2), (2,1,1), (1,1,1,1);
  * k-multipartitions of n: descending lexicographic on the tuple of
    part tuples (component-major), e.g. (n=2, k=2) ->
    ((2),()), ((1,1),()), ((1),(1)), ((),(2)), ((),(1,1)).

All counts are exact Python integers; unranking is a counting DP over the
same order, so ``unrank`` is the inverse of ``rank`` by construction.
"""

from __future__ import annotations

import os
import pickle
from bisect import bisect_right
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

CACHE_DIR_ENV = "WREATHCHAR_CACHE_DIR"


class Partition:
    """A weakly decreasing tuple of positive integers; () is the partition of 0."""

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {p} at index {i}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts
        self.size = sum(parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.parts < other.parts

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __len__(self):
        return len(self.parts)

    def conjugate(self) -> "Partition":
        parts = self.parts
        if not parts:
            return Partition()
        return Partition(sum(1 for p in parts if p > i) for i in range(parts[0]))


class MultiPartition:
    """A k-tuple of partitions; ``total`` is the sum of the component sizes."""

    __slots__ = ("components", "total")

    def __init__(self, components):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        self.components = comps
        self.total = sum(c.size for c in comps)

    @property
    def k(self) -> int:
        return len(self.components)

    def as_tuples(self) -> tuple[tuple[int, ...], ...]:
        return tuple(c.parts for c in self.components)

    @classmethod
    def from_tuples(cls, tuples) -> "MultiPartition":
        return cls([Partition(t) for t in tuples])

    def __eq__(self, other):
        return isinstance(other, MultiPartition) and self.as_tuples() == other.as_tuples()

    def __hash__(self):
        return hash(self.as_tuples())

    def __lt__(self, other):
        return self.as_tuples() < other.as_tuples()

    def __repr__(self):
        return f"MultiPartition({[list(c.parts) for c in self.components]})"


class RimhookRemoval(NamedTuple):
    """One way to remove a border strip: what remains, rows spanned minus one,
    and the strip length (so remainder.size + length = original size)."""

    remainder: Partition
    height: int
    length: int


# ---------------------------------------------------------------------------
# enumeration


def _partition_tuples(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of exactly n with parts <= max_part, descending lex order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


def _prefix_tuples(limit: int, max_part: int) -> Iterator[tuple[int, ...]]:
    """Partitions of any size <= limit with parts <= max_part, descending lex.

    The empty partition sorts last, after every nonempty one: continuing a
    tuple always compares greater than stopping.
    """
    for first in range(min(max_part, limit), 0, -1):
        for rest in _prefix_tuples(limit - first, first):
            yield (first,) + rest
    yield ()


def _multipartition_tuples(n: int, k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    if k == 1:
        for p in _partition_tuples(n):
            yield (p,)
        return
    for first in _prefix_tuples(n, n):
        for rest in _multipartition_tuples(n - sum(first), k - 1):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, descending lex order; length equals count_partitions(n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(t) for t in _partition_tuples(n)]


def enumerate_multipartitions(n: int, k: int) -> Iterator[MultiPartition]:
    """All k-multipartitions of n in the canonical descending-lex order."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    return (MultiPartition.from_tuples(t) for t in _multipartition_tuples(n, k))


@lru_cache(maxsize=None)
def multipartitions_of(n: int, k: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Cached tuple-of-tuples form of the canonical enumeration (engine use)."""
    return tuple(_multipartition_tuples(n, k))


# ---------------------------------------------------------------------------
# counting
#
# p_k arrays satisfy  p_k * E = p_{k-1}  where E is Euler's sparse pentagonal
# series prod(1 - q^m); for k = 1 this is the classical pentagonal recurrence.
# count_multipartitions evaluates the convolution
#   p_k(n) = sum_a p(a) * p_{k-1}(n - a)
# on top of those arrays; both routes are cross-checked in the tests.

_pk_arrays: dict[int, list[int]] = {}


def _pentagonal_pairs(n: int) -> list[tuple[int, int, int]]:
    """(g(j), g(-j), sign) with g(j) = j(3j-1)/2 <= n, sign = (-1)^(j+1)."""
    out = []
    j = 1
    while j * (3 * j - 1) // 2 <= n:
        out.append((j * (3 * j - 1) // 2, j * (3 * j + 1) // 2, -1 if j % 2 == 0 else 1))
        j += 1
    return out


def _count_array(n: int, k: int) -> list[int]:
    """p_k(0..n) as a growing cached array; p_0 is the delta at 0."""
    if k == 0:
        return [1] + [0] * n
    arr = _pk_arrays.setdefault(k, [1])
    if len(arr) > n:
        return arr
    lower = _count_array(n, k - 1) if k > 1 else None
    pent = _pentagonal_pairs(n)
    for m in range(len(arr), n + 1):
        total = lower[m] if k > 1 else (1 if m == 0 else 0)
        for g1, g2, sign in pent:
            if g1 > m:
                break
            acc = arr[m - g1]
            if g2 <= m:
                acc += arr[m - g2]
            total += sign * acc
        arr.append(total)
    return arr


def count_partitions(n: int) -> int:
    """p(n) by the Euler pentagonal-number recurrence, exact."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _count_array(n, 1)[n]


def count_multipartitions(n: int, k: int) -> int:
    """p_k(n) by the convolution p_k(n) = sum_a p(a) p_{k-1}(n-a), exact."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    if k == 1:
        return count_partitions(n)
    p1 = _count_array(n, 1)
    pk1 = _count_array(n, k - 1)
    return sum(p1[a] * pk1[n - a] for a in range(n + 1))


# ---------------------------------------------------------------------------
# hooks, rimhooks, t-cores


def hook_lengths(p: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row (arm + leg + 1)."""
    parts = p.parts
    conj = p.conjugate().parts
    return [
        [(parts[i] - j) + (conj[j] - i) - 1 for j in range(parts[i])]
        for i in range(len(parts))
    ]


def syt_count(p: Partition) -> int:
    """Number of standard Young tableaux of shape p (hook length formula)."""
    prod = 1
    for row in hook_lengths(p):
        for h in row:
            prod *= h
    return factorial(p.size) // prod


def _beta(parts: tuple[int, ...]) -> list[int]:
    """First-column hook lengths parts[i] + (rows - 1 - i), strictly decreasing."""
    rows = len(parts)
    return [parts[i] + rows - 1 - i for i in range(rows)]


@lru_cache(maxsize=None)
def _strip_removals(parts: tuple[int, ...], length: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All (remainder parts, height) for removable border strips of ``length``.

    Works on the beta-set: a strip of length L removable from bead b exists
    iff b - L >= 0 and b - L is free; its height is the number of beads
    strictly between b - L and b.
    """
    beta = _beta(parts)
    bset = set(beta)
    rows = len(parts)
    out = []
    for b in beta:
        nb = b - length
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new = sorted((c if c != b else nb for c in beta), reverse=True)
        rem = tuple(new[i] - (rows - 1 - i) for i in range(rows))
        out.append((tuple(x for x in rem if x > 0), height))
    return tuple(out)


def remove_rimhooks(p: Partition, length: int) -> list[RimhookRemoval]:
    """All distinct rimhooks of exactly ``length`` boxes whose removal leaves a
    valid partition; empty list when none exist."""
    if length < 1:
        raise ValueError("length must be positive")
    return [
        RimhookRemoval(Partition(rem), h, length)
        for rem, h in _strip_removals(p.parts, length)
    ]


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no hook length of p is divisible by t.

    Checked as "no removable rimhook of length exactly t" on the beta-set,
    which is equivalent (a hook divisible by t implies a hook equal to t);
    the tests tie this to the hook_lengths definition exhaustively.
    """
    if t < 1:
        raise ValueError("t must be positive")
    beta = _beta(p.parts)
    bset = set(beta)
    return all(b < t or (b - t) in bset for b in beta)


# ---------------------------------------------------------------------------
# dominance


def _dominates_parts(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def dominates(a: MultiPartition, b: MultiPartition) -> bool:
    """Componentwise dominance: every a_i dominates b_i (zero-padded partial sums)."""
    if a.k != b.k:
        raise ValueError(f"component counts differ: {a.k} vs {b.k}")
    if a.total != b.total:
        raise ValueError(f"totals differ: {a.total} vs {b.total}")
    return all(
        _dominates_parts(x.parts, y.parts) for x, y in zip(a.components, b.components)
    )


# ---------------------------------------------------------------------------
# rank / unrank
#
# The DP table T_t[m][b] counts ways to finish the multipartition from the
# state "m boxes left, current component may still take parts <= b, t more
# components follow".  Base column T_t[m][0] = p_t(m) (component closed);
# recurrence T_t[m][b] = T_t[m][b-1] + T_t[m-b][min(b, m-b)] splits on whether
# the next part equals b.  Rows are monotone in b, so the unranking step is a
# bisect.  Tables are cached in memory and, when WREATHCHAR_CACHE_DIR is set,
# pickled to disk (they dominate memory for n in the thousands).

_tables_mem: dict[tuple[int, int], list[list[list[int]]]] = {}


def _build_tables(n: int, k: int) -> list[list[list[int]]]:
    tables = []
    for t in range(k):
        base = _count_array(n, t)
        tab: list[list[int]] = []
        for m in range(n + 1):
            row = [base[m]]
            for b in range(1, m + 1):
                row.append(row[b - 1] + tab[m - b][min(b, m - b)])
            tab.append(row)
        tables.append(tab)
    return tables


def _completion_tables(n: int, k: int) -> list[list[list[int]]]:
    key = (n, k)
    if key in _tables_mem:
        return _tables_mem[key]
    cache_dir = os.environ.get(CACHE_DIR_ENV)
    path = None
    if cache_dir:
        path = os.path.join(cache_dir, f"unrank_n{n}_k{k}.pkl")
        if os.path.exists(path):
            with open(path, "rb") as fh:
                tables = pickle.load(fh)
            _tables_mem[key] = tables
            return tables
    tables = _build_tables(n, k)
    _tables_mem[key] = tables
    if path:
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "wb") as fh:
            pickle.dump(tables, fh, protocol=pickle.HIGHEST_PROTOCOL)
    return tables


def _lookup(tab: list[list[int]], m: int, b: int) -> int:
    return tab[m][min(b, m)]


def unrank_multipartition(n: int, k: int, index: int) -> MultiPartition:
    """The index-th k-multipartition of n in canonical order (0-based)."""
    total = count_multipartitions(n, k)
    if not 0 <= index < total:
        raise IndexError(f"index {index} out of range [0, {total})")
    tables = _completion_tables(n, k)
    comps = []
    m = n
    for c in range(k):
        tab = tables[k - 1 - c]
        parts = []
        b = m
        while True:
            row = tab[m]
            hi = min(b, m)
            r = row[hi] - 1 - index  # rank from the bottom of this subtree
            s = bisect_right(row, r, 0, hi + 1)
            if s == 0:
                index = row[0] - 1 - r
                break
            block = _lookup(tab, m - s, s)
            index = block - 1 - (r - row[s - 1])
            parts.append(s)
            m -= s
            b = s
        comps.append(tuple(parts))
    return MultiPartition.from_tuples(comps)


def rank_multipartition(mp: MultiPartition) -> int:
    """Position of mp in the canonical enumeration; inverse of unrank."""
    n, k = mp.total, mp.k
    tables = _completion_tables(n, k)
    index = 0
    m = n
    for c, comp in enumerate(mp.components):
        tab = tables[k - 1 - c]
        b = m
        for s in comp.parts:
            index += _lookup(tab, m, b) - _lookup(tab, m, s)
            m -= s
            b = s
        index += _lookup(tab, m, b) - tab[m][0]
    return index
