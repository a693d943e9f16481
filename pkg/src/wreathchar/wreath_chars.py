"""Exact character engine for G wr S_N.

Irreducible values come from the wreath Murnaghan-Nakayama recursion:
flatten the class label mu into (length, class) pairs (component index
ascending, part length descending), then peel rimhooks of each length from
the components of lambda; a hook placed in component q while consuming a
part of mu_j contributes a factor table[q][j], and each decomposition is
signed by (-1)^height.  Permutation-module values come from an independent
row-decomposition DP.  The two are linked by Kostka-product multiplicities,
which the acceptance suite checks cell by cell.

Component i of every multipartition is paired with row i of the group table;
class j of G is column j.  All arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterable

from .base_group import GroupData
from .partitions import (
    MultiPartition,
    Partition,
    _strip_removals,
    count_multipartitions,
    multipartitions_of,
    syt_count,
)

DEFAULT_CELL_BUDGET = 50_000_000


class CellBudgetExceeded(RuntimeError):
    """Raised when a full-table request would exceed the configured cell budget."""


def _check_query(group: GroupData, lam: MultiPartition, mu: MultiPartition):
    if lam.k != group.k or mu.k != group.k:
        raise ValueError(f"multipartitions must have k={group.k} components")
    if lam.total != mu.total:
        raise ValueError(f"totals differ: |lambda|={lam.total}, |mu|={mu.total}")


def flatten_class(mu: Iterable[tuple[int, ...]]) -> tuple[tuple[int, int], ...]:
    """Canonical (length, class) sequence: component ascending, length descending."""
    return tuple((length, j) for j, comp in enumerate(mu) for length in comp)


# ---------------------------------------------------------------------------
# class sizes


def class_size(group: GroupData, mu: MultiPartition) -> int:
    """Size of the conjugacy class of G wr S_n labelled by mu.

    |class| = |G|^n n! / prod_{i,l} ( (l * z_i)^{m_il} * m_il! )  where m_il
    is the multiplicity of part l in component i; the division is exact.
    """
    if mu.k != group.k:
        raise ValueError(f"class label needs k={group.k} components")
    n = mu.total
    denom = 1
    for i, comp in enumerate(mu.components):
        z = group.centralizer_orders[i]
        for length, m in Counter(comp.parts).items():
            denom *= (length * z) ** m * factorial(m)
    num = group.order**n * factorial(n)
    assert num % denom == 0
    return num // denom


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama values


def _mn_rec(lam, pos, seq, table, k, memo):
    if pos == len(seq):
        return 1
    key = (lam, pos)
    cached = memo.get(key)
    if cached is not None:
        return cached
    length, j = seq[pos]
    total = 0
    for q in range(k):
        factor = table[q][j]
        if not factor:
            continue
        comp = lam[q]
        if not comp:
            continue
        for rem, height in _strip_removals(comp, length):
            sub = _mn_rec(lam[:q] + (rem,) + lam[q + 1 :], pos + 1, seq, table, k, memo)
            if sub:
                total += -factor * sub if height & 1 else factor * sub
    memo[key] = total
    return total


def mn_character(group: GroupData, lam: MultiPartition, mu: MultiPartition, _memo=None) -> int:
    """Exact irreducible character value chi^lambda_mu via rimhook peeling.

    _memo keys on (remaining lambda, position in the flattened mu sequence),
    so it may be shared across calls with the same group and mu.
    """
    _check_query(group, lam, mu)
    seq = flatten_class(mu.as_tuples())
    memo = {} if _memo is None else _memo
    return _mn_rec(lam.as_tuples(), 0, seq, group.table, group.k, memo)


def character_column(group: GroupData, n: int, mu_tuples) -> dict:
    """chi^lambda_mu for every lambda of n at once (same recurrence, run
    bottom-up over the flattened sequence); missing keys are zero."""
    k = group.k
    table = group.table
    seq = flatten_class(mu_tuples)
    values = {((),) * k: 1}
    remaining = 0
    for length, j in reversed(seq):
        remaining += length
        factors = [table[q][j] for q in range(k)]
        nxt = {}
        for mp in multipartitions_of(remaining, k):
            acc = 0
            for q in range(k):
                factor = factors[q]
                if not factor or not mp[q]:
                    continue
                for rem, height in _strip_removals(mp[q], length):
                    sub = values.get(mp[:q] + (rem,) + mp[q + 1 :])
                    if sub:
                        acc += -factor * sub if height & 1 else factor * sub
            if acc:
                nxt[mp] = acc
        values = nxt
    return values


# ---------------------------------------------------------------------------
# permutation-module values


def perm_character(group: GroupData, lam: MultiPartition, mu: MultiPartition) -> int:
    """Exact permutation-module character M^lambda_mu.

    Counts functions from rows of mu to rows of lambda filling every
    lambda-row exactly (rows of equal length stay distinguishable, hence the
    binomial choices); a mu_j part landing in component q contributes
    table[q][j].  Rows are processed in decreasing length to prune early.
    """
    _check_query(group, lam, mu)
    table = group.table
    rows = sorted(
        ((q, length) for q, comp in enumerate(lam.as_tuples()) for length in comp),
        key=lambda r: -r[1],
    )
    keys = sorted(Counter((j, length) for j, comp in enumerate(mu.as_tuples()) for length in comp).items())
    kinds = [jl for jl, _ in keys]
    start = tuple(c for _, c in keys)
    memo: dict = {}

    def fill(ri: int, counts: tuple[int, ...]) -> int:
        if ri == len(rows):
            return 1  # sizes match, so no parts can remain here
        key = (ri, counts)
        cached = memo.get(key)
        if cached is not None:
            return cached
        q, length = rows[ri]
        out = 0
        work = list(counts)

        def choose(ki: int, left: int, factor: int):
            nonlocal out
            if left == 0:
                out += factor * fill(ri + 1, tuple(work))
                return
            if ki == len(kinds):
                return
            j, part = kinds[ki]
            avail = work[ki]
            top = min(avail, left // part)
            choose(ki + 1, left, factor)
            value = table[q][j]
            if value and top:
                f = factor
                for c in range(1, top + 1):
                    f = f * value * (avail - c + 1) // c  # running comb(avail, c) * value^c
                    work[ki] = avail - c
                    choose(ki + 1, left - c * part, f)
                work[ki] = avail
        choose(0, length, 1)
        memo[key] = out
        return out

    return fill(0, start)


# ---------------------------------------------------------------------------
# Kostka numbers and the basis change


@lru_cache(maxsize=None)
def _kostka_rec(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    want = content[-1]
    rest = content[:-1]
    total = 0

    def strips(i: int, todo: int, acc: list[int]):
        nonlocal total
        if i == len(shape):
            if todo == 0:
                total += _kostka_rec(tuple(x for x in acc if x), rest)
            return
        lo = shape[i + 1] if i + 1 < len(shape) else 0
        # row i of the smaller shape lies in [max(lo, shape[i]-todo), shape[i]]
        for keep in range(max(lo, shape[i] - todo), shape[i] + 1):
            acc.append(keep)
            strips(i + 1, todo - (shape[i] - keep), acc)
            acc.pop()

    strips(0, want, [])
    return total


def kostka(beta: Partition, gamma: Partition) -> int:
    """K^{beta,gamma} = multiplicity of V^gamma in M^beta, i.e. the number of
    semistandard tableaux of shape gamma and content beta (exact DP).

    Nonzero exactly when gamma dominates beta; K^{beta,beta} = 1.
    """
    if beta.size != gamma.size:
        raise ValueError(f"sizes differ: {beta.size} vs {gamma.size}")
    return _kostka_rec(gamma.parts, beta.parts)


def perm_multiplicity(lam: MultiPartition, eta: MultiPartition) -> int:
    """c(lambda,eta) = prod_i K^{lambda_i,eta_i}; zero when component sizes differ."""
    if lam.k != eta.k:
        raise ValueError(f"component counts differ: {lam.k} vs {eta.k}")
    out = 1
    for lp, ep in zip(lam.components, eta.components):
        if lp.size != ep.size:
            return 0
        out *= kostka(lp, ep)
        if not out:
            return 0
    return out


# ---------------------------------------------------------------------------
# dimensions and the full table


def dimension(group: GroupData, lam: MultiPartition) -> int:
    """dim V^lambda = n!/(a_1! ... a_k!) * prod f^{lambda_i} * prod deg_i^{a_i}."""
    if lam.k != group.k:
        raise ValueError(f"label needs k={group.k} components")
    degrees = group.degrees()
    out = factorial(lam.total)
    for i, comp in enumerate(lam.components):
        out //= factorial(comp.size)
        out *= syt_count(comp)
        out *= degrees[i] ** comp.size
    return out


@dataclass(frozen=True)
class CharTable:
    """Full character table of G wr S_n with canonical row/column labelling."""

    group: GroupData
    n: int
    row_labels: tuple[MultiPartition, ...]
    col_labels: tuple[MultiPartition, ...]
    values: tuple[tuple[int, ...], ...]  # values[row][col]
    class_sizes: tuple[int, ...]

    def value(self, lam: MultiPartition, mu: MultiPartition) -> int:
        return self.values[self.row_labels.index(lam)][self.col_labels.index(mu)]

    def to_json_dict(self) -> dict:
        return {
            "group": self.group.name,
            "n": self.n,
            "row_labels": [[list(p.parts) for p in lab.components] for lab in self.row_labels],
            "col_labels": [[list(p.parts) for p in lab.components] for lab in self.col_labels],
            "class_sizes": [str(s) for s in self.class_sizes],
            "values": [[str(v) for v in row] for row in self.values],
        }

    def write_csv(self, fh):
        import csv
        import json

        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["row_label", "col_label", "value"])
        for lab, row in zip(self.row_labels, self.values):
            rl = json.dumps([list(p.parts) for p in lab.components], separators=(",", ":"))
            for mu, v in zip(self.col_labels, row):
                cl = json.dumps([list(p.parts) for p in mu.components], separators=(",", ":"))
                writer.writerow([rl, cl, str(v)])


def _column_job(args):
    group, n, index, mu_tuples = args
    col = character_column(group, n, mu_tuples)
    labels = multipartitions_of(n, group.k)
    return index, [col.get(lab, 0) for lab in labels]


def character_table(
    group: GroupData,
    n: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    workers: int = 1,
) -> CharTable:
    """All p_k(n)^2 entries, columns computed independently (order-deterministic
    regardless of worker schedule); refuses when the cell count exceeds budget."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    size = count_multipartitions(n, group.k)
    if size * size > cell_budget:
        raise CellBudgetExceeded(
            f"table needs {size}^2 = {size * size} cells, budget is {cell_budget}"
        )
    labels = multipartitions_of(n, group.k)
    jobs = [(group, n, i, mu) for i, mu in enumerate(labels)]
    columns: list[list[int] | None] = [None] * size
    if workers > 1 and size > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for index, col in pool.map(_column_job, jobs, chunksize=max(1, size // (4 * workers))):
                columns[index] = col
    else:
        for job in jobs:
            index, col = _column_job(job)
            columns[index] = col
    mps = tuple(MultiPartition.from_tuples(t) for t in labels)
    values = tuple(tuple(columns[c][r] for c in range(size)) for r in range(size))
    sizes = tuple(class_size(group, mu) for mu in mps)
    return CharTable(
        group=group,
        n=n,
        row_labels=mps,
        col_labels=mps,
        values=values,
        class_sizes=sizes,
    )
