"""The mod-p equivalence on class labels ("mashing") and the t-core zero
certificate it powers.

Two class labels related by trading one part mp for p parts m have congruent
character-table columns mod p.  Canonical forms merge maximally: within each
component, p equal parts of size m become one part of size mp until no part
repeats p or more times.  If every component of lambda is a t-core for t the
largest part of the canonical form, the rimhook sum for the canonical column
is empty, so the exact value there is zero and the original entry is
divisible by p.  The certificate is sound but deliberately not complete.
"""

from __future__ import annotations

from bisect import insort
from collections import Counter
from dataclasses import dataclass

from .partitions import MultiPartition, is_t_core


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


@dataclass(frozen=True)
class MashedClass:
    """A class label together with its merge-maximal mod-p canonical form."""

    original: MultiPartition
    prime: int
    canonical: MultiPartition
    largest_part: int


def _mash_component(parts: tuple[int, ...], p: int) -> tuple[int, ...]:
    # Base-p carry on the multiplicity vector: sizes processed in increasing
    # order, so each size is finalized exactly once (carries land at s*p > s).
    sizes = Counter(parts)
    order = sorted(sizes)
    out = []
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        c = sizes[s]
        r, q = c % p, c // p
        out.extend([s] * r)
        if q:
            t = s * p
            if t in sizes:
                sizes[t] += q
            else:
                sizes[t] = q
                insort(order, t)
    out.sort(reverse=True)
    return tuple(out)


def mash_canonical(mu: MultiPartition, p: int) -> MashedClass:
    """Merge-maximal representative of mu's equivalence class mod p."""
    require_prime(p)
    canon = tuple(_mash_component(parts, p) for parts in mu.as_tuples())
    largest = max((comp[0] for comp in canon if comp), default=0)
    return MashedClass(
        original=mu,
        prime=p,
        canonical=MultiPartition.from_tuples(canon),
        largest_part=largest,
    )


def sim_p_equivalent(mu: MultiPartition, nu: MultiPartition, p: int) -> bool:
    """True iff mu and nu share the canonical mashed form."""
    if mu.k != nu.k:
        raise ValueError(f"component counts differ: {mu.k} vs {nu.k}")
    if mu.total != nu.total:
        raise ValueError(f"totals differ: {mu.total} vs {nu.total}")
    return mash_canonical(mu, p).canonical == mash_canonical(nu, p).canonical


def zero_certificate(lam: MultiPartition, mashed: MashedClass) -> bool:
    """True iff the largest mashed part t >= 1 and every component of lambda
    is a t-core, in which case chi^lambda vanishes on the canonical class
    (no rimhook of length t fits anywhere, and the value is order-free)."""
    if lam.k != mashed.canonical.k:
        raise ValueError(f"component counts differ: {lam.k} vs {mashed.canonical.k}")
    if lam.total != mashed.canonical.total:
        raise ValueError(f"totals differ: {lam.total} vs {mashed.canonical.total}")
    t = mashed.largest_part
    if t < 1:
        return False
    return all(is_t_core(comp, t) for comp in lam.components)


def predicted_divisible(group, lam: MultiPartition, mu: MultiPartition, p: int) -> bool:
    """Sound one-sided test: True implies p divides chi^lambda_mu."""
    if lam.k != group.k or mu.k != group.k:
        raise ValueError(f"multipartitions must have k={group.k} components")
    if lam.total != mu.total:
        raise ValueError(f"totals differ: {lam.total} vs {mu.total}")
    return zero_certificate(lam, mash_canonical(mu, p))
