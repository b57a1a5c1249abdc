"""Covering Barbasch-Vogan duality on partitions, and saturation from Levi-type subgroups.

Orbits on both sides are plain ``Partition`` values; which group they live in is carried by
the ``CoverParams`` passed alongside.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .partitions import (
    Partition,
    PartitionError,
    add,
    as_partition,
    collapse,
    dominates,
    is_very_even,
    is_X_partition,
    maximal_elements,
    minus_op,
    plus_op,
    s_part,
    transpose,
    union,
)
from .root_systems import CoverParams, LeviSubset, dual_group_family


class DualityError(ValueError):
    pass


def d_com(p, z: int) -> Partition:
    """Sum of s_part(p_i, z) over the parts of p."""
    p = as_partition(p)
    return add(*(s_part(x, z) for x in p.parts)) if p.parts else Partition()


def _multiset_splits(cols: tuple[int, ...], z: int):
    """All ways to distribute a multiset of columns into z unordered bins."""
    distinct = sorted(set(cols), reverse=True)
    counts = [cols.count(c) for c in distinct]
    seen = set()

    def distribute(k, bins):
        if k == len(distinct):
            key = tuple(sorted(tuple(sorted(b, reverse=True)) for b in bins))
            if key not in seen:
                seen.add(key)
                yield key
            return
        for amounts in _weak_compositions(counts[k], z):
            new = [b + [distinct[k]] * a for b, a in zip(bins, amounts)]
            yield from distribute(k + 1, new)

    yield from distribute(0, [[] for _ in range(z)])


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _brute_force_dcom(parts: tuple[int, ...], z: int) -> Partition:
    cols = transpose(Partition(parts)).parts
    values = set()
    for bins in _multiset_splits(cols, z):
        # (lambda_1^T u ... u lambda_z^T)^T is the partition sum of the lambda_i
        values.add(add(*(Partition.of(b) for b in bins)))
    best = maximal_elements(values)
    if len(best) != 1:
        raise DualityError(f"no unique maximum among splits of {parts}")
    return best[0]


def brute_force_dcom(p, z: int) -> Partition:
    """Dominance maximum of (l_1^T u ... u l_z^T)^T over all z-way splits of the columns of p."""
    if z < 1:
        raise DualityError("z must be positive")
    return _brute_force_dcom(as_partition(p).unlabelled().parts, z)


# ---------------------------------------------------------------------------
# regular orbits


def dual_size(c: CoverParams) -> int:
    """Size of the natural representation of the dual group."""
    fam, r = dual_group_family(c), c.rank
    return {"A": r + 1, "B": 2 * r + 1, "C": 2 * r, "D": 2 * r}[fam]


def group_size(c: CoverParams) -> int:
    r = c.rank
    return {"A": r + 1, "B": 2 * r + 1, "C": 2 * r, "D": 2 * r}[c.family]


def regular_orbit(family: str, rank: int) -> Partition:
    """Regular nilpotent orbit of a classical group of the given type and rank (rank 0 allowed)."""
    if family == "A":
        return Partition.of([rank + 1])
    if family == "B":
        return Partition.of([2 * rank + 1])
    if family == "C":
        return Partition.of([2 * rank])
    if family == "D":
        if rank == 0:
            return Partition()
        return Partition.of([2 * rank - 1, 1])
    raise DualityError(f"no regular partition for {family}")


def regular_dual_orbit(c: CoverParams) -> Partition:
    return regular_orbit(dual_group_family(c), c.rank)


def levi_blocks(S: LeviSubset) -> tuple[list[int], int]:
    """Sizes of the general linear blocks of the Levi of S and the rank of its classical tail.

    Type A returns all blocks (summing to r+1) and tail rank 0.
    """
    t = S.cartan
    r = t.rank
    fam = t.family
    ncoord = r + 1 if fam == "A" else r
    parent = list(range(ncoord))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def join(i, j):
        parent[find(i)] = find(j)

    tail_root = None
    for i in S.indices:
        if fam == "A" or i < r:
            if fam == "D" and i == r - 1:
                join(r - 2, r - 1)
            else:
                join(i - 1, i)
        elif fam in ("B", "C"):
            tail_root = r - 1
        else:  # D, alpha_r = e_{r-1} + e_r
            join(r - 2, r - 1)
    if fam == "D" and {r - 1, r} <= S.indices:
        tail_root = r - 1
    sizes: dict[int, int] = {}
    for i in range(ncoord):
        sizes[find(i)] = sizes.get(find(i), 0) + 1
    tail = 0
    if tail_root is not None:
        tail = sizes.pop(find(tail_root))
    return sorted(sizes.values(), reverse=True), tail


def levi_regular_dual_orbit(c: CoverParams, S: LeviSubset) -> Partition:
    """Saturation to the dual group of the regular orbit of the dual Levi attached to S."""
    blocks, tail = levi_blocks(S)
    fam = dual_group_family(c)
    if fam == "A":
        return Partition.of(blocks)
    pieces = [Partition.of([p, p]) for p in blocks]
    pieces.append(regular_orbit(fam, tail))
    return collapse(union(*pieces), fam)


# ---------------------------------------------------------------------------
# duality


def _validate(p: Partition, family: str, size: int, lenient: bool) -> Partition:
    if p.total != size:
        raise DualityError(f"partition {p} has size {p.total}, expected {size}")
    if not is_X_partition(p, family):
        if not lenient:
            raise DualityError(f"{p} is not a {family}-partition")
        p = collapse(p, family)
    return p


def d_bv(c: CoverParams, o, lenient: bool = False) -> Partition:
    """Covering Barbasch-Vogan dual of a dual-group orbit, as a group orbit."""
    p = as_partition(o)
    fam = c.family
    if fam == "G2":
        raise DualityError("use the g2 module for G2")
    nk = c.n_kappa
    label = p.label
    p = _validate(p.unlabelled(), dual_group_family(c), dual_size(c), lenient)
    if fam == "A":
        return d_com(p, nk)
    if fam == "B":
        q = d_com(p, nk)
        return collapse(plus_op(q) if nk % 2 else q, "B")
    if fam == "C":
        if nk % 2:
            return collapse(minus_op(d_com(p, nk)), "C")
        q = d_com(p, nk // 2)
        if nk % 4 == 2:
            return collapse(minus_op(plus_op(q)), "C")
        return collapse(q, "C")
    q = collapse(d_com(p, nk), "D")
    if label is not None and is_very_even(q):
        same = (c.rank // 2) % 2 == 0
        q = q.with_label(label if same else ("II" if label == "I" else "I"))
    return q


def saturate(components: Sequence[tuple[str, object]], ambient: str, size: Optional[int] = None) -> Partition:
    """Union of the component orbits followed by collapse into the ambient class."""
    parts = [as_partition(p).unlabelled() for _, p in components]
    u = union(*parts) if parts else Partition()
    if size is not None:
        if u.total > size:
            raise DualityError(f"components of total {u.total} exceed ambient size {size}")
        u = union(u, Partition.of([1] * (size - u.total)))
    return collapse(u, ambient)
