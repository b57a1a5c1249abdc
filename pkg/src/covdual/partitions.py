"""Integer partitions as nilpotent orbit labels.

A partition is stored as a weakly decreasing tuple of positive integers.  Orbits
of even orthogonal groups attached to very even partitions carry an extra label
``"I"`` or ``"II"``; every purely combinatorial operation below ignores it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import Iterable, Iterator, Optional

from sympy.utilities.iterables import partitions as _sympy_partitions

LABELS = ("I", "II")
FAMILIES = ("A", "B", "C", "D")


class PartitionError(ValueError):
    """Raised for malformed partitions or impossible partition operations."""


@dataclass(frozen=True, order=False)
class Partition:
    parts: tuple[int, ...] = ()
    label: Optional[str] = None

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x <= 0 for x in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        if self.label is not None:
            if self.label not in LABELS:
                raise PartitionError(f"unknown label {self.label!r}")
            if not _very_even(parts):
                raise PartitionError(f"label on a partition that is not very even: {parts}")

    @classmethod
    def of(cls, parts: Iterable[int], label: Optional[str] = None) -> "Partition":
        """Build from any iterable of nonnegative integers; zeros are dropped and parts sorted."""
        return cls(tuple(sorted((int(x) for x in parts if x), reverse=True)), label)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the canonical text form, e.g. ``"4,4,2,2:I"``; ``""`` or ``"0"`` is the zero partition."""
        text = text.strip()
        label = None
        if ":" in text:
            text, label = text.split(":", 1)
            label = label.strip()
        text = text.strip()
        if text in ("", "0", "()"):
            return cls((), label)
        try:
            parts = tuple(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise PartitionError(f"cannot parse partition {text!r}") from exc
        return cls(parts, label)

    def __str__(self) -> str:
        body = ",".join(str(x) for x in self.parts) if self.parts else "0"
        return body if self.label is None else f"{body}:{self.label}"

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def total(self) -> int:
        return sum(self.parts)

    def unlabelled(self) -> "Partition":
        return self if self.label is None else Partition(self.parts)

    def with_label(self, label: Optional[str]) -> "Partition":
        return Partition(self.parts, label)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)


def _very_even(parts: tuple[int, ...]) -> bool:
    return all(x % 2 == 0 and parts.count(x) % 2 == 0 for x in set(parts))


def as_partition(p) -> Partition:
    if isinstance(p, Partition):
        return p
    if isinstance(p, str):
        return Partition.parse(p)
    return Partition.of(p)


def transpose(p) -> Partition:
    p = as_partition(p)
    if not p.parts:
        return Partition()
    return Partition(tuple(sum(1 for x in p.parts if x > i) for i in range(p.parts[0])))


def add(*ps) -> Partition:
    """Componentwise sum, padding shorter partitions with zeros (induction of orbits)."""
    ps = [as_partition(p) for p in ps]
    width = max((len(p) for p in ps), default=0)
    return Partition(tuple(sum(p.parts[i] for p in ps if i < len(p)) for i in range(width)))


def union(*ps) -> Partition:
    """Multiset union of the parts."""
    return Partition.of(x for p in ps for x in as_partition(p).parts)


def dominates(p, q) -> bool:
    """True iff p >= q in the dominance order; both must have the same total."""
    p, q = as_partition(p), as_partition(q)
    if p.total != q.total:
        raise PartitionError(f"dominance needs equal totals: {p} vs {q}")
    sp = list(accumulate(p.parts))
    sq = list(accumulate(q.parts))
    for i in range(max(len(sp), len(sq))):
        a = sp[i] if i < len(sp) else p.total
        b = sq[i] if i < len(sq) else q.total
        if a < b:
            return False
    return True


def strictly_dominates(p, q) -> bool:
    p, q = as_partition(p), as_partition(q)
    return p.parts != q.parts and dominates(p, q)


def comparable(p, q) -> bool:
    return dominates(p, q) or dominates(q, p)


def s_part(m: int, z: int) -> Partition:
    """The partition (z, ..., z, b) of m with a copies of z, where m = a*z + b and 0 <= b < z."""
    if z <= 0 or m < 0:
        raise PartitionError("s_part needs m >= 0 and z >= 1")
    a, b = divmod(m, z)
    return Partition.of([z] * a + [b])


def plus_op(p) -> Partition:
    """Add one to the largest part (the empty partition becomes (1))."""
    p = as_partition(p)
    if not p.parts:
        return Partition((1,))
    return Partition((p.parts[0] + 1,) + p.parts[1:])


def minus_op(p) -> Partition:
    """Subtract one from the smallest part, dropping it if it vanishes."""
    p = as_partition(p)
    if not p.parts:
        raise PartitionError("minus_op on the zero partition")
    return Partition.of(p.parts[:-1] + (p.parts[-1] - 1,))


def is_very_even(p) -> bool:
    p = as_partition(p)
    return bool(p.parts) and _very_even(p.parts)


def is_X_partition(p, family: str) -> bool:
    p = as_partition(p)
    if family == "A":
        return True
    if family == "C":
        return all(p.multiplicity(x) % 2 == 0 for x in set(p.parts) if x % 2 == 1)
    even_ok = all(p.multiplicity(x) % 2 == 0 for x in set(p.parts) if x % 2 == 0)
    if family == "B":
        return even_ok and p.total % 2 == 1
    if family == "D":
        return even_ok and p.total % 2 == 0
    raise PartitionError(f"unknown partition family {family!r}")


def _check_total(total: int, family: str):
    if family == "B" and total % 2 == 0:
        raise PartitionError(f"no B-partition of even total {total}")
    if family in ("C", "D") and total % 2 == 1:
        raise PartitionError(f"no {family}-partition of odd total {total}")


def collapse(p, family: str) -> Partition:
    """The largest ``family``-partition dominated by p.

    Greedy procedure: while some bad part (odd parts for C, even parts for B/D) has odd
    multiplicity, take the largest such part q, lower its last occurrence by one and raise the
    first later part that is smaller than q - 1.
    """
    p = as_partition(p)
    if family == "A":
        return p.unlabelled()
    _check_total(p.total, family)
    bad_parity = 1 if family == "C" else 0
    parts = list(p.parts)
    while True:
        bad = [x for x in set(parts) if x % 2 == bad_parity and parts.count(x) % 2 == 1]
        if not bad:
            break
        q = max(bad)
        i = len(parts) - 1 - parts[::-1].index(q)
        parts[i] -= 1
        for j in range(i + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = sorted((x for x in parts if x), reverse=True)
    return Partition(tuple(parts))


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order (largest first)."""
    out = []
    for d in _sympy_partitions(n):
        if n == 0:
            out.append(Partition())
            continue
        out.append(Partition(tuple(sorted((k for k, m in d.items() for _ in range(m)), reverse=True))))
    out.sort(key=lambda q: q.parts, reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def X_partitions_of(n: int, family: str) -> tuple[Partition, ...]:
    if family != "A" and ((family == "B") != (n % 2 == 1)):
        return ()
    return tuple(q for q in partitions_of(n) if is_X_partition(q, family))


def self_dual(q, family: str) -> Partition:
    """The order-reversing map q -> (q^T)_X on X-partitions."""
    return collapse(transpose(q), family)


@lru_cache(maxsize=None)
def special_partitions(n: int, family: str) -> frozenset:
    """Special X-partitions of n: the image of q -> (q^T)_X over all X-partitions q of n."""
    return frozenset(self_dual(q, family) for q in X_partitions_of(n, family))


def is_special(p, family: str) -> bool:
    p = as_partition(p).unlabelled()
    return p in special_partitions(p.total, family)


def maximal_elements(items: Iterable[Partition]) -> list[Partition]:
    """Dominance-maximal members of a collection of partitions with a common total."""
    uniq = sorted({as_partition(x).unlabelled() for x in items}, key=lambda q: q.parts, reverse=True)
    return [q for q in uniq if not any(r != q and dominates(r, q) for r in uniq)]


def regular(n: int) -> Partition:
    return Partition.of([n])


def zero_orbit(n: int) -> Partition:
    return Partition.of([1] * n)
