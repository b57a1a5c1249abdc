"""Truncated induction formulas for classical Weyl groups and the upper bound capD.

A candidate fixes an alcove vertex (a split of the coordinates into a half-integral block of
size m and an integral block of size r - m) and, inside each block, a subsystem made of type A
blocks together with a few self-conjugate "slots" of type B, C or D.  Which slots exist and how
many type A blocks fit is read off from residues of x - y modulo n_alpha.  Each block and slot
carries a partition labelling a special Weyl group representation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional, Sequence

from .duality import DualityError, group_size
from .partitions import (
    Partition,
    as_partition,
    collapse,
    dominates,
    maximal_elements,
    minus_op,
    partitions_of,
    plus_op,
    special_partitions,
    transpose,
    union,
)
from .root_systems import CoverParams, PseudoLevi, compositions, dual_group_family, enumerate_vertex_splits


class CapDError(ValueError):
    pass


@dataclass(frozen=True)
class SpringerValue:
    partition: Partition
    case: str


def _pairs(blocks: Sequence) -> list[Partition]:
    out = []
    for b in blocks:
        bt = transpose(b)
        out.extend([bt, bt])
    return out


def j_induce_A(blocks: Sequence) -> SpringerValue:
    blocks = [as_partition(b) for b in blocks]
    return SpringerValue(transpose(union(*(transpose(b) for b in blocks))), "A")


def j_induce_B(lambda1, middles: Sequence, lambdak, check: bool = True) -> SpringerValue:
    """Ambient B; end blocks carry special C-partitions, the middle blocks are type A."""
    l1, lk = as_partition(lambda1), as_partition(lambdak)
    mids = _pairs(middles)
    first = collapse(transpose(union(transpose(l1), *mids, transpose(collapse(plus_op(lk), "B")))), "B")
    if check:
        second = collapse(transpose(union(transpose(collapse(plus_op(l1), "B")), *mids, transpose(lk))), "B")
        if first != second:
            raise CapDError(f"the two forms of the type B induction differ on {l1}, {list(middles)}, {lk}")
    return SpringerValue(first, "B")


def j_induce_C(lambda1, middles: Sequence, lambdak) -> SpringerValue:
    """Ambient C; lambda1 is a special D-partition and lambdak a special B-partition."""
    l1, lk = as_partition(lambda1), as_partition(lambdak)
    head = collapse(transpose(l1), "D")
    tail = transpose(collapse(minus_op(lk), "C"))
    return SpringerValue(collapse(transpose(union(head, *_pairs(middles), tail)), "C"), "C")


def j_induce_D(lambda1, middles: Sequence, lambdak, check: bool = True) -> SpringerValue:
    """Ambient D with special D-partitions on both ends."""
    l1, lk = as_partition(lambda1).unlabelled(), as_partition(lambdak).unlabelled()
    mids = _pairs(middles)
    first = collapse(transpose(union(transpose(l1), *mids, collapse(transpose(lk), "D"))), "D")
    if check:
        second = collapse(transpose(union(collapse(transpose(l1), "D"), *mids, transpose(lk))), "D")
        if first != second:
            raise CapDError(f"the two forms of the type D induction differ on {l1}, {list(middles)}, {lk}")
    return SpringerValue(first, "D")


# ---------------------------------------------------------------------------
# residue layouts


def part_layout(family: str, n_kappa: int, half: bool) -> tuple[tuple[str, ...], int]:
    """Slot families and the maximal number of type A blocks in one coordinate block.

    ``half`` selects the half-integral block of the vertex.  Slots are listed in the order
    (head, tail) used by the induction formulas.
    """
    n = n_kappa
    if family in ("B", "D"):
        if n % 2:
            return ((("D",) if half or family == "D" else ("B",)), (n - 1) // 2)
        if half:
            return (), n // 2
        return ((family, family), (n - 2) // 2)
    if family == "C":
        if n % 2:
            return ("C",), (n - 1) // 2
        h = n // 2
        if half:
            return ((("D",), (h - 1) // 2) if h % 2 else ((), h // 2))
        return ((("D", "C"), (h - 2) // 2) if h % 2 == 0 else (("C",), (h - 1) // 2))
    raise CapDError(family)


def slot_labels(family: str, slot: str, rank: int, n_kappa: int) -> tuple[Partition, ...]:
    """Special partitions labelling the Weyl group representations placed on a slot."""
    if slot == "B":
        if n_kappa % 2:
            return tuple(sorted(special_partitions(2 * rank + 1, "B"), key=lambda q: q.parts))
        return tuple(sorted(special_partitions(2 * rank, "C"), key=lambda q: q.parts))
    return tuple(sorted(special_partitions(2 * rank, slot), key=lambda q: q.parts))


@dataclass(frozen=True)
class PartCandidate:
    half: bool
    slots: tuple  # tuple of (family, Partition)
    blocks: tuple  # tuple of Partition (type A blocks)


@dataclass(frozen=True)
class CandidateTuple:
    family: str
    n_kappa: int
    split: int  # size of the half-integral coordinate block
    parts: tuple  # tuple of PartCandidate

    def pseudo_levi(self) -> PseudoLevi:
        comps = []
        for part in self.parts:
            for fam, lab in part.slots:
                rank = lab.total // 2
                comps.append((fam, rank))
            comps.extend(("A", b.total - 1) for b in part.blocks)
        return PseudoLevi.of(comps)


def _part_group_value(family: str, nk: int, part: PartCandidate) -> Partition:
    slots = dict_slots(part.slots)
    blocks = part.blocks
    if family == "B":
        if part.half:
            head = slots.get("D", [Partition()])[0]
            return j_induce_D(head, blocks, Partition()).partition
        if nk % 2:
            (mu,) = slots["B"]
            return collapse(transpose(union(*_pairs(blocks), transpose(mu))), "B")
        l1, lk = slots["B"]
        return j_induce_B(l1, blocks, lk).partition
    if family == "C":
        pieces = _pairs(blocks)
        if "D" in slots:
            pieces.append(collapse(transpose(slots["D"][0]), "D"))
        if "C" in slots:
            pieces.append(transpose(slots["C"][0]))
        return collapse(transpose(union(*pieces)), "C")
    if family == "D":
        ds = slots.get("D", [])
        l1 = ds[0] if ds else Partition()
        lk = ds[1] if len(ds) > 1 else Partition()
        return j_induce_D(l1, blocks, lk).partition
    raise CapDError(family)


def dict_slots(slots) -> dict:
    out: dict = {}
    for fam, lab in slots:
        out.setdefault(fam, []).append(lab)
    return out


def group_side_value(t: CandidateTuple) -> Partition:
    """Saturated group-side orbit of a candidate."""
    if t.family == "A":
        (part,) = t.parts
        return j_induce_A(part.blocks).partition
    values = [_part_group_value(t.family, t.n_kappa, part) for part in t.parts]
    return collapse(union(*values), t.family)


def ls_dual(p, family: str) -> Partition:
    """Partition of the sign twist of a special representation: p -> (p^T)_X."""
    return collapse(transpose(as_partition(p).unlabelled()), family)


def dual_side_value(t: CandidateTuple, c: Optional[CoverParams] = None) -> Partition:
    """Dual-group orbit of the truncated induction of the sign-twisted candidate labels.

    Type A blocks become their transposes; a slot label becomes its Lusztig-Spaltenstein dual
    in its own family, and the induction formula of the dual group is applied.
    """
    fam, nk = t.family, t.n_kappa
    if fam == "A":
        return j_induce_A([transpose(b) for b in t.parts[0].blocks]).partition
    mids = [transpose(b) for part in t.parts for b in part.blocks]
    slots = dict_slots([s for part in t.parts for s in part.slots])
    empty = Partition()
    if fam == "B" and nk % 2:
        head = ls_dual(slots["D"][0], "D") if "D" in slots else empty
        (mu,) = slots["B"]
        return j_induce_C(head, mids, ls_dual(mu, "B")).partition
    if fam == "B":
        l1, lk = slots["B"]
        return j_induce_B(ls_dual(l1, "C"), mids, ls_dual(lk, "C")).partition
    if fam == "C" and nk % 2:
        m1, mk = slots["C"]
        return j_induce_B(ls_dual(m1, "C"), mids, ls_dual(mk, "C")).partition
    if fam == "C":
        head = ls_dual(slots["D"][0], "D") if "D" in slots else empty
        (mu,) = slots["C"]
        return j_induce_C(head, mids, collapse(plus_op(ls_dual(mu, "C")), "B")).partition
    if fam == "D":
        ds = [ls_dual(x, "D") for x in slots.get("D", [])] + [empty, empty]
        return j_induce_D(ds[0], mids, ds[1]).partition
    raise CapDError(fam)


def displayed_dual_condition(t: CandidateTuple) -> Optional[Partition]:
    """The closed form of the dual value used in the odd B and even C analyses, else None.

    It unions the labels themselves (type B slot labels moved to C) and transposes once.
    """
    fam, nk = t.family, t.n_kappa
    if not ((fam == "B" and nk % 2) or (fam == "C" and nk % 2 == 0)):
        return None
    pieces = []
    for part in t.parts:
        for b in part.blocks:
            pieces.extend([b, b])
        for f, lab in part.slots:
            pieces.append(collapse(minus_op(lab), "C") if f == "B" else lab)
    return collapse(transpose(union(*pieces)), "C")


# ---------------------------------------------------------------------------
# enumeration


def _part_candidates(family: str, nk: int, size: int, half: bool):
    slot_fams, max_a = part_layout(family, nk, half)
    for ranks in product(range(size + 1), repeat=len(slot_fams)):
        rest = size - sum(ranks)
        if rest < 0:
            continue
        real_slots = []
        free_blocks = 0
        for f, k in zip(slot_fams, ranks):
            if f == "D" and k == 1:
                # a D1 slot has no roots: it behaves as a one-coordinate torus factor
                free_blocks += 1
                real_slots.append((f, 0))
            else:
                real_slots.append((f, k))
        for sizes in compositions(rest, max_a):
            block_sizes = tuple(sizes) + (1,) * free_blocks
            label_sets = [slot_labels(family, f, k, nk) for f, k in real_slots]
            block_sets = [partitions_of(p) for p in block_sizes]
            for labs in product(*label_sets):
                slots = tuple((f, lab) for (f, _), lab in zip(real_slots, labs))
                for bl in product(*block_sets):
                    yield PartCandidate(half, slots, tuple(bl))


@lru_cache(maxsize=None)
def candidates(family: str, rank: int, n_kappa: int, genuine_only: bool = False) -> tuple[CandidateTuple, ...]:
    out = []
    if family == "A":
        for sizes in compositions(rank + 1, n_kappa):
            for bl in product(*(partitions_of(p) for p in sizes)):
                out.append(CandidateTuple("A", n_kappa, 0, (PartCandidate(False, (), tuple(bl)),)))
        return tuple(out)
    c = CoverParams.of(family, rank, n_kappa)
    for (_, m), _ in enumerate_vertex_splits(c, genuine_only=genuine_only):
        halves = list(_part_candidates(family, n_kappa, m, True))
        wholes = list(_part_candidates(family, n_kappa, rank - m, False))
        for h, w in product(halves, wholes):
            out.append(CandidateTuple(family, n_kappa, m, (h, w)))
    return tuple(out)


@lru_cache(maxsize=None)
def candidate_values(family: str, rank: int, n_kappa: int, genuine_only: bool = False) -> tuple:
    """Distinct (dual value, group value) pairs over all candidates."""
    pairs = set()
    for t in candidates(family, rank, n_kappa, genuine_only):
        pairs.add((dual_side_value(t), group_side_value(t)))
    return tuple(sorted(pairs, key=lambda pq: (pq[0].parts, pq[1].parts)))


def _unique_max(values, what: str) -> Partition:
    best = maximal_elements(values)
    if len(best) != 1:
        raise CapDError(f"{what}: incomparable maxima {', '.join(map(str, best))}")
    return best[0]


def capD(c: CoverParams, o, genuine_only: bool = False) -> Partition:
    """Dominance maximum of group-side values over candidates whose dual value is >= o."""
    p = as_partition(o).unlabelled()
    if c.family == "G2":
        raise CapDError("use the g2 module for G2")
    vals = [g for d, g in candidate_values(c.family, c.rank, c.n_kappa, genuine_only) if dominates(d, p)]
    if not vals:
        raise CapDError(f"no candidate for {p}")
    return _unique_max(vals, f"capD({c}, {p})")


def capD_flat(c: CoverParams, o, genuine_only: bool = False) -> Optional[Partition]:
    """As capD but requiring the dual value to equal o; None when no candidate attains it."""
    p = as_partition(o).unlabelled()
    vals = [g for d, g in candidate_values(c.family, c.rank, c.n_kappa, genuine_only) if d == p]
    if not vals:
        return None
    return _unique_max(vals, f"capD_flat({c}, {p})")


def witnesses(c: CoverParams, o, target=None) -> list[CandidateTuple]:
    """Candidates with dual value >= o (and group value equal to target when given)."""
    p = as_partition(o).unlabelled()
    tgt = as_partition(target).unlabelled() if target is not None else None
    out = []
    for t in candidates(c.family, c.rank, c.n_kappa):
        if dominates(dual_side_value(t), p) and (tgt is None or group_side_value(t) == tgt):
            out.append(t)
    return out
