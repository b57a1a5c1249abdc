"""Cartan types, covers, Levi subsets, subsystem shapes and the lattice quotient Y/Y_{Q,n}.

Simple roots follow Bourbaki numbering.  The cocharacter lattice Y is the coroot lattice
(simply connected groups), written in the basis of simple coroots.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

FAMILIES = ("A", "B", "C", "D", "G2")
CLASSICAL = ("A", "B", "C", "D")


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        if self.family == "G2" and self.rank != 2:
            raise RootSystemError("G2 has rank 2")
        if self.rank < 1 or (self.family == "D" and self.rank < 2):
            raise RootSystemError(f"invalid rank for {self.family}: {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        text = text.strip()
        if text.upper() == "G2":
            return cls("G2", 2)
        m = re.fullmatch(r"([ABCD])(\d+)", text)
        if not m:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(m.group(1), int(m.group(2)))

    def __str__(self) -> str:
        return "G2" if self.family == "G2" else f"{self.family}{self.rank}"


def exponents(t: CartanType) -> tuple[int, ...]:
    r = t.rank
    if t.family == "A":
        return tuple(range(1, r + 1))
    if t.family in ("B", "C"):
        return tuple(range(1, 2 * r, 2))
    if t.family == "D":
        return tuple(range(1, 2 * r - 2, 2)) + (r - 1,)
    return (1, 5)


def weyl_order(t: CartanType) -> int:
    return math.prod(m + 1 for m in exponents(t))


def component_exponents(family: str, rank: int) -> tuple[int, ...]:
    """Exponents of a possibly degenerate component; empty for rank 0 and for D1."""
    if rank <= 0 or (family == "D" and rank == 1):
        return ()
    if family == "D" and rank == 2:
        return (1, 1)
    return exponents(CartanType(family, rank))


def component_weyl_order(family: str, rank: int) -> int:
    return math.prod(m + 1 for m in component_exponents(family, rank))


# ---------------------------------------------------------------------------
# simple roots and pairings


@lru_cache(maxsize=None)
def simple_roots(t: CartanType) -> tuple[tuple[Fraction, ...], ...]:
    """Simple roots as vectors in a Euclidean model (Bourbaki conventions)."""
    r = t.rank
    if t.family == "G2":
        return ((Fraction(1), Fraction(-1), Fraction(0)), (Fraction(-2), Fraction(1), Fraction(1)))
    dim = r + 1 if t.family == "A" else r
    roots = []
    for i in range(r):
        v = [Fraction(0)] * dim
        if t.family == "A" or i < r - 1:
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
        elif t.family == "B":
            v[r - 1] = Fraction(1)
        elif t.family == "C":
            v[r - 1] = Fraction(2)
        else:  # D
            v[r - 2], v[r - 1] = Fraction(1), Fraction(1)
        roots.append(tuple(v))
    return tuple(roots)


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=None)
def pairing_matrix(t: CartanType) -> tuple[tuple[int, ...], ...]:
    """P[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)."""
    roots = simple_roots(t)
    return tuple(
        tuple(int(2 * _dot(a, b) / _dot(b, b)) for b in roots) for a in roots
    )


@lru_cache(maxsize=None)
def coroot_norms(t: CartanType) -> tuple[int, ...]:
    """Q on simple coroots, normalised so that short coroots have Q = 1."""
    sq = [Fraction(4) / _dot(a, a) for a in simple_roots(t)]
    short = min(sq)
    return tuple(int(s / short) for s in sq)


def dynkin_edges(t: CartanType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram on 1-based indices."""
    P = pairing_matrix(t)
    r = t.rank
    return [(i + 1, j + 1) for i in range(r) for j in range(i + 1, r) if P[i][j] != 0]


def long_root_indices(t: CartanType) -> set[int]:
    sq = [_dot(a, a) for a in simple_roots(t)]
    return {i + 1 for i, s in enumerate(sq) if s == max(sq)}


# ---------------------------------------------------------------------------
# covers


@dataclass(frozen=True)
class CoverParams:
    cartan: CartanType
    n: int
    n_kappa: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise RootSystemError("cover degree must be positive")
        nk = self.n if self.n_kappa is None else self.n_kappa
        if nk < 1 or self.n % nk:
            raise RootSystemError(f"n_kappa={nk} must divide n={self.n}")
        object.__setattr__(self, "n_kappa", nk)

    @classmethod
    def of(cls, family: str, rank: int, n: int, n_kappa: Optional[int] = None) -> "CoverParams":
        return cls(CartanType(family, rank), n, n_kappa)

    @classmethod
    def parse(cls, text: str) -> "CoverParams":
        m = re.fullmatch(r"\s*([A-Z]\d+)@n=(\d+)(?:@nk=(\d+))?\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse cover {text!r}")
        nk = int(m.group(3)) if m.group(3) else None
        return cls(CartanType.parse(m.group(1)), int(m.group(2)), nk)

    def __str__(self) -> str:
        s = f"{self.cartan}@n={self.n}"
        return s if self.n_kappa == self.n else f"{s}@nk={self.n_kappa}"

    @property
    def family(self) -> str:
        return self.cartan.family

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def diamond(self) -> bool:
        """Whether the cover is of the normalised type used for theta coefficients."""
        f, r, n = self.family, self.rank, self.n
        if self.n_kappa != n:
            return False
        if f == "A":
            return math.gcd(n, r + 1) == 1
        if f in ("B", "C", "D"):
            return n % 2 == 1
        return True

    def root_degree(self, index: int) -> int:
        """n_alpha = n / gcd(n, Q(alpha^vee)) for the simple root with the given 1-based index."""
        q = coroot_norms(self.cartan)[index - 1]
        return self.n_kappa // math.gcd(self.n_kappa, q)


def dual_group_family(c: CoverParams) -> str:
    f = c.family
    if f in ("A", "D"):
        return f
    if f == "B":
        return "C" if c.n_kappa % 2 else "B"
    if f == "C":
        return "B" if c.n_kappa % 2 else "C"
    return "G2"


# ---------------------------------------------------------------------------
# Levi subsets


@dataclass(frozen=True)
class LeviSubset:
    cartan: CartanType
    indices: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        idx = frozenset(int(i) for i in self.indices)
        if any(i < 1 or i > self.cartan.rank for i in idx):
            raise RootSystemError(f"indices out of range for {self.cartan}: {sorted(idx)}")
        object.__setattr__(self, "indices", idx)

    def components(self) -> list[tuple[int, ...]]:
        """Connected components of the induced Dynkin subdiagram, as sorted index tuples."""
        adj = {i: set() for i in self.indices}
        for a, b in dynkin_edges(self.cartan):
            if a in self.indices and b in self.indices:
                adj[a].add(b)
                adj[b].add(a)
        seen, comps = set(), []
        for i in sorted(self.indices):
            if i in seen:
                continue
            stack, comp = [i], []
            seen.add(i)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in adj[v] - seen:
                    seen.add(w)
                    stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def component_types(self) -> list[tuple[str, int]]:
        return [component_type(self.cartan, comp) for comp in self.components()]

    def __or__(self, other: Iterable[int]) -> "LeviSubset":
        return LeviSubset(self.cartan, self.indices | frozenset(other))


def component_type(t: CartanType, comp: tuple[int, ...]) -> tuple[str, int]:
    """Cartan type of a connected subdiagram given by 1-based indices.

    In G2 a single short simple root is reported as ("At", 1).
    """
    k = len(comp)
    r = t.rank
    if t.family == "G2":
        if k == 2:
            return ("G2", 2)
        return ("A", 1) if comp[0] in long_root_indices(t) else ("At", 1)
    if t.family in ("B", "C") and r in comp:
        return (t.family, k)
    if t.family == "D" and r - 1 in comp and r in comp:
        return ("D", k) if k >= 4 else ("A", 3)
    return ("A", k)


def max_exponent(S: LeviSubset) -> int:
    best = 0
    for fam, k in S.component_types():
        if fam == "At":
            fam = "A"
        if fam == "G2":
            best = max(best, 5)
        else:
            best = max(best, max(component_exponents(fam, k), default=0))
    return best


def all_levi_subsets(t: CartanType) -> list[LeviSubset]:
    r = t.rank
    out = []
    for mask in range(1 << r):
        out.append(LeviSubset(t, frozenset(i + 1 for i in range(r) if mask >> i & 1)))
    return out


# ---------------------------------------------------------------------------
# pseudo-Levi shapes


@dataclass(frozen=True)
class PseudoLevi:
    """A subsystem shape: a sorted multiset of (family, rank) components of positive rank."""

    components: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, comps: Iterable[tuple[str, int]]) -> "PseudoLevi":
        out = []
        for fam, k in comps:
            out.extend(normalise_component(fam, k))
        return cls(tuple(sorted(out)))

    def __str__(self) -> str:
        if not self.components:
            return "0"
        return "+".join(f"{f}{k}" for f, k in self.components)


def normalise_component(family: str, rank: int) -> list[tuple[str, int]]:
    """Apply the low-rank conventions: drop B0, C0, D0, D1 and A0; D2 = A1+A1; D3 = A3."""
    if rank <= 0 or (family == "D" and rank == 1):
        return []
    if family == "D" and rank == 2:
        return [("A", 1), ("A", 1)]
    if family == "D" and rank == 3:
        return [("A", 3)]
    return [(family, rank)]


def compositions(total: int, max_parts: int, min_part: int = 1) -> list[tuple[int, ...]]:
    """Weakly decreasing tuples of parts >= min_part summing to total with at most max_parts parts."""
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_parts:
            return
        for p in range(min(rem, cap), min_part - 1, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    if total == 0:
        return [()]
    rec(total, total, [])
    return out


def lemma_slot_families(family: str, n_kappa: int) -> tuple[tuple[str, ...], int]:
    """Non-A slot families and the budget for 2*#A + #E at a hyperspecial vertex."""
    if family == "B":
        return (("B",), n_kappa) if n_kappa % 2 else (("B", "B"), n_kappa)
    if family == "C":
        return (("C",), n_kappa) if n_kappa % 2 else (("D", "C"), n_kappa // 2)
    if family == "D":
        return ("D", "D"), n_kappa
    raise RootSystemError(family)


def enumerate_pseudo_levis(c: CoverParams, component: CartanType) -> set[PseudoLevi]:
    """Subsystem shapes allowed by the hyperspecial classification for one ambient component.

    Type A: partitions of r+1 into at most n_kappa blocks.  Other types: a fixed list of
    non-A slots (some possibly of rank zero) plus type A blocks, subject to
    2 * #(type A components) + #(non-A components of positive rank) <= budget.
    """
    fam, r = component.family, component.rank
    nk = c.n_kappa
    if fam == "A":
        return {PseudoLevi.of(("A", p - 1) for p in blocks) for blocks in compositions(r + 1, nk)}
    slots, budget = lemma_slot_families(fam, nk)
    out = set()
    for slot_ranks in product(range(r + 1), repeat=len(slots)):
        rest = r - sum(slot_ranks)
        if rest < 0:
            continue
        if len(slots) == 2 and slots[0] == slots[1] and slot_ranks[0] < slot_ranks[1]:
            continue
        comps = [(s, k) for s, k in zip(slots, slot_ranks)]
        n_e = sum(1 for s, k in comps if k >= 1 and not (s == "D" and k == 1))
        for blocks in compositions(rest, max(rest, 0)):
            if 2 * len(blocks) + n_e > budget:
                continue
            out.add(PseudoLevi.of(comps + [("A", p - 1) for p in blocks]))
    return out


def enumerate_vertex_splits(c: CoverParams, genuine_only: bool = False) -> list[tuple[tuple[str, int], ...]]:
    """Shapes of Phi_x over the alcove vertices, as (head, tail) ambient components with ranks.

    Classical types give pairs D_m + B_{r-m}, C_m + C_{r-m} or D_m + D_{r-m}; components of rank
    zero are kept in the pair so that the split index m stays visible.  With ``genuine_only`` the
    values of m whose point (1/2, ..., 1/2, 0, ..., 0) is not an alcove vertex are skipped.
    """
    f, r = c.family, c.rank
    if f == "A":
        return [(("A", r),)]
    if f == "G2":
        return [(("G2", 2),), (("A", 2),), (("A", 1), ("At", 1))]
    head = "C" if f == "C" else "D"
    ms = vertex_half_sizes(f, r) if genuine_only else range(r + 1)
    return [((head, m), (f, r - m)) for m in ms]


def vertex_half_sizes(family: str, r: int) -> list[int]:
    """Sizes m of the half-integral block of genuine alcove vertices."""
    if family == "C":
        return list(range(r + 1))
    if family == "B":
        return [0] + list(range(2, r + 1))
    if family == "D":
        return sorted({0, r} | set(range(2, r - 1)))
    raise RootSystemError(family)


# ---------------------------------------------------------------------------
# lattice quotient


def gram_matrix_BQ(c: CoverParams, q_values: Optional[Iterable[int]] = None) -> np.ndarray:
    """Gram matrix B_Q(alpha_i^vee, alpha_j^vee) = Q(alpha_i^vee) <alpha_i, alpha_j^vee>."""
    q = tuple(q_values) if q_values is not None else coroot_norms(c.cartan)
    P = pairing_matrix(c.cartan)
    r = c.rank
    return np.array([[q[i] * P[i][j] for j in range(r)] for i in range(r)], dtype=np.int64)


@lru_cache(maxsize=None)
def reflection_matrices(t: CartanType) -> tuple[np.ndarray, ...]:
    """Simple reflections acting on Y in the simple coroot basis (columns are images)."""
    P = pairing_matrix(t)
    r = t.rank
    mats = []
    for i in range(r):
        M = np.eye(r, dtype=np.int64)
        for j in range(r):
            M[i, j] -= P[i][j]
        mats.append(M)
    return tuple(mats)


@lru_cache(maxsize=None)
def weyl_group_elements(t: CartanType, limit: int = 200000) -> tuple[np.ndarray, ...]:
    """All Weyl group elements as integer matrices on Y, by breadth-first closure."""
    gens = reflection_matrices(t)
    r = t.rank
    ident = np.eye(r, dtype=np.int64)
    seen = {ident.tobytes(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                u = s @ w
                key = u.tobytes()
                if key not in seen:
                    seen[key] = u
                    nxt.append(u)
                    if len(seen) > limit:
                        raise RootSystemError(f"Weyl group of {t} exceeds enumeration limit")
        frontier = nxt
    return tuple(seen.values())


def fixed_dimension(w: np.ndarray) -> int:
    """dim ker(w - 1) on Y tensor R."""
    r = w.shape[0]
    return r - int(Matrix(w - np.eye(r, dtype=np.int64)).rank())


@dataclass(frozen=True)
class LatticeQuotient:
    gram: np.ndarray
    n: int
    invariant_factors: tuple[int, ...]
    weyl_action: tuple[np.ndarray, ...]
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def fixed_points(self, w: np.ndarray) -> int:
        """Number of points of Y/Y_{Q,n} fixed by the Weyl element w (a matrix on Y)."""
        pts = np.array(self.elements, dtype=np.int64).T
        r = w.shape[0]
        moved = self.gram @ ((w - np.eye(r, dtype=np.int64)) @ pts)
        return int(np.count_nonzero(np.all(moved % self.n == 0, axis=0)))

    def _same_class(self, a: np.ndarray, b: np.ndarray) -> bool:
        return bool(np.all((self.gram @ (a - b)) % self.n == 0))


def quotient_XN(c: CoverParams, q_values: Optional[Iterable[int]] = None) -> LatticeQuotient:
    """The finite group Y / Y_{Q,n} with Y_{Q,n} = {y : B_Q(y, z) in nZ for all z}."""
    B = gram_matrix_BQ(c, q_values)
    n = c.n
    r = c.rank
    snf = smith_normal_form(Matrix(B.tolist()), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(r)]
    factors = tuple(sorted(n // math.gcd(n, d) if d else n for d in diag))
    factors = tuple(f for f in factors if f > 1) or (1,)
    # representatives: y mod n, distinguished by the image B y mod n
    reps = {}
    for y in product(range(n), repeat=r):
        key = tuple(int(x) for x in (B @ np.array(y, dtype=np.int64)) % n)
        reps.setdefault(key, y)
    elements = tuple(sorted(reps.values()))
    if len(elements) != math.prod(factors):
        raise RootSystemError("Smith normal form and enumeration disagree on |Y/Y_Qn|")
    return LatticeQuotient(B, n, factors, reflection_matrices(c.cartan), elements)
