"""Weyl group characters and the permutation character of W on Y/Y_{Q,n}.

Irreducibles of W(B_r) = W(C_r) are labelled by ordered bipartitions (lam; mu) with
(r; -) trivial and (-; 1^r) the sign character.  Type D irreducibles are restrictions of
(lam; mu) with lam != mu.
"""
from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .partitions import Partition, as_partition, partitions_of, transpose
from .root_systems import (
    CartanType,
    CoverParams,
    LeviSubset,
    component_exponents,
    component_weyl_order,
    weyl_order,
)


class CharacterError(ValueError):
    pass


class IntegralityError(ArithmeticError):
    """An inner product that must be a nonnegative integer was not."""


@dataclass(frozen=True)
class WeylIrrep:
    family: str
    label: object  # Partition for A, (Partition, Partition) for B/C/D, str for G2

    @classmethod
    def A(cls, lam) -> "WeylIrrep":
        return cls("A", as_partition(lam))

    @classmethod
    def bi(cls, family: str, lam, mu) -> "WeylIrrep":
        return cls(family, (as_partition(lam), as_partition(mu)))

    @classmethod
    def parse(cls, family: str, text: str) -> "WeylIrrep":
        if family == "A":
            return cls.A(text)
        if family == "G2":
            return cls("G2", text)
        lam, _, mu = text.partition(";")
        return cls.bi(family, lam, mu)

    @property
    def rank_size(self) -> int:
        if self.family == "A":
            return self.label.total
        if self.family == "G2":
            return 2
        return self.label[0].total + self.label[1].total

    def __str__(self) -> str:
        if self.family == "G2":
            return self.label
        if self.family == "A":
            return str(self.label)
        lam, mu = self.label
        return f"{_bare(lam)};{_bare(mu)}"


def _bare(p: Partition) -> str:
    return ",".join(map(str, p.parts)) if p.parts else "-"


@dataclass(frozen=True)
class ConjClassDatum:
    family: str
    signature: object  # cycle type (A) or (positive cycles, negative cycles)
    size: int
    sign_value: int
    d_w: int
    half: Optional[str] = None  # "+" or "-" for the split classes of type D


# ---------------------------------------------------------------------------
# conjugacy classes


def _z(p: Partition) -> int:
    return math.prod(k ** m * math.factorial(m) for k, m in Counter(p.parts).items())


def _bipartitions(r: int):
    for k in range(r + 1):
        for a in partitions_of(k):
            for b in partitions_of(r - k):
                yield a, b


@lru_cache(maxsize=None)
def _classes(family: str, rank: int) -> tuple[ConjClassDatum, ...]:
    if family == "A":
        N = rank + 1
        return tuple(
            ConjClassDatum("A", rho, math.factorial(N) // _z(rho), (-1) ** (N - len(rho)), len(rho) - 1)
            for rho in partitions_of(N)
        )
    if family in ("B", "C", "D"):
        r = rank
        order = 2 ** r * math.factorial(r)
        out = []
        for a, b in _bipartitions(r):
            if family == "D" and len(b) % 2:
                continue
            z = _z(a) * _z(b) * 2 ** (len(a) + len(b))
            size = order // z
            sign = math.prod((-1) ** (k - 1) for k in a.parts) * math.prod((-1) ** k for k in b.parts)
            if family == "D" and not b.parts and all(k % 2 == 0 for k in a.parts):
                out.append(ConjClassDatum(family, (a, b), size // 2, sign, len(a), "+"))
                out.append(ConjClassDatum(family, (a, b), size // 2, sign, len(a), "-"))
            else:
                out.append(ConjClassDatum(family, (a, b), size, sign, len(a)))
        return tuple(out)
    raise CharacterError(f"no class enumeration for {family}")


def conjugacy_classes(t: CartanType) -> tuple[ConjClassDatum, ...]:
    if t.family == "G2":
        from .g2 import g2_classes

        return g2_classes()
    if t.rank > 10:
        raise CharacterError("rank exceeds the enumeration bound")
    return _classes(t.family, t.rank)


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama


def _beta(p: tuple[int, ...]) -> tuple[int, ...]:
    k = len(p)
    return tuple(p[i] + (k - 1 - i) for i in range(k))


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    k = len(b)
    return tuple(x for x in (b[i] - (k - 1 - i) for i in range(k)) if x > 0)


def _rim_hooks(p: tuple[int, ...], length: int):
    """Yield (remaining partition, sign) for each rim hook of the given length."""
    beta = _beta(p)
    bset = set(beta)
    for b in beta:
        t = b - length
        if t < 0 or t in bset:
            continue
        height = sum(1 for x in beta if t < x < b)
        rest = (bset - {b}) | {t}
        yield _from_beta(rest), (-1) ** height


@lru_cache(maxsize=None)
def _mn_A(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not lam else 0
    first, rest = cycles[0], cycles[1:]
    return sum(s * _mn_A(nu, rest) for nu, s in _rim_hooks(lam, first))


@lru_cache(maxsize=None)
def _mn_B(lam: tuple[int, ...], mu: tuple[int, ...], cycles: tuple[tuple[int, int], ...]) -> int:
    """cycles: (length, +1 for positive / -1 for negative)."""
    if not cycles:
        return 1 if not lam and not mu else 0
    (length, sgn), rest = cycles[0], cycles[1:]
    total = 0
    for nu, s in _rim_hooks(lam, length):
        total += s * _mn_B(nu, mu, rest)
    for nu, s in _rim_hooks(mu, length):
        total += s * sgn * _mn_B(lam, nu, rest)
    return total


def mn_character(irrep: WeylIrrep, cls: ConjClassDatum) -> int:
    if irrep.family == "G2":
        from .g2 import g2_character_value

        return g2_character_value(irrep.label, cls)
    if irrep.family == "A":
        return _mn_A(irrep.label.parts, cls.signature.parts)
    lam, mu = irrep.label
    if irrep.family == "D" and lam == mu:
        raise CharacterError("degenerate type D label (lam = mu) is not supported")
    a, b = cls.signature
    cycles = tuple((k, 1) for k in a.parts) + tuple((k, -1) for k in b.parts)
    return _mn_B(lam.parts, mu.parts, cycles)


def _hook_product(p: Partition) -> int:
    pt = transpose(p).parts
    return math.prod(p.parts[i] - j + pt[j] - i - 1 for i in range(len(p)) for j in range(p.parts[i]))


def hook_dimension(irrep: WeylIrrep) -> int:
    if irrep.family == "G2":
        from .g2 import G2_DIMENSIONS

        return G2_DIMENSIONS[irrep.label]
    if irrep.family == "A":
        lam = irrep.label
        return math.factorial(lam.total) // _hook_product(lam)
    lam, mu = irrep.label
    r = lam.total + mu.total
    return math.factorial(r) // (_hook_product(lam) * _hook_product(mu))


def tensor_sign(irrep: WeylIrrep) -> WeylIrrep:
    if irrep.family == "A":
        return WeylIrrep("A", transpose(irrep.label))
    if irrep.family == "G2":
        from .g2 import g2_tensor_sign

        return WeylIrrep("G2", g2_tensor_sign(irrep.label))
    lam, mu = irrep.label
    return WeylIrrep(irrep.family, (transpose(mu), transpose(lam)))


def irreps(t: CartanType) -> list[WeylIrrep]:
    if t.family == "A":
        return [WeylIrrep.A(p) for p in partitions_of(t.rank + 1)]
    if t.family == "G2":
        from .g2 import G2_IRREPS

        return [WeylIrrep("G2", name) for name in G2_IRREPS]
    out = []
    for a, b in _bipartitions(t.rank):
        if t.family == "D" and (a == b or (b.parts, a.parts) < (a.parts, b.parts)):
            continue
        out.append(WeylIrrep.bi(t.family, a, b))
    return out


# ---------------------------------------------------------------------------
# permutation character of W on X_n

INNER_PRODUCT_LOG: list = []


def sigma_fixed_points(c: CoverParams, cls: ConjClassDatum) -> int:
    """Number of fixed points of a class on Y/Y_{Q,n} for covers where the n^{d(w)} law holds."""
    return c.n ** cls.d_w


def _guard(value: Fraction, context: str) -> int:
    if value.denominator != 1 or value < 0:
        INNER_PRODUCT_LOG.append((context, value, False))
        raise IntegralityError(f"{context}: inner product {value} is not a nonnegative integer")
    INNER_PRODUCT_LOG.append((context, value, True))
    return int(value)


def inner_product_sigma(c: CoverParams, irrep: WeylIrrep, twist_sign: bool = False) -> int:
    """<irrep (x sign if twist_sign), sigma_{X_n}>_W as a class sum."""
    if c.family == "G2":
        from .g2 import g2_sigma_inner

        return g2_sigma_inner(c.n, irrep.label, twist_sign=twist_sign)
    classes = conjugacy_classes(c.cartan)
    total = Fraction(0)
    for cls in classes:
        chi = mn_character(irrep, cls)
        if twist_sign:
            chi *= cls.sign_value
        total += cls.size * chi * sigma_fixed_points(c, cls)
    return _guard(total / weyl_order(c.cartan), f"<{irrep}{'(x)sgn' if twist_sign else ''}, sigma> {c}")


# ---------------------------------------------------------------------------
# closed forms


def gns_type_A(lam, n: int) -> Fraction:
    """n^{-1} prod (n + content) / prod hooks."""
    lam = as_partition(lam)
    num = math.prod(n + (j - i) for i in range(len(lam)) for j in range(lam.parts[i]))
    return Fraction(num, n * _hook_product(lam))


def gns_type_BC(lam, mu, n: int) -> Fraction:
    """Content-product form for W(B_r) = W(C_r); the second factor uses n + 2c - 1."""
    lam, mu = as_partition(lam), as_partition(mu)
    r = lam.total + mu.total
    num = math.prod(n + 2 * (j - i) + 1 for i in range(len(lam)) for j in range(lam.parts[i]))
    num *= math.prod(n + 2 * (j - i) - 1 for i in range(len(mu)) for j in range(mu.parts[i]))
    return Fraction(num, 2 ** r * _hook_product(lam) * _hook_product(mu))


def gns_type_BC_as_printed(lam, mu, n: int) -> Fraction:
    """The same form with n + 2c + 1 on both factors (kept for comparison)."""
    lam, mu = as_partition(lam), as_partition(mu)
    r = lam.total + mu.total
    num = math.prod(n + 2 * (j - i) + 1 for p in (lam, mu) for i in range(len(p)) for j in range(p.parts[i]))
    return Fraction(num, 2 ** r * _hook_product(lam) * _hook_product(mu))


# ---------------------------------------------------------------------------
# Sommers' formula


def parse_components(text: str) -> list[tuple[str, int]]:
    """Parse "A4+A1", "2A2+B3" or "0" into a list of (family, rank) components."""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return []
    out = []
    for tok in text.split("+"):
        m = re.fullmatch(r"(\d*)(At|A|B|C|D|G2|G)(\d*)", tok)
        if not m:
            raise CharacterError(f"cannot parse component {tok!r}")
        mult = int(m.group(1) or 1)
        fam = m.group(2)
        if fam in ("G", "G2"):
            fam, rank = "G2", 2
        else:
            rank = int(m.group(3))
        out.extend([(fam, rank)] * mult)
    return out


def _component_exps(fam: str, rank: int) -> tuple[int, ...]:
    if fam == "G2":
        return (1, 5)
    if fam == "At":
        fam = "A"
    return component_exponents(fam, rank)


def _component_order(fam: str, rank: int) -> int:
    if fam == "G2":
        return 12
    if fam == "At":
        fam = "A"
    return component_weyl_order(fam, rank)


def _component_rank(fam: str, rank: int) -> int:
    return len(_component_exps(fam, rank))


def sommers_value(r: int, J, n: int) -> Union[int, Fraction]:
    """n^{r-|J|} / |W_J| * prod over exponents m of W_J of (n - m)."""
    comps = parse_components(J) if isinstance(J, str) else list(J)
    size = sum(_component_rank(f, k) for f, k in comps)
    order = math.prod(_component_order(f, k) for f, k in comps)
    exps = [m for f, k in comps for m in _component_exps(f, k)]
    val = Fraction(n ** (r - size) * math.prod(n - m for m in exps), order)
    return int(val) if val.denominator == 1 else val


@lru_cache(maxsize=None)
def _signed_class_sum(fam: str, rank: int, n: int) -> Fraction:
    """(1/|W|) sum over W of sign(w) n^{d(w)} for one irreducible component."""
    if fam == "At":
        fam = "A"
    if fam == "G2":
        from .g2 import g2_elements

        els = g2_elements()
        return Fraction(sum(e.sign * n ** e.d for e in els), len(els))
    if fam == "D" and rank <= 1:
        return Fraction(1)
    if rank == 0:
        return Fraction(1)
    classes = _classes(fam if fam != "C" else "B", rank)
    total = sum(cl.size * cl.sign_value * n ** cl.d_w for cl in classes)
    return Fraction(total, _component_order(fam, rank))


def sommers_brute(r: int, J, n: int) -> Union[int, Fraction]:
    """Class-sum evaluation of (1/|W_J|) sum_{w in W_J} sign(w) n^{d(w)} on a rank r ambient."""
    comps = parse_components(J) if isinstance(J, str) else list(J)
    size = sum(_component_rank(f, k) for f, k in comps)
    val = Fraction(n ** (r - size))
    for f, k in comps:
        val *= _signed_class_sum(f, k, n)
    return int(val) if val.denominator == 1 else val


def levi_components(S: LeviSubset) -> list[tuple[str, int]]:
    return [(f, k) for f, k in S.component_types()]


# ---------------------------------------------------------------------------
# leading coefficient of theta representations


class HypothesisError(ValueError):
    pass


@dataclass(frozen=True)
class CoeffReport:
    cover: str
    case: str
    j_irrep: str
    levi: str
    lhs: int
    rhs: Union[int, Fraction]
    hypotheses_met: bool

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        return {
            "cover": self.cover,
            "case": self.case,
            "j_irrep": self.j_irrep,
            "levi": self.levi,
            "lhs": self.lhs,
            "rhs": str(self.rhs),
            "equal": self.equal,
            "hypotheses_met": self.hypotheses_met,
        }


@dataclass(frozen=True)
class _Case:
    name: str
    irrep: WeylIrrep
    levi: tuple  # list of (family, rank)
    hypotheses_met: bool


def _case(c: CoverParams, allow_deviation: bool = True) -> _Case:
    f, r, n = c.family, c.rank, c.n
    if f != "G2" and not c.diamond:
        raise HypothesisError(f"{c} is not of the normalised type")
    if f == "A":
        a, b = divmod(r + 1, n)
        lam = Partition.of([n] * a + [b])
        return _Case("A", WeylIrrep.A(lam), tuple([("A", n - 1)] * a + [("A", b - 1)]), True)
    if f in ("B", "C"):
        m = (n - 1) // 2
        a, b = divmod(r, n)
        if b <= m and (f == "B" or a >= 1):
            lam = Partition.of([m] * a + [b])
            mu = Partition.of([m + 1] * a)
            return _Case(f, WeylIrrep.bi(f, lam, mu), tuple([("A", n - 1)] * a + [(f, b)]), True)
        if f == "C" and allow_deviation and r % 2 == 0 and n == r + 1:
            mm = r // 2
            return _Case("C-deviation", WeylIrrep.bi("C", [mm], [mm]), (("A", r - 1),), False)
        raise HypothesisError(f"{c}: r = {a}*n + {b} is outside the covered range")
    if f == "D":
        m = (n - 1) // 2
        a, b = divmod(r - 1, n)
        if b > m:
            raise HypothesisError(f"{c}: r - 1 = {a}*n + {b} with b > (n-1)/2")
        lam = Partition.of([m + 1] * a + [b + 1])
        mu = Partition.of([m] * a)
        levi = tuple([("A", n - 1)] * a + [("D", b + 1)])
        if b != m and (a == 0 or not allow_deviation):
            raise HypothesisError(f"{c}: b = {b} differs from m = {m}")
        return _Case("D" if b == m else "D-deviation", WeylIrrep.bi("D", lam, mu), levi, b == m)
    if f == "G2":
        from .g2 import g2_theta_case

        name, irrep, levi = g2_theta_case(n)
        return _Case("G2", WeylIrrep("G2", irrep), levi, levi is not None)
    raise HypothesisError(f)


def stated_j_irrep(c: CoverParams) -> WeylIrrep:
    """The irreducible j^W_{W_nu}(sign) for the covered cases, deviation cases included."""
    return _case(c).irrep


def wavefront_levi(c: CoverParams) -> list[tuple[str, int]]:
    case = _case(c, allow_deviation=False)
    if case.levi is None:
        raise HypothesisError(f"{c}: wavefront orbit is not the regular orbit of a Levi subgroup")
    return [x for x in case.levi if x[1] > 0 and not (x[0] == "D" and x[1] == 1)]


def wavefront_levi_subset(c: CoverParams) -> LeviSubset:
    """A subset of simple roots whose Levi has the shape returned by wavefront_levi."""
    f, r, n = c.family, c.rank, c.n
    if f == "G2":
        from .g2 import g2_levi_subset

        return g2_levi_subset(wavefront_levi(c))
    comps = _case(c).levi
    a = sum(1 for x in comps if x == ("A", n - 1)) if f != "A" else len(comps) - 1
    cuts = {n * i for i in range(1, a + 1)}
    S = set(range(1, r + 1)) - cuts
    if f == "D" and comps[-1] == ("D", 1):
        S.discard(r)
    return LeviSubset(c.cartan, frozenset(S))


def c_theta(c: CoverParams) -> CoeffReport:
    """Both sides of the leading-coefficient identity for a theta representation."""
    case = _case(c)
    if case.levi is None:
        raise HypothesisError(f"{c}: wavefront orbit is not the regular orbit of a Levi subgroup")
    lhs = inner_product_sigma(c, case.irrep, twist_sign=True)
    comps = [x for x in case.levi if x[1] > 0 and not (x[0] == "D" and x[1] == 1)]
    if c.family == "G2":
        from .g2 import g2_levi_sign_inner

        rhs = g2_levi_sign_inner(c.n, comps)
    else:
        rhs = sommers_value(c.rank, comps, c.n)
    levi = "+".join(f"{f}{k}" for f, k in comps) or "0"
    return CoeffReport(str(c), case.name, str(case.irrep), levi, lhs, rhs, case.hypotheses_met)


def theta_cases(max_rank: int, max_n: int, families: Sequence[str] = ("A", "B", "C", "D", "G2")) -> list[CoverParams]:
    """Normalised covers whose theta coefficient is covered by the closed-form analysis."""
    out = []
    for fam in families:
        ranks = [2] if fam == "G2" else range(1 if fam != "D" else 2, max_rank + 1)
        for r in ranks:
            for n in range(1, max_n + 1):
                c = CoverParams.of(fam, r, n)
                try:
                    case = _case(c, allow_deviation=False)
                except HypothesisError:
                    continue
                if case.levi is not None:
                    out.append(c)
    return out
