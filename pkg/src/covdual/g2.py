"""The duality pipeline for G2 computed from its Weyl group and root data.

Roots are handled through their coroots in the simple coroot basis of Y.  With the form
B_Q normalised by Q(alpha_1^vee) = 3 (alpha_1 short) and Q(alpha_2^vee) = 1, a root alpha
pairs with y in Y as <alpha, y> = B_Q(alpha^vee, y) / Q(alpha^vee).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence

import numpy as np

from .root_systems import CartanType, CoverParams, LeviSubset, fixed_dimension, quotient_XN

G2 = CartanType.parse("G2")

G2_IRREPS = ("phi_{1,0}", "phi_{1,6}", "phi_{1,3}'", "phi_{1,3}''", "phi_{2,1}", "phi_{2,2}")
G2_DIMENSIONS = {name: (2 if name.startswith("phi_{2") else 1) for name in G2_IRREPS}
SPECIAL = ("phi_{1,0}", "phi_{2,1}", "phi_{1,6}")

ORBITS = ("0", "A1", "At1", "G2a1", "G2")
ORBIT_ALIASES = {
    "0": "0", "A1": "A1", "At1": "At1", "Atilde1": "At1", "Ã1": "At1",
    "G2a1": "G2a1", "G2(a1)": "G2a1", "G2": "G2",
}

# Springer correspondence for G2: irrep -> (orbit, local system tag)
SPRINGER = {
    "phi_{1,0}": ("G2", "1"),
    "phi_{2,1}": ("G2a1", "1"),
    "phi_{1,3}'": ("G2a1", "eps"),
    "phi_{2,2}": ("At1", "1"),
    "phi_{1,3}''": ("A1", "1"),
    "phi_{1,6}": ("0", "1"),
}

GRAM = np.array([[6, -3], [-3, 2]], dtype=np.int64)
Q_SIMPLE = (3, 1)


class G2Error(ValueError):
    pass


@dataclass(frozen=True)
class G2Orbit:
    name: str

    def __post_init__(self):
        if self.name not in ORBITS:
            raise G2Error(f"unknown G2 orbit {self.name!r}")

    @classmethod
    def parse(cls, text) -> "G2Orbit":
        if isinstance(text, G2Orbit):
            return text
        key = str(text).strip()
        if key not in ORBIT_ALIASES:
            raise G2Error(f"unknown G2 orbit {text!r}; expected one of {', '.join(ORBITS)}")
        return cls(ORBIT_ALIASES[key])

    @property
    def closure_rank(self) -> int:
        return ORBITS.index(self.name)

    def __le__(self, other: "G2Orbit") -> bool:
        return self.closure_rank <= other.closure_rank

    def __lt__(self, other: "G2Orbit") -> bool:
        return self.closure_rank < other.closure_rank

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class G2Irrep:
    name: str

    def __post_init__(self):
        if self.name not in G2_IRREPS:
            raise G2Error(f"unknown G2 irrep {self.name!r}")

    @property
    def dimension(self) -> int:
        return G2_DIMENSIONS[self.name]

    @property
    def b_invariant(self) -> int:
        return g2_b_invariant(self.name)

    def __str__(self) -> str:
        return self.name


# ---------------------------------------------------------------------------
# Weyl group


@dataclass(frozen=True)
class G2Element:
    matrix: np.ndarray
    eps_short: int
    eps_long: int

    @property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    @property
    def sign(self) -> int:
        return self.eps_short * self.eps_long

    @property
    def trace(self) -> int:
        return int(np.trace(self.matrix))

    @property
    def d(self) -> int:
        return fixed_dimension(self.matrix)

    @property
    def is_rotation(self) -> bool:
        return self.sign == 1


def _simple_reflections() -> tuple[np.ndarray, np.ndarray]:
    # columns are images of the simple coroots; <alpha_i, alpha_j^vee> = GRAM[i][j] / Q_i
    P = [[GRAM[i][j] // Q_SIMPLE[i] for j in range(2)] for i in range(2)]
    mats = []
    for i in range(2):
        M = np.eye(2, dtype=np.int64)
        for j in range(2):
            M[i, j] -= P[i][j]
        mats.append(M)
    return mats[0], mats[1]


@lru_cache(maxsize=None)
def g2_elements() -> tuple[G2Element, ...]:
    """The twelve elements with their values on the two reflection-class characters."""
    s1, s2 = _simple_reflections()  # s1 short, s2 long
    ident = np.eye(2, dtype=np.int64)
    seen = {ident.tobytes(): G2Element(ident, 1, 1)}
    frontier = [seen[ident.tobytes()]]
    while frontier:
        nxt = []
        for e in frontier:
            for s, short in ((s1, True), (s2, False)):
                m = s @ e.matrix
                if m.tobytes() in seen:
                    continue
                new = G2Element(m, -e.eps_short if short else e.eps_short, e.eps_long if short else -e.eps_long)
                seen[m.tobytes()] = new
                nxt.append(new)
        frontier = nxt
    els = tuple(sorted(seen.values(), key=lambda e: tuple(e.matrix.flatten())))
    if len(els) != 12:
        raise G2Error("G2 Weyl group closure did not produce 12 elements")
    return els


def g2_weyl_elements() -> tuple[np.ndarray, ...]:
    return tuple(e.matrix for e in g2_elements())


def _element(key: bytes) -> G2Element:
    return {e.key: e for e in g2_elements()}[key]


def _mul(a: G2Element, b: G2Element) -> G2Element:
    return _element((a.matrix @ b.matrix).tobytes())


def g2_character(name: str, e: G2Element) -> int:
    if name == "phi_{1,0}":
        return 1
    if name == "phi_{1,6}":
        return e.sign
    if name == "phi_{1,3}'":
        return e.eps_long
    if name == "phi_{1,3}''":
        return e.eps_short
    if name == "phi_{2,1}":
        return e.trace
    if name == "phi_{2,2}":
        return int(np.trace(e.matrix @ e.matrix)) if e.is_rotation else 0
    raise G2Error(f"unknown G2 irrep {name!r}")


def g2_tensor_sign(name: str) -> str:
    return {
        "phi_{1,0}": "phi_{1,6}", "phi_{1,6}": "phi_{1,0}",
        "phi_{1,3}'": "phi_{1,3}''", "phi_{1,3}''": "phi_{1,3}'",
        "phi_{2,1}": "phi_{2,1}", "phi_{2,2}": "phi_{2,2}",
    }[name]


@lru_cache(maxsize=None)
def _class_partition() -> tuple[tuple[G2Element, ...], ...]:
    els = g2_elements()
    inv = {e.key: _element(np.round(np.linalg.inv(e.matrix)).astype(np.int64).tobytes()) for e in els}
    classes, done = [], set()
    for e in els:
        if e.key in done:
            continue
        cls = {_mul(_mul(g, e), inv[g.key]).key for g in els}
        done |= cls
        classes.append(tuple(x for x in els if x.key in cls))
    return tuple(classes)


def g2_classes():
    from .characters import ConjClassDatum

    out = []
    for i, cls in enumerate(_class_partition()):
        rep = cls[0]
        out.append(ConjClassDatum("G2", i, len(cls), rep.sign, rep.d))
    return tuple(out)


def g2_character_value(name: str, cls) -> int:
    return g2_character(name, _class_partition()[cls.signature][0])


def g2_character_table() -> list[list[int]]:
    """Rows indexed by G2_IRREPS, columns by the conjugacy classes."""
    reps = [cls[0] for cls in _class_partition()]
    return [[g2_character(name, r) for r in reps] for name in G2_IRREPS]


# ---------------------------------------------------------------------------
# characters of reflection subgroups


def _sym_power_character(e: G2Element, degree: int) -> int:
    """Character of Sym^degree of the reflection representation, via h_k = tr h_{k-1} - det h_{k-2}."""
    tr, det = e.trace, e.sign
    h = [1, tr]
    for _ in range(2, degree + 1):
        h.append(tr * h[-1] - det * h[-2])
    return h[degree]


def _inner(group: Sequence[G2Element], chi, psi) -> Fraction:
    return Fraction(sum(chi(g) * psi(g) for g in group), len(group))


def g2_b_invariant(name: str, max_degree: int = 12) -> int:
    els = g2_elements()
    for b in range(max_degree + 1):
        if _inner(els, lambda g: g2_character(name, g), lambda g: _sym_power_character(g, b)) >= 1:
            return b
    raise G2Error(f"{name} not found in Sym^<= {max_degree}")


@lru_cache(maxsize=None)
def g2_coroots() -> tuple[tuple[tuple[int, int], int], ...]:
    """All twelve coroots in the simple coroot basis, with Q(alpha^vee) (3 for short roots alpha)."""
    s1, s2 = _simple_reflections()
    found = {(1, 0), (0, 1)}
    frontier = list(found)
    while frontier:
        nxt = []
        for v in frontier:
            for s in (s1, s2):
                u = tuple(int(x) for x in s @ np.array(v))
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    out = []
    for v in sorted(found):
        q = int(np.array(v) @ GRAM @ np.array(v))
        out.append((v, q))
    qmin = min(q for _, q in out)
    return tuple((v, q // qmin) for v, q in out)


def is_positive(v: tuple[int, int]) -> bool:
    return v[0] >= 0 and v[1] >= 0


def root_pairing(coroot: tuple[int, int], q: int, y) -> Fraction:
    """<alpha, y> for the root alpha with the given coroot, y in coroot coordinates (rationals allowed)."""
    val = sum(Fraction(int(coroot[i] * GRAM[i][j])) * Fraction(y[j]) for i in range(2) for j in range(2))
    return val / q


def reflection(coroot: tuple[int, int], q: int) -> np.ndarray:
    """s_alpha(y) = y - <alpha, y> alpha^vee as an integer matrix."""
    row = [Fraction(int(sum(coroot[i] * GRAM[i][j] for i in range(2))), q) for j in range(2)]
    M = np.eye(2, dtype=np.int64)
    for a in range(2):
        for j in range(2):
            M[a, j] -= int(coroot[a] * row[j])
    return M


@dataclass(frozen=True)
class Subsystem:
    """A reflection subgroup of W(G2), given by the positive coroots of its root subsystem."""

    coroots: frozenset  # of (coroot, q) pairs, positive only

    @property
    def n_short(self) -> int:
        return sum(1 for _, q in self.coroots if q == 3)

    @property
    def n_long(self) -> int:
        return sum(1 for _, q in self.coroots if q == 1)

    @property
    def type_name(self) -> str:
        s, l = self.n_short, self.n_long
        table = {(0, 0): "0", (0, 1): "A1", (1, 0): "At1", (1, 1): "A1+At1", (0, 3): "A2", (3, 0): "At2", (3, 3): "G2"}
        return table.get((s, l), f"?{s},{l}")

    def elements(self) -> tuple[G2Element, ...]:
        return _generated(self.coroots)

    def __str__(self) -> str:
        return self.type_name


@lru_cache(maxsize=None)
def _generated(coroots: frozenset) -> tuple[G2Element, ...]:
    gens = [_element(reflection(v, q).tobytes()) for v, q in coroots]
    ident = _element(np.eye(2, dtype=np.int64).tobytes())
    seen = {ident.key: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                u = _mul(s, e)
                if u.key not in seen:
                    seen[u.key] = u
                    nxt.append(u)
        frontier = nxt
    return tuple(seen.values())


def subsystem(predicate) -> Subsystem:
    return Subsystem(frozenset((v, q) for v, q in g2_coroots() if is_positive(v) and predicate(v, q)))


def subsystem_named(name: str) -> Subsystem:
    """Standard representatives: A1 = {alpha_2}, At1 = {alpha_1}, A2 = long roots, At2 = short roots."""
    simple = {(1, 0): 3, (0, 1): 1}
    if name == "0":
        return subsystem(lambda v, q: False)
    if name == "A1":
        return subsystem(lambda v, q: v == (0, 1))
    if name == "At1":
        return subsystem(lambda v, q: v == (1, 0))
    if name == "A2":
        return subsystem(lambda v, q: q == 1)
    if name == "At2":
        return subsystem(lambda v, q: q == 3)
    if name == "G2":
        return subsystem(lambda v, q: True)
    if name == "A1+At1":
        # the short simple root and the long root orthogonal to it
        a = (1, 0)
        return subsystem(lambda v, q: v == a or (q == 1 and root_pairing(a, 3, v) == 0))
    raise G2Error(f"unknown subsystem {name!r}")


@dataclass(frozen=True)
class SubIrrep:
    """An irreducible character of a reflection subgroup, as its value tuple on the subgroup."""

    kind: str  # "triv", "sign", "eps_short", "eps_long", "rho<j>", or a full G2 irrep name
    values: tuple


def subgroup_irreps(sub: Subsystem) -> list[SubIrrep]:
    els = sub.elements()
    if len(els) == 12:
        return [SubIrrep(name, tuple(g2_character(name, e) for e in els)) for name in G2_IRREPS]
    linear = {}
    for kind, f in (
        ("triv", lambda e: 1),
        ("sign", lambda e: e.sign),
        ("eps_short", lambda e: e.eps_short),
        ("eps_long", lambda e: e.eps_long),
    ):
        vals = tuple(f(e) for e in els)
        linear.setdefault(vals, kind)
    out = [SubIrrep(kind, vals) for vals, kind in linear.items()]
    k = len(els) // 2
    for j in range(1, (k - 1) // 2 + 1):
        vals = tuple(int(np.trace(np.linalg.matrix_power(e.matrix, j))) if e.is_rotation else 0 for e in els)
        out.append(SubIrrep(f"rho{j}", vals))
    if sum(x.values[_identity_index(els)] ** 2 for x in out) != len(els):
        raise G2Error(f"incomplete character list for {sub}")
    return out


def _identity_index(els: Sequence[G2Element]) -> int:
    for i, e in enumerate(els):
        if np.array_equal(e.matrix, np.eye(2, dtype=np.int64)):
            return i
    raise G2Error("identity missing")


def sub_sign(sub: Subsystem) -> SubIrrep:
    els = sub.elements()
    return SubIrrep("sign", tuple(e.sign for e in els))


def tensor_sub_sign(sub: Subsystem, chi: SubIrrep) -> SubIrrep:
    els = sub.elements()
    vals = tuple(v * e.sign for v, e in zip(chi.values, els))
    for cand in subgroup_irreps(sub):
        if cand.values == vals:
            return cand
    raise G2Error("sign twist is not irreducible")


def special_piece(sub: Subsystem, chi: SubIrrep) -> SubIrrep:
    """The special representative of the family of chi; only the full G2 has non-special irreps."""
    if len(sub.elements()) == 12 and chi.kind not in SPECIAL:
        return next(x for x in subgroup_irreps(sub) if x.kind == "phi_{2,1}")
    return chi


def _sub_b_invariant(sub: Subsystem, chi: SubIrrep, max_degree: int = 12) -> tuple[int, int]:
    els = sub.elements()
    for b in range(max_degree + 1):
        m = Fraction(sum(v * _sym_power_character(e, b) for v, e in zip(chi.values, els)), len(els))
        if m >= 1:
            return b, int(m)
    raise G2Error("b-invariant not found")


def g2_j_induce(small: Subsystem, chi: SubIrrep, big: Optional[Subsystem] = None) -> SubIrrep:
    """Truncated induction from the reflection subgroup of `small` to that of `big` (default W)."""
    big = big or subsystem_named("G2")
    b, mult = _sub_b_invariant(small, chi)
    if mult != 1:
        raise G2Error(f"multiplicity {mult} in degree {b}: j-induction undefined for {chi.kind} on {small}")
    small_els = small.elements()
    small_keys = [e.key for e in small_els]
    big_els = big.elements()
    hits = []
    for E in subgroup_irreps(big):
        vals = dict(zip((e.key for e in big_els), E.values))
        m_sym = Fraction(sum(v * _sym_power_character(e, b) for v, e in zip(E.values, big_els)), len(big_els))
        restr = Fraction(sum(vals[k] * v for k, v in zip(small_keys, chi.values)), len(small_els))
        if m_sym * restr >= 1:
            hits.append((E, m_sym * restr))
    if len(hits) != 1 or hits[0][1] != 1:
        raise G2Error(f"j-induction of {chi.kind} from {small} is not multiplicity one")
    return hits[0][0]


def g2_springer(name: str) -> tuple[G2Orbit, str]:
    orbit, tag = SPRINGER[name]
    return G2Orbit(orbit), tag


def _sub_springer(sub: Subsystem, chi: SubIrrep) -> G2Orbit:
    """Springer correspondence in the pseudo-Levi of `sub`, saturated to G2."""
    t = sub.type_name
    if t == "G2":
        return g2_springer(chi.kind)[0]
    if t == "A2":
        return G2Orbit({"triv": "G2a1", "rho1": "A1", "sign": "0"}[chi.kind])
    if t == "A1+At1":
        return G2Orbit({"triv": "G2a1", "eps_long": "At1", "eps_short": "A1", "sign": "0"}[chi.kind])
    raise G2Error(f"{t} is not the type of a pseudo-Levi vertex")


# ---------------------------------------------------------------------------
# the D map


def n_alpha(n: int, q: int) -> int:
    return n // math.gcd(n, q)


def dual_swaps_lengths(n_kappa: int) -> bool:
    """Whether the identification W -> W^vee exchanges long and short reflections."""
    return n_kappa % 3 != 0


def _dual_name(name: str, n_kappa: int) -> str:
    if not dual_swaps_lengths(n_kappa):
        return name
    return {"phi_{1,3}'": "phi_{1,3}''", "phi_{1,3}''": "phi_{1,3}'"}.get(name, name)


# alcove vertices in fundamental coweight coordinates: (<alpha_1, x>, <alpha_2, x>)
VERTICES = {"G2": (Fraction(0), Fraction(0)), "A2": (Fraction(1, 3), Fraction(0)), "A1+At1": (Fraction(0), Fraction(1, 2))}


def _to_coroot_coords(x) -> tuple[Fraction, Fraction]:
    P = [[Fraction(int(GRAM[i][j]), Q_SIMPLE[i]) for j in range(2)] for i in range(2)]
    det = P[0][0] * P[1][1] - P[0][1] * P[1][0]
    z0 = (x[0] * P[1][1] - P[0][1] * x[1]) / det
    z1 = (P[0][0] * x[1] - P[1][0] * x[0]) / det
    return z0, z1


def phi_xy(vertex: str, y: tuple[int, int], n: int) -> Subsystem:
    x = _to_coroot_coords(VERTICES[vertex])
    u = (x[0] - y[0], x[1] - y[1])

    def keep(v, q):
        if root_pairing(v, q, x).denominator != 1:
            return False
        val = root_pairing(v, q, u)
        return val.denominator == 1 and val.numerator % n_alpha(n, q) == 0

    return subsystem(keep)


@dataclass(frozen=True)
class G2Candidate:
    vertex: str
    sub: Subsystem
    sigma: SubIrrep
    group_value: G2Orbit
    dual_value: G2Orbit


@lru_cache(maxsize=None)
def g2_candidates(n_kappa: int) -> tuple[G2Candidate, ...]:
    n = n_kappa
    full = subsystem_named("G2")
    subs = {}
    for vertex in VERTICES:
        for y in np.ndindex(n, n):
            sub = phi_xy(vertex, tuple(int(t) for t in y), n)
            subs[(vertex, sub.coroots)] = sub
    out = []
    for (vertex, _), sub in sorted(subs.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
        vsub = subsystem_named(vertex)
        for sigma in subgroup_irreps(sub):
            spe = special_piece(sub, sigma)
            group = _sub_springer(vsub, g2_j_induce(sub, spe, vsub))
            twisted = special_piece(sub, tensor_sub_sign(sub, sigma))
            dual_irrep = g2_j_induce(sub, twisted, full)
            dual = g2_springer(_dual_name(dual_irrep.kind, n))[0]
            out.append(G2Candidate(vertex, sub, sigma, group, dual))
    return tuple(out)


def g2_capD(n_kappa: int, o, vertex: Optional[str] = None) -> G2Orbit:
    """Largest saturated group value over candidates whose dual value lies above o."""
    if n_kappa < 1:
        raise G2Error("n_kappa must be positive")
    o = G2Orbit.parse(o)
    vals = [
        c.group_value
        for c in g2_candidates(n_kappa)
        if o <= c.dual_value and (vertex is None or c.vertex == vertex)
    ]
    if not vals:
        raise G2Error(f"no candidate for {o} at n_kappa={n_kappa}")
    return max(vals, key=lambda v: v.closure_rank)


def g2_dbv(n_kappa: int, o) -> G2Orbit:
    return g2_capD(n_kappa, o)


# ---------------------------------------------------------------------------
# theta representations and the permutation character


def g2_fixed_points(n: int) -> dict:
    """#Fix(w) on Y/Y_{Q,n} for every element, by direct enumeration."""
    L = quotient_XN(CoverParams.of("G2", 2, n))
    return {e.key: L.fixed_points(e.matrix) for e in g2_elements()}


def g2_sigma_inner(n: int, irrep, twist_sign: bool = False) -> int:
    from .characters import _guard

    name = irrep.name if isinstance(irrep, G2Irrep) else str(irrep)
    fix = g2_fixed_points(n)
    total = Fraction(0)
    for e in g2_elements():
        chi = g2_character(name, e) * (e.sign if twist_sign else 1)
        total += chi * fix[e.key]
    return _guard(total / 12, f"<{name}{'(x)sgn' if twist_sign else ''}, sigma> G2@n={n}")


def integral_subsystem(n: int) -> Subsystem:
    """Roots alpha with <alpha^vee, nu> integral, where nu takes the value 1/n_alpha on simple roots' scaled coroots."""
    nu = (Fraction(1, n_alpha(n, Q_SIMPLE[0])), Fraction(1, n_alpha(n, Q_SIMPLE[1])))
    return subsystem(lambda v, q: (v[0] * nu[0] + v[1] * nu[1]).denominator == 1)


def theta_j_irrep(n: int) -> str:
    sub = integral_subsystem(n)
    return g2_j_induce(sub, sub_sign(sub)).kind


def g2_theta_case(n: int):
    """(case name, j-induced irrep, Levi components or None when the wavefront is not Levi-regular).

    The wavefront orbit is the dual of the regular dual orbit; the Levi subgroups of G2 have
    regular orbits 0 (torus), A1, At1 and G2, so G2(a1) has no Levi.
    """
    irrep = theta_j_irrep(n)
    wavefront = g2_dbv(n, "G2").name
    levi = {"0": [], "A1": [("A", 1)], "At1": [("At", 1)], "G2": [("G2", 2)], "G2a1": None}[wavefront]
    return f"G2@n={n}", irrep, levi


def g2_levi_subset(comps) -> LeviSubset:
    idx = set()
    for f, k in comps:
        if f == "G2":
            idx |= {1, 2}
        elif f == "At":
            idx.add(1)
        elif f == "A":
            idx.add(2)
    return LeviSubset(G2, frozenset(idx))


def g2_levi_sign_inner(n: int, comps) -> int:
    """<sign of W_J, sigma restricted to W_J> by direct enumeration of fixed points."""
    from .characters import _guard

    S = g2_levi_subset(comps)
    coroots = {(1, 0): 3, (0, 1): 1}
    sub = Subsystem(frozenset((v, q) for v, q in coroots.items() if (1 if v == (1, 0) else 2) in S.indices))
    if {1, 2} <= S.indices:
        sub = subsystem_named("G2")
    els = sub.elements()
    fix = g2_fixed_points(n)
    return _guard(Fraction(sum(e.sign * fix[e.key] for e in els), len(els)), f"<eps_J, sigma> G2@n={n} J={S.indices}")


def g2_vertex_table(n_kappa: int) -> dict:
    """D(o)_x for every orbit o and every alcove vertex x; None when x offers no candidate."""
    out = {}
    for vertex in VERTICES:
        row = {}
        for o in ORBITS:
            try:
                row[o] = g2_capD(n_kappa, o, vertex=vertex).name
            except G2Error:
                row[o] = None
        out[vertex] = row
    return out
