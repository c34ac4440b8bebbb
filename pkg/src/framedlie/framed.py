"""Maximal totally singular subspaces: builders, counting, classification.

Two ambient shapes are supported: three orthogonal copies of a plus-type
space of dimension 2m (the "triple" ambient, with coordinate blocks of
width 2m), and the 28-dimensional direct sum of the coordinatized big
label space with the abstract 10-dimensional one (the "pair" ambient).
"""

from __future__ import annotations

import functools
import itertools
import random
import zlib
from dataclasses import dataclass, field
from typing import Iterator

from .gf2 import (
    Bitvec,
    FalsificationError,
    ResourceLimitError,
    Subspace,
    UsageError,
    complement_in,
    enumerate_rows,
    intersect,
    kernel,
    rref,
    rref_ints,
    subspace_sum,
)
from .modlabels import (
    CHI0_PLUS,
    ZERO_MINUS,
    RXLabel,
    RXCoordinates,
    coordinatize,
    normal_form,
    orbit_class,
    qx,
    rv_model,
    rx_add,
    ZERO_PLUS,
)
from .quadspace import (
    QuadraticSpace,
    apply_map,
    direct_sum,
    isometry,
    max_ts_extend,
    nonsingular_inside,
    orthogonal_generators,
    standard_plus,
    type_of,
)

PROFILE_GUARD = 18
PAIR_RETRIES = 64


class ConstructionError(RuntimeError):
    """A seeded randomized construction exhausted its retry budget."""


# ---------------------------------------------------------------------------
# ambients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TripleAmbient:
    m: int

    @functools.cached_property
    def block(self) -> QuadraticSpace:
        return standard_plus(2 * self.m)

    @functools.cached_property
    def space(self) -> QuadraticSpace:
        return standard_plus(6 * self.m)

    @property
    def dim(self) -> int:
        return 6 * self.m

    def embed(self, v: int, block: int) -> int:
        return v << (2 * self.m * block)

    def split(self, v: int) -> tuple[int, int, int]:
        mask = (1 << (2 * self.m)) - 1
        w = 2 * self.m
        return (v & mask, (v >> w) & mask, (v >> (2 * w)) & mask)


class PairAmbient:
    """Coordinatized big label block (dim 18) followed by the small one."""

    def __init__(self, coords: RXCoordinates | None = None):
        self.coords = coords if coords is not None else coordinatize()
        self.rv = rv_model()
        self.space = direct_sum(self.coords.space, self.rv.space)
        self.dim = 28

    def split(self, v: int) -> tuple[int, int]:
        return (v & ((1 << 18) - 1), v >> 18)

    def label_of(self, v: int) -> RXLabel:
        return self.coords.from_coords(v & ((1 << 18) - 1))


@functools.lru_cache(maxsize=1)
def pair_ambient() -> PairAmbient:
    return PairAmbient()


@dataclass(frozen=True)
class MtsSubspace:
    """A maximal totally singular subspace of one of the two ambients."""

    ambient: object
    sub: Subspace
    components: dict = field(default_factory=dict, compare=False, hash=False)

    @property
    def dim(self) -> int:
        return self.sub.dim

    def space(self) -> QuadraticSpace:
        return self.ambient.space

    def validate(self) -> None:
        space = self.space()
        if 2 * self.sub.dim != space.dim:
            raise FalsificationError("subspace is not half-dimensional")
        for i, r in enumerate(self.sub.rows):
            if space.q(r):
                raise FalsificationError("basis vector is not singular")
            for r2 in self.sub.rows[:i]:
                if space.bilinear(r, r2):
                    raise FalsificationError("basis vectors are not orthogonal")
        if space.perp(self.sub).rows != self.sub.rows:
            raise FalsificationError("subspace is not self-perpendicular")


# ---------------------------------------------------------------------------
# parameter cases
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class TCCase:
    kind: str  # "cond1" | "cond2" | "even" | "odd"
    m: int = 0
    k1: int = 0
    k2: int = 0
    eps: str = ""

    def __str__(self) -> str:
        if self.kind == "even":
            return f"even({self.m},{self.k1},{self.k2},{self.eps})"
        if self.kind == "odd":
            return f"odd({self.m},{self.k1},{self.k2})"
        return self.kind


COND1 = TCCase("cond1")
COND2 = TCCase("cond2")


def even_case(m: int, k1: int, k2: int, eps: str) -> TCCase:
    return TCCase("even", m, k1, k2, eps)


def odd_case(m: int, k1: int, k2: int) -> TCCase:
    return TCCase("odd", m, k1, k2)


def _check_even_params(m: int, k1: int, k2: int, eps: str) -> None:
    if eps not in ("+", "-"):
        raise UsageError("eps must be '+' or '-'")
    if not 0 <= k2 <= k1 <= m:
        raise UsageError("need 0 <= k2 <= k1 <= m")
    d = m - k1 - k2
    if d < 0 or d % 2:
        raise UsageError("m - k1 - k2 must be even and non-negative")
    if eps == "-" and d < 2:
        raise UsageError("minus type needs a block of dimension at least 2")


def _check_odd_params(m: int, k1: int, k2: int) -> None:
    if not 0 <= k2 <= k1 <= m:
        raise UsageError("need 0 <= k2 <= k1 <= m")
    d = m - k1 - k2
    if d < 1 or d % 2 == 0:
        raise UsageError("m - k1 - k2 must be odd and positive")
    if m - k1 + k2 - 1 < 0:
        raise UsageError("no room for the middle block")


def valid_params(m: int) -> list[TCCase]:
    """All builder parameter tuples passing the preconditions."""
    out: list[TCCase] = []
    for k1 in range(m + 1):
        for k2 in range(k1 + 1):
            for eps in ("+", "-"):
                try:
                    _check_even_params(m, k1, k2, eps)
                except UsageError:
                    continue
                out.append(even_case(m, k1, k2, eps))
            try:
                _check_odd_params(m, k1, k2)
            except UsageError:
                continue
            out.append(odd_case(m, k1, k2))
    return out


# ---------------------------------------------------------------------------
# builders over the triple ambient
# ---------------------------------------------------------------------------


def _singular_line_basis(k: int) -> list[int]:
    # e_1, e_3, ... in pair coordinates: singular and mutually orthogonal
    return [1 << (2 * i) for i in range(k)]


def build_even(m: int, k1: int, k2: int, eps: str, seed: int = 0) -> MtsSubspace:
    """The even-parity family of maximal totally singular subspaces."""
    _check_even_params(m, k1, k2, eps)
    amb = TripleAmbient(m)
    space = amb.block
    rng = random.Random(seed)
    w = 2 * m
    s1 = rref(_singular_line_basis(k1), w)
    s2 = rref(_singular_line_basis(k2), w)
    p = nonsingular_inside(space, space.perp(s1), m - k1 - k2, eps == "-", rng)
    q = complement_in(s1, space.perp(subspace_sum(s1, p)), rng)
    t = complement_in(s2, space.perp(subspace_sum(s2, p)), rng)
    u = space.perp(q)
    if q.dim != m - k1 + k2 or t.dim != m + k1 - k2 or u.dim != t.dim:
        raise FalsificationError("even builder produced wrong block dimensions")
    phi = isometry(space, t, u, rng)
    rows = [amb.embed(v, 0) for v in s1.rows]
    rows += [amb.embed(v, 1) for v in s2.rows]
    rows += [amb.embed(v, 0) | amb.embed(v, 1) for v in p.rows]
    rows += [amb.embed(v, 0) | amb.embed(v, 2) for v in q.rows]
    rows += [amb.embed(v, 1) | amb.embed(phi.apply(v), 2) for v in t.rows]
    sub = rref(rows, amb.dim)
    out = MtsSubspace(
        amb, sub, {"S1": s1, "S2": s2, "P": p, "Q": q, "T": t, "U": u, "phi": phi}
    )
    out.validate()
    return out


def build_odd(m: int, k1: int, k2: int, seed: int = 0) -> MtsSubspace:
    """The odd-parity family, carrying the 2-dimensional bridge block."""
    _check_odd_params(m, k1, k2)
    amb = TripleAmbient(m)
    space = amb.block
    rng = random.Random(seed)
    w = 2 * m
    s1 = rref(_singular_line_basis(k1), w)
    s2 = rref(_singular_line_basis(k2), w)
    p = nonsingular_inside(space, space.perp(s1), m - k1 - k2 - 1, False, rng)
    q = nonsingular_inside(
        space, space.perp(subspace_sum(s1, p)), m - k1 + k2 - 1, False, rng
    )
    b = complement_in(s1, space.perp(subspace_sum(subspace_sum(s1, p), q)), rng)
    if b.dim != 2 or str(type_of(space, b)) != "plus":
        raise FalsificationError("bridge block is not a plus-type plane")
    b_elems = [v for v in enumerate_rows(b) if v]
    ys = [v for v in b_elems if space.q(v) == 1]
    zs = [v for v in b_elems if space.q(v) == 0]
    if len(ys) != 1 or len(zs) != 2:
        raise FalsificationError("bridge block has the wrong singular profile")
    y = ys[0]
    z = zs[rng.randrange(2)]
    t = complement_in(s2, space.perp(subspace_sum(subspace_sum(p, s2), b)), rng)
    u = space.perp(subspace_sum(q, b))
    if t.dim != m + k1 - k2 - 1 or u.dim != t.dim:
        raise FalsificationError("odd builder produced wrong block dimensions")
    phi = isometry(space, t, u, rng)
    rows = [amb.embed(v, 0) for v in s1.rows]
    rows += [amb.embed(v, 1) for v in s2.rows]
    rows += [amb.embed(v, 0) | amb.embed(v, 1) for v in p.rows]
    rows += [amb.embed(v, 0) | amb.embed(v, 2) for v in q.rows]
    rows += [amb.embed(v, 1) | amb.embed(phi.apply(v), 2) for v in t.rows]
    rows.append(amb.embed(y, 0) | amb.embed(y, 1))
    rows.append(amb.embed(y, 0) | amb.embed(y, 2))
    rows.append(amb.embed(z, 0) | amb.embed(z, 1) | amb.embed(z, 2))
    sub = rref(rows, amb.dim)
    out = MtsSubspace(
        amb,
        sub,
        {
            "S1": s1,
            "S2": s2,
            "P": p,
            "Q": q,
            "T": t,
            "U": u,
            "B": b,
            "y": y,
            "z": z,
            "phi": phi,
        },
    )
    out.validate()
    return out


def build_case(case: TCCase, seed: int = 0) -> MtsSubspace:
    if case.kind == "even":
        return build_even(case.m, case.k1, case.k2, case.eps, seed)
    if case.kind == "odd":
        return build_odd(case.m, case.k1, case.k2, seed)
    raise UsageError(f"no builder for case {case}")


# ---------------------------------------------------------------------------
# counting over the triple ambient
# ---------------------------------------------------------------------------


def profile(s: MtsSubspace) -> tuple[int, int]:
    """(count of one-coordinate vectors, count of two-coordinate
    nonsingular-pair vectors) by full enumeration."""
    amb = s.ambient
    if not isinstance(amb, TripleAmbient):
        raise UsageError("profile is defined over the triple ambient")
    if s.sub.dim > PROFILE_GUARD:
        raise ResourceLimitError("profile enumeration guard exceeded")
    qtab = _block_q_table(amb.m)
    n1 = n2 = 0
    w = 2 * amb.m
    mask = (1 << w) - 1
    for v in enumerate_rows(s.sub):
        b1, b2, b3 = v & mask, (v >> w) & mask, (v >> (2 * w)) & mask
        nz = (b1 != 0) + (b2 != 0) + (b3 != 0)
        if nz == 1:
            n1 += 1
        elif nz == 2:
            x, y = [b for b in (b1, b2, b3) if b]
            if qtab[x] and qtab[y]:
                n2 += 1
    return n1, n2


@functools.lru_cache(maxsize=None)
def _block_q_table(m: int) -> bytes:
    space = standard_plus(2 * m)
    return bytes(space.q(v) for v in range(1 << (2 * m)))


def lnumber_closed(case: TCCase) -> tuple[int, int]:
    """Closed forms for the profile of a built parameter case."""
    if case.kind == "even":
        _check_even_params(case.m, case.k1, case.k2, case.eps)
    elif case.kind == "odd":
        _check_odd_params(case.m, case.k1, case.k2)
    else:
        raise UsageError("closed profile forms exist only for builder cases")
    m, k1, k2 = case.m, case.k1, case.k2
    n1 = 2**k1 + 2**k2 - 2
    base = 2 ** (m - 1) + 2 ** (m + k1 - 1) + 2 ** (m + k2 - 1)
    if case.kind == "odd":
        return n1, base
    corr = 3 * 2 ** ((m + k1 + k2) // 2 - 1)
    return n1, base - corr if case.eps == "+" else base + corr


def weight1_dim_triple(s: MtsSubspace) -> int:
    """Weight-one dimension: 8 per one-coordinate vector, 1 per pair."""
    n1, n2 = profile(s)
    return 8 * n1 + n2


def weight1_closed(case: TCCase) -> int:
    n1, n2 = lnumber_closed(case)
    return 8 * n1 + n2


def check_cond1(s: MtsSubspace) -> bool:
    """Vectors supported on each single coordinate exist."""
    amb = s.ambient
    counts = _pattern_counts(s)[0]
    return counts[1] > 0 and counts[2] > 0 and counts[4] > 0


def check_cond2(s: MtsSubspace) -> bool:
    """A chain pattern (a,b,0), (0,b,c) exists up to coordinate permutation."""
    return _cond2_from_sets(_pattern_counts(s)[2])


def _pattern_counts(s: MtsSubspace):
    amb = s.ambient
    if not isinstance(amb, TripleAmbient):
        raise UsageError("condition checks are defined over the triple ambient")
    if s.sub.dim > PROFILE_GUARD:
        raise ResourceLimitError("enumeration guard exceeded")
    qtab = _block_q_table(amb.m)
    w = 2 * amb.m
    mask = (1 << w) - 1
    counts = [0] * 8
    n2 = 0
    # chain sets: for each middle coordinate j, the singular middle values
    # seen with the two possible zero patterns
    chain: dict[tuple[int, int], set[int]] = {}
    for j in range(3):
        for other in range(3):
            if other != j:
                chain[(j, other)] = set()
    for v in enumerate_rows(s.sub):
        blocks = (v & mask, (v >> w) & mask, (v >> (2 * w)) & mask)
        pat = (blocks[0] != 0) | ((blocks[1] != 0) << 1) | ((blocks[2] != 0) << 2)
        counts[pat] += 1
        if pat in (3, 5, 6):
            idx = [i for i in range(3) if blocks[i]]
            a, b = idx
            if qtab[blocks[a]] and qtab[blocks[b]]:
                n2 += 1
            if not qtab[blocks[a]]:  # both singular together
                chain[(a, b)].add(blocks[a])
                chain[(b, a)].add(blocks[b])
    return counts, n2, chain


def _cond2_from_sets(chain) -> bool:
    for j in range(3):
        others = [o for o in range(3) if o != j]
        if chain[(j, others[0])] & chain[(j, others[1])]:
            return True
    return False


def classify_triple(s: MtsSubspace) -> TCCase:
    """Decide which of the four classification branches the subspace is in.

    Condition checks come first; the remaining branches are recognized by
    the projection dimensions of the one-coordinate parts, the parity they
    force, and (in the even branch) the pair-count that separates the two
    types.  Failure to match any branch is reported loudly.
    """
    amb = s.ambient
    if not isinstance(amb, TripleAmbient):
        raise UsageError("classification is defined over the triple ambient")
    counts, n2, chain = _pattern_counts(s)
    if counts[1] and counts[2] and counts[4]:
        return COND1
    if _cond2_from_sets(chain):
        return COND2
    m = amb.m
    dims = sorted(
        ((counts[p] + 1).bit_length() - 1 for p in (1, 2, 4)), reverse=True
    )
    k1, k2, k3 = dims
    if k3 != 0:
        raise FalsificationError("nonzero third projection without condition one")
    n1 = counts[1] + counts[2] + counts[4]
    if n1 != 2**k1 + 2**k2 - 2:
        raise FalsificationError("one-coordinate census disagrees with its closed form")
    if (m - k1 - k2) % 2 == 1:
        case = odd_case(m, k1, k2)
        if n2 != lnumber_closed(case)[1]:
            raise FalsificationError("odd-branch pair census mismatch")
        return case
    for eps in ("+", "-"):
        try:
            case = even_case(m, k1, k2, eps)
            _check_even_params(m, k1, k2, eps)
        except UsageError:
            continue
        if n2 == lnumber_closed(case)[1]:
            return case
    raise FalsificationError("even-branch pair census matches neither type")


# ---------------------------------------------------------------------------
# orbifold map
# ---------------------------------------------------------------------------


def z2_orbifold(s: MtsSubspace, w: Bitvec | int) -> MtsSubspace:
    """span{W, S n W-perp}: the label-level two-torsion orbifold."""
    space = s.space()
    wv = w.bits if isinstance(w, Bitvec) else w
    if space.q(wv):
        raise UsageError("orbifold vector must be singular")
    if s.sub.contains(wv):
        raise UsageError("orbifold vector must lie outside the subspace")
    fixed = intersect(s.sub, kernel([space.functional(wv)], space.dim))
    sub = rref(list(fixed.rows) + [wv], space.dim)
    out = MtsSubspace(s.ambient, sub)
    out.validate()
    return out


def section47_orbifold_choices(s: MtsSubspace, limit: int = 5) -> list[tuple[int, int, int]]:
    """(s0, t0, W) triples for the orbifold move on the odd(5,4,0) case.

    t0 ranges over singular vectors of the T block not perpendicular to the
    first singular column space; W = (t0, 0, z).
    """
    comps = s.components
    if "T" not in comps or "z" not in comps:
        raise UsageError("need a builder-produced odd-case subspace")
    amb = s.ambient
    space = amb.block
    t_block, s1, z = comps["T"], comps["S1"], comps["z"]
    out = []
    for t0 in enumerate_rows(t_block):
        if t0 == 0 or space.q(t0):
            continue
        s0 = next((sv for sv in enumerate_rows(s1) if space.bilinear(sv, t0)), None)
        if s0 is None:
            continue
        w = amb.embed(t0, 0) | amb.embed(z, 2)
        out.append((s0, t0, w))
        if len(out) >= limit:
            break
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_text(s: MtsSubspace) -> str:
    amb = s.ambient
    if isinstance(amb, TripleAmbient):
        header = f"ambient=triple m={amb.m}"
        width = amb.dim
    else:
        header = "ambient=pair"
        width = 28
    lines = [header]
    for r in s.sub.rows:
        lines.append(str(Bitvec(width, r)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> MtsSubspace:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("ambient="):
        raise UsageError("missing ambient header")
    head = lines[0][len("ambient=") :]
    if head == "pair":
        amb: object = pair_ambient()
        width = 28
    elif head.startswith("triple m="):
        amb = TripleAmbient(int(head.split("=")[-1]))
        width = amb.dim
    else:
        raise UsageError(f"unknown ambient {head!r}")
    rows = [Bitvec.from_string(ln) for ln in lines[1:]]
    if any(r.width != width for r in rows):
        raise UsageError("row width does not match the ambient")
    out = MtsSubspace(amb, rref(rows, width))
    out.validate()
    return out


# ---------------------------------------------------------------------------
# small-m census with orbits
# ---------------------------------------------------------------------------


@dataclass
class CensusReport:
    m: int
    total: int
    per_case: dict
    orbit_count: int
    per_case_orbits: dict
    built_case_orbits: dict
    built_distinct: bool


def _all_subspace_rrefs(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(rows, pivots) for every rref matrix over F_2^n, dimension 0..n."""
    for k in range(n + 1):
        for pivots in itertools.combinations(range(n), k):
            freecols = [
                [c for c in range(p + 1, n) if c not in pivots] for p in pivots
            ]
            total = sum(len(f) for f in freecols)
            for code in range(1 << total):
                rows = []
                pos = 0
                for i, p in enumerate(pivots):
                    r = 1 << p
                    for c in freecols[i]:
                        if (code >> pos) & 1:
                            r |= 1 << c
                        pos += 1
                    rows.append(r)
                yield tuple(rows), pivots


def enumerate_maximal_ts(m: int) -> Iterator[tuple[int, ...]]:
    """Every maximal totally singular subspace of the triple ambient, once.

    Independent of the classification theory: subspaces are parameterized
    by their shadow on the even-coordinate half together with an
    alternating form on it (plus the annihilator on the odd half), which
    hits each subspace exactly once.
    """
    n = 3 * m
    spread_even = [_spread(v, n, 0) for v in range(1 << n)]
    spread_odd = [_spread(v, n, 1) for v in range(1 << n)]
    for brows, pivots in _all_subspace_rrefs(n):
        k = len(brows)
        ann = kernel(list(brows), n)
        ann_rows = [spread_odd[wv] for wv in ann.rows]
        npairs = k * (k - 1) // 2
        pairs = list(itertools.combinations(range(k), 2))
        for code in range(1 << npairs):
            lifts = [0] * k
            for bit, (i, j) in enumerate(pairs):
                if (code >> bit) & 1:
                    lifts[i] |= 1 << pivots[j]
                    lifts[j] |= 1 << pivots[i]
            rows = [
                spread_even[brows[i]] | spread_odd[lifts[i]] for i in range(k)
            ]
            yield tuple(rref_ints(rows + ann_rows))


def _spread(v: int, n: int, offset: int) -> int:
    out = 0
    for i in range(n):
        if (v >> i) & 1:
            out |= 1 << (2 * i + offset)
    return out


def mts_count_formula(m: int) -> int:
    """Product formula for the number of maximal totally singular subspaces."""
    n = 3 * m
    out = 1
    for i in range(n):
        out *= 2**i + 1
    return out


def _census_tables(m: int):
    """Per-element lookup: zero pattern and per-block nonsingular flags."""
    w = 2 * m
    qtab = _block_q_table(m)
    mask = (1 << w) - 1
    info = bytearray(1 << (6 * m))
    for v in range(1 << (6 * m)):
        b = (v & mask, (v >> w) & mask, (v >> (2 * w)) & mask)
        pat = (b[0] != 0) | ((b[1] != 0) << 1) | ((b[2] != 0) << 2)
        ns = qtab[b[0]] | (qtab[b[1]] << 1) | (qtab[b[2]] << 2)
        info[v] = pat | (ns << 3)
    return info


def _classify_rows_fast(rows, m, info, w):
    """classify_triple specialized to the small census representation."""
    mask = (1 << w) - 1
    counts = [0] * 8
    n2 = 0
    chain = {(j, o): set() for j in range(3) for o in range(3) if o != j}
    v = 0
    dim = len(rows)
    counts[0] += 1
    for i in range(1, 1 << dim):
        v ^= rows[(i & -i).bit_length() - 1]
        byte = info[v]
        pat = byte & 7
        counts[pat] += 1
        if pat in (3, 5, 6):
            ns = byte >> 3
            a = 0 if pat & 1 else 1
            b = 2 if pat & 4 else 1
            if (ns >> a) & 1 and (ns >> b) & 1:
                n2 += 1
            elif not ((ns >> a) & 1):
                blocks = (v & mask, (v >> w) & mask, (v >> (2 * w)) & mask)
                chain[(a, b)].add(blocks[a])
                chain[(b, a)].add(blocks[b])
    if counts[1] and counts[2] and counts[4]:
        return COND1
    if _cond2_from_sets(chain):
        return COND2
    dims = sorted(((counts[p] + 1).bit_length() - 1 for p in (1, 2, 4)), reverse=True)
    k1, k2, k3 = dims
    if k3 != 0:
        raise FalsificationError("nonzero third projection without condition one")
    if (m - k1 - k2) % 2 == 1:
        case = odd_case(m, k1, k2)
        if n2 != lnumber_closed(case)[1]:
            raise FalsificationError("odd-branch pair census mismatch")
        return case
    for eps in ("+", "-"):
        try:
            _check_even_params(m, k1, k2, eps)
        except UsageError:
            continue
        case = even_case(m, k1, k2, eps)
        if n2 == lnumber_closed(case)[1]:
            return case
    raise FalsificationError("even-branch pair census matches neither type")


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _wreath_generators(m: int):
    """Maps on the triple ambient: the block group on coordinate one plus
    the two coordinate permutations, as full-width row-transform tables."""
    w = 2 * m
    mask = (1 << w) - 1
    gens = []
    for g in orthogonal_generators(standard_plus(w)):
        tab = [apply_map(g, x) for x in range(1 << w)]
        gens.append(("block", tab))
    gens.append(("swap12", None))
    gens.append(("cycle", None))

    def apply(gen, row: int) -> int:
        kind, tab = gen
        b1, b2, b3 = row & mask, (row >> w) & mask, (row >> (2 * w)) & mask
        if kind == "block":
            b1 = tab[b1]
        elif kind == "swap12":
            b1, b2 = b2, b1
        else:
            b1, b2, b3 = b3, b1, b2
        return b1 | (b2 << w) | (b3 << (2 * w))

    return gens, apply


@functools.lru_cache(maxsize=None)
def census_small(m: int) -> CensusReport:
    """Enumerate, classify and orbit-partition all maximal t.s. subspaces."""
    if m not in (1, 2):
        raise ResourceLimitError("full census only at m = 1 and 2")
    w = 2 * m
    info = _census_tables(m)
    keys: dict[tuple[int, ...], int] = {}
    all_rows: list[tuple[int, ...]] = []
    cases: list[TCCase] = []
    for rows in enumerate_maximal_ts(m):
        if rows in keys:
            raise FalsificationError("duplicate subspace in the enumeration")
        keys[rows] = len(all_rows)
        all_rows.append(rows)
        cases.append(_classify_rows_fast(rows, m, info, w))
    total = len(all_rows)
    if total != mts_count_formula(m):
        raise FalsificationError(
            f"census total {total} disagrees with the product formula"
        )
    gens, apply = _wreath_generators(m)
    uf = _UnionFind(total)
    for idx, rows in enumerate(all_rows):
        for gen in gens:
            image = tuple(rref_ints([apply(gen, r) for r in rows]))
            uf.union(idx, keys[image])
    roots: dict[int, int] = {}
    per_case: dict[TCCase, int] = {}
    orbit_case: dict[int, TCCase] = {}
    for idx in range(total):
        root = uf.find(idx)
        roots[root] = roots.get(root, 0) + 1
        per_case[cases[idx]] = per_case.get(cases[idx], 0) + 1
        if root in orbit_case:
            if orbit_case[root] != cases[idx]:
                raise FalsificationError("one orbit received two classifications")
        else:
            orbit_case[root] = cases[idx]
    per_case_orbits: dict[TCCase, int] = {}
    for root, case in orbit_case.items():
        per_case_orbits[case] = per_case_orbits.get(case, 0) + 1
    built_case_orbits: dict[TCCase, int] = {}
    for case in valid_params(m):
        built = build_case(case, seed=0)
        key = built.sub.rows
        if key not in keys:
            raise FalsificationError("built subspace missing from the census")
        built_case_orbits[case] = uf.find(keys[key])
    built_distinct = len(set(built_case_orbits.values())) == len(built_case_orbits)
    return CensusReport(
        m=m,
        total=total,
        per_case={str(c): n for c, n in sorted(per_case.items())},
        orbit_count=len(roots),
        per_case_orbits={str(c): n for c, n in sorted(per_case_orbits.items())},
        built_case_orbits={str(c): r for c, r in sorted(built_case_orbits.items())},
        built_distinct=built_distinct,
    )


# ---------------------------------------------------------------------------
# the pair ambient: prescribed cases
# ---------------------------------------------------------------------------

_C1 = 0b1111
_C2 = 0b110011
_C3 = 0b01010101
_EPS_LABEL = RXLabel(0, 1, 0, 0, 0)
_A1_LABEL = RXLabel(0, 0, 0, 1, 0)


def _half(c: int) -> RXLabel:
    return normal_form(0, 0, c, 0, 0)


PAIR_CASE_GENERATORS: dict[str, tuple[RXLabel, ...]] = {
    "pcl5_3": (_half(_C1), _half(_C2), _half(_C3), _EPS_LABEL, CHI0_PLUS),
    "pcl4_3": (ZERO_MINUS, _A1_LABEL, _half(_C1), _half(_C2)),
    "pcl4_4": (ZERO_MINUS, _half(_C1), _half(_C2), _half(_C3)),
    "pcl4_5": (ZERO_MINUS, _half(_C1), _half(_C2), _EPS_LABEL),
    "pcl4_6": (_half(_C1), _half(_C2), _EPS_LABEL, CHI0_PLUS),
    "niemeier_a17e7": (ZERO_MINUS, _A1_LABEL, _half(_C1), _half(_C2), _half(_C3)),
}

PAIR_CASE_IDS = tuple(PAIR_CASE_GENERATORS)


def pair_case_prescription(case_id: str) -> Subspace:
    """The prescribed X-side shadow of the kernel part, in coordinates."""
    if case_id not in PAIR_CASE_GENERATORS:
        raise UsageError(f"unknown pair case {case_id!r}")
    amb = pair_ambient()
    gens = PAIR_CASE_GENERATORS[case_id]
    sub = rref([amb.coords.to_coords(g) for g in gens], 18)
    if sub.dim != len(gens):
        raise FalsificationError("prescribed generators are group-dependent")
    for i, g in enumerate(gens):
        if qx(g):
            raise FalsificationError("prescribed generator is nonsingular")
    return sub


def build_pair_case(case_id: str, seed: int = 0) -> MtsSubspace:
    """Embed the prescribed shadow, complete greedily, validate, retry."""
    amb = pair_ambient()
    prescription = pair_case_prescription(case_id)
    seed_base = (seed << 16) ^ (zlib.crc32(case_id.encode()) & 0xFFFF)
    partial = rref(list(prescription.rows), 28)
    last_error = None
    for attempt in range(PAIR_RETRIES):
        sub = max_ts_extend(amb.space, partial, seed=seed_base + attempt)
        if sub.dim != 14:
            last_error = "completion stalled below half dimension"
            continue
        realized = _rho_kernel_projection(sub, side=0)
        if realized.rows == prescription.rows:
            out = MtsSubspace(
                amb, sub, {"case_id": case_id, "prescription": prescription}
            )
            out.validate()
            return out
        last_error = f"shadow grew to dimension {realized.dim}"
    raise ConstructionError(
        f"pair case {case_id} failed after {PAIR_RETRIES} completions: {last_error}"
    )


def _rho_kernel_projection(sub: Subspace, side: int) -> Subspace:
    """rho_i of the part of sub that vanishes on the other side."""
    if side == 0:
        coord = rref([1 << i for i in range(18)], 28)
        part = intersect(sub, coord)
        return rref([r & ((1 << 18) - 1) for r in part.rows], 18)
    coord = rref([1 << i for i in range(18, 28)], 28)
    part = intersect(sub, coord)
    return rref([r >> 18 for r in part.rows], 10)


def rho_invariants(s: MtsSubspace) -> dict:
    """Projection data of a maximal t.s. subspace of the pair ambient.

    Asserts the projection-perp identities and the dimension bound that
    every maximal subspace must satisfy.
    """
    amb = s.ambient
    if not isinstance(amb, PairAmbient):
        raise UsageError("rho invariants are defined over the pair ambient")
    rho1 = rref([r & ((1 << 18) - 1) for r in s.sub.rows], 18)
    rho2 = rref([r >> 18 for r in s.sub.rows], 10)
    rho1_ker = _rho_kernel_projection(s.sub, side=0)
    rho2_ker = _rho_kernel_projection(s.sub, side=1)
    if amb.coords.space.perp(rho1_ker).rows != rho1.rows:
        raise FalsificationError("X-side projection identity failed")
    if amb.rv.space.perp(rho2_ker).rows != rho2.rows:
        raise FalsificationError("V-side projection identity failed")
    if rho1_ker.dim < 4:
        raise FalsificationError("kernel shadow dimension fell below four")
    return {
        "rho1": rho1,
        "rho2": rho2,
        "rho1_of_kernel2": rho1_ker,
        "rho2_of_kernel1": rho2_ker,
    }


def _iter_labels_of(sub: Subspace, amb: PairAmbient) -> Iterator[tuple[RXLabel, int]]:
    """Walk a pair-ambient subspace, tracking the X label incrementally."""
    row_labels = [amb.label_of(r) for r in sub.rows]
    cur = ZERO_PLUS
    v = 0
    yield cur, 0
    for i in range(1, 1 << sub.dim):
        j = (i & -i).bit_length() - 1
        cur = rx_add(cur, row_labels[j])
        v ^= sub.rows[j] >> 18
        yield cur, v


def _iter_x_labels(sub18: Subspace, amb: PairAmbient) -> Iterator[RXLabel]:
    row_labels = [amb.coords.from_coords(r) for r in sub18.rows]
    cur = ZERO_PLUS
    yield cur
    for i in range(1, 1 << sub18.dim):
        cur = rx_add(cur, row_labels[(i & -i).bit_length() - 1])
        yield cur


def weight1_dim_pair(s: MtsSubspace) -> dict:
    """Weight-one dimension two ways: direct enumeration and the five-term
    projection formula; a mismatch aborts loudly."""
    amb = s.ambient
    if not isinstance(amb, PairAmbient):
        raise UsageError("pair weight computation needs the pair ambient")
    inv = rho_invariants(s)
    direct = 0
    for label, v in _iter_labels_of(s.sub, amb):
        oc = orbit_class(label)
        lw2, d2 = amb.rv.lowest(v)
        if oc.lowest_weight + lw2 == 1:
            direct += oc.lowest_dim * d2
    rows_hist = {r: 0 for r in range(1, 9)}
    for label in _iter_x_labels(inv["rho1_of_kernel2"], amb):
        if label != ZERO_PLUS:
            rows_hist[orbit_class(label).row] += 1
    n_row3_full = sum(
        1 for label in _iter_x_labels(inv["rho1"], amb) if orbit_class(label).row == 3
    )
    size_ker1 = 1 << inv["rho2_of_kernel1"].dim
    terms = (
        16 * rows_hist[2],
        4 * rows_hist[4],
        rows_hist[7],
        8 * (size_ker1 - 1),
        n_row3_full * size_ker1,
    )
    if direct != sum(terms):
        raise FalsificationError(
            f"weight-one mismatch: direct {direct} vs formula terms {terms}"
        )
    return {
        "value": direct,
        "terms": terms,
        "direct": direct,
        "kernel_rows": rows_hist,
        "row3_in_rho1": n_row3_full,
    }


def build_pair_case_weight1(case_id: str, seed: int = 0) -> int:
    return weight1_dim_pair(build_pair_case(case_id, seed))["value"]


def orbit_intersection_counts(s: MtsSubspace) -> dict:
    """Row-3 count of the full X projection plus the kernel-shadow histogram."""
    data = weight1_dim_pair(s)
    return {
        "row3_in_rho1": data["row3_in_rho1"],
        "kernel_rows": data["kernel_rows"],
    }
