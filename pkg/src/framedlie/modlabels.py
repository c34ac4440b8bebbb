"""Concrete models of the irreducible-module label sets.

The big label set is an elementary abelian group of order 2^18.  A label
carries a twist bit, a coset of the underlying rank-16 lattice in its dual,
and a sign bit.  Cosets are stored through scaled integer representatives
``w`` (all coordinates times 4), so a coset's squared length is |w|^2/8 and
every reduction is exact integer arithmetic.

The reduction lattice for ``w`` is {4x + 2e'(1,...,1) : x in Z^16, sum(x)
even, e' in {0,1}}.  A coset normal form is (eps, c, delta): eps the parity
of the entries, c the canonical even-weight half-vector with first
coordinate 0, delta the leftover integer-carry bit.  Complement flips of c
leave delta alone because complements of even-weight words have even
weight.
"""

from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .gf2 import FalsificationError, UsageError
from .quadspace import QuadraticSpace, standard_plus

N_COORDS = 16
C_MASK = (1 << N_COORDS) - 1

TABLE_ROW_SIZES = (1, 3, 480, 7280, 32032, 25740, 98304, 98304)
TABLE_ROW_LOWEST = {
    1: (Fraction(0), 1),
    2: (Fraction(1), 16),
    3: (Fraction(1, 2), 1),
    4: (Fraction(1), 4),
    5: (Fraction(3, 2), 16),
    6: (Fraction(2), 128),
    7: (Fraction(1), 1),
    8: (Fraction(3, 2), 16),
}


@dataclass(frozen=True)
class RXLabel:
    """Normal form of one of the 2^18 irreducible-module labels."""

    twist: int
    eps: int
    c: int
    delta: int
    sign: int

    def __post_init__(self) -> None:
        for bit in (self.twist, self.eps, self.delta, self.sign):
            if bit not in (0, 1):
                raise UsageError("label flag bits must be 0 or 1")
        if self.c >> N_COORDS:
            raise UsageError("half-vector c has more than 16 coordinates")
        if self.c & 1:
            raise UsageError("non-canonical c: first coordinate must be 0")
        if self.c.bit_count() & 1:
            raise UsageError("half-vector c must have even weight")

    def lam(self) -> tuple[int, int, int]:
        """The coset part (eps, c, delta), forgetting twist and sign."""
        return (self.eps, self.c, self.delta)


ZERO_PLUS = RXLabel(0, 0, 0, 0, 0)
ZERO_MINUS = RXLabel(0, 0, 0, 0, 1)
CHI0_PLUS = RXLabel(1, 0, 0, 0, 0)


def normal_form(twist: int, eps: int, c: int, delta: int, sign: int) -> RXLabel:
    """Canonicalize raw label fields (c may be any even-weight word)."""
    c &= C_MASK
    if c.bit_count() & 1:
        raise UsageError("c must have even weight")
    if c & 1:
        c ^= C_MASK  # complement flip; delta-neutral since wt(c) is even
    return RXLabel(twist & 1, eps & 1, c, delta & 1, sign & 1)


def label_from_w(w: Sequence[int], twist: int = 0, sign: int = 0) -> RXLabel:
    """Reduce a scaled dual-lattice vector to its label normal form."""
    if len(w) != N_COORDS:
        raise UsageError("w must have 16 coordinates")
    eps = w[0] & 1
    if any((wi & 1) != eps for wi in w):
        raise UsageError("w is not in the dual lattice: mixed parities")
    c = 0
    carry = 0
    for i, wi in enumerate(w):
        ui = (wi - eps) >> 1
        if ui & 1:
            c |= 1 << i
        carry += (ui - (ui & 1)) >> 1
    if c.bit_count() & 1:
        raise UsageError("w is not in the dual lattice: odd half-support")
    return normal_form(twist, eps, c, carry & 1, sign)


def label_to_w(label: RXLabel) -> tuple[int, ...]:
    """The canonical scaled representative eps*(1^16) + 2c + 4*delta*e1."""
    out = []
    for i in range(N_COORDS):
        wi = label.eps + 2 * ((label.c >> i) & 1)
        if i == 0:
            wi += 4 * label.delta
        out.append(wi)
    return tuple(out)


def nu_bit(eps: int, c: int, delta: int) -> int:
    """Coset norm mod 2 (0 plays the roles of the sign '+')."""
    if eps:
        return delta
    return (c.bit_count() >> 1) & 1


def nu(label: RXLabel) -> int:
    return nu_bit(*label.lam())


def qx(label: RXLabel) -> int:
    """The quadratic form: weight one grading class of the module."""
    if label.twist:
        return label.sign
    return nu(label)


def rx_add(a: RXLabel, b: RXLabel) -> RXLabel:
    """The fusion product; an elementary abelian group law of order 2^18.

    The coset parts add with an integer-carry correction to delta; the sign
    cocycle for a product involving a twisted label is nu(coset of the
    twisted factor) + nu(coset of the sum), and for two twisted factors it
    is nu of both cosets.
    """
    eps = a.eps ^ b.eps
    c = a.c ^ b.c
    delta = a.delta ^ b.delta ^ ((a.c & b.c).bit_count() & 1)
    sign = a.sign ^ b.sign
    if a.twist and b.twist:
        sign ^= nu(a) ^ nu(b)
    elif a.twist:
        sign ^= nu(a) ^ nu_bit(eps, c, delta)
    elif b.twist:
        sign ^= nu(b) ^ nu_bit(eps, c, delta)
    return RXLabel(a.twist ^ b.twist, eps, c, delta, sign)


def rx_add_via_vectors(a: RXLabel, b: RXLabel) -> RXLabel:
    """Oracle path for rx_add: add scaled representatives and re-reduce."""
    wa, wb = label_to_w(a), label_to_w(b)
    wsum = tuple(x + y for x, y in zip(wa, wb))
    sign = a.sign ^ b.sign
    if a.twist and b.twist:
        sign ^= nu(a) ^ nu(b)
    elif a.twist or b.twist:
        twisted = a if a.twist else b
        summed = label_from_w(wsum)
        sign ^= nu(twisted) ^ nu(summed)
    return label_from_w(wsum, a.twist ^ b.twist, sign)


def coset_norm(label: RXLabel) -> int:
    """|w|^2 / 8 of the canonical representative (always an integer)."""
    sq = sum(wi * wi for wi in label_to_w(label))
    if sq % 8:
        raise FalsificationError("coset representative has non-integral norm")
    return sq // 8


def coset_min_norm(label: RXLabel) -> int:
    """Minimum of |w'|^2/8 over the reduction-lattice coset of the label.

    Per-coordinate reduction into [-2, 2] for both half-vector shifts, with
    the cheapest single-coordinate repair when the even-sum parity fails;
    a +-2 residue makes the repair free.
    """
    w = label_to_w(label)
    best = None
    for shift in (0, 2):
        total = 0
        parity = 0
        cheapest = 16
        for wi in w:
            vi = wi + shift
            res = vi % 4  # non-negative in Python
            if res == 0:
                t, steps = 0, (0 - vi) // 4
            elif res == 1:
                t, steps = 1, (1 - vi) // 4
            elif res == 3:
                t, steps = -1, (-1 - vi) // 4
            else:
                t, steps = 2, (2 - vi) // 4
            total += t * t
            parity ^= steps & 1
            if t == 0:
                cost = 16
            elif t in (1, -1):
                cost = 8
            else:
                cost = 0
            if cost < cheapest:
                cheapest = cost
        if parity:
            total += cheapest
        if best is None or total < best:
            best = total
    assert best is not None and best % 8 == 0
    return best // 8


@dataclass(frozen=True)
class OrbitClass:
    row: int
    lowest_weight: Fraction
    lowest_dim: int


def orbit_class(label: RXLabel, verify: bool = False) -> OrbitClass:
    """Orbit-table row of a label with its lowest weight and lowest dim.

    With verify=True the untwisted rows are cross-checked against the coset
    min-norm decoder (the zero coset is exempt: the sign splits it across
    rows 1 and 2 regardless of norms).
    """
    if label.twist:
        row = 7 if label.sign == 0 else 8
    elif label.eps:
        row = 7 if label.delta == 0 else 8
    elif label.c == 0:
        row = 1 if (label.delta == 0 and label.sign == 0) else 2
    else:
        weff = min(label.c.bit_count(), N_COORDS - label.c.bit_count())
        row = {2: 3, 4: 4, 6: 5, 8: 6}[weff]
    lw, dim = TABLE_ROW_LOWEST[row]
    if verify and not label.twist and label.lam() != (0, 0, 0):
        if lw != Fraction(coset_min_norm(label), 2):
            raise FalsificationError(
                f"orbit table and min-norm decoder disagree on {format_label(label)}"
            )
    return OrbitClass(row, lw, dim)


def all_labels() -> Iterator[RXLabel]:
    """All 2^18 normal forms, deterministically ordered."""
    for c in canonical_c_values():
        for twist in (0, 1):
            for eps in (0, 1):
                for delta in (0, 1):
                    for sign in (0, 1):
                        yield RXLabel(twist, eps, c, delta, sign)


@functools.lru_cache(maxsize=1)
def canonical_c_values() -> tuple[int, ...]:
    out = [c for c in range(0, 1 << N_COORDS, 2) if c.bit_count() % 2 == 0]
    if len(out) != 1 << 14:
        raise FalsificationError("canonical half-vector census is off")
    return tuple(out)


def rx_census() -> tuple[int, ...]:
    """Classify every normal form; abort if the row sizes are off."""
    counts = [0] * 9
    for label in all_labels():
        counts[orbit_class(label).row] += 1
    got = tuple(counts[1:])
    if got != TABLE_ROW_SIZES or sum(got) != 1 << 18:
        raise FalsificationError(f"orbit census mismatch: {got}")
    return got


def pairing(a: RXLabel, b: RXLabel) -> int:
    """Polarization of qx under the fusion product."""
    return qx(rx_add(a, b)) ^ qx(a) ^ qx(b)


def random_label(rng: random.Random, twisted: bool | None = None) -> RXLabel:
    twist = rng.getrandbits(1) if twisted is None else int(twisted)
    c = canonical_c_values()[rng.randrange(1 << 14)]
    return RXLabel(twist, rng.getrandbits(1), c, rng.getrandbits(1), rng.getrandbits(1))


class RXCoordinates:
    """Linear coordinates on the label group with its quadratic form.

    Eighteen group-independent labels are fixed; any label is decomposed by
    pairing against them through the inverse Gram matrix.  The transported
    form lives on F_2^18 as a QuadraticSpace.
    """

    def __init__(self) -> None:
        basis: list[RXLabel] = []
        for j in range(1, 15):
            basis.append(RXLabel(0, 0, (1 << j) | (1 << (j + 1)), 0, 0))
        basis.append(RXLabel(0, 1, 0, 0, 0))
        basis.append(RXLabel(0, 0, 0, 1, 0))
        basis.append(ZERO_MINUS)
        basis.append(CHI0_PLUS)
        self.basis = tuple(basis)
        n = len(basis)
        self.gram_rows = tuple(
            sum(pairing(basis[i], basis[j]) << j for j in range(n) if j != i)
            for i in range(n)
        )
        self.q_values = tuple(qx(b) for b in basis)
        self._ginv = _invert_gf2(self.gram_rows, n)
        u_rows = []
        for i in range(n):
            row = self.q_values[i] << i
            for j in range(i + 1, n):
                row |= ((self.gram_rows[i] >> j) & 1) << j
            u_rows.append(row)
        self.space = QuadraticSpace(n, tuple(u_rows))
        for i, b in enumerate(self.basis):
            if self.to_coords(b) != 1 << i:
                raise FalsificationError("chosen label basis is group-dependent")

    def to_coords(self, label: RXLabel) -> int:
        p = 0
        for i, b in enumerate(self.basis):
            p |= pairing(label, b) << i
        coords = 0
        for i, row in enumerate(self._ginv):
            coords |= ((row & p).bit_count() & 1) << i
        return coords

    def from_coords(self, coords: int) -> RXLabel:
        out = ZERO_PLUS
        m = coords
        while m:
            low = m & -m
            out = rx_add(out, self.basis[low.bit_length() - 1])
            m ^= low
        return out


def _invert_gf2(rows: Sequence[int], n: int) -> tuple[int, ...]:
    aug = [rows[i] | (1 << (n + i)) for i in range(n)]
    for col in range(n):
        pivot = next(
            (r for r in range(col, n) if (aug[r] >> col) & 1), None
        )
        if pivot is None:
            raise FalsificationError("Gram matrix of the label basis is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        for r in range(n):
            if r != col and (aug[r] >> col) & 1:
                aug[r] ^= aug[col]
    return tuple(row >> n for row in aug)


@functools.lru_cache(maxsize=1)
def coordinatize() -> RXCoordinates:
    return RXCoordinates()


# ---------------------------------------------------------------------------
# the 10-dimensional abstract factor
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RVModel:
    """Abstract model of the small label space: the standard dim-10 form.

    All downstream computations use only the form and the lowest-weight
    classifier: zero label -> (0, 1); nonzero singular -> (1, 8);
    nonsingular -> (1/2, 1).
    """

    space: QuadraticSpace

    def lowest(self, v: int) -> tuple[Fraction, int]:
        if v == 0:
            return (Fraction(0), 1)
        if self.space.q(v) == 0:
            return (Fraction(1), 8)
        return (Fraction(1, 2), 1)


@functools.lru_cache(maxsize=1)
def rv_model() -> RVModel:
    return RVModel(standard_plus(10))


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def format_label(label: RXLabel) -> str:
    cbits = "".join(str((label.c >> i) & 1) for i in range(N_COORDS))
    sign = "+" if label.sign == 0 else "-"
    return f"t:{label.twist} e:{label.eps} c:{cbits} d:{label.delta} s:{sign}"


def parse_label(text: str) -> RXLabel:
    parts = text.split()
    fields = {}
    for part in parts:
        if ":" not in part:
            raise UsageError(f"bad label field {part!r}")
        key, val = part.split(":", 1)
        fields[key] = val
    try:
        twist = int(fields["t"])
        eps = int(fields["e"])
        cbits = fields["c"]
        delta = int(fields["d"])
        sign = {"+": 0, "-": 1}[fields["s"]]
    except (KeyError, ValueError) as exc:
        raise UsageError(f"malformed label text {text!r}") from exc
    if len(cbits) != N_COORDS or set(cbits) - {"0", "1"}:
        raise UsageError("c must be 16 bits of 0/1")
    c = sum(1 << i for i, ch in enumerate(cbits) if ch == "1")
    # the parser is strict: no complement normalization on input
    return RXLabel(twist, eps, c, delta, sign)
