"""Binary linear codes: constructions, duals, weight enumerators, doubling.

Codewords use the same bit convention as the rest of the package
(coordinate i of a length-n word is bit i of an int).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .gf2 import (
    Bitvec,
    ResourceLimitError,
    Subspace,
    UsageError,
    enumerate_rows,
    kernel,
    rref,
)

WEIGHT_SCAN_GUARD = 20


@dataclass(frozen=True)
class BinaryCode:
    length: int
    generators: Subspace

    def __post_init__(self) -> None:
        if self.generators.ambient_width != self.length:
            raise UsageError("generator width does not match code length")

    @property
    def dim(self) -> int:
        return self.generators.dim

    def codewords(self):
        return enumerate_rows(self.generators)

    def contains(self, word: Bitvec | int) -> bool:
        return self.generators.contains(word)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryCode):
            return NotImplemented
        return self.length == other.length and self.generators.rows == other.generators.rows

    def __hash__(self) -> int:
        return hash((self.length, self.generators.rows))


def from_rows(rows, length: int) -> BinaryCode:
    return BinaryCode(length, rref(rows, length))


def from_strings(rows: list[str]) -> BinaryCode:
    vecs = [Bitvec.from_string(r) for r in rows]
    return BinaryCode(vecs[0].width, rref(vecs))


def dual(code: BinaryCode) -> BinaryCode:
    return BinaryCode(code.length, kernel(code.generators.rows, code.length))


def weight_enumerator(code: BinaryCode) -> tuple[int, ...]:
    """Coefficient vector (count of codewords of weight 0..length)."""
    if code.dim > WEIGHT_SCAN_GUARD:
        raise ResourceLimitError(f"weight scan of 2^{code.dim} codewords refused")
    counts = [0] * (code.length + 1)
    for w in code.codewords():
        counts[w.bit_count()] += 1
    return tuple(counts)


def _all_weights_divisible(code: BinaryCode, modulus: int) -> bool:
    if code.dim > WEIGHT_SCAN_GUARD:
        raise ResourceLimitError(f"weight scan of 2^{code.dim} codewords refused")
    return all(w.bit_count() % modulus == 0 for w in code.codewords())


def is_even(code: BinaryCode) -> bool:
    return _all_weights_divisible(code, 2)


def is_doubly_even(code: BinaryCode) -> bool:
    return _all_weights_divisible(code, 4)


def is_triply_even(code: BinaryCode) -> bool:
    return _all_weights_divisible(code, 8)


def contains_all_ones(code: BinaryCode) -> bool:
    return code.contains((1 << code.length) - 1)


def is_self_dual(code: BinaryCode) -> bool:
    return dual(code) == code


def double_word(word: int, n: int) -> int:
    """d(a_1..a_n) = (a_1,a_1,...,a_n,a_n)."""
    out = 0
    for i in range(n):
        if (word >> i) & 1:
            out |= 0b11 << (2 * i)
    return out


def interleave_word(word: int, n: int) -> int:
    """l(a_1..a_n) = (a_1,0,a_2,0,...,a_n,0)."""
    out = 0
    for i in range(n):
        if (word >> i) & 1:
            out |= 1 << (2 * i)
    return out


def doubling(code: BinaryCode) -> BinaryCode:
    """Extended doubling: the span of d(code) and the interleaved all-ones."""
    n = code.length
    rows = [double_word(r, n) for r in code.generators.rows]
    rows.append(interleave_word((1 << n) - 1, n))
    return from_rows(rows, 2 * n)


def direct_sum(a: BinaryCode, b: BinaryCode) -> BinaryCode:
    rows = list(a.generators.rows) + [r << a.length for r in b.generators.rows]
    return from_rows(rows, a.length + b.length)


def reed_muller(r: int, m: int) -> BinaryCode:
    """RM(r, m): evaluations of degree <= r monomials on F_2^m."""
    if not 0 <= r <= m or m > 5:
        raise UsageError("reed_muller needs 0 <= r <= m <= 5")
    n = 1 << m
    rows = []
    for deg in range(r + 1):
        for support in itertools.combinations(range(m), deg):
            row = 0
            for point in range(n):
                if all((point >> j) & 1 for j in support):
                    row |= 1 << point
            rows.append(row)
    return from_rows(rows, n)


def _ladder_rows(length: int) -> list[int]:
    # rows (1111) shifted by two: the printed generator of d_{2k}
    return [0b1111 << (2 * i) for i in range((length - 2) // 2)]


_E7_ROWS = ["1111000", "1100110", "1010101"]
_E8_ROWS = ["11111111", "11110000", "11001100", "10101010"]

# cyclic [23,12] Golay generator polynomial x^11+x^9+x^7+x^6+x^5+x+1;
# the extension appends an overall parity coordinate, and the stored
# generator is validated by its weight enumerator
_GOLAY_POLY = 0b101011100011


@functools.lru_cache(maxsize=None)
def builtin(name: str) -> BinaryCode:
    """Catalog codes: d_{2k} (k <= 12), e7, e8, g24, E_n, d16plus."""
    if name.startswith("d") and name[1:].isdigit():
        length = int(name[1:])
        if length % 2 or not 4 <= length <= 24:
            raise UsageError(f"unknown builtin code {name!r}")
        return from_rows(_ladder_rows(length), length)
    if name.startswith("E") and name[1:].isdigit():
        n = int(name[1:])
        if n < 2:
            raise UsageError(f"unknown builtin code {name!r}")
        return from_rows([0b11 << i for i in range(n - 1)], n)
    if name == "e7":
        return from_strings(_E7_ROWS)
    if name == "e8":
        return from_strings(_E8_ROWS)
    if name == "d16plus":
        glue = Bitvec.from_string("10" * 8).bits
        return from_rows(_ladder_rows(16) + [glue], 16)
    if name == "g24":
        rows = []
        for i in range(12):
            word = _GOLAY_POLY << i
            rows.append(word | (word.bit_count() % 2) << 23)
        return from_rows(rows, 24)
    raise UsageError(f"unknown builtin code {name!r}")


def to_text(code: BinaryCode) -> str:
    lines = [f"{code.length} {code.dim}"]
    for row in code.generators.rows:
        lines.append(str(Bitvec(code.length, row)))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> BinaryCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("empty code text")
    try:
        length, dim = map(int, lines[0].split())
    except ValueError as exc:
        raise UsageError("code header must be 'length dim'") from exc
    rows = [Bitvec.from_string(ln.strip()) for ln in lines[1:]]
    if len(rows) != dim or any(r.width != length for r in rows):
        raise UsageError("code body does not match its header")
    code = BinaryCode(length, rref(rows, length) if rows else rref([], length))
    if code.dim != dim:
        raise UsageError("generator rows in code text are dependent")
    return code
