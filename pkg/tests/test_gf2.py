import random

import pytest

from framedlie.gf2 import (
    Bitvec,
    ResourceLimitError,
    Subspace,
    UsageError,
    complement_in,
    enumerate_rows,
    enumerate_subspace,
    intersect,
    kernel,
    rref,
    subspace_sum,
    zero_subspace,
)


def brute_span(rows, width):
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


def test_bitvec_basics():
    v = Bitvec.from_string("1100")
    assert v.width == 4 and v.bits == 0b0011
    assert str(v) == "1100"
    assert (v ^ Bitvec.from_string("0110")).bits == 0b0101
    with pytest.raises(UsageError):
        v ^ Bitvec.from_string("11")
    with pytest.raises(UsageError):
        Bitvec(3, 0b1000)


def test_rref_empty_span():
    s = rref([], width=4)
    assert s.dim == 0
    assert list(enumerate_rows(s)) == [0]


def test_rref_span_matches_bruteforce():
    rows = [Bitvec.from_string("1100"), Bitvec.from_string("0110"), Bitvec.from_string("1010")]
    s = rref(rows)
    assert s.dim == 2
    assert s.contains(Bitvec.from_string("1100"))
    expect = brute_span([r.bits for r in rows], 4)
    assert set(enumerate_rows(s)) == expect


def test_rref_duplicate_rows():
    s = rref([Bitvec.from_string("1111"), Bitvec.from_string("1111")])
    assert s.dim == 1


def test_rref_is_canonical():
    rng = random.Random(7)
    for _ in range(200):
        width = rng.randrange(2, 20)
        rows = [rng.getrandbits(width) for _ in range(rng.randrange(1, 6))]
        s1 = rref(rows, width)
        # a different generating set with the same span
        alt = list(s1.rows)
        for _ in range(6):
            if len(alt) >= 2:
                i, j = rng.randrange(len(alt)), rng.randrange(len(alt))
                if i != j:
                    alt[i] ^= alt[j]
        rng.shuffle(alt)
        alt.append(0)
        assert rref(alt, width).rows == s1.rows
        # rref of a canonical basis is itself
        assert rref(s1.rows, width).rows == s1.rows


def test_rref_pivot_structure():
    rng = random.Random(13)
    for _ in range(200):
        width = rng.randrange(2, 24)
        s = rref([rng.getrandbits(width) for _ in range(6)], width)
        pivots = [(r & -r).bit_length() - 1 for r in s.rows]
        assert pivots == sorted(pivots) and len(set(pivots)) == len(pivots)
        for i, r in enumerate(s.rows):
            for j, p in enumerate(pivots):
                if i != j:
                    assert not (r >> p) & 1  # reduced above and below
        for r in s.rows:
            assert s.contains(r)


def test_mixed_widths_rejected():
    with pytest.raises(UsageError):
        rref([Bitvec.from_string("11"), Bitvec.from_string("101")])


def test_intersect_and_sum_examples():
    a = rref([Bitvec.from_string("10")])
    b = rref([Bitvec.from_string("01")])
    assert intersect(a, b).dim == 0
    s = subspace_sum(rref([Bitvec.from_string("110")]), rref([Bitvec.from_string("011")]))
    assert s.dim == 2
    assert set(enumerate_rows(s)) == brute_span([0b011, 0b110], 3)


def test_dimension_formula_random():
    rng = random.Random(20260810)
    for _ in range(1000):
        width = rng.randrange(2, 31)
        a = rref([rng.getrandbits(width) for _ in range(rng.randrange(4))] or [0], width)
        b = rref([rng.getrandbits(width) for _ in range(rng.randrange(4))] or [0], width)
        inter = intersect(a, b)
        total = subspace_sum(a, b)
        assert inter.dim + total.dim == a.dim + b.dim
        for r in inter.rows:
            assert a.contains(r) and b.contains(r)


def test_complement_in():
    a = rref([Bitvec.from_string("1100")])
    b = rref([Bitvec.from_string("1100"), Bitvec.from_string("0011")])
    c = complement_in(a, b)
    assert c.dim == 1
    assert intersect(a, c).dim == 0
    assert subspace_sum(a, c).rows == b.rows
    with pytest.raises(UsageError):
        complement_in(b, a)


def test_complement_in_seeded_choices():
    rng = random.Random(5)
    width = 8
    b = rref([rng.getrandbits(width) for _ in range(6)], width)
    a = rref(b.rows[:2], width)
    for seed in range(10):
        c = complement_in(a, b, random.Random(seed))
        assert c.dim == b.dim - a.dim
        assert intersect(a, c).dim == 0
        assert subspace_sum(a, c).rows == b.rows


def test_enumerate_properties():
    s = rref([0b100, 0b010, 0b001], 3)
    got = list(enumerate_subspace(s))
    assert len(got) == 8
    assert len({v.bits for v in got}) == 8
    assert all(s.contains(v) for v in got)

    s14 = rref([1 << i for i in range(14)], 20)
    count = sum(1 for _ in enumerate_rows(s14))
    assert count == 16384

    big = Subspace(30, tuple(1 << i for i in range(30)))
    with pytest.raises(ResourceLimitError):
        list(enumerate_rows(big))


def test_enumerate_deterministic():
    s = rref([0b110, 0b011], 3)
    assert list(enumerate_rows(s)) == list(enumerate_rows(s))


def test_kernel():
    rng = random.Random(3)
    for _ in range(100):
        width = rng.randrange(2, 16)
        funcs = [rng.getrandbits(width) for _ in range(rng.randrange(1, 5))]
        ker = kernel(funcs, width)
        for v in enumerate_rows(ker):
            assert all((f & v).bit_count() % 2 == 0 for f in funcs)
        assert ker.dim == width - rref(funcs, width).dim


def test_coefficients_roundtrip():
    rng = random.Random(11)
    s = rref([rng.getrandbits(12) for _ in range(5)], 12)
    for v in enumerate_rows(s):
        mask = s.coefficients(v)
        back = 0
        for i in range(s.dim):
            if (mask >> i) & 1:
                back ^= s.rows[i]
        assert back == v
    assert zero_subspace(12).reduce(0) == 0
