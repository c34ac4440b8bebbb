"""Published regression data: candidate tables and classification tables.

Candidate tables carry the (type, dual Coxeter number, dimension) triples
exactly as printed; `extra` lists ratio-compatible types the printed table
omitted (they never enter a full decomposition, but completeness of the
generator is part of the contract).  The unprinted ratio-1 table is frozen
from this package's own enumeration.
"""

from __future__ import annotations

# case id -> (ratio string, [(token, h_vee, dim), ...] printed, [token, ...] extra)
CANDIDATE_TABLES: dict[str, tuple[str, list[tuple[str, int, int]], list[str]]] = {
    "even(5,1,0,+)": (
        "3/2",
        [
            ("A2,2", 3, 8),
            ("A5,4", 6, 35),
            ("C2,2", 3, 10),
            ("B5,6", 9, 55),
            ("C5,4", 6, 55),
            ("D4,4", 6, 28),
            ("F4,6", 9, 52),
        ],
        [],
    ),
    "even(5,1,0,-)": (
        "5/2",
        [("A4,2", 5, 24), ("B3,2", 5, 21), ("C4,2", 5, 36), ("D6,4", 10, 66)],
        [],
    ),
    "even(5,3,0,+)": (
        "7",
        [("A6,1", 7, 48), ("B4,1", 7, 36), ("C6,1", 7, 78), ("D8,2", 14, 120)],
        [],
    ),
    "even(5,3,0,-)": (
        "9",
        [
            ("A8,1", 9, 80),
            ("B5,1", 9, 55),
            ("C8,1", 9, 136),
            ("D10,2", 18, 190),
            ("E7,2", 18, 133),
            ("F4,1", 9, 52),
        ],
        [],
    ),
    "even(5,5,0,+)": ("30", [("D16,1", 30, 496), ("E8,1", 30, 248)], []),
    "even(5,2,1,+)": (
        "4",
        [
            ("A3,1", 4, 15),
            ("A7,2", 8, 63),
            ("C3,1", 4, 21),
            ("C7,2", 8, 105),
            ("D5,2", 8, 45),
            ("D7,3", 12, 91),
            ("E6,3", 12, 78),
            ("G2,1", 4, 14),
        ],
        [],
    ),
    "even(5,2,1,-)": (
        "6",
        [
            ("A5,1", 6, 35),
            ("A11,2", 12, 143),
            ("C5,1", 6, 55),
            ("D4,1", 6, 28),
            ("D7,2", 12, 91),
            ("E6,2", 12, 78),
            ("E7,3", 18, 133),
        ],
        [],
    ),
    "even(5,4,1,+)": (
        "15",
        [("A14,1", 15, 224), ("B8,1", 15, 136), ("E8,2", 30, 248)],
        [],
    ),
    "even(5,3,2,+)": (
        "9",
        [
            ("A8,1", 9, 80),
            ("B5,1", 9, 55),
            ("C8,1", 9, 136),
            ("D10,2", 18, 190),
            ("E7,2", 18, 133),
            ("F4,1", 9, 52),
        ],
        [],
    ),
    # no table is printed for the ratio-1 case; frozen from our enumeration
    "odd(5,0,0)": (
        "1",
        [
            ("A1,2", 2, 3),
            ("A2,3", 3, 8),
            ("C2,3", 3, 10),
            ("G2,4", 4, 14),
            ("A3,4", 4, 15),
            ("B3,5", 5, 21),
            ("C3,4", 4, 21),
            ("A4,5", 5, 24),
            ("D4,6", 6, 28),
            ("A5,6", 6, 35),
            ("B4,7", 7, 36),
            ("C4,5", 5, 36),
            ("D5,8", 8, 45),
            ("A6,7", 7, 48),
        ],
        [],
    ),
    "odd(5,2,0)": (
        "4",
        [
            ("A3,1", 4, 15),
            ("A7,2", 8, 63),
            ("C3,1", 4, 21),
            ("C7,2", 8, 105),
            ("D5,2", 8, 45),
            ("D7,3", 12, 91),
            ("E6,3", 12, 78),
            ("G2,1", 4, 14),
        ],
        [],
    ),
    "odd(5,4,0)": ("16", [("A15,1", 16, 255), ("D9,1", 16, 153)], []),
    "odd(5,1,1)": (
        "3",
        [
            ("A2,1", 3, 8),
            ("A5,2", 6, 35),
            ("A8,3", 9, 80),
            ("C2,1", 3, 10),
            ("B5,3", 9, 55),
            ("C5,2", 6, 55),
            ("D4,2", 6, 28),
            ("D7,4", 12, 91),
            ("E6,4", 12, 78),
            ("F4,3", 9, 52),
        ],
        [],
    ),
    "odd(5,3,1)": (
        "9",
        [
            ("A8,1", 9, 80),
            ("B5,1", 9, 55),
            ("C8,1", 9, 136),
            ("D10,2", 18, 190),
            ("E7,2", 18, 133),
            ("F4,1", 9, 52),
        ],
        [],
    ),
    "odd(5,2,2)": (
        "7",
        [("A6,1", 7, 48), ("B4,1", 7, 36), ("C6,1", 7, 78), ("D8,2", 14, 120)],
        [],
    ),
    "pcl5_3": ("9/2", [("A8,2", 9, 80), ("B5,2", 9, 55), ("F4,2", 9, 52)], []),
    # the printed ratio-11 table misses D12,2 (dim 276 <= 288); it cannot
    # complete any decomposition, so the published conclusion stands
    "pcl4_3": (
        "11",
        [("A10,1", 11, 120), ("B6,1", 11, 78), ("C10,1", 11, 210)],
        ["D12,2"],
    ),
    "pcl4_4": (
        "8",
        [("A7,1", 8, 63), ("C7,1", 8, 105), ("D5,1", 8, 45), ("D9,2", 16, 153)],
        [],
    ),
    "pcl4_5": (
        "5",
        [
            ("A4,1", 5, 24),
            ("A9,2", 10, 99),
            ("B3,1", 5, 21),
            ("B8,3", 15, 136),
            ("C4,1", 5, 36),
            ("D6,2", 10, 66),
        ],
        [],
    ),
    "pcl4_6": (
        "2",
        [
            ("A1,1", 2, 3),
            ("A3,2", 4, 15),
            ("A5,3", 6, 35),
            ("A7,4", 8, 63),
            ("C3,2", 4, 21),
            ("C5,3", 6, 55),
            ("D4,3", 6, 28),
            ("D5,4", 8, 45),
            ("D6,5", 10, 66),
            ("G2,2", 4, 14),
        ],
        [],
    ),
    "niemeier_a17e7": (
        "18",
        [("A17,1", 18, 323), ("D10,1", 18, 190), ("E7,1", 18, 133)],
        [],
    ),
}

# (case id, dim, algebra, reference-list row, provenance note)
TA8_ROWS: list[tuple[str, int, str, int, str]] = [
    ("even(5,1,0,+)", 60, "D4,4 (A2,2)^4", 13, "new"),
    ("even(5,1,0,-)", 84, "C4,2 (A4,2)^2", 22, "new"),
    ("even(5,3,0,+)", 192, "D8,2 (B4,1)^2", 47, "orbifold of N(A15 D9) model"),
    ("even(5,3,0,-)", 240, "C8,1 (F4,1)^2", 52, "new"),
    ("even(5,5,0,+)", 744, "D16,1 E8,1", 69, "lattice N(D16 E8) model"),
    ("even(5,2,1,+)", 120, "A7,2 (C3,1)^2 A3,1", 33, "known"),
    ("even(5,2,1,-)", 168, "E6,2 C5,1 A5,1", 44, "new"),
    ("even(5,4,1,+)", 384, "E8,2 B8,1", 62, "new"),
    ("even(5,3,2,+)", 240, "C8,1 (F4,1)^2", 52, "new"),
    ("odd(5,0,0)", 48, "(A3,4)^3 A1,2", 7, "known"),
    ("odd(5,2,0)", 120, "A7,2 (C3,1)^2 A3,1", 33, "known"),
    ("odd(5,4,0)", 408, "A15,1 D9,1", 63, "lattice N(A15 D9) model"),
    ("odd(5,1,1)", 96, "(A5,2)^2 C2,1 (A2,1)^2", 26, "known"),
    ("odd(5,3,1)", 240, "E7,2 B5,1 F4,1", 53, "new"),
    ("odd(5,2,2)", 192, "(C6,1)^2 B4,1", 48, "known"),
]

TA16_ROWS: list[tuple[str, int, str, int, str]] = [
    ("pcl5_3", 132, "A8,2 F4,2", 36, "new"),
    ("pcl4_3", 288, "C10,1 B6,1", 56, "known"),
    ("pcl4_4", 216, "D9,2 A7,1", 50, "orbifold of N(A17 E7) model"),
    ("pcl4_5", 144, "A9,2 A4,1 B3,1", 40, "known"),
    ("pcl4_6", 72, "D5,4 C3,2 (A1,1)^2", 19, "known"),
]

# the complete list for framed self-dual models of this central charge
LIEFRAMED_ROWS: list[tuple[int, int, str]] = [
    (7, 48, "(A3,4)^3 A1,2"),
    (10, 48, "D5,8 A1,2"),
    (13, 60, "D4,4 (A2,2)^4"),
    (18, 72, "A7,4 (A1,1)^3"),
    (19, 72, "D5,4 C3,2 (A1,1)^2"),
    (22, 84, "C4,2 (A4,2)^2"),
    (26, 96, "(A5,2)^2 C2,1 (A2,1)^2"),
    (33, 120, "A7,2 (C3,1)^2 A3,1"),
    (35, 120, "C7,2 A3,1"),
    (36, 132, "A8,2 F4,2"),
    (40, 144, "A9,2 A4,1 B3,1"),
    (44, 168, "E6,2 C5,1 A5,1"),
    (48, 192, "(C6,1)^2 B4,1"),
    (52, 240, "C8,1 (F4,1)^2"),
    (53, 240, "E7,2 B5,1 F4,1"),
    (56, 288, "C10,1 B6,1"),
    (62, 384, "E8,2 B8,1"),
]

# reference data only: rows realized inside the exceptional length-48 code
LIEDEX_ROWS: list[tuple[int, int, str]] = [
    (7, 48, "(A3,4)^3 A1,2"),
    (10, 48, "D5,8 A1,2"),
    (18, 72, "A7,4 (A1,1)^3"),
    (19, 72, "D5,4 C3,2 (A1,1)^2"),
    (26, 96, "(A5,2)^2 C2,1 (A2,1)^2"),
    (33, 120, "A7,2 (C3,1)^2 A3,1"),
    (35, 120, "C7,2 A3,1"),
    (40, 144, "A9,2 A4,1 B3,1"),
    (48, 192, "(C6,1)^2 B4,1"),
    (56, 288, "C10,1 B6,1"),
]
