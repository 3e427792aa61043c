"""Printed reference polynomials and frozen brute-force values.

Exponent tuples follow the ring variable order: (u, d) for the up-down
enumerators, (x,) for the degree enumerators.
"""

# up-down degree enumerators of R_1 .. R_8
UPDOWN_PRINTED = {
    1: {(1, 0): 1, (0, 1): 1},
    2: {(0, 1): 2, (2, 0): 1},
    3: {(0, 1): 1, (0, 2): 1, (1, 1): 2, (3, 0): 1},
    4: {(0, 2): 3, (1, 1): 2, (2, 1): 2, (4, 0): 1},
    5: {(0, 2): 5, (1, 2): 2, (2, 1): 3, (3, 1): 2, (5, 0): 1},
    6: {(0, 2): 4, (0, 3): 2, (1, 2): 6, (2, 2): 2, (3, 1): 4, (4, 1): 2, (6, 0): 1},
    7: {
        (0, 2): 3,
        (0, 3): 7,
        (1, 2): 5,
        (2, 2): 9,
        (3, 2): 2,
        (4, 1): 5,
        (5, 1): 2,
        (7, 0): 1,
    },
    8: {
        (0, 2): 2,
        (0, 3): 10,
        (0, 4): 1,
        (1, 2): 4,
        (1, 3): 8,
        (2, 2): 7,
        (3, 2): 12,
        (4, 2): 2,
        (5, 1): 6,
        (6, 1): 2,
        (8, 0): 1,
    },
}

# degree enumerators g_1 .. g_10
G_PRINTED = {
    1: {(1,): 2},
    2: {(2,): 1, (1,): 2},
    3: {(3,): 1, (2,): 3, (1,): 1},
    4: {(4,): 1, (3,): 2, (2,): 5},
    5: {(5,): 1, (4,): 2, (3,): 5, (2,): 5},
    6: {(6,): 1, (5,): 2, (4,): 6, (3,): 8, (2,): 4},
    7: {(7,): 1, (6,): 2, (5,): 7, (4,): 9, (3,): 12, (2,): 3},
    8: {(8,): 1, (7,): 2, (6,): 8, (5,): 12, (4,): 16, (3,): 14, (2,): 2},
    9: {(9,): 1, (8,): 2, (7,): 9, (6,): 15, (5,): 22, (4,): 24, (3,): 14, (2,): 2},
    10: {
        (10,): 1,
        (9,): 2,
        (8,): 10,
        (7,): 18,
        (6,): 30,
        (5,): 32,
        (4,): 39,
        (3,): 10,
        (2,): 2,
    },
}

# the three printed R_4 enumerators
R4_DOWN = {(0, 0): 1, (0, 1): 4, (0, 2): 3}
R4_UP = {(0, 0): 3, (1, 0): 2, (2, 0): 2, (4, 0): 1}
R4_DEGREE = {(2,): 5, (3,): 2, (4,): 1}

# brute-force edge counts of R_1 .. R_13
EDGE_COUNTS = [1, 2, 5, 10, 19, 36, 66, 120, 215, 382, 673, 1178, 2050]

# degree census of R_4 as {(up, down): count}
R4_CENSUS = {(0, 2): 3, (1, 1): 2, (2, 1): 2, (4, 0): 1}

# Boolean-interval violations and comparable pairs per n
POSET_PAIRS = {1: 3, 2: 5, 3: 11, 4: 21, 5: 42, 6: 83, 7: 163, 8: 323}
POSET_VIOLATIONS = {1: 0, 2: 0, 3: 0, 4: 0, 5: 3, 6: 6, 7: 16, 8: 38}
