"""Sporadic tilings as (tile id, chirality, corner vertex ids) triples.

Corners are listed in the order alpha, beta, gamma, delta.  Generated
once by tools/search_sporadic.py and checked by the validator and the
geometric realizer in the test suite.
"""

TILINGS = {
    'emt12_a2b_c3': [
        (0, '+', (0, 1, 2, 3)),
        (1, '+', (1, 0, 4, 5)),
        (2, '-', (0, 4, 6, 3)),
        (3, '-', (1, 2, 7, 5)),
        (4, '+', (8, 9, 3, 2)),
        (5, '-', (9, 3, 6, 10)),
        (6, '-', (8, 11, 7, 2)),
        (7, '+', (9, 8, 11, 10)),
        (8, '-', (12, 5, 7, 11)),
        (9, '+', (12, 13, 10, 11)),
        (10, '+', (13, 12, 5, 4)),
        (11, '-', (13, 10, 6, 4)),
    ],
    'emt16_a2b_bcd2': [
        (0, '+', (0, 1, 2, 3)),
        (1, '+', (1, 0, 4, 5)),
        (2, '-', (0, 4, 6, 3)),
        (3, '-', (1, 2, 7, 5)),
        (4, '+', (8, 9, 3, 2)),
        (5, '-', (9, 3, 6, 10)),
        (6, '-', (8, 11, 7, 2)),
        (7, '+', (9, 8, 11, 10)),
        (8, '+', (12, 13, 5, 4)),
        (9, '-', (13, 5, 7, 14)),
        (10, '-', (15, 14, 7, 11)),
        (11, '-', (12, 16, 6, 4)),
        (12, '+', (13, 12, 16, 14)),
        (13, '-', (17, 10, 6, 16)),
        (14, '+', (15, 17, 10, 11)),
        (15, '+', (17, 15, 14, 16)),
    ],
    'emt16_bd2_a2c2': [
        (0, '+', (0, 1, 2, 3)),
        (1, '+', (4, 3, 2, 5)),
        (2, '-', (0, 6, 4, 3)),
        (3, '+', (7, 1, 0, 8)),
        (4, '+', (9, 8, 0, 6)),
        (5, '-', (9, 10, 4, 6)),
        (6, '-', (4, 10, 11, 5)),
        (7, '-', (2, 5, 11, 12)),
        (8, '+', (2, 1, 13, 12)),
        (9, '+', (13, 1, 7, 14)),
        (10, '+', (11, 12, 13, 15)),
        (11, '-', (11, 10, 16, 15)),
        (12, '-', (16, 10, 9, 17)),
        (13, '-', (7, 17, 9, 8)),
        (14, '+', (16, 14, 7, 17)),
        (15, '-', (13, 15, 16, 14)),
    ],
    'f16_bc2_a2d2': [
        (0, '+', (0, 1, 2, 3)),
        (1, '+', (4, 2, 1, 5)),
        (2, '+', (6, 5, 1, 0)),
        (3, '-', (7, 4, 2, 3)),
        (4, '+', (7, 4, 8, 9)),
        (5, '+', (5, 10, 8, 4)),
        (6, '-', (6, 5, 10, 11)),
        (7, '+', (9, 8, 10, 11)),
        (8, '+', (0, 12, 13, 6)),
        (9, '+', (3, 14, 12, 0)),
        (10, '-', (11, 15, 13, 6)),
        (11, '+', (15, 13, 12, 14)),
        (12, '-', (3, 14, 16, 7)),
        (13, '+', (9, 17, 16, 7)),
        (14, '+', (11, 15, 17, 9)),
        (15, '+', (14, 16, 17, 15)),
    ],
    'octa24_b3': [
        (0, '+', (0, 1, 2, 3)),
        (1, '+', (4, 1, 0, 5)),
        (2, '+', (2, 1, 4, 6)),
        (3, '-', (7, 8, 0, 5)),
        (4, '-', (0, 8, 9, 3)),
        (5, '-', (9, 8, 7, 10)),
        (6, '-', (11, 12, 2, 3)),
        (7, '-', (2, 12, 13, 6)),
        (8, '+', (11, 14, 9, 3)),
        (9, '+', (9, 14, 15, 10)),
        (10, '+', (15, 14, 11, 16)),
        (11, '-', (13, 12, 11, 16)),
        (12, '-', (17, 18, 4, 6)),
        (13, '-', (4, 18, 19, 5)),
        (14, '+', (7, 20, 19, 5)),
        (15, '+', (17, 21, 13, 6)),
        (16, '+', (13, 21, 22, 16)),
        (17, '-', (15, 23, 22, 16)),
        (18, '+', (24, 20, 7, 10)),
        (19, '-', (24, 23, 15, 10)),
        (20, '+', (22, 21, 17, 25)),
        (21, '-', (22, 23, 24, 25)),
        (22, '-', (19, 18, 17, 25)),
        (23, '+', (19, 20, 24, 25)),
    ],
}
