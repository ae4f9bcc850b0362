"""Reference values the computations are checked against.

Diagonal tables are stored as ``{offset: {n: dim}}`` with every unlisted
n in range meaning zero.
"""
from __future__ import annotations

# HH^n_{(offset-n)}(B), n = 1..14
HH_B = {
    1: {1: 2, 2: 1, 4: 1},
    2: {3: 1, 5: 1, 6: 1, 8: 1},
    3: {7: 1, 9: 1, 10: 1, 12: 1},
}

# individual cells (module, n, m, dim), grouped by item letter
ITEMS_B0_B1 = {
    "a": [("B1", 1, 0, 1), ("B0", 1, 0, 1)],
    "b": [("B1", 2, -1, 0), ("B1", 3, -1, 1)],
    "c": [("B0", 2, -1, 1), ("B0", 3, -2, 2), ("B1", 4, -2, 2), ("B1", 5, -3, 1)],
    "d": [("B0", 4, -3, 1), ("B0", 5, -3, 0)],
    "e": [("B1", 6, -4, 0), ("B1", 7, -4, 1)],
    "f": [("B0", 6, -4, 1), ("B0", 7, -5, 2), ("B1", 8, -5, 2), ("B1", 9, -6, 1)],
    "g": [("B0", 8, -6, 1), ("B0", 9, -6, 0)],
    "h": [("B1", 10, -7, 0), ("B1", 11, -7, 1)],
    "i": [("B0", 10, -7, 1), ("B0", 11, -8, 2), ("B1", 12, -8, 2), ("B1", 13, -9, 1)],
    "j": [("B0", 12, -9, 1), ("B0", 13, -9, 0)],
}

ITEMS_B = {
    "a": [("B", 1, 0, 2)],
    "b": [("B", 2, -1, 1), ("B", 3, -1, 1)],
    "c": [("B", 3, -2, 0), ("B", 4, -2, 0)],
    "d": [("B", 4, -3, 1), ("B", 5, -3, 1)],
    "e": [("B", 6, -4, 1), ("B", 7, -4, 1)],
    "f": [("B", 7, -5, 0), ("B", 8, -5, 0)],
    "g": [("B", 8, -6, 1), ("B", 9, -6, 1)],
    "h": [("B", 10, -7, 1), ("B", 11, -7, 1)],
    "i": [("B", 11, -8, 0), ("B", 12, -8, 0)],
    # the second cell is printed with the same index twice; the sequence gives 13
    "j": [("B", 12, -9, 1), ("B", 13, -9, 1)],
}

# HH^n_{(offset-n)}(module), n = 1..14
HH_SMALL = {
    "ideal": {1: {}, 2: {3: 2, 4: 2}, 3: {7: 2, 8: 2}, 4: {11: 2, 12: 2}},
    "ids": {1: {3: 2, 4: 2}, 2: {7: 2, 8: 2}, 3: {11: 2, 12: 2}},
    "eta": {1: {1: 1, 2: 1}, 2: {5: 1, 6: 1}, 3: {9: 1, 10: 1}, 4: {13: 1, 14: 1}},
    "theta": {1: {1: 1, 2: 1}, 2: {5: 1, 6: 1}, 3: {9: 1, 10: 1}, 4: {13: 1, 14: 1}},
}

# H_n(C^{(n-shift)}(label)), n = 1..14
CHAIN = {
    "L": {0: {}, 1: {3: 1, 4: 1}, 2: {7: 1, 8: 1}, 3: {11: 1, 12: 1}},
    "O": {0: {}, 1: {3: 1, 4: 1}, 2: {7: 1, 8: 1}, 3: {11: 1, 12: 1}},
    "eta": {0: {1: 1, 2: 1}, 1: {5: 1, 6: 1}, 2: {9: 1, 10: 1}, 3: {13: 1, 14: 1}},
    "theta": {1: {1: 1, 2: 1}, 2: {5: 1, 6: 1}, 3: {9: 1, 10: 1}, 4: {13: 1, 14: 1}},
}

NMAX = 14

# reference scalars: value / (t^k e_{2k})
BETA_M6 = -5
TX_M6 = -10
TW_M6 = 5
GAMMA_M8 = -35

ACCEPT_TAUS = ("0+1i", "0+2i", "0.3+1.2i")
J_TAUS = ("0+2i", "0.5+1.3i")


def expected_row(table: dict[int, int], nmax: int = NMAX, nmin: int = 1) -> list[int]:
    return [table.get(n, 0) for n in range(nmin, nmax + 1)]
