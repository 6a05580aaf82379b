"""Published Schur expansions of E_{S_2 x S_n}(q) for n = 1..6.

Keys are (x Schur partition, y Schur partition); values are ascending
coefficient lists [c_0, c_1, ...] of the polynomial in q.
"""
from __future__ import annotations

from .partitions import Partition
from .poly import RationalPoly

_T = (2,)
_S = (1, 1)

TABLE: dict[int, dict[tuple[Partition, Partition], list[int]]] = {
    1: {
        (_T, (1,)): [1],
    },
    2: {
        (_T, (2,)): [1, 1],
    },
    3: {
        (_T, (3,)): [1, 1, 1],
        (_T, (2, 1)): [0, 1],
        (_S, (3,)): [0, 1],
    },
    4: {
        (_T, (4,)): [1, 2, 2, 1],
        (_T, (3, 1)): [0, 1, 1],
        (_T, (2, 2)): [0, 1, 1],
        (_S, (4,)): [0, 1, 1],
        (_S, (3, 1)): [0, 1, 1],
    },
    5: {
        (_T, (5,)): [1, 2, 4, 2, 1],
        (_T, (4, 1)): [0, 2, 3, 2],
        (_T, (3, 2)): [0, 1, 3, 1],
        (_T, (2, 2, 1)): [0, 0, 1],
        (_S, (5,)): [0, 2, 2, 2],
        (_S, (4, 1)): [0, 1, 3, 1],
        (_S, (3, 2)): [0, 1, 2, 1],
        (_S, (3, 1, 1)): [0, 0, 1],
    },
    6: {
        (_T, (6,)): [1, 3, 6, 6, 3, 1],
        (_T, (5, 1)): [0, 2, 6, 6, 2],
        (_T, (4, 2)): [0, 2, 7, 7, 2],
        (_T, (4, 1, 1)): [0, 0, 1, 1],
        (_T, (3, 3)): [0, 0, 2, 2],
        (_T, (3, 2, 1)): [0, 0, 2, 2],
        (_T, (2, 2, 2)): [0, 0, 1, 1],
        (_S, (6,)): [0, 2, 4, 4, 2],
        (_S, (5, 1)): [0, 2, 6, 6, 2],
        (_S, (4, 2)): [0, 1, 5, 5, 1],
        (_S, (4, 1, 1)): [0, 0, 2, 2],
        (_S, (3, 3)): [0, 1, 3, 3, 1],
        (_S, (3, 2, 1)): [0, 0, 2, 2],
    },
}

MAX_N = max(TABLE)


def table_row(n: int) -> dict[tuple[Partition, Partition], RationalPoly]:
    if n not in TABLE:
        raise KeyError(f"published table covers n = 1..{MAX_N}, not {n}")
    return {k: RationalPoly.from_list(v) for k, v in TABLE[n].items()}
