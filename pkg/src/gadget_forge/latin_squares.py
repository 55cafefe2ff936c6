"""
Cyclic Latin squares over prime orders and orthogonality checks
"""
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from graph_core.errors import ParameterError


def is_prime(n: int) -> bool:
    """Trial division"""
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True, eq=False)
class LatinSquare:
    """p x p array over 1..p with every row and column a permutation"""

    order: int
    cells: np.ndarray

    def __post_init__(self):
        cells = np.asarray(self.cells, dtype=np.int64)
        p = self.order
        if p < 1 or cells.shape != (p, p):
            raise ParameterError(f"cells must be a {p}x{p} array")
        symbols = np.arange(1, p + 1)
        rows_ok = all(np.array_equal(np.sort(row), symbols) for row in cells)
        cols_ok = all(np.array_equal(np.sort(col), symbols) for col in cells.T)
        if not (rows_ok and cols_ok):
            raise ParameterError("not a Latin square: some row or column repeats a symbol")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    def __getitem__(self, position) -> int:
        """1-based (row, column) lookup"""
        i, j = position
        return int(self.cells[i - 1, j - 1])

    def rows(self) -> List[List[int]]:
        return self.cells.tolist()


def latin_square_cyclic(p: int, r: int) -> LatinSquare:
    """
    Cyclic square with cell (i, j) = ((i-1) + r(j-1) mod p) + 1

    Args:
        p: Prime order
        r: Multiplier, 1 <= r <= p-1

    Returns:
        LatinSquare of order p
    """
    if not is_prime(p):
        raise ParameterError(f"order {p} is not prime")
    if not 1 <= r <= p - 1:
        raise ParameterError(f"multiplier {r} outside 1..{p - 1}")
    i = np.arange(p).reshape(-1, 1)
    j = np.arange(p).reshape(1, -1)
    return LatinSquare(p, (i + r * j) % p + 1)


def are_orthogonal(a: LatinSquare, b: LatinSquare) -> bool:
    """True iff the p^2 superimposed pairs (a[i][j], b[i][j]) are distinct"""
    if a.order != b.order:
        raise ParameterError(f"orders differ: {a.order} vs {b.order}")
    codes = a.cells * (a.order + 1) + b.cells
    return np.unique(codes).size == a.order * a.order


def cyclic_mols(p: int) -> List[LatinSquare]:
    """The p-1 cyclic squares of prime order p"""
    return [latin_square_cyclic(p, r) for r in range(1, p)]


def window_prime(k: int) -> int:
    """
    Smallest prime p with 0.1k <= p <= 0.2k

    Raises:
        ParameterError: k too small for the window to contain a prime
    """
    low = math.ceil(k / 10)
    high = k // 5
    for p in range(max(low, 2), high + 1):
        if is_prime(p):
            return p
    raise ParameterError(f"no prime between 0.1*{k} and 0.2*{k}")
