"""Dense F_2 linear algebra on int bitsets."""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple


def solve(columns: List[int], target: int) -> Optional[int]:
    """Find a subset of ``columns`` whose XOR is ``target``.

    Returns the subset as a bitmask over column indices, or None if ``target``
    is outside the span.  Pivots are the lowest set bit, scanned in column
    order, so the answer is reproducible.
    """
    pivots: Dict[int, Tuple[int, int]] = {}
    for idx, col in enumerate(columns):
        vec, combo = _reduce(col, 1 << idx, pivots)
        if vec:
            pivots[vec & -vec] = (vec, combo)
    vec, combo = _reduce(target, 0, pivots)
    return combo if vec == 0 else None


def rank(columns: List[int]) -> int:
    pivots: Dict[int, Tuple[int, int]] = {}
    for col in columns:
        vec, _ = _reduce(col, 0, pivots)
        if vec:
            pivots[vec & -vec] = (vec, 0)
    return len(pivots)


def _reduce(vec: int, combo: int, pivots: Dict[int, Tuple[int, int]]) -> Tuple[int, int]:
    # pivot rows have their key as lowest bit, so an ascending scan never revisits a bit
    scan = vec
    while scan:
        low = scan & -scan
        entry = pivots.get(low)
        if entry is not None:
            vec ^= entry[0]
            combo ^= entry[1]
        scan = vec & ~((low << 1) - 1)
    return vec, combo
