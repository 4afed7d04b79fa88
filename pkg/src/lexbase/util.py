"""Small numeric helpers shared by the report renderers."""

from __future__ import annotations

from typing import Sequence


def apportion_percentages(values: Sequence[int], decimals: int = 1) -> list[float]:
    """Split 100% over ``values`` at fixed precision, largest remainder first.

    Rounding each share independently can make a printed percentage column
    sum to 99.8 or 100.2; apportioning the fixed budget of ``100 * 10**decimals``
    units instead keeps the printed column summing to exactly 100.0 whenever
    the grand total is nonzero. Ties go to earlier entries.
    """
    total = sum(values)
    if total == 0:
        return [0.0] * len(values)
    unit = 10**decimals
    budget = 100 * unit
    shares = [v * budget // total for v in values]
    remainders = [v * budget % total for v in values]
    leftover = budget - sum(shares)
    for i in sorted(range(len(values)), key=lambda i: (-remainders[i], i))[:leftover]:
        shares[i] += 1
    return [s / unit for s in shares]
