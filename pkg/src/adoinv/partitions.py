"""Composition sets E_{n,m}, E^N_{n,m} and E^{>=N}_{n,m}.

A partition here is a composition of m into n-1 non-negative parts.  The
lexicographic order produced by :func:`enumerate_partitions` is the single
basis order used by every matrix in the package.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def enumerate_partitions(n: int, m: int, cap: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All compositions of m into n-1 parts (each < cap if given), lexicographic."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    top = m if cap is None else min(m, cap - 1)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        if cap is not None and left > (cap - 1) * slots:
            return
        lo = 0 if slots > 1 else left
        for v in range(lo, min(left, top) + 1):
            prefix.append(v)
            rec(prefix, left - v, slots - 1)
            prefix.pop()

    rec([], m, n - 1)
    return tuple(out)


def enumerate_at_least(n: int, m: int, cap: int) -> tuple[tuple[int, ...], ...]:
    """E^{>=N}_{n,m}: compositions with some part >= cap."""
    return tuple(e for e in enumerate_partitions(n, m) if any(p >= cap for p in e))


@lru_cache(maxsize=None)
def _index_map(basis: tuple) -> dict:
    return {e: i for i, e in enumerate(basis)}


def index_of(e, basis) -> int:
    try:
        return _index_map(tuple(basis))[tuple(e)]
    except KeyError:
        raise KeyError(f"{tuple(e)} is not in the basis") from None


def count(n: int, m: int, cap: int | None = None) -> int:
    return len(enumerate_partitions(n, m, cap))
