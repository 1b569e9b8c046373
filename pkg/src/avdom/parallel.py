"""Deterministic partitioned map/reduce on top of ``concurrent.futures``.

Work is split into contiguous chunks and results are folded in chunk order,
so the outcome never depends on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from functools import reduce
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

WORKERS_ENV = "AVDOM_WORKERS"


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"{WORKERS_ENV} must be a positive integer, got {raw!r}") from None


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[0, total)`` into at most ``parts`` contiguous nonempty ranges."""
    parts = max(1, min(parts, total)) if total else 1
    step, extra = divmod(total, parts)
    out, lo = [], 0
    for i in range(parts):
        hi = lo + step + (i < extra)
        out.append((lo, hi))
        lo = hi
    return out


def _apply_chunk(args):
    fn, chunk = args
    return [fn(x) for x in chunk]


def ordered_map(fn: Callable[[T], R], items: Iterable[T], workers: int = 1, chunksize: int = 256) -> list[R]:
    """``[fn(x) for x in items]``, optionally across processes, order preserved."""
    items = list(items)
    if workers <= 1 or len(items) <= chunksize:
        return [fn(x) for x in items]
    chunks = [items[i:i + chunksize] for i in range(0, len(items), chunksize)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_apply_chunk, [(fn, c) for c in chunks])
        return [r for part in parts for r in part]


def range_reduce(fn: Callable[[int, int], R], total: int, merge: Callable[[R, R], R],
                 workers: int = 1, parts: int | None = None) -> R:
    """Fold ``fn(lo, hi)`` over a contiguous partition of ``[0, total)``.

    ``merge`` must be associative; partials are combined left to right.
    """
    ranges = split_range(total, parts if parts is not None else max(1, workers))
    if workers <= 1 or len(ranges) == 1:
        partials: Sequence[R] = [fn(lo, hi) for lo, hi in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(fn, *zip(*ranges)))
    return reduce(merge, partials)
