"""Deterministic work distribution.

Batch drivers may fan independent units (grid cells, sampling shards) over
a thread pool; results are always merged in submission order, so output is
identical whatever ``SHARPKIT_THREADS`` says.
"""

import os
from concurrent.futures import ThreadPoolExecutor

DEFAULT_THREADS = 1


def worker_count() -> int:
    raw = os.environ.get("SHARPKIT_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return DEFAULT_THREADS
    return max(n, 1)


def ordered_map(fn, items):
    """Apply ``fn`` over ``items``, preserving order; threaded when allowed."""
    items = list(items)
    workers = worker_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
