from __future__ import annotations

import atexit
from concurrent.futures import ProcessPoolExecutor

_pools: dict[int, ProcessPoolExecutor] = {}


def _pool(jobs: int) -> ProcessPoolExecutor:
    # pools are kept for the life of the process; start-up dominates small inputs
    if jobs not in _pools:
        _pools[jobs] = ProcessPoolExecutor(max_workers=jobs)
    return _pools[jobs]


@atexit.register
def shutdown() -> None:
    for ex in _pools.values():
        ex.shutdown(cancel_futures=True)
    _pools.clear()


def pmap(fn, items, jobs: int = 1) -> list:
    """Ordered map, optionally over a process pool.  Results never depend
    on ``jobs``; only wall time does."""
    items = list(items)
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * jobs))
    return list(_pool(jobs).map(fn, items, chunksize=chunk))
