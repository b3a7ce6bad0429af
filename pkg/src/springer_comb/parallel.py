"""Order-preserving parallel map used behind the --jobs flag."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def default_jobs() -> int:
    return os.cpu_count() or 1


def pmap(func, items, jobs: int | None = 1, chunksize: int | None = None) -> list:
    """``[func(x) for x in items]``, computed by up to ``jobs`` processes.

    Results always come back in input order, so callers see the same output
    regardless of the worker count.
    """
    items = list(items)
    if jobs is None:
        jobs = default_jobs()
    if jobs <= 1 or len(items) < 2:
        return [func(x) for x in items]
    jobs = min(jobs, len(items))
    if chunksize is None:
        chunksize = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(func, items, chunksize=chunksize))
