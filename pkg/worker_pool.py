"""
Process pool helpers.

Keeps the parallel fan-out in one place so engines can stay serial by
default and switch to processes through HOOKCALC_WORKERS.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from config import Config

logger = logging.getLogger(__name__)


def pool_size():
    return max(1, Config.WORKERS)


def ordered_map(func, items, chunksize=1):
    """Map a module-level function over items, preserving input order."""
    items = list(items)
    size = pool_size()
    if size <= 1 or len(items) < 2:
        return [func(item) for item in items]

    logger.debug("fan-out of %d items to %d workers", len(items), size)
    with ProcessPoolExecutor(max_workers=min(size, len(items))) as pool:
        return list(pool.map(func, items, chunksize=chunksize))
