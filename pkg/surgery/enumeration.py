"""Parameter sweeps over both families.

Parameter tuples are generated in lexicographic order and decided either
inline or by a process pool. ``Executor.map`` preserves input order, so the
output is the same for any number of workers.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from surgery.distinctness import decide_surgery
from surgery.families import EmKnotParams, SurgeryRecord, TwistedTorusKnotParams, em_record, ttk_record
from utils.errors import ParameterError, UsageError

logger = logging.getLogger(__name__)


def parse_range(text: str) -> range:
    """Parse ``a..b`` (inclusive) or a single integer ``a``.

    ``a..b`` with a > b is the empty range.

    Raises:
        UsageError: If the text is not a range.
    """
    raw = text.strip()
    try:
        if '..' in raw:
            lo_text, _, hi_text = raw.partition('..')
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(raw)
    except ValueError:
        raise UsageError(f"not a range: {text!r} (expected a..b)") from None
    return range(lo, hi + 1)


def ttk_parameter_grid(p_range: Sequence[int], q_range: Sequence[int],
                       n_range: Sequence[int]) -> List[TwistedTorusKnotParams]:
    """Valid (p, q, n) in lexicographic order; invalid (p, q) are skipped."""
    grid = []
    skipped = 0
    for p, q, n in product(p_range, q_range, n_range):
        params = TwistedTorusKnotParams(p, q, n)
        try:
            params.validate()
        except ParameterError:
            skipped += 1
            continue
        grid.append(params)
    if skipped:
        logger.info("skipped %d parameter tuples violating the (p, q) assumptions", skipped)
    return grid


def em_parameter_grid(case, l_range: Sequence[int], m_range: Sequence[int],
                      x_range: Sequence[int], slopes: Sequence[int]) -> List[EmKnotParams]:
    return [
        EmKnotParams.create(case, l, m, x, s)
        for l, m, x, s in product(l_range, m_range, x_range, slopes)
    ]


def _decide_ttk(params: TwistedTorusKnotParams) -> SurgeryRecord:
    return decide_surgery(ttk_record(params))


def _decide_em(params: EmKnotParams) -> SurgeryRecord:
    return decide_surgery(em_record(params))


def decide_all(grid: Sequence, workers: int = 1, chunk_size: int = 64) -> Iterator[SurgeryRecord]:
    """Decide every parameter tuple, yielding records in grid order."""
    if not grid:
        return iter(())
    worker = _decide_ttk if isinstance(grid[0], TwistedTorusKnotParams) else _decide_em
    logger.info("deciding %d records with %d worker(s)", len(grid), workers)
    if workers <= 1:
        return (worker(params) for params in grid)
    return _pooled(worker, grid, workers, chunk_size)


def _pooled(worker, grid, workers: int, chunk_size: int) -> Iterator[SurgeryRecord]:
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        yield from pool.map(worker, grid, chunksize=max(1, chunk_size))
    except BaseException:
        # consumer stopped early (write failure, interrupt, close)
        logger.debug("cancelling pending enumeration work")
        pool.shutdown(wait=False, cancel_futures=True)
        raise
    pool.shutdown()


def enumerate_ttk(p_range, q_range, n_range, workers: int = 1,
                  chunk_size: int = 64) -> Iterator[SurgeryRecord]:
    return decide_all(ttk_parameter_grid(p_range, q_range, n_range), workers, chunk_size)


def enumerate_em(case, l_range, m_range, x_range, slopes: Optional[Tuple[int, ...]] = None,
                 workers: int = 1, chunk_size: int = 64) -> Iterator[SurgeryRecord]:
    slopes = slopes if slopes is not None else (0, 1)
    grid = em_parameter_grid(case, l_range, m_range, x_range, slopes)
    return decide_all(grid, workers, chunk_size)
