import logging
import multiprocessing
from typing import Any, Callable, Iterable, List, Optional, Sequence, Tuple

from tqdm import tqdm

logger = logging.getLogger(__name__)

_BAR_FORMAT = "{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})"


def _apply(packed: Tuple[Callable[..., Any], Tuple[Any, ...]]) -> Any:
    func, args = packed
    return func(*args)


class WorkerPool:
    """Order-preserving map over a process pool.

    With threads <= 1 everything runs in-process, which keeps tracebacks
    readable and is what the tests use. With `progress` set, calls that pass
    a `desc` draw a tqdm bar on stderr.
    """

    def __init__(self, threads: int = 1, chunksize: Optional[int] = None, progress: bool = False):
        self.threads = max(1, int(threads))
        self.chunksize = chunksize
        self.progress = progress
        self._pool = None

    def __enter__(self) -> "WorkerPool":
        if self.threads > 1:
            self._pool = multiprocessing.get_context("spawn").Pool(self.threads)
            logger.debug(f"Started worker pool with {self.threads} processes")
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()

    def close(self) -> None:
        if self._pool is not None:
            self._pool.close()
            self._pool.join()
            self._pool = None

    def _bar(self, iterable: Iterable[Any], total: int, desc: Optional[str]) -> Iterable[Any]:
        if not (self.progress and desc):
            return iterable
        return tqdm(iterable, total=total, desc=desc, ncols=80, leave=False, bar_format=_BAR_FORMAT)

    def map(self, func: Callable[[Any], Any], items: Iterable[Any], desc: Optional[str] = None) -> List[Any]:
        return self.starmap(func, ((item,) for item in items), desc=desc)

    def starmap(
        self,
        func: Callable[..., Any],
        arguments: Iterable[Sequence[Any]],
        desc: Optional[str] = None,
    ) -> List[Any]:
        arguments = [tuple(args) for args in arguments]
        if self._pool is None or len(arguments) < 2:
            return [func(*args) for args in self._bar(arguments, len(arguments), desc)]
        results = self._pool.imap(
            _apply, [(func, args) for args in arguments], chunksize=self._chunks(len(arguments))
        )
        return list(self._bar(results, len(arguments), desc))

    def _chunks(self, count: int) -> int:
        if self.chunksize:
            return self.chunksize
        return max(1, count // (self.threads * 4))


def pool_or_serial(pool: Optional[WorkerPool]) -> WorkerPool:
    """Return `pool`, or an in-process pool when none is supplied"""
    return pool if pool is not None else WorkerPool(1)
