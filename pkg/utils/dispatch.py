from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Sequence, TypeVar

from tqdm import tqdm

from utils.log import get_logger

T = TypeVar("T")
R = TypeVar("R")

logger = get_logger("dispatch")


def split_partitions(items: Sequence[T], count: int) -> List[Sequence[T]]:
    """Split items into at most `count` contiguous, non-empty slices."""
    count = max(1, min(count, len(items)))
    size, extra = divmod(len(items), count)
    partitions = []
    start = 0
    for index in range(count):
        end = start + size + (1 if index < extra else 0)
        partitions.append(items[start:end])
        start = end
    return [part for part in partitions if len(part)]


def dispatch_partitions(
    items: Sequence[T],
    worker: Callable[[Sequence[T]], R],
    reduce: Callable[[R, R], R],
    max_workers: int = 1,
    desc: str = "Summing partitions",
    progress: bool = False,
) -> R:
    """Run `worker` over partitions of `items` and fold the results.

    Results are folded in partition order, not completion order, so the value
    does not depend on scheduling.
    """
    partitions = split_partitions(items, max_workers)
    count = len(partitions)
    if count == 0:
        raise ValueError("Nothing to dispatch: empty item sequence.")
    logger.info(
        f"Dispatching {len(items)} items in {count} partitions, max workers: {max_workers}"
    )

    results = [None] * count
    failures = {}
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        futures = {
            executor.submit(worker, partition): index
            for index, partition in enumerate(partitions)
        }
        logger.debug("All partitions submitted, waiting for completion...")
        for future in tqdm(
            as_completed(futures),
            total=count,
            desc=desc,
            unit="partition",
            disable=not progress,
        ):
            index = futures[future]
            try:
                results[index] = future.result()
                logger.debug(f"Partition {index + 1} / {count} finished")
            except Exception as exc:
                logger.error(f"Partition {index + 1} / {count} raised: {exc}")
                failures[index] = exc

    if failures:
        names = ", ".join(str(index + 1) for index in sorted(failures))
        first = failures[min(failures)]
        raise RuntimeError(f"Partitions {names} / {count} failed") from first

    total = results[0]
    for result in results[1:]:
        total = reduce(total, result)
    logger.info(f"Finished {count} partitions")
    return total
