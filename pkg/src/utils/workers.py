from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List
from tqdm import tqdm

def parallel_map(func: Callable, items: Iterable, max_workers: int = 1,
                 show_progress: bool = False, description: str = None) -> List:
    """Order-preserving map over a thread pool; exceptions from any item propagate."""
    items = list(items)
    if not items:
        return []

    workers = max(1, min(int(max_workers), len(items)))
    if workers == 1:
        iterator = tqdm(items, desc=description, disable=not show_progress)
        return [func(item) for item in iterator]

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(func, items)
        return list(tqdm(results, total=len(items), desc=description, disable=not show_progress))
