"""Per-source fan-out over worker processes.

Sources are split into contiguous chunks and results come back in chunk
order, so any reduction the caller performs sees the same sequence no matter
how many workers ran.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def chunks(items, n_chunks):
    items = list(items)
    n_chunks = max(1, min(n_chunks, len(items)))
    size, extra = divmod(len(items), n_chunks)
    out, start = [], 0
    for i in range(n_chunks):
        stop = start + size + (1 if i < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


def map_chunks(fn, args_prefix, sources, workers=1):
    """Call ``fn(*args_prefix, chunk)`` for each chunk of ``sources``.

    With ``workers <= 1`` everything runs in-process as a single chunk.
    """
    sources = list(sources)
    if workers is None or workers <= 1 or len(sources) < 2:
        return [fn(*args_prefix, sources)]
    parts = chunks(sources, workers * 4)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args_prefix, part) for part in parts]
        return [f.result() for f in futures]
