"""
Helpers shared by the engine modules
"""
import logging
import time

from decorator import decorator


@decorator
def logged_computation(fn, *args, **kwargs):
    """
    Decorator for expensive computations. Logs the start and the end of the
    call on the logger of the module that defines ``fn``, with elapsed time
    """
    logger = logging.getLogger(fn.__module__)
    start = time.perf_counter()
    logger.debug(f'START {fn.__name__}')
    try:
        return fn(*args, **kwargs)
    finally:
        elapsed = time.perf_counter() - start
        logger.debug(f'END {fn.__name__} ({elapsed:.3f}s)')
