"""Process-wide instance caching."""

from collections.abc import Callable
from functools import wraps
from typing import Any


def singleton(cls: Callable[..., Any]) -> Callable[..., Any]:
    """Return a factory that builds ``cls`` once and then keeps returning it.

    Arguments of later calls are ignored. ``.reset()`` drops the cached
    instance so the next call builds a fresh one; the test fixtures use it
    to isolate :class:`~asdbench.config.config.Settings` and the logging
    manager between tests.

    Examples:
        >>> @singleton
        ... class Registry:
        ...     def __init__(self, value):
        ...         self.value = value
        ...
        >>> Registry(10) is Registry(20)
        True
    """
    cache: list[Any] = []

    @wraps(cls)
    def instance(*args, **kwargs):
        if not cache:
            cache.append(cls(*args, **kwargs))
        return cache[0]

    instance.reset = cache.clear  # type: ignore[attr-defined]
    return instance
