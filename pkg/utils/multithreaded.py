import concurrent.futures
import multiprocessing
import os
from typing import Any, Callable, Iterable, List, Optional, Tuple

THREADS_ENV = 'LTACTION_THREADS'

ThreadArgs = Tuple[tuple, dict]


def default_threads() -> int:
    """The worker count: $LTACTION_THREADS when set, else the number of processor cores"""
    value = os.environ.get(THREADS_ENV)
    if value:
        threads = int(value)
        if threads < 1:
            raise ValueError(f'{THREADS_ENV} must be positive, got {value}')
        return threads
    return multiprocessing.cpu_count()


def _identity(x):
    return x


def _whole_call(_, *args, **kwargs) -> Iterable[ThreadArgs]:
    return [(args, kwargs)]


class Multithreaded:
    """
    A function fanned out over a thread pool.

    The params hook receives the thread count followed by the call arguments and returns one (args, kwargs)
    pair per task; the function runs once per pair. The after hook receives the list of task results, in
    task order, and produces the return value of the call. The first exception raised by a task is
    re-raised from the call.

    Attributes:
        threads: the pool size
    """

    def __init__(self, func: Callable, threads: Optional[int] = None):
        self._function = func
        self._params: Callable[..., Iterable[ThreadArgs]] = _whole_call
        self._after: Callable[[List[Any]], Any] = _identity
        self.__name__ = func.__name__
        self.__doc__ = func.__doc__
        self.threads = threads or default_threads()

    def params(self, params: Callable[..., Iterable[ThreadArgs]]):
        self._params = params
        return params

    def after(self, func: Callable[[List[Any]], Any]):
        self._after = func
        return func

    def __call__(self, *args, **kwargs):
        tasks = list(self._params(self.threads, *args, **kwargs))
        with concurrent.futures.ThreadPoolExecutor(self.threads) as executor:
            futures = [executor.submit(self._function, *t_args, **t_kwargs) for t_args, t_kwargs in tasks]
            outs = [future.result() for future in futures]
        return self._after(outs)

    def __len__(self):
        return self.threads


def multithreaded(func=None, *, threads: Optional[int] = None):
    """
    Decorator form of Multithreaded; both @multithreaded and @multithreaded(threads=4) work.
    :param func: the per-task function
    :param threads: the pool size, defaults to default_threads()
    """
    return Multithreaded(func, threads) if func else (lambda f: Multithreaded(f, threads))
