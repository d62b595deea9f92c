"""
Run logs for `ltaction verify --log PATH`: what the command prints, log records included, is copied into
PATH.txt (stdout) and PATH.err.txt (stderr) while still reaching the console.
"""
import contextlib
import io
import logging
import sys
from pathlib import Path
from typing import Iterator, TextIO, Union


class Tee(io.TextIOBase):
    """A text stream that writes through to a console stream and a log file"""

    def __init__(self, console: TextIO, log: TextIO):
        super().__init__()
        self.console = console
        self.log = log

    @property
    def encoding(self):
        return getattr(self.console, 'encoding', None)

    def writable(self) -> bool:
        return True

    def write(self, s: str) -> int:
        self.console.write(s)
        self.log.write(s)
        self.flush()
        return len(s)

    def flush(self):
        for stream in (self.console, self.log):
            if not stream.closed:
                stream.flush()


@contextlib.contextmanager
def _handlers_on(old: TextIO, new: TextIO) -> Iterator[None]:
    # handlers made by basicConfig hold the stderr they were created with
    moved = [handler for handler in logging.getLogger().handlers
             if isinstance(handler, logging.StreamHandler) and handler.stream is old]
    for handler in moved:
        handler.setStream(new)
    try:
        yield
    finally:
        for handler in moved:
            handler.setStream(old)


@contextlib.contextmanager
def run_log(path: Union[str, Path]) -> Iterator[Path]:
    """Tees stdout and stderr into PATH.txt and PATH.err.txt for the duration of the with block"""
    path = Path(path)
    with contextlib.ExitStack() as stack:
        out_log = stack.enter_context(open(f'{path}.txt', 'w'))
        err_log = stack.enter_context(open(f'{path}.err.txt', 'w'))
        stderr = Tee(sys.stderr, err_log)
        stack.enter_context(_handlers_on(sys.stderr, stderr))
        stack.enter_context(contextlib.redirect_stdout(Tee(sys.stdout, out_log)))
        stack.enter_context(contextlib.redirect_stderr(stderr))
        yield path
