"""
Logging configuration with rich colorized output, and sweep progress display
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Iterator, List, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

FULL_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
SIMPLE_FORMAT = "%(message)s"

# Loggers that follow the requested level; everything else (numpy, hypothesis, ...) stays at WARNING.
PROJECT_LOGGERS = ("src", "__main__")

_console: Optional[Console] = None


def _console_handler(level: int, use_rich: bool) -> logging.Handler:
    global _console
    if use_rich:
        _console = Console(stderr=True, highlight=True)
        handler: logging.Handler = RichHandler(
            console=_console,
            rich_tracebacks=True,
            show_time=True,
            show_path=level <= logging.DEBUG,
        )
        handler.setFormatter(logging.Formatter(SIMPLE_FORMAT))
    else:
        _console = None
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FULL_FORMAT))
    handler.setLevel(level)
    return handler


def configure_logging(
    level: int = logging.INFO,
    log_file: Optional[Path] = None,
    use_rich: bool = True,
) -> None:
    """
    Route project logs to stderr (rich or plain) and optionally to a file.

    Stdout is left to command output (JSON, tables, HDL).

    Args:
        level: Level of the project loggers (default: INFO)
        log_file: Optional file path to write logs to
        use_rich: Rich console output; plain timestamped lines otherwise
    """
    handlers: List[logging.Handler] = [_console_handler(level, use_rich)]
    if log_file is not None:
        file_handler = logging.FileHandler(log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(FULL_FORMAT))
        handlers.append(file_handler)

    logging.basicConfig(level=logging.WARNING, handlers=handlers, force=True)
    for name in PROJECT_LOGGERS:
        logging.getLogger(name).setLevel(level)


@contextmanager
def sweep_progress(total: int, description: str) -> Iterator[Callable[[], None]]:
    """
    Progress bar over the chunks of a sweep.

    Yields an advance() callable. The bar is drawn only when rich logging is
    active on a terminal and there is more than one chunk; otherwise advance()
    does nothing.
    """
    if _console is None or not _console.is_terminal or total <= 1:
        yield lambda: None
        return
    with Progress(
        TextColumn("{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=_console,
        transient=True,
    ) as progress:
        task = progress.add_task(description, total=total)
        yield lambda: progress.advance(task)
