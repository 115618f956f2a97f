from __future__ import annotations

import sys
from contextlib import contextmanager
from typing import Iterator


@contextmanager
def recursion_headroom(depth: int) -> Iterator[None]:
    """Temporarily make room for ``depth`` nested calls on top of the default limit."""
    saved = sys.getrecursionlimit()
    sys.setrecursionlimit(max(saved, depth + 200))
    try:
        yield
    finally:
        sys.setrecursionlimit(saved)
