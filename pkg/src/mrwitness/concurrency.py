"""Worker-count plumbing shared by the CLI --threads flag and the
WITNESS_THREADS environment variable."""

from __future__ import annotations

import os

_configured: int | None = None


def set_thread_count(count: int | None) -> None:
    global _configured
    _configured = max(1, count) if count else None


def thread_count(override: int | None = None) -> int:
    if override:
        return max(1, override)
    if _configured:
        return _configured
    env = os.environ.get("WITNESS_THREADS", "")
    if env.isdigit() and int(env) > 0:
        return int(env)
    return os.cpu_count() or 1
