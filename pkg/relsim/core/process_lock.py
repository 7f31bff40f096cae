# relsim/core/process_lock.py
from pathlib import Path

from filelock import FileLock

from relsim.config import settings


def report_lock(report_path: str | Path, timeout: float = 120) -> FileLock:
    """
    Cross-process lock for one report file.

    Only one process can write a given report at a time; the lock file
    lives in LOCK_DIR so read-only report directories still work.
    """
    lock_dir = Path(settings.LOCK_DIR)
    lock_dir.mkdir(parents=True, exist_ok=True)
    name = Path(report_path).name or "report"
    return FileLock(lock_dir / f"{name}.lock", timeout=timeout)
