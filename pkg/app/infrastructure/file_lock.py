"""输出文件锁，避免多个进程同时写同一个结果文件"""

import os
import sys
from pathlib import Path
from typing import Optional, Union

if sys.platform == "win32":
    import msvcrt
else:
    import fcntl

from loguru import logger


class OutputLockedError(RuntimeError):
    """结果文件正被其他进程写入"""


class FileLock:
    """跨进程文件锁，锁文件与目标文件同目录：<target>.lock"""

    def __init__(self, target: Union[str, Path]):
        self.target = Path(target)
        self.lock_path = self.target.with_name(self.target.name + ".lock")
        self._lock_fd: Optional[int] = None

    def acquire(self) -> bool:
        """
        尝试获取锁（非阻塞）

        Returns:
            True 如果成功获取锁，False 如果锁已被其他进程占用
        """
        self.lock_path.parent.mkdir(parents=True, exist_ok=True)
        try:
            self._lock_fd = os.open(str(self.lock_path), os.O_CREAT | os.O_WRONLY | os.O_TRUNC)
            try:
                if sys.platform == "win32":
                    msvcrt.locking(self._lock_fd, msvcrt.LK_NBLCK, 1)
                else:
                    fcntl.flock(self._lock_fd, fcntl.LOCK_EX | fcntl.LOCK_NB)
                return True
            except OSError:
                os.close(self._lock_fd)
                self._lock_fd = None
                return False
        except OSError as e:
            logger.warning(f"[输出] 获取文件锁失败: {e}")
            self._lock_fd = None
            return False

    def release(self) -> None:
        try:
            if self.locked:
                if sys.platform == "win32":
                    msvcrt.locking(self._lock_fd, msvcrt.LK_UNLCK, 1)
                else:
                    fcntl.flock(self._lock_fd, fcntl.LOCK_UN)
                os.close(self._lock_fd)
                self._lock_fd = None
            if self.lock_path.exists():
                self.lock_path.unlink()
        except OSError as e:
            logger.warning(f"[输出] 释放文件锁失败: {e}")
            self._lock_fd = None

    @property
    def locked(self) -> bool:
        return self._lock_fd is not None

    def __enter__(self):
        if not self.acquire():
            raise OutputLockedError(f"{self.target} is being written by another process")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.release()
