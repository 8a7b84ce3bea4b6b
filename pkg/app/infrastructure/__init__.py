"""基础设施层：日志、文件锁、结果序列化"""

from .file_lock import FileLock, OutputLockedError
from .logging import setup_logging
from .serialization import dumps, dumps_line, to_jsonable, write_json, write_ndjson

__all__ = [
    "FileLock",
    "OutputLockedError",
    "setup_logging",
    "dumps",
    "dumps_line",
    "to_jsonable",
    "write_json",
    "write_ndjson",
]
