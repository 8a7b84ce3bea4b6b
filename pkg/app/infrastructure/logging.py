"""日志配置模块"""

import sys
from pathlib import Path
from typing import Optional, Union

from loguru import logger

LOG_FORMAT = "{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {name}:{function}:{line} | {message}"

# 检查套件日志带有的前缀
CHECK_PREFIXES = ("[检查]",)


def default_log_dir() -> Path:
    project_root = Path(__file__).resolve().parent.parent.parent
    return project_root / "logs"


def check_filter(record) -> bool:
    """只保留检查套件相关的日志"""
    message = record["message"]
    return any(prefix in message for prefix in CHECK_PREFIXES)


def setup_logging(log_dir: Optional[Union[str, Path]] = None, level: str = "INFO") -> Path:
    """
    配置日志系统：终端输出 + 按天轮转的运行日志、错误日志和检查日志

    Args:
        log_dir: 日志目录，默认为项目根目录下的 logs/
        level: 终端与运行日志的级别

    Returns:
        实际使用的日志目录
    """
    logs_dir = Path(log_dir) if log_dir else default_log_dir()
    logs_dir.mkdir(parents=True, exist_ok=True)

    logger.remove()
    logger.add(sys.stderr, level=level)

    # 主日志文件：按日期轮转，保留30天，压缩旧日志
    logger.add(
        logs_dir / "run_{time:YYYY-MM-DD}.log",
        rotation="00:00",
        retention="30 days",
        compression="zip",
        encoding="utf-8",
        level=level,
        format=LOG_FORMAT,
        enqueue=True,
    )

    # 错误日志只记录 ERROR 及以上级别，保留更久
    logger.add(
        logs_dir / "error_{time:YYYY-MM-DD}.log",
        rotation="00:00",
        retention="90 days",
        compression="zip",
        encoding="utf-8",
        level="ERROR",
        format=LOG_FORMAT,
        enqueue=True,
    )

    logger.add(
        logs_dir / "checks_{time:YYYY-MM-DD}.log",
        rotation="00:00",
        retention="90 days",
        compression="zip",
        encoding="utf-8",
        level="INFO",
        filter=check_filter,
        format="{time:YYYY-MM-DD HH:mm:ss.SSS} | {level: <8} | {message}",
        enqueue=True,
    )

    logger.debug(f"日志系统已配置，日志文件保存在 {logs_dir}")
    return logs_dir
