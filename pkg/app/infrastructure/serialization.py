"""结果序列化：JSON / NDJSON，复数写成 [re, im]

输出是确定性的：键排序，浮点数用 repr 精度，同一输入得到逐字节相同的文件。
"""

import json
from pathlib import Path
from typing import Any, Iterable, Union

import numpy as np
from loguru import logger

from .file_lock import FileLock


def to_jsonable(value: Any) -> Any:
    """递归转换 numpy 数组、复数和 numpy 标量"""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


def dumps(value: Any) -> str:
    return json.dumps(to_jsonable(value), ensure_ascii=False, sort_keys=True, indent=2)


def dumps_line(value: Any) -> str:
    return json.dumps(to_jsonable(value), ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def write_json(path: Union[str, Path], value: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with FileLock(path):
        path.write_text(dumps(value) + "\n", encoding="utf-8")
    logger.info(f"[输出] 已写入 {path}")
    return path


def write_ndjson(path: Union[str, Path], rows: Iterable[Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with FileLock(path):
        with path.open("w", encoding="utf-8") as f:
            for row in rows:
                f.write(dumps_line(row) + "\n")
                count += 1
    logger.info(f"[输出] 已写入 {count} 行到 {path}")
    return path
