"""命令行入口：dfs-mbqc <command> --config <path> --out <path> [--seed N]

退出码：0 成功，1 配置或模拟校验失败，2 检查套件失败。
"""

import argparse
import asyncio
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv

# 在所有模块导入前，从 .env 文件加载环境变量
try:
    load_dotenv()
except Exception as e:  # noqa: BLE001
    # logger 还未配置，使用 print 输出警告
    print(f"Warning: Failed to load .env file: {e}. Continuing with environment variables...")

from loguru import logger

from .config_loader import (
    COMMAND_BLOCH_SWEEP,
    COMMAND_TOMOGRAPHY,
    COMMAND_TRANSFER,
    COMMANDS,
    RunConfig,
    load_run_config,
)
from .domain.exceptions import SimulationError
from .infrastructure import OutputLockedError, setup_logging, write_json, write_ndjson
from .presentation import render_check_report
from .services import BlochSweepService, CheckService, TomographyService, TransferService

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CHECKS_FAILED = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfs-mbqc",
        description="DFS-encoded one-way quantum computing simulator",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", default=None, help="JSON config merged over config/<command>.json")
    parser.add_argument("--out", default=None, help="output file (JSON, NDJSON for bloch-sweep)")
    parser.add_argument("--seed", type=int, default=None, help="override the config seed")
    return parser


def run_command(run: RunConfig) -> int:
    if run.command == COMMAND_TRANSFER:
        write_json(run.out, TransferService().run(run.section, run.seed))
        return EXIT_OK
    if run.command == COMMAND_TOMOGRAPHY:
        write_json(run.out, TomographyService().run(run.section, run.seed))
        return EXIT_OK
    if run.command == COMMAND_BLOCH_SWEEP:
        rows = asyncio.run(BlochSweepService(run.section.workers).run(run.section))
        write_ndjson(run.out, rows)
        return EXIT_OK

    report = CheckService(run.section, run.seed).run()
    write_json(run.out, report.to_dict())
    print(render_check_report(report))
    return EXIT_OK if report.passed else EXIT_CHECKS_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(
        log_dir=os.getenv("DFS_MBQC_LOG_DIR") or None,
        level=os.getenv("DFS_MBQC_LOG_LEVEL", "INFO"),
    )
    try:
        run = load_run_config(args.command, args.config, args.out, args.seed)
        return run_command(run)
    except SimulationError as exc:
        logger.error(f"{args.command} 失败: {exc}")
        return EXIT_INVALID
    except (OSError, OutputLockedError) as exc:
        logger.error(f"{args.command} 写入结果失败: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
