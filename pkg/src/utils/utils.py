"""
Utility Functions for qweyl
Logging setup, banners, summaries and report persistence
"""

import json
import logging
import os
import sys
from datetime import datetime
from typing import Any, Dict, Optional

from core.report import CheckReport


def setup_logging(level: str = 'INFO', log_to_file: bool = False, log_directory: str = 'logs') -> Optional[str]:
    """
    Setup logging configuration

    Args:
        level: Level name for the root logger
        log_to_file: Also write a timestamped log file
        log_directory: Where the log file goes

    Returns:
        Path of the log file, if one was opened
    """
    log_level = getattr(logging, level.upper(), None)
    if not isinstance(log_level, int):
        raise ValueError(f"Unknown log level: {level}")

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    logger = logging.getLogger()
    logger.setLevel(log_level)
    logger.handlers.clear()

    # stdout carries the command output; log records go to stderr
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    log_file = None
    if log_to_file:
        os.makedirs(log_directory, exist_ok=True)
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        log_file = os.path.join(log_directory, f'qweyl_{timestamp}.log')
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)
    return log_file


def print_banner(command: str, parameters: Dict[str, Any]):
    """Print the command banner"""
    print()
    print(f"🧮 qweyl {command}")
    print("=" * 60)
    for key, value in parameters.items():
        print(f"   {key}: {value}")
    print("=" * 60)


def print_entries(report: CheckReport, failures_only: bool = False):
    for entry in report.entries:
        if failures_only and entry.status == 'pass':
            continue
        mark = '✅' if entry.status == 'pass' else '❌'
        print(f"{mark} {entry.identity}")
        if entry.witness and entry.status != 'pass':
            print(f"      witness: {entry.witness}")


def print_summary(report: CheckReport):
    """Print check summary"""
    summary = report.summary()
    print()
    print(f"📊 {report.check.upper()} SUMMARY")
    print("=" * 60)
    print(f"✅ Passed: {summary['passed']}")
    print(f"❌ Failed: {summary['failed']}")
    for note in report.notes:
        print(f"📝 {note}")
    if report.passed:
        print("🎉 ALL IDENTITIES HOLD")
    else:
        print("⚠️  Some identities failed - see the witnesses above")
    print("=" * 60)


def save_report(report: CheckReport, directory: str = 'reports') -> str:
    """Write the report as JSON and return its path"""
    os.makedirs(directory, exist_ok=True)
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    path = os.path.join(directory, f"{report.check}_{timestamp}.json")
    with open(path, 'w') as f:
        json.dump(report.to_dict(), f, indent=2, default=str)
    logging.getLogger(__name__).info(f"Report saved to {path}")
    return path


def format_duration(seconds: float) -> str:
    """Format duration in human-readable format"""
    if seconds < 60:
        return f"{seconds:.1f} seconds"
    minutes = int(seconds // 60)
    return f"{minutes}m {int(seconds % 60)}s"
