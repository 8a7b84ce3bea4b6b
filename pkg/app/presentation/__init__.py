"""表示层：检查报告的纯文本渲染"""

from .report import render_check_report

__all__ = ["render_check_report"]
