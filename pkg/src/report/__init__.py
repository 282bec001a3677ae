"""
Report writers: JSON envelopes, JSON lines, text tables and HTML summaries
"""

from .html_generator import HTMLReportGenerator, discrimination_report_data, theorem1_report_data
from .writers import FORMAT_VERSION, build_payload, dumps_json, dumps_jsonl, table_text, write_text

__all__ = [
    "HTMLReportGenerator",
    "discrimination_report_data",
    "theorem1_report_data",
    "FORMAT_VERSION",
    "build_payload",
    "dumps_json",
    "dumps_jsonl",
    "table_text",
    "write_text",
]
