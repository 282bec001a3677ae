import logging
import os
from datetime import datetime
from typing import Any, Dict, List, Optional

from jinja2 import Template

logger = logging.getLogger(__name__)


class HTMLReportGenerator:
    """Render experiment summaries as a standalone HTML page"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        self.template = self._load_template()

    def _load_template(self) -> Template:
        """Load HTML report template"""
        template_content = """<!DOCTYPE html>
<html lang="en">
<head>
    <meta charset="UTF-8">
    <meta name="viewport" content="width=device-width, initial-scale=1.0">
    <title>{{ title }}</title>
    <style>
        body {
            font-family: 'Segoe UI', Tahoma, Geneva, Verdana, sans-serif;
            line-height: 1.6;
            color: #333;
            background-color: #f8f9fa;
            margin: 0;
        }
        .header {
            background: linear-gradient(135deg, #667eea 0%, #764ba2 100%);
            color: white;
            padding: 2rem;
            margin-bottom: 2rem;
        }
        .section {
            background: white;
            border-radius: 10px;
            padding: 1.5rem 2rem;
            margin: 0 2rem 2rem 2rem;
            box-shadow: 0 2px 10px rgba(0,0,0,0.1);
        }
        .metrics { display: flex; flex-wrap: wrap; gap: 1rem; margin: 0 2rem 2rem 2rem; }
        .metric-card {
            background: linear-gradient(135deg, #f093fb 0%, #f5576c 100%);
            color: white;
            padding: 1rem 1.5rem;
            border-radius: 10px;
            min-width: 10rem;
        }
        .metric-card .value { font-size: 1.6rem; font-weight: bold; }
        table { border-collapse: collapse; width: 100%; }
        th, td { border-bottom: 1px solid #ddd; padding: 0.4rem 0.8rem; text-align: left; }
        tr:nth-child(even) { background: #f2f2f2; }
        .pass { color: #2e7d32; font-weight: bold; }
        .fail { color: #c62828; font-weight: bold; }
        pre { background: #f4f4f4; padding: 1rem; overflow-x: auto; }
    </style>
</head>
<body>
    <div class="header">
        <h1>{{ title }}</h1>
        <p>{{ subtitle }}</p>
        <small>Generated {{ generated_date }} &middot; report {{ report_id }} &middot; format {{ version }}</small>
    </div>

    {% if key_metrics %}
    <div class="metrics">
        {% for metric in key_metrics %}
        <div class="metric-card">
            <div>{{ metric.label }}</div>
            <div class="value">{{ metric.value }}</div>
        </div>
        {% endfor %}
    </div>
    {% endif %}

    {% for section in sections %}
    <div class="section" id="{{ section.id }}">
        <h2>{{ section.title }}</h2>
        {% if section.content %}<p>{{ section.content }}</p>{% endif %}
        {% if section.data_table %}
        <table>
            <thead>
                <tr>{% for header in section.data_table.headers %}<th>{{ header }}</th>{% endfor %}</tr>
            </thead>
            <tbody>
                {% for row in section.data_table.rows %}
                <tr>{% for cell in row %}<td>{{ cell }}</td>{% endfor %}</tr>
                {% endfor %}
            </tbody>
        </table>
        {% endif %}
    </div>
    {% endfor %}

    {% if run_config %}
    <div class="section">
        <h2>Configuration</h2>
        <pre>{% for key, value in run_config|dictsort %}{{ key }} = {{ value }}
{% endfor %}</pre>
    </div>
    {% endif %}
</body>
</html>
"""
        return Template(template_content, autoescape=True)

    def generate_report(self, report_data: Dict[str, Any]) -> Dict[str, Any]:
        """Generate HTML report"""
        try:
            template_data = {
                "title": report_data.get("title", "sekwl report"),
                "subtitle": report_data.get("subtitle", ""),
                "generated_date": datetime.now().strftime("%B %d, %Y at %I:%M %p"),
                "key_metrics": report_data.get("key_metrics", []),
                "sections": report_data.get("sections", []),
                "run_config": report_data.get("config", {}),
                "report_id": report_data.get("report_id", f"SW-{datetime.now().strftime('%Y%m%d%H%M%S')}"),
                "version": report_data.get("version", "1.0"),
            }
            html_content = self.template.render(**template_data)
            return {
                "success": True,
                "html_content": html_content,
                "sections_count": len(template_data["sections"]),
                "generated_at": datetime.now().isoformat(),
            }
        except Exception as e:
            logger.error(f"Failed to generate HTML report: {e}")
            return {"success": False, "error": str(e)}

    def save_report(self, report_data: Dict[str, Any], output_path: str) -> bool:
        """Generate and save HTML report to file"""
        result = self.generate_report(report_data)
        if not result["success"]:
            logger.error(f"Failed to generate report: {result['error']}")
            return False
        try:
            os.makedirs(os.path.dirname(os.path.abspath(output_path)), exist_ok=True)
            with open(output_path, "w", encoding="utf-8") as f:
                f.write(result["html_content"])
        except OSError as e:
            logger.error(f"Failed to save report: {e}")
            return False
        logger.info(f"Report saved to {output_path}")
        return True


def _table(title: str, rows: List[Dict[str, Any]]) -> Dict[str, Any]:
    headers = list(rows[0].keys()) if rows else []
    return {"title": title, "headers": headers, "rows": [[row[h] for h in headers] for row in rows]}


def discrimination_report_data(report: Dict[str, Any], run_config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Page data for one discrimination report (as produced by DiscriminationReport.to_dict)"""
    first, second = (graph["label"] for graph in report["pair"])
    rows = []
    for label, verdict in report["verdicts"].items():
        cert = report["certificates"].get(label, {})
        rows.append({
            "algorithm": label,
            "verdict": verdict,
            "first round": cert.get("iteration", ""),
            "witness sizes": f"{cert['size_1']} vs {cert['size_2']}" if cert else "",
        })
    distinguished = sum(1 for v in report["verdicts"].values() if v == "distinguished")
    return {
        "title": f"{first} vs {second}",
        "subtitle": "Color refinement discrimination",
        "key_metrics": [
            {"label": "algorithms", "value": len(rows)},
            {"label": "distinguishing", "value": distinguished},
            {"label": "dominance violations", "value": len(report["dominance_violations"])},
        ],
        "sections": [{"id": "verdicts", "title": "Verdicts", "content": "", "data_table": _table("Verdicts", rows)}],
        "config": run_config or {},
    }


def theorem1_report_data(
    trials: List[Dict[str, Any]],
    summary: Dict[str, Any],
    run_config: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    rate = summary.get("rate")
    rows = [
        {
            "trial": t["index"],
            "roots": f"{t['roots'][0]}, {t['roots'][1]}",
            "config differs at": "" if t["edge_config_differs_at"] is None else t["edge_config_differs_at"],
            "separated": t["self_return_separated"],
            "gap": f"{t['gap']:.3e}",
            "collision": t["collision"],
        }
        for t in trials
    ]
    return {
        "title": "Random-walk separation on random regular graphs",
        "subtitle": "pass" if summary.get("passed") else "below threshold",
        "key_metrics": [
            {"label": "trials", "value": summary["trials"]},
            {"label": "configuration-differing", "value": summary["config_differing"]},
            {"label": "separation rate", "value": "n/a" if rate is None else f"{rate:.3f}"},
            {"label": "collisions", "value": summary["collisions"]},
        ],
        "sections": [{"id": "trials", "title": "Trials", "content": "", "data_table": _table("Trials", rows)}],
        "config": run_config or {},
    }
