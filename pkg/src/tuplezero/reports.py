"""CSV report emission with a stable column order and formatting, so that
re-emitting the same records yields byte-identical files."""

import io

COLUMNS = ("run_id", "agents", "role", "W", "T", "L", "rate", "stddev",
           "mean_move_ms", "seed")


def _fmt(value):
    if value is None or value == "":
        return ""
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def record_row(run_id, rec):
    """Row for one MatchRecord, from the first player's perspective."""
    return {
        "run_id": run_id,
        "agents": f"{rec.first}|{rec.second}",
        "role": "first",
        "W": rec.wins,
        "T": rec.ties,
        "L": rec.losses,
        "rate": float(rec.rate),
        "stddev": "",
        "mean_move_ms": float(rec.mean_move_ms("first")),
        "seed": rec.seed,
    }


def summary_row(run_id, name, rate, stddev="", seed=""):
    return {
        "run_id": run_id,
        "agents": name,
        "role": "overall",
        "W": "",
        "T": "",
        "L": "",
        "rate": float(rate),
        "stddev": stddev if stddev == "" else float(stddev),
        "mean_move_ms": "",
        "seed": seed,
    }


def emit_report(rows, path=None):
    """Render rows (dicts keyed by COLUMNS) to CSV text; optionally write."""
    buf = io.StringIO()
    buf.write(",".join(COLUMNS) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(row.get(col, "")) for col in COLUMNS) + "\n")
    text = buf.getvalue()
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def report_rows(report):
    """Rows for an EvalReport: one per match record plus summary lines."""
    rows = []
    for i, rec in enumerate(report.records):
        rows.append(record_row(i, rec))
    if report.kind == "tournament":
        for name in report.summary.get("ranking", []):
            rows.append(summary_row("summary", name, report.summary["rates"][name]))
    elif report.kind == "ladder":
        rows.append(summary_row("summary", "ladder",
                                report.summary.get("win_rate", 0.0),
                                report.summary.get("stddev", 0.0)))
    return rows
