"""Line-delimited experiment reports.

``records`` format: a version header line, a params record, one line per
data record, a trailing aggregate record and a final timing line. Every
line after the header is a JSON object with a ``type`` key. Only the
timing line carries wall-clock data, so everything before it is
byte-identical across reruns.

``csv`` format: the same content flattened into ``type,index,key,value``
rows, values JSON-encoded.
"""

from __future__ import annotations

import csv
import io
import json
import time

FORMAT_NAME = "secondnbr-report"
FORMAT_VERSION = 1


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class Report:
    def __init__(self, command: str, params: dict):
        self.command = command
        self.params = params
        self.records: list[dict] = []
        self.aggregate: dict = {}
        self._start = time.perf_counter()

    def add(self, violation: bool = False, **fields) -> dict:
        rec = dict(fields)
        rec["violation"] = bool(violation)
        self.records.append(rec)
        return rec

    @property
    def violations(self) -> int:
        return sum(r["violation"] for r in self.records)

    def _lines(self) -> list[dict]:
        agg = dict(self.aggregate)
        agg["records"] = len(self.records)
        agg["violations"] = self.violations
        wall = time.perf_counter() - self._start
        return ([{"type": "params", "command": self.command, "params": self.params}]
                + [{"type": "record", "index": i, **r} for i, r in enumerate(self.records)]
                + [{"type": "aggregate", **agg}, {"type": "timing", "wall_time": round(wall, 6)}])

    def render(self, fmt: str = "records") -> str:
        header = f"# {FORMAT_NAME} v{FORMAT_VERSION}\n"
        lines = self._lines()
        if fmt == "records":
            return header + "".join(_dumps(x) + "\n" for x in lines)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["type", "index", "key", "value"])
            for line in lines:
                idx = line.get("index", "")
                for key in sorted(line):
                    if key in ("type", "index"):
                        continue
                    w.writerow([line["type"], idx, key, _dumps(line[key])])
            return header + buf.getvalue()
        raise ValueError(f"unknown report format {fmt!r}")


def data_lines(text: str) -> list[str]:
    """Report lines minus the timing line (or csv timing rows)."""
    out = []
    for line in text.splitlines():
        if line.startswith('{"type":"timing"') or line.startswith("timing,"):
            continue
        out.append(line)
    return out


def parse_records(text: str) -> list[dict]:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(f"# {FORMAT_NAME} v"):
        raise ValueError("not a report: missing header line")
    return [json.loads(line) for line in lines[1:] if line.strip()]
