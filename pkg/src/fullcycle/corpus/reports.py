"""Per-instance report rows and their JSON/CSV writers."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Tuple

from ..config import REPORT_CSV_COLUMNS, VERSION, logger


@dataclass(frozen=True)
class RunRow:
    graph_id: str
    n: int
    f: int
    pentagons: int
    length: int
    optimal: bool
    w: int
    p3_ok: bool
    pentagon_ok: bool
    two_white_ok: bool
    max_charge_halfunits: int
    conserved: bool
    bound: int
    bound_ok: bool
    ms: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def csv_values(self) -> List[str]:
        values = []
        for column in REPORT_CSV_COLUMNS:
            value = getattr(self, column)
            if isinstance(value, bool):
                values.append("true" if value else "false")
            elif isinstance(value, float):
                values.append(f"{value:.3f}")
            else:
                values.append(str(value))
        return values


@dataclass
class RunReport:
    rows: List[RunRow] = field(default_factory=list)
    details: List[Dict[str, Any]] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        # ms is rounded like the CSV so both files carry the same values
        rows = [{**row.to_dict(), "ms": round(row.ms, 3)} for row in self.rows]
        return {"version": VERSION, "ok": self.ok, "failures": self.failures, "rows": rows, "details": self.details}

    def write_json(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(self.to_dict(), indent=2), encoding="utf-8")
        return path

    def write_csv(self, path: Path) -> Path:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(REPORT_CSV_COLUMNS)
            for row in self.rows:
                writer.writerow(row.csv_values())
        return path

    def write(self, prefix: str) -> Tuple[Path, Path]:
        base = Path(prefix)
        json_path = self.write_json(base.with_name(base.name + ".json"))
        csv_path = self.write_csv(base.with_name(base.name + ".csv"))
        logger.info(f"Report written to {json_path} and {csv_path}")
        return json_path, csv_path


def read_csv_rows(path: Path) -> List[Dict[str, str]]:
    with Path(path).open(newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))
