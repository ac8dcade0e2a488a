"""Result tables and their CSV/JSON serialization.

A :class:`ResultTable` is the exchange format between sweeps, files and
plots: string-keyed metadata plus one row per (m, s) cell.  Serialization is
deterministic and round-trip exact — floats are written with ``repr`` (the
shortest string that parses back to the identical double), CSV uses
``# key=value`` comment lines for metadata, and parsing either format
reconstructs a table equal to the source.

Column policy: the canonical column order is
``m,s,mean_K,std_K,analytic_K,captured_weight``; the std_K column is present
only for random-ensemble runs (deterministic sweeps have no spread) and the
analytic_K column only when a closed form applies to the run kind (the
additive purity model for random sweeps and loss runs, the exact m=2 formula
for uniform sweeps over m=2 alone).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .analytics import analytic_purity_m2, conjectured_schmidt_number
from .ensemble import EnsembleStats, LossPoint, SweepConfig, UnitaryKind
from .errors import EntruncError

__all__ = [
    "ResultRow",
    "ResultTable",
    "table_from_stats",
    "table_from_loss",
    "render_csv",
    "render_json",
    "emit_table",
    "parse_table",
]

CANONICAL_COLUMNS = ("m", "s", "mean_K", "std_K", "analytic_K", "captured_weight")
_INT_COLUMNS = {"m", "s"}
FORMAT_NAME = "entrunc-result"


@dataclass(frozen=True)
class ResultRow:
    m: int
    s: int
    mean_K: float
    std_K: float | None
    analytic_K: float | None
    captured_weight: float


@dataclass(frozen=True)
class ResultTable:
    """Ordered metadata (string values) plus per-cell rows."""

    metadata: dict[str, str]
    rows: tuple[ResultRow, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        seen = set()
        for row in self.rows:
            if (row.m, row.s) in seen:
                raise EntruncError(f"duplicate (m, s) cell ({row.m}, {row.s})")
            seen.add((row.m, row.s))

    @property
    def columns(self) -> tuple[str, ...]:
        has_std = any(r.std_K is not None for r in self.rows)
        has_analytic = any(r.analytic_K is not None for r in self.rows)
        return tuple(
            c
            for c in CANONICAL_COLUMNS
            if (c != "std_K" or has_std) and (c != "analytic_K" or has_analytic)
        )


def _metadata(config_like, run_kind: str) -> dict[str, str]:
    md = {
        "version": "0.1.0",
        "run_kind": run_kind,
        "n": str(config_like.n),
        "unitary_kind": config_like.unitary_kind.value,
    }
    if config_like.unitary_kind is UnitaryKind.RANDOM_CUE:
        md["realizations"] = str(config_like.realizations)
        md["master_seed"] = str(config_like.master_seed)
        md["independent_ab"] = "true" if config_like.independent_ab else "false"
    return md


def table_from_stats(stats: EnsembleStats) -> ResultTable:
    """Tabulate a grid sweep, attaching the applicable analytic K column."""
    random = stats.unitary_kind is UnitaryKind.RANDOM_CUE
    uniform_m2 = not random and all(m == 2 for m in stats.m_values)
    rows = []
    for i, m in enumerate(stats.m_values):
        for j, s in enumerate(stats.s_values):
            if random:
                analytic = float(conjectured_schmidt_number(stats.n, m, s))
            elif uniform_m2:
                analytic = 1.0 / analytic_purity_m2(stats.n, s)
            else:
                analytic = None
            rows.append(
                ResultRow(
                    m=int(m),
                    s=int(s),
                    mean_K=float(stats.mean_K[i, j]),
                    std_K=float(stats.std_K[i, j]) if random else None,
                    analytic_K=analytic,
                    captured_weight=float(stats.mean_captured_weight[i, j]),
                )
            )
    return ResultTable(metadata=_metadata(stats, "sweep"), rows=tuple(rows))


def table_from_loss(points: list[LossPoint], config: SweepConfig) -> ResultTable:
    """Tabulate a loss sweep (s = m diagonal); loss Δ = m − mean_K is implicit."""
    random = config.unitary_kind is UnitaryKind.RANDOM_CUE
    rows = tuple(
        ResultRow(
            m=int(p.m),
            s=int(p.m),
            mean_K=float(p.mean_K),
            std_K=float(p.std_loss) if random else None,
            analytic_K=float(conjectured_schmidt_number(config.n, p.m, p.m)) if random else None,
            captured_weight=float(p.mean_captured_weight),
        )
        for p in points
    )
    return ResultTable(metadata=_metadata(config, "loss"), rows=rows)


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def render_csv(table: ResultTable) -> str:
    columns = table.columns
    lines = [f"# {key}={value}" for key, value in table.metadata.items()]
    lines.append(",".join(columns))
    for row in table.rows:
        lines.append(",".join(_format_cell(getattr(row, c)) for c in columns))
    return "\n".join(lines) + "\n"


def render_json(table: ResultTable) -> str:
    columns = table.columns
    payload = {
        "format": FORMAT_NAME,
        "metadata": table.metadata,
        "columns": list(columns),
        "rows": [[getattr(row, c) for c in columns] for row in table.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def emit_table(table: ResultTable, format: str, path) -> None:
    """Write the table to ``path`` as 'csv' or 'json'; refuses empty tables."""
    text = render_table(table, format)
    with open(path, "w", encoding="utf-8", newline="") as handle:
        handle.write(text)


def render_table(table: ResultTable, format: str) -> str:
    if not table.rows:
        raise EntruncError("refusing to write an empty result table")
    if format == "csv":
        return render_csv(table)
    if format == "json":
        return render_json(table)
    raise EntruncError(f"unknown output format {format!r} (expected 'csv' or 'json')")


def _parse_cell(column: str, text: str):
    if text == "":
        return None
    if column in _INT_COLUMNS:
        return int(text)
    return float(text)


def _rows_from_lists(columns: list[str], records: list[list]) -> tuple[ResultRow, ...]:
    unknown = set(columns) - set(CANONICAL_COLUMNS)
    if unknown:
        raise EntruncError(f"unknown result columns: {sorted(unknown)}")
    rows = []
    for record in records:
        data = dict(zip(columns, record))
        rows.append(
            ResultRow(
                m=int(data["m"]),
                s=int(data["s"]),
                mean_K=float(data["mean_K"]),
                std_K=None if data.get("std_K") is None else float(data["std_K"]),
                analytic_K=None if data.get("analytic_K") is None else float(data["analytic_K"]),
                captured_weight=float(data["captured_weight"]),
            )
        )
    return tuple(rows)


def parse_table(path) -> ResultTable:
    """Read a table back from a CSV or JSON file produced by this module."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(text)
        if payload.get("format") != FORMAT_NAME:
            raise EntruncError(f"not an {FORMAT_NAME} JSON file: {path}")
        records = [
            [None if cell is None else cell for cell in record] for record in payload["rows"]
        ]
        return ResultTable(
            metadata=dict(payload["metadata"]),
            rows=_rows_from_lists(list(payload["columns"]), records),
        )
    metadata: dict[str, str] = {}
    columns: list[str] = []
    records = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            metadata[key.strip()] = value.strip()
            continue
        if not columns:
            columns = line.split(",")
            continue
        cells = line.split(",")
        records.append([_parse_cell(c, v) for c, v in zip(columns, cells)])
    if not columns:
        raise EntruncError(f"no column header found in {path}")
    return ResultTable(metadata=metadata, rows=_rows_from_lists(columns, records))
