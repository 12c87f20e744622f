"""File formats: state JSON, sweep config JSON, sweep result CSV/JSON."""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from . import states
from .partitions import SweepResult, SweepRow, SweepSpec

CSV_HEADER = ("state", "channel", "p", "q", "r", "m", "subset", "logneg", "coh_ab", "coh_ba")


class ConfigError(ValueError):
    """Malformed or unreadable input file."""


def fmt(x: float | None) -> str:
    """12 significant digits; empty for missing values."""
    if x is None or x != x:
        return ""
    if x == 0:
        x = 0.0  # drop the sign of negative zero
    return f"{x:.12g}"


def load_state_file(path: str | Path) -> states.PureState:
    try:
        obj = json.loads(Path(path).read_text())
        return states.PureState.from_json(obj)
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        raise ConfigError(f"cannot load state from {path}: {exc}") from exc


def save_state_file(s: states.PureState, path: str | Path) -> None:
    Path(path).write_text(json.dumps(s.to_json(), indent=2) + "\n")


def spec_from_config(obj: dict, base_dir: Path | None = None) -> SweepSpec:
    """Build a :class:`SweepSpec` from a config mapping.

    Accepted keys: ``state`` (catalog name) or ``state_file``; ``channel`` as a
    type name or ``{"type": ..., "p": ..., "q": ..., "r": ...}`` object;
    ``p_grid`` (scalars, ``[p, q, r]`` triples or parameter objects); ``m``.
    A channel object without ``p_grid`` contributes its own parameters as a
    single grid point.
    """
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    try:
        if "state_file" in obj:
            path = Path(obj["state_file"])
            if base_dir is not None and not path.is_absolute():
                path = base_dir / path
            state, name = load_state_file(path), obj.get("state", "custom")
        else:
            name = obj["state"]
            state = states.by_name(name)
        ch = obj["channel"]
        if isinstance(ch, dict):
            kind = ch["type"]
            grid = obj.get("p_grid") or [{k: v for k, v in ch.items() if k != "type"}]
        else:
            kind, grid = ch, obj["p_grid"]
        m_values = obj.get("m") or list(range(1, state.num_qubits // 2 + 1))
        if isinstance(m_values, int):
            m_values = [m_values]
        return SweepSpec(name, state, kind, tuple(grid), tuple(m_values))
    except KeyError as exc:
        raise ConfigError(f"config is missing key {exc}") from None
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path: str | Path) -> SweepSpec:
    path = Path(path)
    try:
        obj = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return spec_from_config(obj, base_dir=path.parent)


def _row_fields(row: SweepRow) -> list[str]:
    return [
        row.state,
        row.channel,
        fmt(row.params.get("p")),
        fmt(row.params.get("q")),
        fmt(row.params.get("r")),
        str(row.m),
        "-".join(str(q) for q in row.subset),
        fmt(row.logneg),
        fmt(row.coh_ab),
        fmt(row.coh_ba),
    ]


def result_to_csv(result: SweepResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in result.rows:
        w.writerow(_row_fields(row))
    return buf.getvalue()


def result_to_json(result: SweepResult) -> str:
    """JSON mirror of the CSV: one object per row, same field names and formatting."""
    records = []
    for row in result.rows:
        rec = dict(zip(CSV_HEADER, _row_fields(row)))
        if row.error:
            rec["error"] = row.error
        records.append(rec)
    return json.dumps({"columns": list(CSV_HEADER), "rows": records}, indent=1) + "\n"


def result_from_csv(text: str) -> SweepResult:
    rows = []
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ConfigError(f"unexpected CSV header {reader.fieldnames}")
    nan = float("nan")
    for rec in reader:
        params = {k: float(rec[k]) for k in ("p", "q", "r") if rec[k] != ""}
        rows.append(
            SweepRow(
                state=rec["state"],
                channel=rec["channel"],
                params=params,
                m=int(rec["m"]),
                subset=tuple(int(q) for q in rec["subset"].split("-")),
                logneg=float(rec["logneg"]) if rec["logneg"] else nan,
                coh_ab=float(rec["coh_ab"]) if rec["coh_ab"] else nan,
                coh_ba=float(rec["coh_ba"]) if rec["coh_ba"] else nan,
            )
        )
    return SweepResult(rows)
