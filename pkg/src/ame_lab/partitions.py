"""Sweeps over noise strength and qubit subsets, plus symmetry/monotonicity checks."""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from . import channels, measures
from .errors import MOutOfRange, NotPSD
from .states import PureState, density

MEASURES = ("logneg", "coh_ab", "coh_ba", "coh_max")
THREADS_ENV = "AME_LAB_THREADS"


def enumerate_subsets(n: int, m: int) -> list[tuple[int, ...]]:
    """All m-element subsets of ``1..n`` in lexicographic order (``m <= n // 2``)."""
    if not 1 <= m <= n // 2:
        raise MOutOfRange(f"m={m} outside 1..{n // 2} for n={n}")
    return list(combinations(range(1, n + 1), m))


def _param_names(channel: str) -> tuple[str, ...]:
    if channel in ("depolarizing", "dephasing"):
        return ("p",)
    if channel == "pauli":
        return ("p", "q", "r")
    raise ValueError(f"unknown channel type {channel!r}")


def normalize_point(channel: str, point) -> dict[str, float]:
    """Turn ``0.3``, ``[p, q, r]`` or ``{"p": ...}`` into a parameter dict."""
    names = _param_names(channel)
    if isinstance(point, Mapping):
        missing = [k for k in names if k not in point]
        if missing:
            raise ValueError(f"{channel} point {dict(point)} lacks {missing}")
        vals = [point[k] for k in names]
    elif isinstance(point, (list, tuple)):
        vals = list(point)
    else:
        vals = [point]
    if len(vals) != len(names):
        raise ValueError(f"{channel} expects parameters {names}, got {point!r}")
    try:
        return {k: float(v) for k, v in zip(names, vals)}
    except (TypeError, ValueError) as exc:
        raise ValueError(f"non-numeric channel parameter in {point!r}") from exc


@dataclass(frozen=True)
class SweepSpec:
    state_name: str
    state: PureState
    channel: str
    p_grid: tuple
    m_values: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(normalize_point(self.channel, p) for p in self.p_grid)
        if not pts:
            raise ValueError("parameter grid is empty")
        for pt in pts:
            self.build_channel(pt)  # raises ParamOutOfRange
        pts = tuple(sorted(pts, key=lambda d: tuple(d.values())))
        object.__setattr__(self, "p_grid", pts)
        n = self.state.num_qubits
        ms = tuple(sorted(set(int(m) for m in self.m_values)))
        if not ms:
            raise MOutOfRange("no subset sizes requested")
        for m in ms:
            if not 1 <= m <= n // 2:
                raise MOutOfRange(f"m={m} outside 1..{n // 2} for n={n}")
        object.__setattr__(self, "m_values", ms)

    def build_channel(self, point: Mapping[str, float]) -> channels.SingleQubitChannel:
        return channels.from_config({"type": self.channel, **point})


@dataclass(frozen=True)
class SweepRow:
    state: str
    channel: str
    params: Mapping[str, float]
    m: int
    subset: tuple[int, ...]
    logneg: float = math.nan
    coh_ab: float = math.nan
    coh_ba: float = math.nan
    error: str | None = None

    @property
    def coh_max(self) -> float:
        return max(self.coh_ab, self.coh_ba)

    def value(self, name: str) -> float:
        return self.coh_max if name == "coh_max" else getattr(self, name)

    def point_key(self) -> tuple[float, ...]:
        return tuple(self.params.values())


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)

    def __add__(self, other: "SweepResult") -> "SweepResult":
        return SweepResult(self.rows + other.rows)

    @property
    def errors(self) -> list[SweepRow]:
        return [r for r in self.rows if r.error is not None]


def _thread_count(threads: int | None) -> int:
    if threads is None:
        raw = os.environ.get(THREADS_ENV, "")
        try:
            threads = int(raw) if raw else (os.cpu_count() or 1)
        except ValueError:
            raise ValueError(f"{THREADS_ENV}={raw!r} is not an integer") from None
    return max(1, threads)


def _evaluate_point(spec: SweepSpec, point: dict[str, float]) -> list[SweepRow]:
    n = spec.state.num_qubits
    cuts = [(m, a) for m in spec.m_values for a in enumerate_subsets(n, m)]
    base = dict(state=spec.state_name, channel=spec.channel, params=point)
    try:
        rho = channels.apply_symmetric(density(spec.state), spec.build_channel(point))
        s_ab = measures.von_neumann_entropy(rho)
    except NotPSD as exc:
        return [SweepRow(m=m, subset=a, error=str(exc), **base) for m, a in cuts]
    rows = []
    for m, a in cuts:
        try:
            rec = measures.measure(rho, measures.Bipartition(n, a), s_ab=s_ab)
        except NotPSD as exc:
            rows.append(SweepRow(m=m, subset=a, error=str(exc), **base))
            continue
        rows.append(
            SweepRow(
                m=m,
                subset=a,
                logneg=rec.log_negativity,
                coh_ab=rec.coherent_info_a_to_b,
                coh_ba=rec.coherent_info_b_to_a,
                **base,
            )
        )
    return rows


def run_sweep(spec: SweepSpec, threads: int | None = None) -> SweepResult:
    """Evaluate every (point, subset) pair of ``spec``.

    The noisy state is built once per grid point and shared by all cuts.
    Points run in parallel (``AME_LAB_THREADS`` caps the pool); rows come
    back ordered by point, then m, then subset, whatever the thread count.
    """
    workers = min(_thread_count(threads), len(spec.p_grid))
    if workers == 1:
        chunks = [_evaluate_point(spec, pt) for pt in spec.p_grid]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(lambda pt: _evaluate_point(spec, pt), spec.p_grid))
    return SweepResult([row for chunk in chunks for row in chunk])


@dataclass(frozen=True)
class SpreadEntry:
    state: str
    channel: str
    params: Mapping[str, float]
    m: int
    measure: str
    spread: float
    symmetric: bool


@dataclass
class SymmetryReport:
    entries: list[SpreadEntry]
    tol: float

    @property
    def symmetric(self) -> bool:
        return all(e.symmetric for e in self.entries)

    def select(self, measure: str | None = None, state: str | None = None) -> list[SpreadEntry]:
        return [
            e
            for e in self.entries
            if (measure is None or e.measure == measure) and (state is None or e.state == state)
        ]

    def max_spread(self, measure: str, state: str | None = None) -> float:
        return max((e.spread for e in self.select(measure, state)), default=0.0)


def _group(result: SweepResult) -> dict[tuple, list[SweepRow]]:
    groups: dict[tuple, list[SweepRow]] = {}
    for row in result.rows:
        groups.setdefault((row.state, row.channel, row.point_key(), row.m), []).append(row)
    return groups


def symmetry_report(
    result: SweepResult, tol: float = 1e-9, measures_: Sequence[str] = MEASURES
) -> SymmetryReport:
    """Spread (max - min across subsets) of each measure per (state, point, m).

    Rows carrying an error make their group's spread NaN, which is never
    reported as symmetric.
    """
    entries = []
    for (state, channel, _, m), rows in _group(result).items():
        for name in measures_:
            vals = [r.value(name) for r in rows]
            spread = max(vals) - min(vals) if all(math.isfinite(v) for v in vals) else math.nan
            entries.append(
                SpreadEntry(state, channel, rows[0].params, m, name, spread, spread <= tol)
            )
    return SymmetryReport(entries, tol)


def monotonicity_check(
    result: SweepResult, tol: float = 1e-9, measures_: Sequence[str] = MEASURES
) -> dict[tuple[str, tuple[int, ...], str], bool]:
    """Whether each measure is non-increasing in the noise parameter, per subset.

    Keys are ``(state, subset, measure)``. Rows are taken in result order,
    which :func:`run_sweep` guarantees is ascending in the grid.
    """
    series: dict[tuple[str, tuple[int, ...]], list[SweepRow]] = {}
    for row in result.rows:
        series.setdefault((row.state, row.subset), []).append(row)
    out = {}
    for (state, subset), rows in series.items():
        keys = [r.point_key() for r in rows]
        if keys != sorted(keys):
            raise ValueError(f"grid for {state} {subset} is not ascending")
        for name in measures_:
            vals = [r.value(name) for r in rows]
            out[(state, subset, name)] = all(b <= a + tol for a, b in zip(vals, vals[1:]))
    return out

