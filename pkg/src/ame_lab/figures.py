"""Presets binding each published figure to its state, channel and grid."""
from __future__ import annotations

from dataclasses import dataclass

from . import states
from .partitions import SweepResult, SweepSpec, run_sweep

DEPOL_LOGNEG_GRID = (0.225, 0.25, 0.275, 0.3, 0.325)
DEPOL_COH_GRID = (0.025, 0.05, 0.075, 0.1, 0.125)
DEPH_LOGNEG_GRID = (0.5, 0.55, 0.6, 0.65, 0.7)
DEPH_COH_GRID = (0.15, 0.2, 0.25, 0.3, 0.35)


@dataclass(frozen=True)
class FigurePreset:
    name: str
    states: tuple[str, ...]
    channel: str
    grid: tuple[float, ...]
    measure: str
    title: str
    m_values: tuple[int, ...] = (1, 2)

    def specs(self) -> list[SweepSpec]:
        return [
            SweepSpec(s, states.by_name(s), self.channel, self.grid, self.m_values)
            for s in self.states
        ]

    def run(self, threads: int | None = None) -> SweepResult:
        result = SweepResult()
        for spec in self.specs():
            result = result + run_sweep(spec, threads=threads)
        return result


FIGURES = {
    p.name: p
    for p in (
        FigurePreset("fig1", ("phi5",), "depolarizing", DEPOL_LOGNEG_GRID, "logneg",
                     "phi5, depolarizing: log-negativity"),
        FigurePreset("fig2", ("phi5",), "depolarizing", DEPOL_COH_GRID, "coh_max",
                     "phi5, depolarizing: coherent information"),
        FigurePreset("fig3", ("phi5",), "dephasing", DEPH_LOGNEG_GRID, "logneg",
                     "phi5, dephasing: log-negativity"),
        FigurePreset("fig4", ("phi5",), "dephasing", DEPH_COH_GRID, "coh_max",
                     "phi5, dephasing: coherent information"),
        FigurePreset("fig5", ("phi5_prime",), "dephasing", DEPH_LOGNEG_GRID, "logneg",
                     "phi5', dephasing: log-negativity"),
        FigurePreset("fig6", ("phi5_prime",), "dephasing", DEPH_COH_GRID, "coh_max",
                     "phi5', dephasing: coherent information"),
        FigurePreset("fig7", ("phi5", "phi5_prime"), "dephasing", (0.36,), "logneg",
                     "phi5 vs phi5', dephasing p=0.36: log-negativity"),
    )
}
