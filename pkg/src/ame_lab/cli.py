"""Command-line entry point: ``ame-lab {verify-ame,sweep,symmetry,figure}``.

Exit codes: 0 ok/symmetric, 1 negative verdict, 2 usage or config error,
3 numerical diagnostic (non-PSD state during a sweep).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import measures, states
from .errors import AmeLabError, NotPSD
from .figures import FIGURES
from .fileformats import ConfigError, load_config, load_state_file, result_to_csv, result_to_json
from .partitions import MEASURES, SweepResult, SweepSpec, run_sweep, symmetry_report
from .plot import render_svg

EXIT_OK, EXIT_NEGATIVE, EXIT_CONFIG, EXIT_NUMERIC = 0, 1, 2, 3


def _floats(text: str | None) -> list[float] | None:
    if text is None:
        return None
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse number list {text!r}") from None


def _ints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse integer list {text!r}") from None


def _load_state(args) -> tuple[str, states.PureState]:
    if args.state_file:
        return Path(args.state_file).stem, load_state_file(args.state_file)
    if args.state:
        try:
            return args.state, states.by_name(args.state)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    raise ConfigError("one of --state or --state-file is required")


def _grid(args) -> list:
    ps = _floats(args.p)
    if ps is None:
        raise ConfigError("--p is required")
    if args.channel != "pauli":
        if args.q is not None or args.r is not None:
            raise ConfigError("--q/--r only apply to the pauli channel")
        return ps
    qs, rs = _floats(args.q), _floats(args.r)
    if qs is None or rs is None:
        raise ConfigError("the pauli channel needs --p, --q and --r")
    size = max(len(ps), len(qs), len(rs))
    cols = []
    for name, vals in (("p", ps), ("q", qs), ("r", rs)):
        if len(vals) not in (1, size):
            raise ConfigError(f"--{name} has {len(vals)} values, expected 1 or {size}")
        cols.append(vals * size if len(vals) == 1 else vals)
    return [list(t) for t in zip(*cols)]


def _build_spec(args) -> SweepSpec:
    if args.config:
        return load_config(args.config)
    name, state = _load_state(args)
    if not args.channel:
        raise ConfigError("--channel is required without --config")
    m_values = _ints(args.m) or list(range(1, state.num_qubits // 2 + 1))
    try:
        return SweepSpec(name, state, args.channel, tuple(_grid(args)), tuple(m_values))
    except (AmeLabError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def _write_outputs(result: SweepResult, args, measure: str, title: str | None = None) -> None:
    text = result_to_json(result) if args.format == "json" else result_to_csv(result)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        svg_path = Path(args.out).with_suffix(".svg") if args.out else Path("sweep.svg")
        svg_path.write_text(render_svg(result, measure, title))


def _report_errors(result: SweepResult) -> int:
    errs = result.errors
    for row in errs:
        print(f"numerical diagnostic at {dict(row.params)} subset {row.subset}: {row.error}",
              file=sys.stderr)
    return EXIT_NUMERIC if errs else EXIT_OK


def cmd_verify_ame(args) -> int:
    name, state = _load_state(args)
    cuts = measures.cut_entropies(state)
    print(f"state {name}: {state.num_qubits} qubits, {len(cuts)} cuts")
    for c in cuts:
        subset = "-".join(map(str, c.subset))
        print(f"  A={{{subset}}} m={len(c.subset)} S={c.entropy:.12f} deficit={c.deficit:.3e}")
    if cuts:
        top = max(c.deficit for c in cuts)
        worst = next(c for c in cuts if c.deficit >= top - 1e-12)
        print(f"max deficit {worst.deficit:.12g} at A={{{'-'.join(map(str, worst.subset))}}}")
    ok = all(c.deficit <= args.tol for c in cuts)
    print("AME" if ok else "not AME")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_sweep(args) -> int:
    spec = _build_spec(args)
    result = run_sweep(spec)
    _write_outputs(result, args, args.measure)
    return _report_errors(result)


def _print_symmetry(result: SweepResult, tol: float, measure_names) -> bool:
    report = symmetry_report(result, tol, measure_names)
    print(f"{'state':<12}{'channel':<14}{'params':<26}{'m':>2}  {'measure':<8}{'spread':>14}  verdict")
    for e in report.entries:
        params = ",".join(f"{k}={v:g}" for k, v in e.params.items())
        verdict = "symmetric" if e.symmetric else "BROKEN"
        print(f"{e.state:<12}{e.channel:<14}{params:<26}{e.m:>2}  {e.measure:<8}{e.spread:>14.6e}  {verdict}")
    print(f"overall: {'symmetric' if report.symmetric else 'broken'} (tol={tol:g})")
    return report.symmetric


def cmd_symmetry(args) -> int:
    spec = _build_spec(args)
    result = run_sweep(spec)
    if _report_errors(result):
        return EXIT_NUMERIC
    names = MEASURES if args.measure == "all" else (args.measure,)
    return EXIT_OK if _print_symmetry(result, args.tol, names) else EXIT_NEGATIVE


def cmd_figure(args) -> int:
    preset = FIGURES[args.name]
    result = preset.run()
    _write_outputs(result, args, args.measure or preset.measure, preset.title)
    return _report_errors(result)


def _add_state_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--state", choices=sorted(states.CATALOG), help="built-in state")
    p.add_argument("--state-file", help="JSON file {num_qubits, amplitudes: [[re, im], ...]}")


def _add_sweep_args(p: argparse.ArgumentParser) -> None:
    _add_state_args(p)
    p.add_argument("--config", help="JSON sweep configuration (overrides the flags below)")
    p.add_argument("--channel", choices=("depolarizing", "dephasing", "pauli"))
    p.add_argument("--p", help="comma-separated values of p")
    p.add_argument("--q", help="comma-separated values of q (pauli only)")
    p.add_argument("--r", help="comma-separated values of r (pauli only)")
    p.add_argument("--m", help="comma-separated subset sizes (default: 1..n/2)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--plot", action="store_true", help="also write an SVG chart next to --out")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ame-lab",
        description="Entanglement of qubit AME states sent through symmetric noise channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-ame", help="check that a state is absolutely maximally entangled")
    _add_state_args(p)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify_ame)

    p = sub.add_parser("sweep", help="measure every cut over a noise grid")
    _add_sweep_args(p)
    _add_output_args(p)
    p.add_argument("--measure", choices=MEASURES, default="logneg", help="measure to plot")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("symmetry", help="test whether measures depend on the choice of subset A")
    _add_sweep_args(p)
    p.add_argument("--measure", choices=MEASURES + ("all",), default="all")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("figure", help="reproduce one of the published figures")
    p.add_argument("name", choices=sorted(FIGURES))
    _add_output_args(p)
    p.add_argument("--measure", choices=MEASURES, default=None, help="override the plotted measure")
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotPSD as exc:
        print(f"numerical diagnostic: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, AmeLabError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
