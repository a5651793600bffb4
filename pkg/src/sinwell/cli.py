"""Command-line front end emitting CSV or JSON documents.

Commands: spectrum, sweep, wavefunction, converge, table1, validate.  The
zero-flag defaults (C=5, k=1, L=pi, N=20, levels=11) reproduce the reference
spectrum table.  Output is deterministic byte for byte: floats are printed
with 15 significant digits, lines end with "\\n".

Exit codes: 0 success, 1 usage/flag error, 2 numerical non-convergence,
3 domain error.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from . import fd, spectrum, validate, wavefunction
from .errors import DomainError, NumericalError

COMMANDS = ("spectrum", "sweep", "wavefunction", "converge", "validate", "table1")
FORMATS = ("csv", "json")


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); route to exit 1 instead
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Validated flag set for one invocation."""

    command: str
    C: float = 5.0
    A: float = 0.0
    B: float = 0.0
    k: int = 1
    L: float = math.pi
    N: int = 20
    levels: int = 11
    level: int = 0
    grid: int = 1024
    C_range: tuple[float, float, float] | None = None
    N_list: tuple[int, ...] = (20, 40)
    format: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        for name, v in (("k", self.k), ("N", self.N), ("levels", self.levels), ("grid", self.grid)):
            if not isinstance(v, int) or v < 1:
                raise UsageError(f"--{name} must be a positive integer, got {v!r}")
        if not (self.L > 0.0):
            raise UsageError(f"--L must be positive, got {self.L!r}")
        if self.command in ("spectrum", "sweep", "table1") and self.levels > self.N:
            raise UsageError(f"--levels ({self.levels}) cannot exceed --N ({self.N})")
        if self.command == "converge":
            if not self.N_list:
                raise UsageError("converge requires a nonempty --N-list")
            if self.levels > min(self.N_list):
                raise UsageError(
                    f"--levels ({self.levels}) cannot exceed the smallest entry of --N-list"
                )
        if self.command == "wavefunction":
            if self.level < 0 or self.level >= self.N:
                raise UsageError(f"--level must lie in 0..N-1, got {self.level!r}")
            if self.grid < 2:
                raise UsageError("--grid must be at least 2")
        if self.command == "sweep":
            if self.C_range is None:
                raise UsageError("sweep requires --C-range START STOP STEP")
            if self.C_range[2] == 0.0:
                raise UsageError("--C-range step must be nonzero")


def _fmt(value) -> str:
    if isinstance(value, bool):
        raise TypeError("unexpected boolean field")
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".15g")


def _render_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _render_json(header, rows) -> str:
    body = []
    for row in rows:
        fields = ", ".join(f'"{h}": {_fmt(v)}' for h, v in zip(header, row))
        body.append("  {" + fields + "}")
    return "[\n" + ",\n".join(body) + "\n]\n"


def _render(header, rows, fmt: str) -> str:
    return _render_csv(header, rows) if fmt == "csv" else _render_json(header, rows)


def _range_values(start: float, stop: float, step: float) -> list[float]:
    values = []
    x = start
    slack = abs(step) * 1e-9
    i = 0
    while (step > 0 and x <= stop + slack) or (step < 0 and x >= stop - slack):
        values.append(x)
        i += 1
        x = start + i * step
    return values


def _spectrum_rows(config: RunConfig):
    if config.A != 0.0 or config.B != 0.0:
        spec = spectrum.solve_general(
            config.A, config.B, config.C, k=config.k, L=config.L, N=config.N, levels=config.levels
        )
    else:
        spec = spectrum.solve_sinusoidal_well(
            config.C, k=config.k, L=config.L, N=config.N, levels=config.levels
        )
    return [(lv.n, lv.epsilon, lv.E) for lv in spec.levels]


def render_document(config: RunConfig) -> str:
    """Produce the emitted document for any data command."""
    if config.command in ("spectrum", "table1"):
        cfg = config
        if config.command == "table1":
            cfg = RunConfig(command="spectrum", format=config.format, out=config.out)
        return _render(("n", "epsilon", "E"), _spectrum_rows(cfg), config.format)
    if config.command == "sweep":
        values = _range_values(*config.C_range)
        rows = spectrum.sweep_coupling(
            values, k=config.k, L=config.L, N=config.N, levels=config.levels
        )
        return _render(("C", "n", "epsilon", "E"), rows, config.format)
    if config.command == "wavefunction":
        samples = wavefunction.sample_wavefunction(
            config.C,
            k=config.k,
            L=config.L,
            N=config.N,
            level=config.level,
            grid_points=config.grid,
        )
        rows = list(zip(samples.grid.tolist(), samples.values.tolist()))
        return _render(("x", "psi"), rows, config.format)
    if config.command == "converge":
        rows = spectrum.convergence_report(
            config.C, config.k, config.L, list(config.N_list), config.levels
        )
        return _render(("N", "n", "epsilon"), rows, config.format)
    raise UsageError(f"command {config.command!r} does not emit a data document")


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def run(config: RunConfig) -> int:
    """Execute one parsed invocation; returns the process exit code."""
    try:
        if config.command == "validate":
            results = validate.run_all()
            lines = [
                f"{'PASS' if r.passed else 'FAIL'} {r.cid}: {r.detail}" for r in results
            ]
            n_pass = sum(r.passed for r in results)
            lines.append(f"{n_pass}/{len(results)} checks passed")
            _emit("\n".join(lines) + "\n", config.out)
            return 0 if n_pass == len(results) else 2
        _emit(render_document(config), config.out)
        return 0
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sinwell", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, want_levels=True):
        p.add_argument("--C", type=float, default=5.0, help="cosine coupling strength")
        p.add_argument("--k", type=int, default=1, help="harmonic index (>= 1)")
        p.add_argument("--L", type=float, default=math.pi, help="well width (a.u.)")
        p.add_argument("--N", type=int, default=20, help="basis truncation size")
        if want_levels:
            p.add_argument("--levels", type=int, default=11, help="number of levels")
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--out", default=None, help="write the document to this path")

    p_spec = sub.add_parser("spectrum", help="reduced and physical energy levels")
    add_common(p_spec)
    p_spec.add_argument("--A", type=float, default=0.0, help="1/cos^2 coupling")
    p_spec.add_argument("--B", type=float, default=0.0, help="1/sin^2 coupling")

    p_sweep = sub.add_parser("sweep", help="spectra over a range of couplings")
    add_common(p_sweep)
    p_sweep.add_argument(
        "--C-range",
        dest="C_range",
        type=float,
        nargs=3,
        metavar=("START", "STOP", "STEP"),
        required=True,
    )

    p_wf = sub.add_parser("wavefunction", help="sampled eigenfunction of one level")
    add_common(p_wf, want_levels=False)
    p_wf.add_argument("--level", type=int, default=0, help="level index (0-based)")
    p_wf.add_argument("--grid", type=int, default=1024, help="number of sample points")

    p_conv = sub.add_parser("converge", help="levels for several truncation sizes")
    add_common(p_conv)
    p_conv.add_argument(
        "--N-list",
        dest="N_list",
        default="20,40",
        help="comma-separated truncation sizes",
    )

    p_t1 = sub.add_parser("table1", help="golden spectrum at C=5, k=1, L=pi, N=20")
    p_t1.add_argument("--format", choices=FORMATS, default="csv")
    p_t1.add_argument("--out", default=None)

    p_val = sub.add_parser("validate", help="run the built-in validation suite")
    p_val.add_argument("--out", default=None)
    return parser


def _config_from_namespace(ns: argparse.Namespace) -> RunConfig:
    kwargs = {"command": ns.command}
    for field in ("C", "A", "B", "k", "L", "N", "levels", "level", "grid", "format", "out"):
        if hasattr(ns, field) and getattr(ns, field) is not None:
            kwargs[field] = getattr(ns, field)
    if getattr(ns, "C_range", None) is not None:
        kwargs["C_range"] = tuple(ns.C_range)
    if hasattr(ns, "N_list"):
        try:
            kwargs["N_list"] = tuple(int(tok) for tok in str(ns.N_list).split(",") if tok)
        except ValueError as exc:
            raise UsageError(f"bad --N-list: {exc}") from exc
    if ns.command == "converge":
        # converge inspects the listed truncations, not --N
        kwargs["N"] = max(kwargs.get("N_list", (20,)))
    return RunConfig(**kwargs)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        config = _config_from_namespace(ns)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
