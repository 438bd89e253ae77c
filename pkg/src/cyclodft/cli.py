"""Command-line front end: ``cyclodft verify-all``, ``verify <id>``,
``solve-coefficients`` and ``report``.

Exit status: 0 when no requested claim is refuted or inconsistent (caveats
allowed), 1 otherwise, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Sequence

from . import __version__
from .claims import (
    CAVEAT,
    DEFAULT_PAIRWISE_DIMS,
    INCONSISTENT,
    REFUTED,
    VERIFIED,
    WITNESS,
    ClaimResult,
    claim_ids,
    grid_probe_coefficients,
    is_valid_claim_id,
    run_all,
    solve_E2_coefficients,
)

REPORT_VERSION = 1

APPENDIX = (
    "Not checked: the remark on remote state preparation for equatorial versus "
    "polar qutrits comes without a construction and is outside the suite."
)


@dataclass
class RunConfig:
    command: str
    claim_id: str | None = None
    backend: str = "both"
    root_order: int = 12
    max_n: int = 12
    pairwise_dims: list[int] = field(default_factory=lambda: list(DEFAULT_PAIRWISE_DIMS))
    float_tolerance: float = 1e-9
    output_format: str = "text"
    output_path: str | None = None
    random_seed: int = 0
    samples: int = 100
    inject_fault: list[str] = field(default_factory=list)
    timing: bool = False

    def to_json(self) -> dict:
        out = asdict(self)
        out.pop("output_path")
        if not out["inject_fault"]:
            out.pop("inject_fault")
        return out


class UsageError(Exception):
    pass


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _seed(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an unsigned integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be strictly positive, got {value}")
    return value


def _dims(text: str) -> list[int]:
    try:
        dims = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")
    if not dims or any(n < 2 for n in dims):
        raise argparse.ArgumentTypeError("pairwise dimensions must all be >= 2")
    return dims


def _valid_ids_text() -> str:
    return "valid claim ids: " + ", ".join(claim_ids(["<n>"]))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--backend", choices=("exact", "float", "both"), default="both")
    common.add_argument("--root-order", type=_positive_int, default=12)
    common.add_argument("--max-n", type=_positive_int, default=12)
    common.add_argument("--pairwise-dims", type=_dims, default=list(DEFAULT_PAIRWISE_DIMS), help="e.g. 2,3,4,5")
    common.add_argument("--tolerance", type=_positive_float, default=1e-9, dest="float_tolerance")
    common.add_argument("--samples", type=_positive_int, default=100, help="random phase assignments per residual")
    common.add_argument("--format", choices=("text", "json"), default="text", dest="output_format")
    common.add_argument("--output", "-o", dest="output_path")
    common.add_argument("--seed", type=_seed, default=0, dest="random_seed")
    common.add_argument("--timing", action="store_true", help="include per-claim timings (breaks byte-identical output)")
    common.add_argument("--inject-fault", action="append", default=[], help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="cyclodft",
        description="Exact verification of DFT-type qudit transform claims.",
        epilog=_valid_ids_text(),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-all", parents=[common], help="run every claim check")
    verify = sub.add_parser("verify", parents=[common], help="run one claim check", epilog=_valid_ids_text())
    verify.add_argument("claim_id")
    sub.add_parser("solve-coefficients", parents=[common], help="enumerate (alpha, beta) over roots of unity")
    sub.add_parser("report", parents=[common], help="all claims, solver output and the float grid probe")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items()})
    if cfg.claim_id is not None and not is_valid_claim_id(cfg.claim_id):
        parser.error(f"unknown claim id {cfg.claim_id!r}; {_valid_ids_text()}")
    for cid in cfg.inject_fault:
        if not is_valid_claim_id(cid):
            parser.error(f"unknown claim id {cid!r} for --inject-fault; {_valid_ids_text()}")
    return cfg


# -- rendering ----------------------------------------------------------------


def _marker(status: str) -> str:
    if status == CAVEAT:
        return "!! CAVEAT"
    if status in (REFUTED, INCONSISTENT):
        return "XX " + status.upper()
    return status


def render_report(results: Sequence[ClaimResult], fmt: str = "text", config: RunConfig | None = None, extra: dict | None = None) -> str:
    include_timing = bool(config and config.timing)
    if fmt == "json":
        doc = {
            "version": REPORT_VERSION,
            "config": config.to_json() if config else {},
            "results": [r.to_json(include_timing) for r in results],
        }
        if extra:
            doc.update(extra)
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = []
    if config is not None:
        lines.append(f"cyclodft report v{REPORT_VERSION} backend={config.backend} seed={config.random_seed}")
    for r in results:
        head = f"{r.claim_id:<7} {_marker(r.status):<16} [{r.paper_location}] {r.detail}"
        if include_timing and r.timing_ms is not None:
            head += f" ({r.timing_ms:.1f} ms)"
        lines.append(head)
        if r.status != VERIFIED:
            for name, ok in r.conditions:
                if not ok:
                    lines.append(f"    condition failed: {name}")
            for res in r.residuals:
                if not res.exact_zero:
                    lines.append(f"    {res.kind:<8} {res.name} = {res.value}")
                elif res.kind == WITNESS:
                    lines.append(f"    {res.kind:<8} {res.name} = 0 (a nonzero witness was required)")
    counts = {s: sum(1 for r in results if r.status == s) for s in sorted({r.status for r in results})}
    lines.append("summary: " + (", ".join(f"{k}={v}" for k, v in counts.items()) or "no claims"))
    caveats = [r.claim_id for r in results if r.status == CAVEAT]
    if caveats:
        lines.append("caveats: " + ", ".join(caveats))
    if extra:
        if "solutions" in extra:
            lines.append(f"coefficient solutions ({len(extra['solutions'])}): " + ", ".join(s["label"] for s in extra["solutions"]))
        if "grid_probe" in extra:
            g = extra["grid_probe"]
            hits = ", ".join(f"({a:g}, {b:g})" for a, b in g["hits"])
            lines.append(f"float grid probe {g['steps']}x{g['steps']} (heuristic, degrees): {hits or 'none'}")
        if "appendix" in extra:
            lines.append(extra["appendix"])
    return "\n".join(lines) + "\n"


def _solutions_extra(cfg: RunConfig) -> tuple[ClaimResult, dict]:
    solutions, result = solve_E2_coefficients(cfg.root_order, inject_fault="E2" in cfg.inject_fault)
    return result, {"solutions": [dict(s.to_json(), label=s.label()) for s in solutions]}


def execute(cfg: RunConfig) -> tuple[str, int]:
    kwargs = dict(
        root_order=cfg.root_order,
        max_n=cfg.max_n,
        pairwise_dims=cfg.pairwise_dims,
        backend=cfg.backend,
        samples=cfg.samples,
        seed=cfg.random_seed,
        tolerance=cfg.float_tolerance,
        faults=cfg.inject_fault,
    )
    extra = None
    if cfg.command == "verify-all":
        results = run_all(**kwargs)
    elif cfg.command == "verify":
        results = run_all(claims=[cfg.claim_id], **kwargs)
    elif cfg.command == "solve-coefficients":
        results = run_all(claims=["E2"], **kwargs)
        _, extra = _solutions_extra(cfg)
    elif cfg.command == "report":
        results = run_all(**kwargs)
        _, extra = _solutions_extra(cfg)
        extra["grid_probe"] = {"steps": 360, "threshold": 1e-6, "hits": grid_probe_coefficients(360, 1e-6)}
        extra["appendix"] = APPENDIX
    else:
        raise UsageError(cfg.command)
    text = render_report(results, cfg.output_format, cfg, extra)
    failed = any(r.status in (REFUTED, INCONSISTENT) for r in results)
    return text, 1 if failed else 0


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    text, status = execute(cfg)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
