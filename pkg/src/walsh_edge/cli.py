"""Command-line front end: generators, edge detection, baseline, comparison,
resource accounting and circuit export."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import imaging, pipeline, qsim
from .metrics import SsimParams

SCHEMA_VERSION = 1


def _parse_size(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) == 1:
        side = int(parts[0])
        return side, side
    if len(parts) == 2:
        return int(parts[0]), int(parts[1])
    raise argparse.ArgumentTypeError(f"size must be 'N' or 'N1xN2', got {text!r}")


def _write_report(report: dict, path) -> None:
    Path(path).write_text(json.dumps(report, indent=2) + "\n")


def _pass_stats(result: pipeline.EdgeResult) -> dict:
    return {
        "direction": result.direction,
        "scale": result.scale,
        "postselect_probability": result.postselect_probability,
        "degenerate": result.degenerate,
        "gate_count": result.gate_count,
        "depth": result.depth,
    }


def _cmd_gen(args) -> int:
    spec = imaging.GeneratorSpec(
        kind=args.kind,
        size=args.size,
        seed=args.seed,
        tile=args.tile,
        column=args.column,
        value=args.value,
    )
    img = imaging.generate(spec)
    imaging.save_image(img, args.output)
    print(f"wrote {args.kind} image {img.shape[0]}x{img.shape[1]} to {args.output}")
    return 0


def _cmd_edges(args) -> int:
    img = imaging.load_image(args.input, pad=args.pad)
    cutoff = pipeline.resolve_cutoff(args.cutoff, img.size)
    started = time.perf_counter()
    result = pipeline.edge_detect_combined(
        img, cutoff, args.v_scale, args.h_scale, args.mode,
        shots=args.shots, seed=args.seed,
    )
    elapsed = time.perf_counter() - started
    imaging.save_image(result.image, args.output)
    report = {
        "schema_version": SCHEMA_VERSION,
        "report": "edges",
        "input": str(args.input),
        "output": str(args.output),
        "image_shape": [int(img.shape[0]), int(img.shape[1])],
        "cutoff_spec": str(args.cutoff),
        "cutoff": cutoff,
        "mode": args.mode,
        "v_scale": args.v_scale,
        "h_scale": args.h_scale,
        "shots": args.shots,
        "seed": args.seed,
        "passes": {
            "vertical": _pass_stats(result.vertical),
            "horizontal": _pass_stats(result.horizontal),
        },
        "elapsed_seconds": elapsed,
    }
    if args.report:
        _write_report(report, args.report)
    degenerate = result.vertical.degenerate and result.horizontal.degenerate
    note = " (degenerate post-selection: constant input)" if degenerate else ""
    print(f"wrote edge map to {args.output} (cutoff {cutoff}, mode {args.mode}){note}")
    return 0


def _cmd_qhed(args) -> int:
    img = imaging.load_image(args.input, pad=args.pad)
    started = time.perf_counter()
    result = pipeline.qhed_combined(img, args.v_scale, args.h_scale)
    elapsed = time.perf_counter() - started
    imaging.save_image(result.image, args.output)
    report = {
        "schema_version": SCHEMA_VERSION,
        "report": "qhed",
        "input": str(args.input),
        "output": str(args.output),
        "image_shape": [int(img.shape[0]), int(img.shape[1])],
        "v_scale": args.v_scale,
        "h_scale": args.h_scale,
        "passes": {
            "vertical": _pass_stats(result.vertical),
            "horizontal": _pass_stats(result.horizontal),
        },
        "elapsed_seconds": elapsed,
    }
    if args.report:
        _write_report(report, args.report)
    print(f"wrote baseline edge map to {args.output}")
    return 0


def _cmd_compare(args) -> int:
    img = imaging.load_image(args.input, pad=args.pad)
    cutoff = pipeline.resolve_cutoff(args.cutoff, img.size)
    params = SsimParams(window=args.ssim_window)
    comparison = pipeline.compare_methods(
        img, cutoff, args.v_scale, args.h_scale, ssim_params=params
    )
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    proposed_path = outdir / "edges_sequency_highpass.pgm"
    baseline_path = outdir / "edges_qhed.pgm"
    imaging.save_image(comparison.proposed.image, proposed_path)
    imaging.save_image(comparison.baseline.image, baseline_path)
    report = dict(comparison.report)
    report["input"] = str(args.input)
    report["cutoff_spec"] = str(args.cutoff)
    report["outputs"] = [str(proposed_path), str(baseline_path)]
    report_path = args.report or (outdir / "compare.json")
    _write_report(report, report_path)
    for row in report["rows"]:
        print(f"{row['algorithm']:>20}: SSIM vs original = {row['ssim_vs_original']:.4f}")
    print(f"wrote report to {report_path}")
    return 0


def _cmd_resources(args) -> int:
    def table_row(n: int, cutoff_spec: str) -> dict:
        cutoff = pipeline.resolve_cutoff(cutoff_spec, 1 << n)
        wht_circ = qsim.build_sequency_wht_circuit(n)
        pipe = pipeline.build_pipeline_circuit(n, cutoff)
        filt = qsim.build_highpass_circuit(n, cutoff)
        return {
            "data_qubits": n,
            "cutoff": cutoff,
            "wht_depth": qsim.circuit_depth(wht_circ),
            "wht_gates": qsim.gate_count(wht_circ),
            "filter_gates": qsim.gate_count(filt),
            "pipeline_depth": qsim.circuit_depth(pipe),
            "pipeline_gates": qsim.gate_count(pipe),
        }

    rows = [table_row(n, args.cutoff) for n in range(2, 15)]
    if args.qubits is not None:
        focus = table_row(args.qubits, args.cutoff)
        rows = [focus] + [r for r in rows if r["data_qubits"] != args.qubits]
        rows.sort(key=lambda r: r["data_qubits"])
    header = f"{'n':>3} {'cutoff':>8} {'wht_depth':>10} {'wht_gates':>10} " \
             f"{'filter':>7} {'pipe_depth':>11} {'pipe_gates':>11}"
    print(header)
    for r in rows:
        print(
            f"{r['data_qubits']:>3} {r['cutoff']:>8} {r['wht_depth']:>10} "
            f"{r['wht_gates']:>10} {r['filter_gates']:>7} {r['pipeline_depth']:>11} "
            f"{r['pipeline_gates']:>11}"
        )
    if args.report:
        _write_report(
            {
                "schema_version": SCHEMA_VERSION,
                "report": "resources",
                "cutoff_spec": str(args.cutoff),
                "rows": rows,
            },
            args.report,
        )
    return 0


def _cmd_qasm(args) -> int:
    cutoff = pipeline.resolve_cutoff(args.cutoff, 1 << args.qubits)
    circuit = pipeline.build_pipeline_circuit(args.qubits, cutoff)
    text = qsim.export_qasm(circuit)
    if args.output:
        Path(args.output).write_text(text)
        print(f"wrote {args.qubits + 1}-qubit pipeline circuit to {args.output}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walsh-edge",
        description="Walsh-domain high-pass edge detection with an exact "
        "gate-level simulation and a fast classical oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a deterministic test image")
    gen.add_argument("--kind", required=True,
                     choices=["checkerboard", "blobs", "polygon", "step", "constant"])
    gen.add_argument("--size", type=_parse_size, default=(64, 64),
                     help="N for square or N1xN2 (powers of two)")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--tile", type=int, default=8, help="checkerboard tile size")
    gen.add_argument("--column", type=int, default=None, help="step transition column")
    gen.add_argument("--value", type=float, default=128.0, help="constant intensity")
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=_cmd_gen)

    edges = sub.add_parser("edges", help="detect edges in a grayscale image")
    edges.add_argument("--input", required=True)
    edges.add_argument("--output", required=True)
    edges.add_argument("--cutoff", default="N/2", help="integer, 'N/2' or 'N/4'")
    edges.add_argument("--v-scale", type=float, default=3.0)
    edges.add_argument("--h-scale", type=float, default=2.0)
    edges.add_argument("--mode", choices=["oracle", "circuit"], default="oracle")
    edges.add_argument("--shots", type=int, default=None,
                       help="sampled readout in circuit mode (loses signs)")
    edges.add_argument("--seed", type=int, default=None)
    edges.add_argument("--report", default=None, help="path for a JSON run report")
    edges.add_argument("--pad", action="store_true",
                       help="zero-pad inputs to power-of-two dimensions")
    edges.set_defaults(func=_cmd_edges)

    qhed = sub.add_parser("qhed", help="pair-difference baseline edge map")
    qhed.add_argument("--input", required=True)
    qhed.add_argument("--output", required=True)
    qhed.add_argument("--v-scale", type=float, default=3.0)
    qhed.add_argument("--h-scale", type=float, default=2.0)
    qhed.add_argument("--report", default=None)
    qhed.add_argument("--pad", action="store_true")
    qhed.set_defaults(func=_cmd_qhed)

    compare = sub.add_parser("compare", help="run both methods and report SSIM scores")
    compare.add_argument("--input", required=True)
    compare.add_argument("--cutoff", default="N/2")
    compare.add_argument("--v-scale", type=float, default=3.0)
    compare.add_argument("--h-scale", type=float, default=2.0)
    compare.add_argument("--ssim-window", choices=["gaussian", "uniform"], default="gaussian")
    compare.add_argument("--outdir", default="compare_out")
    compare.add_argument("--report", default=None)
    compare.add_argument("--pad", action="store_true")
    compare.set_defaults(func=_cmd_compare)

    resources = sub.add_parser("resources", help="depth / gate-count accounting")
    resources.add_argument("--qubits", type=int, default=None,
                           help="also show this data-qubit count")
    resources.add_argument("--cutoff", default="N/2")
    resources.add_argument("--report", default=None)
    resources.set_defaults(func=_cmd_resources)

    qasm = sub.add_parser("qasm", help="export the pipeline circuit as OpenQASM 2.0")
    qasm.add_argument("--qubits", type=int, required=True, help="data qubit count")
    qasm.add_argument("--cutoff", default="N/2")
    qasm.add_argument("--output", default=None)
    qasm.set_defaults(func=_cmd_qasm)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
