"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 unreadable or
malformed input (or an I/O failure), 3 disconnected graph.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .errors import EccSpectraError, GraphDisconnected, InvalidEdge, ParseError, VertexOutOfRange
from .generators import FIXTURES, corpus_spec, random_ct_clique_tree
from .graph import Graph, format_edge_list, parse_edge_list
from .matrix import IntSymMatrix, parse_matrix
from .report import build_report, to_csv, to_json, to_text
from .spectra import DEFAULT_TOL
from .theorems import GraphContext, MatrixContext, verify_all, verify_matrix

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DISCONNECTED = 0, 1, 2, 3
PARALLEL_THRESHOLD = 64


class InputError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("ECC_SPECTRA_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _map(fn: Callable, items: Sequence) -> list:
    """Order-preserving map, in worker processes for large batches."""
    workers = min(_threads(), len(items))
    if workers <= 1 or len(items) < PARALLEL_THRESHOLD:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def write_atomic(path: Path, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def load_input(path: str | Path, fmt: str | None) -> Graph | IntSymMatrix:
    path = Path(path)
    if fmt is None:
        fmt = "matrix" if path.suffix == ".matrix" else "edges"
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc
    try:
        return parse_matrix(text) if fmt == "matrix" else parse_edge_list(text)
    except (ParseError, InvalidEdge, VertexOutOfRange) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _context(item, graph_id: str, tol: float, zero_tol: float | None):
    if isinstance(item, Graph):
        return GraphContext(item, graph_id, tol, zero_tol)
    return MatrixContext(item, graph_id, tol, zero_tol)


def _analyze_one(job) -> dict:
    item, graph_id, tol, zero_tol = job
    ctx = _context(item, graph_id, tol, zero_tol)
    result = verify_all(ctx) if isinstance(ctx, GraphContext) else verify_matrix(ctx)
    return build_report(ctx, result)


def _render(reports: list[dict], output: str) -> str:
    if output == "csv":
        return to_csv(reports)
    if output == "text":
        return "".join(to_text(r) for r in reports)
    return to_json(reports)


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(Path(out), text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    jobs = []
    for p in args.inputs:
        item = load_input(p, args.format)
        if isinstance(item, Graph) and not item.is_connected:
            print(f"error: {p}: graph is disconnected", file=sys.stderr)
            return EXIT_DISCONNECTED
        jobs.append((item, Path(p).stem, args.tol, args.zero_tol))
    reports = _map(_analyze_one, jobs)
    _emit(_render(reports, args.output), args.out)
    return EXIT_OK


def _fixture_jobs(fixtures_dir: str | None) -> list[tuple]:
    jobs = []
    for name, fx in FIXTURES.items():
        item = fx.value
        if fixtures_dir is not None:
            item = load_input(Path(fixtures_dir) / fx.filename, fx.kind)
        jobs.append((item, name))
    return jobs


def _verify_one(job) -> dict:
    item, graph_id, tol, zero_tol = job
    if isinstance(item, int):
        item = random_ct_clique_tree(corpus_spec(item))
    return _analyze_one((item, graph_id, tol, zero_tol))


def cmd_verify(args) -> int:
    jobs = [(item, name, args.tol, args.zero_tol) for item, name in _fixture_jobs(args.fixtures_dir)]
    if not args.fixtures_only:
        # seeds travel to the workers; graphs are generated there
        jobs += [(s, f"seed-{s}", args.tol, args.zero_tol) for s in range(args.seed, args.seed + args.count)]
    reports = _map(_verify_one, jobs)
    failed = 0
    for rep in reports:
        for c in rep["checks"]:
            if c["applicable"] and not c["passed"]:
                failed += 1
                print(f"FAIL {rep['graph_id']} {c['id']}: {c['witness']}", file=sys.stderr)
    output = "csv" if args.output is None else args.output
    _emit(_render(reports, output), args.out)
    print(f"checked {len(reports)} inputs, {failed} failing checks", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_generate(args) -> int:
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        for s in range(args.seed, args.seed + args.count):
            spec = corpus_spec(s)
            g = random_ct_clique_tree(spec)
            header = f"seed {s} shape {spec.shape} n_blocks {spec.n_blocks} block_size {spec.block_size}"
            write_atomic(out / f"ct_{s:06d}.edges", format_edge_list(g, header))
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def _positive(x: str) -> float:
    v = float(x)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _count(x: str) -> int:
    v = int(x)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ecc-spectra", description="Eccentricity matrices of clique trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def numeric(p):
        p.add_argument("--tol", type=_positive, default=DEFAULT_TOL, help="Jacobi stopping tolerance (relative)")
        p.add_argument("--zero-tol", type=_positive, default=None, help="threshold for a float eigenvalue to count as zero")

    a = sub.add_parser("analyze", help="report on graphs or eccentricity matrices")
    a.add_argument("inputs", nargs="+")
    a.add_argument("--format", choices=("edges", "matrix"), default=None, help="default: by file suffix")
    a.add_argument("--output", choices=("json", "csv", "text"), default="json")
    a.add_argument("--out", default=None, help="write to this file instead of stdout")
    numeric(a)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run all checks on the fixtures and a random corpus")
    v.add_argument("--count", type=_count, default=0)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--fixtures-only", action="store_true")
    v.add_argument("--fixtures-dir", default=None, help="read fixtures from files in this directory")
    v.add_argument("--output", choices=("json", "csv", "text"), default=None, help="default: csv")
    v.add_argument("--out", default=None, help="write the summary to this file")
    numeric(v)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("generate", help="write random members of CT as edge lists")
    g.add_argument("--count", type=_count, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", default=".")
    g.set_defaults(func=cmd_generate)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    args = build_parser().parse_args(None if argv is None else list(argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphDisconnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EccSpectraError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
