"""Report assembly and rendering (JSON, CSV, text)."""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any

from .exact import IntPolynomial, is_spectrum_symmetric_exact
from .theorems import GraphContext, MatrixContext, TheoremReport, verify_all, verify_matrix

# expanded polynomial -> printed factored form, sign-normalised
GOLDEN_FACTORIZATIONS: dict[IntPolynomial, str] = {
    IntPolynomial.from_factors([IntPolynomial.monomial(7), (320, 0, -216, 0, 1)]):
        "x^7(x^4 - 216x^2 + 320)",
    IntPolynomial.from_factors([IntPolynomial.monomial(7), (720, -360, -199, 0, 1)]):
        "x^7(x^4 - 199x^2 - 360x + 720)",
    IntPolynomial.from_factors([IntPolynomial.monomial(11), (-2, 1), (18, 1), (-356, -16, 1)]):
        "x^11(x - 2)(x + 18)(x^2 - 16x - 356)",
    IntPolynomial.from_factors([IntPolynomial.monomial(3), (-1536, 1728, 528, -588, -147, 0, 1)]):
        "x^3(x^6 - 147x^4 - 588x^3 + 528x^2 + 1728x - 1536)",
    IntPolynomial.from_factors([(-1, 1), (-1, 1), (0, 1), (4, 1), (4, 1), (288, -144, -106, -6, 1)]):
        "x(x - 1)^2(x + 4)^2(x^4 - 6x^3 - 106x^2 - 144x + 288)",
}


def golden_factorization(p: IntPolynomial) -> str | None:
    return GOLDEN_FACTORIZATIONS.get(p.normalized())


def round_sig(x: float, digits: int = 12) -> float:
    if not math.isfinite(x) or x == 0:
        return x
    return float(f"{x:.{digits}g}")


def _clean(obj: Any) -> Any:
    """Round floats to 12 significant digits; turn sets and tuples into lists."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, float):
        return round_sig(obj)
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_clean(v) for v in items]
    if hasattr(obj, "item"):  # numpy scalars
        return _clean(obj.item())
    return obj


def build_report(ctx: GraphContext | MatrixContext, result: TheoremReport | None = None) -> dict[str, Any]:
    if result is None:
        result = verify_all(ctx) if isinstance(ctx, GraphContext) else verify_matrix(ctx)
    if isinstance(ctx, GraphContext):
        m = ctx.g.m
        cls = {
            "is_clique_tree": ctx.cls.is_clique_tree,
            "in_ct": ctx.cls.in_ct,
            "diameter": ctx.profile.diameter,
            "radius": ctx.profile.radius,
            "center": sorted(ctx.profile.center),
        }
    else:
        m = None
        cls = {
            "is_clique_tree": None,
            "in_ct": None,
            "diameter": ctx.diameter,
            "radius": ctx.radius,
            "center": ctx.center,
        }
    poly = ctx.poly
    return _clean({
        "graph_id": ctx.graph_id,
        "n": ctx.n,
        "m": m,
        "class": cls,
        "char_poly": poly.to_json(),
        "inertia_exact": list(ctx.inertia.as_tuple()),
        "spectrum": list(ctx.spectrum.eigenvalues),
        "symmetric": is_spectrum_symmetric_exact(poly) if ctx.n else True,
        "checks": [c.to_dict() for c in result.checks],
        "flags": list(result.flags),
    })


def to_json(reports: list[dict[str, Any]]) -> str:
    payload = reports[0] if len(reports) == 1 else reports
    return json.dumps(payload, indent=2) + "\n"


CSV_FIELDS = (
    "graph_id", "n", "m", "in_ct", "diameter", "n_plus", "n_minus", "n_zero",
    "symmetric", "applicable", "failed", "flags",
)


def csv_row(rep: dict[str, Any]) -> dict[str, Any]:
    checks = rep["checks"]
    plus, minus, zero = rep["inertia_exact"]
    return {
        "graph_id": rep["graph_id"],
        "n": rep["n"],
        "m": "" if rep["m"] is None else rep["m"],
        "in_ct": "" if rep["class"]["in_ct"] is None else rep["class"]["in_ct"],
        "diameter": rep["class"]["diameter"],
        "n_plus": plus,
        "n_minus": minus,
        "n_zero": zero,
        "symmetric": rep["symmetric"],
        "applicable": sum(1 for c in checks if c["applicable"]),
        "failed": sum(1 for c in checks if c["applicable"] and not c["passed"]),
        "flags": ";".join(rep["flags"]),
    }


def to_csv(reports: list[dict[str, Any]]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rep in reports:
        writer.writerow(csv_row(rep))
    return buf.getvalue()


def _snap(x: float, scale: float) -> float:
    return 0.0 if abs(x) <= 1e-9 * max(1.0, scale) else x


def to_text(rep: dict[str, Any]) -> str:
    poly = IntPolynomial.from_json(rep["char_poly"])
    shown = golden_factorization(poly)
    if shown is None:
        shown = str(poly.normalized())
    cls = rep["class"]
    scale = max((abs(x) for x in rep["spectrum"]), default=1.0)
    lines = [
        f"{rep['graph_id']}: n={rep['n']}" + ("" if rep["m"] is None else f" m={rep['m']}"),
        f"  clique tree: {cls['is_clique_tree']}  in CT: {cls['in_ct']}",
        f"  diameter {cls['diameter']}  radius {cls['radius']}  center {cls['center']}",
        f"  char poly: {shown}",
        "  inertia: ({}, {}, {})".format(*rep["inertia_exact"]),
        "  spectrum: " + ", ".join(f"{_snap(x, scale):.6g}" for x in rep["spectrum"]),
        f"  symmetric: {rep['symmetric']}",
    ]
    for c in rep["checks"]:
        status = "n/a " if not c["applicable"] else ("PASS" if c["passed"] else "FAIL")
        lines.append(f"  [{status}] {c['id']}")
    for flag in rep["flags"]:
        lines.append(f"  flag: {flag}")
    return "\n".join(lines) + "\n"
