"""Text and JSON output for the command-line surface."""
import json
from typing import Iterable, Sequence

from pydantic import BaseModel

from taulab.schemas.report import AlgebraInfo, ClassReport, ComputeResult, VerifyResult

CLASSIFY_COLUMNS = (
    ("module", "module"),
    ("proj", "projective"),
    ("inj", "injective"),
    ("Ext1", "ext1_A"),
    ("Ext2", "ext2_A"),
    ("TrRefl", "tr_reflexive"),
    ("tauPerf", "tau_perfect"),
    ("tauInvPerf", "tau_inv_perfect"),
    ("refl", "reflexive"),
    ("tf", "torsionless"),
    ("GP", "gorenstein_projective"),
    ("domdim", "dominant_dim"),
)


def to_json(payload) -> str:
    """Stable JSON: sorted keys, no timestamps."""
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    elif isinstance(payload, (list, tuple)):
        payload = [p.model_dump(mode="json") if isinstance(p, BaseModel) else p for p in payload]
    return json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2)


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def render_info(info: AlgebraInfo) -> str:
    return f"{info.label}: {info.summary}"


def render_compute(result: ComputeResult) -> str:
    if result.value is not None:
        return _cell(result.value)
    suffix = "  (over the opposite algebra)" if result.over_opposite else ""
    return f"{result.result}{suffix}"


def render_classify(label: str, rows: Sequence[ClassReport]) -> str:
    header = [title for title, _ in CLASSIFY_COLUMNS]
    body = [[_cell(getattr(row, attr)) for _, attr in CLASSIFY_COLUMNS] for row in rows]
    widths = [max(len(r[i]) for r in [header, *body]) for i in range(len(header))]
    lines = [f"# {label}", "  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.extend("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in body)
    return "\n".join(lines)


def render_verify(results: Iterable[VerifyResult], summary: dict) -> str:
    lines = []
    for result in results:
        line = f"{result.status.upper():7} {result.suite} on {result.algebra} ({result.checked} checked)"
        if result.message:
            line += f": {result.message}"
        lines.append(line)
        for failure in result.failures:
            lines.append(f"    {failure.module}: expected {failure.expected}, got {failure.got}")
    lines.append(
        f"{summary['passed']} passed, {summary['failed']} failed, {summary['errors']} errors "
        f"({summary['checked']} modules checked)"
    )
    return "\n".join(lines)
