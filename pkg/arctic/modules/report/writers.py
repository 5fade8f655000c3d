"""
CSV / JSON / SVG emission of curve branches and tables.

Decimals are written with ``mp.nstr`` at a fixed number of significant
digits, so a re-parse at the same precision reproduces the emitted value.
SVG figures are drawn with matplotlib in model units; each branch line carries
the gid "branch-<id>-<index>" so it can be located in the emitted file.
"""

import csv
import io
import json
import logging
import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from mpmath import mp, mpf

from arctic.core.config import FIGURE_INCHES_PER_UNIT, OUTPUT_DIGITS
from arctic.core.errors import OutputError
from arctic.schemas.models import ModelKind, OutputFormat

logger = logging.getLogger(__name__)

CURVE_COLUMNS = ["model", "branch", "xi", "x", "y", "A", "B"]

DOMAIN_OUTLINES = {
    ModelKind.SIXV: [(0, 0), (0, 1), (-1, 1), (-1, 0)],
    ModelKind.SIXVP: [(0, 0), (0, 2), (-1, 2), (-1, 0)],
    ModelKind.TWENTYV: [(0, 0), (0, 2), (-1, 2), (-1, 1)],
    ModelKind.DT: [(0, 0), (0, 2), (-2, 0)],
}

_COLOURS = ("#c0392b", "#2471a3", "#1e8449", "#b9770e", "#7d3c98", "#148f77", "#566573", "#a04000")


def format_decimal(value, digits: int = OUTPUT_DIGITS) -> str:
    if isinstance(value, (int, str)):
        return str(value)
    return mp.nstr(mpf(value), digits)


def curve_rows(branches: list, digits: int = OUTPUT_DIGITS) -> list:
    rows = []
    for branch in branches:
        for point in branch.points:
            rows.append(
                {
                    "model": branch.model.value,
                    "branch": branch.branch.value,
                    "xi": format_decimal(point.xi, digits),
                    "x": format_decimal(point.x, digits),
                    "y": format_decimal(point.y, digits),
                    "A": format_decimal(point.A, digits),
                    "B": format_decimal(point.B, digits),
                }
            )
    return rows


def render_csv(rows: list, columns: list) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def render_json(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def render_svg(branches: list, margin=0.1) -> str:
    """Domain outline plus one line per branch, drawn with matplotlib."""
    if not branches:
        raise OutputError("nothing to draw")
    model = branches[0].model
    outline = DOMAIN_OUTLINES[model]
    xs = [x for x, _ in outline]
    ys = [y for _, y in outline]
    width = max(xs) - min(xs) + 2 * margin
    height = max(ys) - min(ys) + 2 * margin

    fig, ax = plt.subplots(figsize=(width * FIGURE_INCHES_PER_UNIT, height * FIGURE_INCHES_PER_UNIT))
    ax.fill(xs, ys, fill=False, edgecolor="black", lw=2, gid="domain")
    for i, branch in enumerate(branches):
        gid = f"branch-{branch.branch.value}-{i}"
        ax.plot(
            [float(p.x) for p in branch.points],
            [float(p.y) for p in branch.points],
            "-",
            color=_COLOURS[i % len(_COLOURS)],
            lw=2,
            gid=gid,
            label=branch.label or branch.branch.value,
        )
    ax.set_xlim(min(xs) - margin, max(xs) + margin)
    ax.set_ylim(min(ys) - margin, max(ys) + margin)
    ax.set_aspect("equal")
    ax.set_xlabel(r"$x$")
    ax.set_ylabel(r"$y$")
    ax.set_title(f"{model.value} arctic curve")
    ax.grid(alpha=0.3, ls=":")

    buffer = io.StringIO()
    fig.savefig(buffer, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    return buffer.getvalue()


def render_curves(branches: list, output_format=OutputFormat.CSV, digits: int = OUTPUT_DIGITS) -> str:
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.SVG:
        return render_svg(branches)
    rows = curve_rows(branches, digits)
    if output_format == OutputFormat.JSON:
        return render_json(rows)
    return render_csv(rows, CURVE_COLUMNS)


def render_table(rows: list, columns: list, output_format=OutputFormat.CSV) -> str:
    output_format = OutputFormat(output_format)
    if output_format == OutputFormat.SVG:
        raise OutputError("tables are written as csv or json")
    if output_format == OutputFormat.JSON:
        return render_json(rows)
    return render_csv(rows, columns)


def emit(text: str, out=None):
    """Write to the given path, or to stdout when out is None."""
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e
    logger.info(f"wrote {path}")


def read_curve_csv(path) -> list:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot read {path}: {e}") from e
    return parse_curve_csv(text)


def parse_curve_csv(text: str) -> list:
    """Rows of an emitted curve CSV with numeric columns parsed as mpf."""
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        parsed = dict(row)
        for key in ("xi", "x", "y", "A", "B"):
            parsed[key] = mpf(row[key])
        rows.append(parsed)
    return rows


