"""Table serialization (CSV/JSON) and a dependency-free SVG plotter.

Output is deterministic: fixed column order, fixed float formatting
(12 significant digits, `inf` for infinite beta), LF line endings, and a
fixed color cycle in plots — identical inputs give identical bytes.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .errors import EmptySeries, IoError
from .thermal import SweepRow, SweepTable

CSV_HEADER = "z,beta,n,na,epsilon,mass,entropy"
_COLUMNS = CSV_HEADER.split(",")


def _fmt(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    v = float(value)
    if math.isinf(v):
        return "inf"
    return f"{v:.12g}"


def emit_table(table: SweepTable, fmt="csv"):
    """Serialize a sweep table to CSV or JSON bytes."""
    if fmt == "csv":
        lines = [CSV_HEADER]
        for r in table.rows:
            lines.append(
                ",".join(
                    (
                        str(r.z),
                        _fmt(r.beta),
                        str(r.n),
                        str(r.na),
                        _fmt(r.epsilon),
                        _fmt(r.mass),
                        _fmt(r.entropy),
                    )
                )
            )
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        payload = []
        for r in table.rows:
            payload.append(
                {
                    "z": r.z,
                    "beta": "inf" if math.isinf(r.beta) else float(f"{r.beta:.12g}"),
                    "n": r.n,
                    "na": r.na,
                    "epsilon": float(f"{r.epsilon:.12g}"),
                    "mass": float(f"{r.mass:.12g}"),
                    "entropy": float(f"{r.entropy:.12g}"),
                }
            )
        return (json.dumps(payload, indent=1) + "\n").encode()
    raise IoError(f"unknown table format: {fmt!r}")


def parse_table(data):
    """Inverse of emit_table; auto-detects CSV vs JSON."""
    text = data.decode() if isinstance(data, (bytes, bytearray)) else str(data)
    stripped = text.lstrip()
    try:
        if stripped.startswith("["):
            rows = [
                SweepRow(
                    z=int(obj["z"]),
                    beta=float(obj["beta"]),
                    n=int(obj["n"]),
                    na=int(obj["na"]),
                    epsilon=float(obj["epsilon"]),
                    mass=float(obj["mass"]),
                    entropy=float(obj["entropy"]),
                )
                for obj in json.loads(stripped)
            ]
            return SweepTable(rows=tuple(rows)).sorted()
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines or lines[0] != CSV_HEADER:
            raise ValueError(f"bad CSV header: {lines[0] if lines else '<empty>'!r}")
        rows = []
        for ln in lines[1:]:
            parts = ln.split(",")
            if len(parts) != len(_COLUMNS):
                raise ValueError(f"bad CSV row: {ln!r}")
            rows.append(
                SweepRow(
                    z=int(parts[0]),
                    beta=float(parts[1]),
                    n=int(parts[2]),
                    na=int(parts[3]),
                    epsilon=float(parts[4]),
                    mass=float(parts[5]),
                    entropy=float(parts[6]),
                )
            )
        return SweepTable(rows=tuple(rows)).sorted()
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise IoError(f"cannot parse table: {exc}") from exc


# ---------------------------------------------------------------- plotting

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
_W, _H = 640, 440
_ML, _MR, _MT, _MB = 70, 24, 34, 52


def _scaler(lo, hi, out_lo, out_hi, log):
    if log:
        if lo <= 0:
            raise ValueError("log axis requires positive data")
        lo, hi = math.log10(lo), math.log10(hi)
    if hi == lo:
        hi = lo + 1.0

    def to_px(v):
        t = (math.log10(v) if log else v)
        return out_lo + (t - lo) * (out_hi - out_lo) / (hi - lo)

    return to_px, lo, hi


def _ticks(lo, hi, log):
    if log:
        lo_d, hi_d = math.ceil(lo), math.floor(hi)
        decades = [10.0**d for d in range(lo_d, hi_d + 1)]
        if len(decades) >= 2:
            return decades
    span = hi - lo
    return [lo + span * i / 4.0 for i in range(5)]


def emit_plot(series, axes=None):
    """Render line series to self-contained SVG bytes.

    series: list of (x_values, y_values, label); each needs >= 2 points.
    axes:   optional dict with keys xlabel, ylabel, title,
            xscale/yscale ('linear' | 'log'), hlines (list of (y, label)
            drawn as dashed reference lines).
    """
    axes = dict(axes or {})
    if not series:
        raise EmptySeries("no series to plot")
    cleaned = []
    for item in series:
        x, y, label = item
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.size < 2 or x.size != y.size:
            raise EmptySeries(f"series {label!r} needs >= 2 points")
        cleaned.append((x, y, str(label)))

    xlog = axes.get("xscale", "linear") == "log"
    ylog = axes.get("yscale", "linear") == "log"
    hlines = list(axes.get("hlines", ()))
    all_x = np.concatenate([s[0] for s in cleaned])
    all_y = np.concatenate(
        [s[1] for s in cleaned] + ([np.array([h for h, _ in hlines])] if hlines else [])
    )
    x_px, xlo, xhi = _scaler(all_x.min(), all_x.max(), _ML, _W - _MR, xlog)
    y_px, ylo, yhi = _scaler(all_y.min(), all_y.max(), _H - _MB, _MT, ylog)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_W} {_H}" '
        f'font-family="monospace" font-size="11">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
        f'height="{_H - _MT - _MB}" fill="none" stroke="black"/>',
    ]
    if axes.get("title"):
        parts.append(
            f'<text x="{_W / 2:.1f}" y="20" text-anchor="middle">{axes["title"]}</text>'
        )

    for tv in _ticks(xlo, xhi, xlog):
        px = x_px(tv if not xlog else tv)
        parts.append(
            f'<line x1="{px:.2f}" y1="{_H - _MB}" x2="{px:.2f}" '
            f'y2="{_H - _MB + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.2f}" y="{_H - _MB + 18}" text-anchor="middle">'
            f"{tv:.4g}</text>"
        )
    for tv in _ticks(ylo, yhi, ylog):
        py = y_px(tv if not ylog else tv)
        parts.append(
            f'<line x1="{_ML - 5}" y1="{py:.2f}" x2="{_ML}" y2="{py:.2f}" '
            f'stroke="black"/>'
        )
        parts.append(
            f'<text x="{_ML - 8}" y="{py + 4:.2f}" text-anchor="end">{tv:.4g}</text>'
        )
    if axes.get("xlabel"):
        parts.append(
            f'<text x="{(_ML + _W - _MR) / 2:.1f}" y="{_H - 14}" '
            f'text-anchor="middle">{axes["xlabel"]}</text>'
        )
    if axes.get("ylabel"):
        cx, cy = 16, (_MT + _H - _MB) / 2
        parts.append(
            f'<text x="{cx}" y="{cy:.1f}" text-anchor="middle" '
            f'transform="rotate(-90 {cx} {cy:.1f})">{axes["ylabel"]}</text>'
        )

    for y_ref, label in hlines:
        py = y_px(y_ref)
        parts.append(
            f'<line x1="{_ML}" y1="{py:.2f}" x2="{_W - _MR}" y2="{py:.2f}" '
            f'stroke="gray" stroke-dasharray="6,4"/>'
        )
        if label:
            parts.append(
                f'<text x="{_W - _MR - 4}" y="{py - 4:.2f}" text-anchor="end" '
                f'fill="gray">{label}</text>'
            )

    for idx, (x, y, label) in enumerate(cleaned):
        color = _PALETTE[idx % len(_PALETTE)]
        pts = " ".join(f"{x_px(xv):.2f},{y_px(yv):.2f}" for xv, yv in zip(x, y))
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="1.5"/>'
        )
        ly = _MT + 16 + 14 * idx
        parts.append(
            f'<line x1="{_W - _MR - 120}" y1="{ly - 4}" x2="{_W - _MR - 100}" '
            f'y2="{ly - 4}" stroke="{color}" stroke-width="1.5"/>'
        )
        parts.append(f'<text x="{_W - _MR - 94}" y="{ly}">{label}</text>')

    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode()
