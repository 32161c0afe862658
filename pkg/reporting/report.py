"""
CSV, JSON and SVG writers with reproducible output
"""

import io
import json
import math
import sys

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from utils import DomainError, load_config

CONFIG = load_config()
FORMATS = ('csv', 'json', 'svg')


def _plain(value):
    """numpy scalars and arrays to JSON-ready Python values; non-finite floats become strings"""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_plain(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    if hasattr(value, 'as_dict'):
        return _plain(value.as_dict())
    if hasattr(value, 'as_row'):
        return _plain(value.as_row())
    return value


def to_frame(rows, columns=None):
    """DataFrame from records (objects with as_row or dicts) in the given row order"""
    rows = [row.as_row() if hasattr(row, 'as_row') else row for row in rows]
    frame = pd.DataFrame(rows)
    if columns is not None:
        frame = frame.reindex(columns=list(columns))
    return frame


def csv_text(frame: pd.DataFrame):
    return frame.to_csv(index=False, float_format=CONFIG['cli']['float_format'], lineterminator='\n')


def json_text(payload):
    """Sorted keys; floats are written with repr, which round-trips exactly"""
    if isinstance(payload, pd.DataFrame):
        payload = payload.to_dict(orient='records')
    return json.dumps(_plain(payload), sort_keys=True, indent=2) + '\n'


def _with_margin(bounds, margin):
    x_min, x_max, y_min, y_max = bounds
    pad = margin * max(x_max - x_min, y_max - y_min, 1e-12)
    return x_min - pad, x_max + pad, max(y_min - pad, 0.0), y_max + pad


def svg_text(paths, bounds, circles=(), markers=(), title=None):
    """
    Curves as an SVG document. paths is a list of (gamma1, gamma2) arrays, bounds the
    (x_min, x_max, y_min, y_max) of the drawing before the margin is added.
    """
    if not all(math.isfinite(b) for b in bounds):
        raise DomainError(f"SVG view box needs finite bounds, got {bounds}")
    x_min, x_max, y_min, y_max = _with_margin(bounds, CONFIG['reporting']['margin'])
    width, height = x_max - x_min, y_max - y_min
    scale = 6.0 / max(width, height)

    with plt.rc_context({'svg.hashsalt': CONFIG['reporting']['svg_hashsalt'], 'svg.fonttype': 'none'}):
        fig = plt.figure(figsize=(width * scale, height * scale))
        ax = fig.add_axes([0.0, 0.0, 1.0, 1.0])
        for center, radius in circles:
            ax.add_patch(plt.Circle(center, radius, fill=False, color='gray', linestyle='--', linewidth=0.6))
        for gamma1, gamma2 in paths:
            ax.plot(gamma1, gamma2, color='navy', linewidth=0.9)
        for x1, x2 in markers:
            ax.plot([x1], [x2], 'o', color='red', markersize=2.5)
        ax.axhline(0.0, color='black', linewidth=0.5)
        if title:
            ax.set_title(title)
        ax.set_xlim(x_min, x_max)
        ax.set_ylim(y_min, y_max)
        ax.set_aspect('equal')
        ax.axis('off')
        buffer = io.StringIO()
        fig.savefig(buffer, format='svg', metadata={'Date': None})
        plt.close(fig)
    return buffer.getvalue()


def write_output(text, out=None):
    """Write to the path `out`, or to stdout when out is None or '-'"""
    if out in (None, '-'):
        sys.stdout.write(text)
        return None
    with open(out, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)
    return out
