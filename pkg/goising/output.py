"""
Files written for a replayed game: CSV series, JSON mirror, SVG chart and
netCDF dataset.

Every file is written to a temporary file in the destination directory and
renamed into place, so a reader never sees a partial file.
"""

import csv
import io
import json
import os
import tempfile

from matplotlib import rc_context
from matplotlib.figure import Figure
from matplotlib.ticker import MultipleLocator

from .transitions import transition_flags

CSV_COLUMNS = (
    "move_number",
    "color",
    "coord",
    "S_black",
    "S_white",
    "H",
    "transition",
)
FORMATS = ("csv", "json", "svg", "nc")

BLACK_LINE = "blue"
WHITE_LINE = "red"


def _tempname(path):
    path = os.fspath(path)
    fd, tmp = tempfile.mkstemp(
        prefix="." + os.path.basename(path) + ".",
        suffix=".tmp",
        dir=os.path.dirname(os.path.abspath(path)),
    )
    os.close(fd)
    return tmp


def write_atomic(path, data):
    """Write `data` (str or bytes) to `path` through a temporary file."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    tmp = _tempname(path)
    try:
        with open(tmp, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def _num(v):
    # Shortest text that reads back to the same float, as in JSON
    return repr(float(v))


def series_csv(series, events=()):
    """
    The series as CSV text

    Columns are `move_number,color,coord,S_black,S_white,H,transition`, with
    colour B or W, coordinates in SGF letters or "pass", and `transition`
    1 on the moves at which an event fired.
    """
    flags = transition_flags(series.move_number, events)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec, coord, flag in zip(series.records(), series.coord, flags):
        writer.writerow(
            [
                rec.move_number,
                rec.color.letter,
                coord,
                _num(rec.S_black),
                _num(rec.S_white),
                _num(rec.H),
                int(flag),
            ]
        )
    return buf.getvalue()


def read_series_csv(text):
    """Rows of a CSV written by `series_csv`, with numbers parsed."""
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        rows.append(
            {
                "move_number": int(row["move_number"]),
                "color": row["color"],
                "coord": row["coord"],
                "S_black": float(row["S_black"]),
                "S_white": float(row["S_white"]),
                "H": float(row["H"]),
                "transition": int(row["transition"]),
            }
        )
    return rows


def series_document(series, verdict=None, events=(), detector=None):
    """
    JSON-ready dict of a replayed game

    Holds the game metadata, the parameters, the detector settings, the
    verdict, the events and one entry per move with the CSV columns plus the
    move intent and capture counts.
    """
    flags = transition_flags(series.move_number, events)
    moves = []
    for rec, coord, flag, cap in zip(
        series.records(), series.coord, flags, series.captures
    ):
        moves.append(
            {
                "move_number": rec.move_number,
                "color": rec.color.letter,
                "coord": coord,
                "S_black": float(rec.S_black),
                "S_white": float(rec.S_white),
                "H": float(rec.H),
                "transition": int(flag),
                "intent": rec.intent.name,
                "captures_black": int(cap[0]),
                "captures_white": int(cap[1]),
            }
        )
    return {
        "metadata": dict(series.metadata),
        "parameters": series.params.as_dict(),
        "detector": dict(detector or {}),
        "verdict": None if verdict is None else verdict.as_dict(),
        "transitions": [e._asdict() for e in events],
        "series": moves,
    }


def series_json(series, verdict=None, events=(), detector=None):
    doc = series_document(series, verdict, events, detector)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def strength_figure(series, events=(), title=None):
    """
    Line chart of the strength of each colour against move number

    Black is drawn in blue and white in red, with ticks every 50 moves and a
    dotted vertical line at each event.
    """
    fig = Figure(figsize=(8, 4))
    ax = fig.subplots()
    ax.plot(series.move_number, series.S_black, color=BLACK_LINE, label="black")
    ax.plot(series.move_number, series.S_white, color=WHITE_LINE, label="white")
    for e in events:
        ax.axvline(e.move_number, color="grey", linestyle=":", linewidth=1)
    ax.xaxis.set_major_locator(MultipleLocator(50))
    ax.set_xlabel("move")
    ax.set_ylabel("strength")
    if len(series):
        ax.set_xlim(0, max(int(series.move_number[-1]), 1))
    if title:
        ax.set_title(title)
    ax.legend(loc="upper left")
    fig.tight_layout()
    return fig


def series_svg(series, events=(), title=None):
    fig = strength_figure(series, events, title)
    buf = io.BytesIO()
    # Byte-identical across reruns
    with rc_context({"svg.hashsalt": "goising", "svg.fonttype": "none"}):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def write_nc(path, series):
    ds = series.to_xarray()
    tmp = _tempname(path)
    try:
        ds.to_netcdf(tmp)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def write_outputs(
    stem, series, verdict=None, events=(), detector=None, formats=FORMATS
):
    """
    Write the requested formats next to each other as `<stem>.<format>`

    Returns
    -------
    paths : dict
        Format to path written.
    """
    stem = os.fspath(stem)
    paths = dict()
    for fmt in formats:
        path = f"{stem}.{fmt}"
        if fmt == "csv":
            write_atomic(path, series_csv(series, events))
        elif fmt == "json":
            write_atomic(path, series_json(series, verdict, events, detector))
        elif fmt == "svg":
            write_atomic(path, series_svg(series, events, os.path.basename(stem)))
        elif fmt == "nc":
            write_nc(path, series)
        else:
            raise ValueError(f"Unknown format {fmt!r}; expected one of {FORMATS}")
        paths[fmt] = path
    return paths
