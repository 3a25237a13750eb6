import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar

from config import settings
from errors import OutputError

T = TypeVar("T")
R = TypeVar("R")

Point = Tuple[float, float]

SVG_NS = "http://www.w3.org/2000/svg"


def ordered_map(fn: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """Map over items with up to `threads` workers; results keep input order"""
    items = list(items)
    threads = settings.threads if threads is None else threads
    if threads <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def write_text(path: Optional[str], text: str):
    """Write to a file, or to stdout when no path is given"""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise OutputError(f"Could not write {path}: {e}")


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def json_text(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"



def rounder(x: float, prec: int = 9):
    """Short, stable number formatting for SVG attributes"""
    xr = round(float(x), prec)
    if xr == 0:
        return 0
    if xr % 1 == 0:
        return int(xr)
    return xr


def svg_props(d: Dict[str, Any]) -> str:
    return " ".join(f'{k.replace("_", "-")}="{rounder(v) if isinstance(v, float) else v}"' for k, v in d.items())


def svg_polyline(points: Sequence[Point], **attrs) -> str:
    coords = " ".join(f"{rounder(x)},{rounder(y)}" for x, y in points)
    base = dict(points=coords, fill="none", stroke="black", stroke_width=0.002)
    base.update(attrs)
    return f"<polyline {svg_props(base)} />"


def svg_document(elements: Sequence[str], viewbox: Tuple[float, float, float, float], size: int = 600) -> str:
    box = " ".join(str(rounder(v)) for v in viewbox)
    head = svg_props(dict(xmlns=SVG_NS, width=size, height=size, viewBox=box))
    return f"<svg {head}>\n" + "\n".join(elements) + "\n</svg>\n"
