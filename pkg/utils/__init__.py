from .helpers import (
    Point, ordered_map, write_text, csv_text, json_text,
    rounder, svg_props, svg_polyline, svg_document
)

__all__ = [
    "Point", "ordered_map", "write_text", "csv_text", "json_text",
    "rounder", "svg_props", "svg_polyline", "svg_document"
]
