"""Command-line interface."""

from .app import build_parser, dispatch, parse_args, run
from .rendering import dump_json, render_ordered_expansion, render_value

__all__ = [
    "build_parser",
    "dispatch",
    "parse_args",
    "run",
    "dump_json",
    "render_ordered_expansion",
    "render_value",
]
