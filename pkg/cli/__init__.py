"""
Línea de órdenes de fovec con caché en disco y salida en tabla, JSON o CSV
"""

from .cache import cache_key, canonical_json, get_cache_dir, get_default_level, load_result, save_result
from .cli import build_parser, main, run
from .commands import COMMANDS, obstruction_bound, verify_all
from .output import format_csv, format_json, format_table, render
