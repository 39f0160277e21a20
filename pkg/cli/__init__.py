"""
命令行

qpt / analyze / discriminate / channels list 四个子命令.
"""

from .app import build_parser, main
from .models import RunConfig, load_run_config

__all__ = ["RunConfig", "build_parser", "load_run_config", "main"]
