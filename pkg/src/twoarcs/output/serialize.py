"""
Machine output: one JSON document per run, or raw CSV / SVG bytes.

Keys keep insertion order so the same run always produces the same bytes.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import click

from twoarcs.config.models import RunConfig
from twoarcs.utils.logger import get_logger

logger = get_logger(__name__)


def envelope(config: RunConfig, result: Any) -> Dict[str, Any]:
    """``{"config": ..., "result": ...}``."""
    return {"config": config.model_dump(), "result": result}


def to_json(payload: Any) -> bytes:
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def write_output(data: bytes, out: Optional[str] = None) -> None:
    """Write ``data`` to ``out``, or to stdout when no path is given."""
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(data)
        logger.info(f"wrote {len(data)} bytes to {path}")
        return
    stream = click.get_binary_stream("stdout")
    stream.write(data)
    stream.flush()
