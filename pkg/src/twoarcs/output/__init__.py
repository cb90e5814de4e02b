"""Machine output and console summaries."""

from twoarcs.output.console import Console
from twoarcs.output.serialize import envelope, to_json, write_output

__all__ = ["Console", "envelope", "to_json", "write_output"]
