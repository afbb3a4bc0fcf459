""" Loads the published reference values shipped next to this module."""

import json
import logging
from pathlib import Path
from typing import Any, List, Mapping, Optional, Tuple

from ..classes import ReferenceRow

__all__ = [
    "tables",
    "stem_to_path",
    "reference_rows",
    "certified_reference",
]

logger = logging.getLogger(__name__)

HERE = Path(__file__).parent.resolve()
DIMENSION_TABLE_PATH = HERE.joinpath("dimension_table.json")
CERTIFIED_INTERVALS_PATH = HERE.joinpath("certified_intervals.json")

JSON_PATHS = sorted(HERE.glob("*.json"))
for path in JSON_PATHS:
    logger.debug("loading heckedim reference data from %s", path)

tables: Mapping[str, Any] = {path.stem: json.loads(path.read_text()) for path in JSON_PATHS}
stem_to_path: Mapping[str, Path] = {path.stem: path for path in JSON_PATHS}


def reference_rows() -> List[ReferenceRow]:
    """The published delta(w) table, in increasing w."""
    rows = [ReferenceRow.model_validate(row) for row in tables[DIMENSION_TABLE_PATH.stem]]
    return sorted(rows, key=lambda row: row.w)


def certified_reference(w: float) -> Optional[Tuple[float, float]]:
    """The published certified interval for w, if there is one."""
    for key, (lower, upper) in tables[CERTIFIED_INTERVALS_PATH.stem].items():
        if float(key) == w:
            return lower, upper
    return None
