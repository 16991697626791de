"""JSON export of verification reports.

Functions:
    - write_json_file: Writes a report dictionary to a JSON file.
"""

import json
import os
from typing import Any, Dict

from .environment_utils import resolve_path


def write_json_file(data: Dict[str, Any], path: str, indent: int = 4) -> None:
    """Write a dictionary to a JSON file at the given path.

    Args:
        data (dict): Report to write; values must be JSON serialisable.
        path (str): Absolute or cwd-relative file path.
        indent (int, optional): Number of spaces for indentation. Defaults to 4.

    Raises:
        ValueError: If the target directory does not exist.

    Example:
        >>> write_json_file(report.to_dict(), "reports/verify.json")
    """
    resolved_path = resolve_path(path)

    directory = os.path.dirname(resolved_path)
    if not os.path.isdir(directory):
        raise ValueError(f"Directory '{directory}' does not exist.")

    with open(resolved_path, "w") as handle:
        json.dump(data, handle, indent=indent)
        handle.write("\n")
