"""Unit tests for csv_utils.py.

Functions tested:
    - write_csv_file

Edge cases tested:
    - Empty DataFrames
    - DataFrames above the row threshold
    - Writing into a missing directory
"""

import pandas as pd
import pytest

from warpknot.csv_utils import write_csv_file


@pytest.fixture
def report_frame():
    """A two-row report frame with one empty counterexample."""
    return pd.DataFrame(
        {
            "check": ["worked_example", "span_bound"],
            "passed": [True, False],
            "counterexample": ["", "O1 U1"],
        }
    )


def test_write_csv_file(report_frame, tmp_path):
    """Test the frame is written without its index."""
    path = tmp_path / "verify.csv"
    write_csv_file(report_frame, str(path))
    loaded = pd.read_csv(path, keep_default_na=False)
    assert list(loaded.columns) == ["check", "passed", "counterexample"]
    assert list(loaded["check"]) == ["worked_example", "span_bound"]
    assert list(loaded["counterexample"]) == ["", "O1 U1"]


def test_write_empty_frame(tmp_path):
    """Test empty frames are rejected."""
    with pytest.raises(ValueError, match="empty"):
        write_csv_file(pd.DataFrame(), str(tmp_path / "empty.csv"))


def test_write_over_threshold(report_frame, tmp_path):
    """Test frames above the threshold are rejected."""
    with pytest.raises(ValueError, match="threshold of 1"):
        write_csv_file(report_frame, str(tmp_path / "big.csv"), max_rows_threshold=1)


def test_write_missing_directory(report_frame, tmp_path):
    """Test writing into a missing directory is rejected."""
    with pytest.raises(ValueError, match="does not exist"):
        write_csv_file(report_frame, str(tmp_path / "missing" / "verify.csv"))
