"""Utilities for environment setup.

These helpers keep path resolution, the Spark session and the random seed
consistent between the command line, the verification suite and the tests.

Functions:
    - get_spark_session: Initialize and return a SparkSession.
    - resolve_path: Turn user paths into absolute paths.
    - get_seed: Read the verification seed from the environment.
"""

import os

SEED_VARIABLE = "WARPKNOT_SEED"


def get_spark_session(app_name: str = "warpknot", master: str = None):
    """Create or get an existing SparkSession.

    pyspark is imported lazily so the rest of the package works without a JVM.

    Args:
        app_name (str): Application name for a newly created session.
        master (str, optional): Spark master URL, e.g. ``local[*]``. Defaults
            to the cluster default.

    Returns:
        SparkSession: The active SparkSession object.

    Example:
        >>> spark = get_spark_session("warpknot-verify", master="local[2]")
    """
    from pyspark.sql import SparkSession

    builder = SparkSession.builder.appName(app_name)
    if master is not None:
        builder = builder.master(master)
    spark_session = builder.getOrCreate()

    return spark_session


def resolve_path(path: str) -> str:
    """Resolve a file path against the current directory.

    Args:
        path (str): Absolute path, or a path relative to the current directory.

    Returns:
        str: Resolved absolute file path.

    Raises:
        ValueError: If ``path`` is empty.

    Examples:
        >>> resolve_path("/tmp/trefoil.gauss")
        '/tmp/trefoil.gauss'
        >>> os.chdir("/work")
        >>> resolve_path("./corpus/n3.gauss")
        '/work/corpus/n3.gauss'
    """
    if not path:
        raise ValueError("Path must be a non-empty string.")

    if os.path.isabs(path):
        return path
    return os.path.abspath(path)


def get_seed(default: int = 0) -> int:
    """Return the seed from ``WARPKNOT_SEED``, or ``default`` when unset.

    Raises:
        ValueError: If the variable is not an integer in the signed 64-bit range.
    """
    raw = os.environ.get(SEED_VARIABLE)
    if raw is None or raw.strip() == "":
        return default
    try:
        seed = int(raw.strip())
    except ValueError as err:
        raise ValueError(f"{SEED_VARIABLE} must be an integer, got {raw!r}.") from err
    if not -(2**63) <= seed < 2**63:
        raise ValueError(f"{SEED_VARIABLE} must fit in 64 bits, got {seed}.")
    return seed
