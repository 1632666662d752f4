"""Resource guards and environment-backed defaults.

Environment variables (command-line flags take precedence over these,
and these take precedence over the built-in defaults):

    PQCAT_PRECISION      working precision in bits for the threshold
                         inequality (default 256)
    PQCAT_SIEVE_SEGMENT  segment length, in odd flags, of the segmented
                         prime sieve (default 2**20)
"""

import os


class SizeGuardError(Exception):
    """A requested computation exceeds a configured resource guard."""


class PrecisionError(SizeGuardError):
    """An interval comparison stayed indeterminate at the precision cap."""


class ThresholdSearchError(SizeGuardError):
    """No sign change found below the configured exponent cap."""


DEFAULT_EXACT_LIMIT = 10**6       # largest s*n for exact binomial evaluation
DEFAULT_SIEVE_LIMIT = 10**8       # largest admissible prime-sieve target
DEFAULT_SIEVE_SEGMENT = 1 << 20
DEFAULT_PRECISION = 256
PRECISION_CAP = 4096
DEFAULT_EXPONENT_CAP = 1 << 14    # threshold search gives up past 2**cap


def env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc


def default_precision() -> int:
    return env_int("PQCAT_PRECISION", DEFAULT_PRECISION)


def sieve_segment() -> int:
    return env_int("PQCAT_SIEVE_SEGMENT", DEFAULT_SIEVE_SEGMENT)
