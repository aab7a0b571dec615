"""
ExitStatus Enum

This enum defines the process exit codes of the scattering command line tool, grouped into:

- 0: Success
- 1: Output could not be written
- 2: Invalid input (configuration, geometry, mismatched files)
- 3: Refusal (outward resonance)
- 4: Numerical failure

Example usage:
    sys.exit(ExitStatus.RESONANCE_REFUSAL.value)
"""
from enum import Enum


class ExitStatus(Enum):

    # 0: Success
    SUCCESS = 0

    # 1: Output
    WRITE_FAILURE = 1

    # 2: Invalid input
    VALIDATION_FAILURE = 2

    # 3: Refusal
    RESONANCE_REFUSAL = 3

    # 4: Numerical failure
    NUMERICAL_FAILURE = 4
