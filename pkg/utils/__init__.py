"""
Imports the exit status enum and the error-mapping decorator.

Modules:
- ExitStatus: Enum class that defines the process exit codes.
- exit_on_error: Decorator that maps raised library errors onto exit codes.
- status_for: The exit code for one error.
"""

from utils.exit_status import ExitStatus
from utils.error_utils import exit_on_error, status_for
