"""
Imports the argument validators of the command handlers.

Modules:
- problem: Problem source, truncation, wavenumber, incidence angle and coefficient file checks.
- options: Thread count, SPL region, iteration count, determinant sweep and collocation checks.
"""
from validators import problem, options
