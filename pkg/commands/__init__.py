"""
Imports the command modules of the scattering tool.

Every module exposes `register(subparsers, parents)`, which adds its subcommand and sets the handler.

Modules:
- solve_command: Scattering coefficients.
- field_command: Total field on a grid and the SPL over a disk.
- compare_command: Comparison against collocation and the exact line solution.
- diagnose_command: Kernel, determinant and energy diagnostics.
- presets_command: Named geometries.
"""
from commands import solve_command, field_command, compare_command, diagnose_command, presets_command

COMMANDS = (solve_command, field_command, compare_command, diagnose_command, presets_command)
