"""
Discrete Wiener-Hopf solver for plane-wave scattering by semi-infinite arrays of small sound-soft cylinders.

Modules:
    errors: Exception hierarchy.
    objects: Data classes and enums.
    specfun, polylog: Special functions.
    geometry: Positions, distances, incident phases, admissibility.
    kernel: Kernel evaluation, damped oracle, factorisation and lambda coefficients.
    bank: Cache of factorised kernels.
    solver: Block system, solve paths, residuals and diagnostics.
    field: Fields on grids and sound pressure levels.
    reference: Exact line solution, dense Foldy solve, least-squares collocation, comparisons.
"""
from scattering.errors import *
from scattering.objects import *
from scattering import specfun, polylog, geometry, kernel, solver, field, reference
from scattering.bank import KernelBank
