"""
Cache of factorised kernels keyed by (k, s, a).

Arrays that share wavenumber, spacing and radius share one factorisation; the Faraday cage preset,
for instance, factorises once for its twelve arrays.
"""
import logging

from scattering import kernel
from scattering.objects import KernelData, ProblemSpec, SolverOptions

logger = logging.getLogger(__name__)


class KernelBank:
    """
        Factorised kernels shared between arrays and between commands of one run.

        Methods:
            get(k, s, a, n_lambda) -> KernelData: Cached factorisation with at least n_lambda + 1 lambdas.
            for_spec(spec, N) -> list[KernelData]: One kernel per array, in array order.
    """
    def __init__(self, options: SolverOptions | None = None):
        self.options = options or SolverOptions()
        self.kernels: dict[tuple[float, float, float], KernelData] = {}

    def get(self, k: float, s: float, a: float, n_lambda: int = 0) -> KernelData:
        key = (float(k), float(s), float(a))
        cached = self.kernels.get(key)
        if cached is not None and cached.lambdas.size > n_lambda:
            return cached
        logger.debug(f"Factorising kernel for k={k:.6g} s={s:.6g} a={a:.6g} with {n_lambda + 1} lambdas")
        kd = kernel.factorize(k, s, a, self.options.contour_size, n_lambda=n_lambda,
                              extraction_radius=self.options.extraction_radius)
        self.kernels[key] = kd
        return kd

    def for_spec(self, spec: ProblemSpec, N: int | None = None) -> list[KernelData]:
        N = spec.truncation if N is None else N
        n_lambda = max(N, 2 * self.options.inner_for(N))
        return [self.get(spec.wavenumber, array.spacing, array.radius, n_lambda) for array in spec.arrays]

    def __len__(self) -> int:
        return len(self.kernels)
