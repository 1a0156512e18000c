"""Echo dynamics of the driven Jaynes-Cummings model.

Exact Loschmidt-echo evolution of a spin coupled to a boson mode, with
fidelity, purity-fidelity, the linear-response correlation integrals,
SU(2) Wigner functions of the reduced spin state, and the semiclassical
Gaussian-wavepacket purity formula.
"""

from .operators import JCParams, ProductSpace, boson_ops, build_jc, embed, spin_ops
from .states import oscillator_coherent, product_state, random_state, su2_coherent
from .evolution import (EchoConfig, SigmaPropagator, SpectralDecomposition,
                        diagonalize, echo_apply, propagate, sigma_operator)
from .observables import (CorrelationSeries, DecayFit, correlation_C, correlation_D,
                          correlation_series, fidelity, fit_decay,
                          linear_response_curves, partial_trace, purity)
from .wigner import (SphereGrid, WignerField, clebsch_gordan, multipole_components,
                     multipole_tensor, wigner_function)
from .semiclassical import (CovarianceMatrix, quadratic_decay_constant,
                            read_covariance, wavepacket_purity, write_covariance)
from .experiments import (PRESETS, ExperimentSpec, run_correlations, run_echo,
                          run_wigner)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
