"""Two-frequency vibronic circuit simulator.

Composite-space operator algebra, the three Hamiltonian forms and their
parameter dictionary, the privileged-mode decomposition, Lindblad dynamics,
and cavity emission spectra. The heavy lifting lives in the compiled
extension module; this package just re-exports it.
"""

from ._core import (  # noqa: F401
    CircuitParams,
    DensityMatrix,
    DissipationParams,
    EffectiveMode,
    HardwareCouplings,
    HardwareParams,
    HilbertSpace,
    JTParams,
    Liouvillian,
    NumericalError,
    Operator,
    ScaledParams,
    Spectrum,
    __version__,
    annihilation,
    build_circuit_hamiltonian,
    build_eta,
    build_jt_hamiltonian,
    build_liouvillian,
    build_scaled_hamiltonian,
    circuit_to_jt,
    commutator,
    consistency_residual,
    correlation,
    coupling_from_hardware,
    dissipator,
    effective_mode_decomposition,
    emission_spectrum,
    evolve,
    expectation,
    frequency_ratio,
    identity,
    jt_from_scaled,
    jt_to_circuit,
    lowest_eigenvalues,
    make_space,
    pauli,
    steady_state,
)
