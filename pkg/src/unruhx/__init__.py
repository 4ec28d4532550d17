"""Entanglement dynamics of two-qubit X states for an accelerated observer
whose qubits also couple to local amplitude- or phase-damping environments.

The package provides dense 4-qubit numerics (state preparation, the
acceleration transformation, channel dilations), two-qubit entanglement
measures (Wootters concurrence, negativity/PPT), an audit of the quoted
closed-form reduced matrices against the numerics, grid sweeps with
sudden-death/birth boundary location, and a CLI wrapping all of it.
"""

from .qmat import (
    DensityDiagnostics,
    DensityMatrix,
    PhysicalityError,
    dagger,
    hermitian_eigenvalues,
    is_density_matrix,
    kron,
    mul,
    partial_trace,
    partial_transpose,
    permute_subsystems,
    psd_sqrt,
    trace,
)
from .model import (
    AccelParams,
    ChannelSpec,
    KrausSet,
    XParams,
    apply_kraus,
    apply_unruh,
    channel_isometry,
    evolve_total,
    evolve_total_kraus,
    kraus_from_isometry,
    r_from_acceleration,
    reduce,
    unruh_isometry,
    x_state,
)
from .entanglement import (
    ConcurrenceResult,
    PptResult,
    concurrence,
    concurrence_x,
    is_x_type,
    ppt_test,
)
from .analytic import (
    AuditRecord,
    ErrataReport,
    GreekCoeffs,
    analytic_reduced,
    audit,
    corrected_matrix,
    corrected_reduced,
    printed_matrix,
)
from .sweep import (
    BoundaryQuery,
    BoundaryResult,
    GridSpec,
    SweepConfig,
    SweepTable,
    find_boundary,
    measure_point,
    preset_params,
    run_sweep,
    write_csv,
)

__version__ = "1.0.0"
