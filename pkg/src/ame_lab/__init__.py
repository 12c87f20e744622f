"""Entanglement of qubit AME states under local symmetric noise."""
from .channels import (
    SingleQubitChannel,
    apply_symmetric,
    apply_to_qubit,
    dephasing_projector,
    dephasing_z,
    depolarizing,
    pauli_channel,
)
from .measures import (
    Bipartition,
    MeasureRecord,
    coherent_information,
    is_ame,
    log_negativity,
    partial_trace,
    partial_transpose,
    von_neumann_entropy,
)
from .partitions import (
    SweepResult,
    SweepSpec,
    enumerate_subsets,
    monotonicity_check,
    run_sweep,
    symmetry_report,
)
from .states import (
    DensityMatrix,
    PureState,
    ame5_logical_one,
    ame5_logical_zero,
    ame6,
    apply_single_qubit_unitary,
    bell,
    density,
    ghz3,
    phi5,
    phi5_prime,
)

__version__ = "0.1.0"
