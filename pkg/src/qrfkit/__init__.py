"""Numerical toolkit for perspectival descriptions of N-qubit pure states.

Core pieces: state and density-matrix primitives (qstate), entanglement and
coherence functionals under two internally consistent measure pairs
(measures), perspective assignment and the Z2 frame-change operator
(perspective), the three-party transference constraints with closed
coefficient forms (transference), the accelerated-observer degradation
family with its curve tables and sweeps (rindler), and a CLI (cli).
"""

from .errors import (
    DomainError,
    IoError,
    NumericError,
    QrfError,
    ShapeError,
)
from .measures import (
    MeasurePair,
    binary_entropy,
    coherence,
    entanglement,
    linear_entropy,
    mutual_information,
    von_neumann_entropy,
)
from .perspective import (
    QrfOperator,
    assign_perspective,
    assign_perspective_channel,
    embed,
    perspective_operator,
    qrf_transform,
    z2_operator,
)
from .qstate import (
    DensityMatrix,
    PureState,
    density_matrix,
    dephase,
    partial_trace,
    permute_qubits,
    purify_diagonal,
    state_from_amplitudes,
    state_from_json,
    state_to_json,
)
from .rindler import (
    MiCurves,
    ObserverLabel,
    Quantity,
    SweepRecord,
    closed_form_coherence,
    closed_form_entanglement,
    global_state,
    mutual_information_curves,
    perspectival_state,
    r_from_acceleration,
    sweep,
    sweep_to_csv,
)
from .transference import (
    ConstraintId,
    ConstraintReport,
    ParityClass,
    XylTriple,
    check_corollary,
    check_transference,
    condition_check,
    parity_class,
    random_parity_state,
    random_state,
    reconstruct_from_xyl,
    transference_sides,
    xyl_closed_form,
)

__version__ = "0.1.0"
