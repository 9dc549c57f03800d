"""Entropic quantum-correlation measures for up to three qubits."""

from .errors import (
    BadSubset,
    DissensionError,
    InvalidParam,
    NegativeArgument,
    NotAState,
    NotHermitian,
    NotProjector,
)
from .measures import (
    MeasureValue,
    MinimizationResult,
    QubitLabeling,
    concurrence,
    conditional_entropy,
    d1,
    d1_via_discords,
    d2,
    delta1,
    delta2,
    discord,
    i3,
    j3,
    k3,
    min_discord,
    minimize_over_t,
    mutual_information_2,
    negative_mi_demo,
    shannon_pair,
    von_neumann_entropy,
)
from .reference import (
    ghz_conditional_analytic,
    ghz_d1_analytic,
    w_conditional_analytic,
    w_d1_analytic,
)
from .states import (
    DensityMatrix,
    StateSpec,
    biseparable,
    embed_operator,
    ghz,
    make_state,
    mixed_ghz,
    mixed_w,
    partial_trace,
    project,
    pure_state,
    w,
)

__version__ = "0.1.0"
