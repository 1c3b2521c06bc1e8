"""Exact norm-one elements for cyclic p-group actions on noncommutative rings.

The heavy lifting lives in the compiled extension; this package re-exports it
and adds a couple of small conveniences.  All arithmetic is exact: integer
coefficients cross the boundary as native Python ints of arbitrary size.
"""

import json as _json

from ._core import (
    Chain,
    Error,
    GroupContext,
    InstanceSpec,
    LiftStep,
    ParameterError,
    Poly,
    VerificationFailure,
    certify_step,
    check_identities,
    check_numeric,
    cyclic_shift_matrix,
    defect_witness,
    doubling_schedule,
    generate,
    generic_step_multiplier,
    has_noncommuting_witness,
    is_norm_one,
    norm,
    norm_defect,
    norm_residual,
    normal_form,
    random_instance,
    replay_report_json,
    shift,
    smith_invariant_factors,
    solve_coboundary,
    step_bound,
    tate_h1,
    tate_h2,
    unit_chain_bound,
    unit_schedule,
)

__all__ = [
    "Chain",
    "Error",
    "GroupContext",
    "InstanceSpec",
    "LiftStep",
    "ParameterError",
    "Poly",
    "VerificationFailure",
    "certify_step",
    "chain_dict",
    "check_identities",
    "check_numeric",
    "cyclic_shift_matrix",
    "defect_witness",
    "doubling_schedule",
    "generate",
    "generic_step_multiplier",
    "has_noncommuting_witness",
    "is_norm_one",
    "norm",
    "norm_defect",
    "norm_residual",
    "normal_form",
    "random_instance",
    "replay_report_json",
    "shift",
    "smith_invariant_factors",
    "solve_coboundary",
    "step_bound",
    "tate_h1",
    "tate_h2",
    "unit_chain_bound",
    "unit_schedule",
]

__version__ = "0.1.0"


def chain_dict(chain, include_polys=False):
    """The chain document as plain Python data (parsed from its JSON form)."""
    return _json.loads(chain.to_json(include_polys))
