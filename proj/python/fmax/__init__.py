from ._core import (
    CapExceeded,
    SparseJoint,
    expected_metric,
    fm_maximize,
    gfm_maximize,
    load_distribution,
    metric_value,
    oracle,
    regret,
    threshold_maximize,
    verify_witness,
)

__all__ = [
    "CapExceeded",
    "SparseJoint",
    "expected_metric",
    "fm_maximize",
    "gfm_maximize",
    "load_distribution",
    "metric_value",
    "oracle",
    "regret",
    "threshold_maximize",
    "verify_witness",
]
