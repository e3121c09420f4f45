from ._gbsoft import (
    GBParams,
    class_distributions,
    cdf,
    compare_runs,
    encode_matrix,
    evaluate,
    first_class_v,
    intermediate_params,
    last_class_u,
    log_beta,
    log_gamma,
    mean,
    moment,
    one_hot_matrix,
    pdf,
    reg_cce,
    reg_cce_grad,
    reg_inc_beta,
    sample,
    softmax,
    variance,
    __version__,
)

__all__ = [
    "GBParams",
    "class_distributions",
    "cdf",
    "compare_runs",
    "encode_matrix",
    "evaluate",
    "first_class_v",
    "intermediate_params",
    "last_class_u",
    "log_beta",
    "log_gamma",
    "mean",
    "moment",
    "one_hot_matrix",
    "pdf",
    "reg_cce",
    "reg_cce_grad",
    "reg_inc_beta",
    "sample",
    "softmax",
    "variance",
    "__version__",
]
