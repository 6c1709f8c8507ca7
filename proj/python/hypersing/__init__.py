from ._hypersing import (
    BelowThresholdError,
    ChebKind,
    ConvergenceFailure,
    DomainError,
    UnsupportedCombination,
    cheb,
    cheb_derivative,
    errata_markdown,
    exterior,
    fgm,
    gradient,
    interior,
    mode1,
    oracle,
    table,
    weight_moment,
)
