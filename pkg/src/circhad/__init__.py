"""Tools for circulant Hadamard matrices: exact +/-1 row algebra, periodic
autocorrelation and spectra, half-decomposition identities, and exhaustive
search for first rows."""

from circhad.correlation import (
    ComplexSpectrum,
    PafSpectrum,
    gram_orthogonality_oracle,
    is_circulant_hadamard,
    paf,
    paf_spectrum,
    representer_spectrum,
    spectrum_modulus_check,
    wiener_khinchin_residual,
)
from circhad.sequences import (
    HalfSplit,
    RowError,
    SignRow,
    circulant_row,
    dot,
    format_row,
    interleave,
    make_row,
    ones_eigenvalue,
    parse_row,
    rotate,
    split_halves,
)
from circhad.theorem import (
    IdentityReport,
    OrderVerdict,
    RegularityStats,
    condition_sums,
    half_eigenvalues,
    identity_report,
    order_filter,
    regularity_stats,
    remark2_residual,
)

__version__ = "0.1.0"
