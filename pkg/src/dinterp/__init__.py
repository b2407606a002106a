"""Domain-informed linear and bilinear interpolation."""

from .core import InterpolationResult, SampleSeries, hat, interpolate, kernel, kernel_trace, refined_positions
from .domain import DomainField, homogeneous, normalize
from .errors import (
    DegenerateNeighborhood,
    DomainInterpError,
    FactorIncompatible,
    IoFailure,
    MalformedInput,
    OutOfExtent,
    ShapeMismatch,
    ZeroCoverage,
)
from .interp2d import DomainField2D, dibli, line_field, normalize2d
from .similarity import (
    KernelConfig,
    discriminant,
    is_flat_zero,
    logistic,
    rho,
    weight,
    xi,
    xi_tilde,
)
from .verify import VerificationReport, run_all

__version__ = "0.1.0"
