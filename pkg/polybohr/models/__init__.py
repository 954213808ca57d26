"""
Pydantic Models
"""

# Word models
from polybohr.models.words import (
    Word,
    MultiWord,
    WordSet,
)

# Polynomial models
from polybohr.models.polynomial import (
    Truncation,
    FreePolynomial,
    KPluriharmonic,
    SchurSample,
    BerezinKernel,
)

# Result models
from polybohr.models.results import (
    SpectralResult,
    RadiusResult,
    MajorantCurve,
    ClosedBounds,
)

# Suite models
from polybohr.models.suite import (
    Violation,
    ProbeResult,
    SuiteReport,
)

# Common models
from polybohr.models.common import (
    RunConfig,
)

__all__ = [
    # Words
    "Word",
    "MultiWord",
    "WordSet",
    # Polynomials
    "Truncation",
    "FreePolynomial",
    "KPluriharmonic",
    "SchurSample",
    "BerezinKernel",
    # Results
    "SpectralResult",
    "RadiusResult",
    "MajorantCurve",
    "ClosedBounds",
    # Suites
    "Violation",
    "ProbeResult",
    "SuiteReport",
    # Common
    "RunConfig",
]
