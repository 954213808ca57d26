"""
Configuration from environment variables
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Library and CLI settings, overridable through POLYBOHR_* variables"""
    model_config = {"env_file": ".env", "env_prefix": "POLYBOHR_", "case_sensitive": True}

    # Reproducibility
    SEED: int = 42

    # Truncation
    HEADROOM: int = 4  # d_i = deg_i(F) + HEADROOM for norm computations
    SUITE_HEADROOM: int = 2  # headroom used by verification samples
    DIMENSION_CAP: int = 20000  # max total dimension of a truncated Fock space
    COEFF_DIM_CAP: int = 8  # max coefficient dimension m
    ENUMERATION_CAP: int = 10**6  # max cardinality of an enumerated word set

    # Spectral solvers
    DENSE_CUTOFF: int = 800  # dense LAPACK below this dimension, Lanczos above
    EIG_RESTARTS: int = 5
    HERMITIAN_RTOL: float = 1e-10
    POSITIVITY_RTOL: float = 1e-9
    THETA_GRID: int = 256  # initial angle grid for the numerical radius
    THETA_GRID_MAX: int = 4096  # largest angle grid used for the fallback certificate

    # Radius equations
    BISECTION_TOL: float = 1e-12
    BISECTION_MAX_ITER: int = 200
    SERIES_TAIL_TOL: float = 1e-13

    # Verification
    TOLERANCE: float = 1e-8  # absolute slack allowed in inequality checks
    TRIALS: int = 500
    WORKERS: int = 4

    # Output
    LOG_LEVEL: str = "WARNING"
    PRINT_DIGITS: int = 12


# Global settings instance
settings = Settings()
