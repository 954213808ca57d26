"""
Result models of the spectral primitives and the radius solvers
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class SpectralResult(BaseModel):
    """Value of a spectral quantity with its residual certificate"""
    value: float
    residual: float = Field(0.0, ge=0.0, description="Certified distance bound to the exact value")
    iterations: int = 0
    converged: bool = True
    method: str = Field("dense", description="dense, lanczos, theta-sweep, hermitian, circular")
    truncation: Optional[List[int]] = Field(None, description="Auxiliary truncation degrees, if any")
    note: Optional[str] = None


class RadiusResult(BaseModel):
    """Root of a radius equation found by bisection"""
    value: float = Field(..., ge=0.0, le=1.0)
    residual: float = Field(..., ge=0.0, description="|f(value) - target|")
    bracket: Tuple[float, float]
    tail_bound: float = Field(0.0, ge=0.0, description="Bound on the discarded series tail at value")
    series_terms_used: int = 0
    iterations: int = 0
    warning: Optional[str] = None

    @model_validator(mode="after")
    def check_bracket(self) -> "RadiusResult":
        lo, hi = self.bracket
        if not lo <= self.value <= hi:
            raise ValueError(f"value {self.value} outside bracket [{lo}, {hi}]")
        return self


class MajorantCurve(BaseModel):
    """Majorant series D(F, r) or M(F, r) sampled on a grid of radii"""
    kind: str = Field(..., description="D (multi-homogeneous) or M (homogeneous)")
    radii: List[float]
    values: List[float]
    truncation: List[int]


class ClosedBounds(BaseModel):
    """Closed-form bounds on the Bohr radii of the polyball with k factors"""
    k: int = Field(..., ge=1)
    mh_lower_simple: float = Field(..., description="1 - (2/3)^(1/k)")
    mh_lower_gamma: float = Field(..., description="gamma_k")
    mh_lower: float = Field(..., description="max of the multi-homogeneous lower bounds")
    mh_lower_sqrt: float = Field(..., description="1 / (3 sqrt k)")
    mh_upper: float = Field(..., description="min{1/3, 2 sqrt(log k) / sqrt k}")
    mh0_lower_simple: float = Field(..., description="sqrt(1 - (1/2)^(1/k))")
    mh0_lower_sqrt: float = Field(..., description="1 / (2 sqrt k)")
    mh0_lower_tk: float = Field(..., description="t_k, the F(0)=0 radius equation root")
    mh0_lower: float
    mh0_upper: float = Field(..., description="min{1/sqrt 2, 2 sqrt(log k) / sqrt k}")
    h_exact: float = 1.0 / 3.0
    h0_lower: float = Field(..., description="max{1/2, sqrt(1 - (1/2)^(1/k))}")
    h0_upper: float = 2 ** -0.5
