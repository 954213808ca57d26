"""
Run configuration shared by the CLI commands
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator

from polybohr.core.config import settings


class RunConfig(BaseModel):
    """Per-invocation configuration, defaults from settings"""
    seed: int = Field(default_factory=lambda: settings.SEED)
    trunc: Optional[List[int]] = Field(None, description="Truncation degrees d_1..d_k")
    headroom: int = Field(default_factory=lambda: settings.HEADROOM, ge=0)
    tol: float = Field(default_factory=lambda: settings.TOLERANCE, gt=0.0)
    trials: int = Field(default_factory=lambda: settings.TRIALS, ge=1)
    workers: int = Field(default_factory=lambda: settings.WORKERS, ge=1)
    out: Optional[str] = Field(None, description="Output path, stdout when omitted")
    format: str = Field("csv", description="csv or json")
    perturb: Dict[str, float] = Field(default_factory=dict, description="Suite name -> rhs scale")

    @field_validator("trunc")
    @classmethod
    def check_trunc(cls, v: Optional[List[int]]) -> Optional[List[int]]:
        if v is not None and any(d < 1 for d in v):
            raise ValueError("truncation degrees must be >= 1")
        return v

    @field_validator("format")
    @classmethod
    def check_format(cls, v: str) -> str:
        if v not in ("csv", "json"):
            raise ValueError("format must be csv or json")
        return v

    @field_validator("perturb")
    @classmethod
    def check_perturb(cls, v: Dict[str, float]) -> Dict[str, float]:
        for name, factor in v.items():
            if factor <= 0:
                raise ValueError(f"perturbation factor for {name} must be > 0")
        return v
