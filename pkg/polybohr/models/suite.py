"""
Verification suite reports
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class Violation(BaseModel):
    """One failed inequality check"""
    seed: int
    trial: int = Field(..., description="Trial index, -1 for deterministic probes")
    check: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    lhs: float
    rhs: float
    slack: float = Field(..., description="lhs - rhs, positive when violated")


class ProbeResult(BaseModel):
    """Deterministic sharpness probe"""
    name: str
    value: float
    expected: str
    ok: bool


class SuiteReport(BaseModel):
    """Outcome of one verification suite"""
    suite: str
    seed: int
    trials: int
    cases_run: int = 0
    tolerance: float
    rhs_scale: float = 1.0
    violations: List[Violation] = Field(default_factory=list)
    max_slack_used: Optional[float] = Field(None, description="Largest lhs - rhs over all checks")
    probes: List[ProbeResult] = Field(default_factory=list)
    passed: bool = True

    @model_validator(mode="after")
    def check_passed(self) -> "SuiteReport":
        if self.passed != (not self.violations):
            raise ValueError("passed must be True exactly when there are no violations")
        return self
