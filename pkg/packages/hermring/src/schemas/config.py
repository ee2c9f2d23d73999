"""Pydantic schema for hermring.config.json

Conventions recorded here are frozen: the golden data was checked against
them, so the models are immutable once loaded.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator


class PrecisionSettings(BaseModel):
    """Default working precisions

    Attributes:
        vv_prec: Vector-valued coefficients c(n, gamma) with n < vv_prec
        jacobi_prec: Floor for the Jacobi coefficients c(n, r), n < jacobi_prec, of
            the paramodular catalogs; raised to what the trace bound needs
        trace_bound: Hermitian and paramodular trace bound a + b <= B
        max_order: Largest Taylor order tried by vanishing_order
    """

    model_config = ConfigDict(frozen=True)

    vv_prec: int = Field(default=26, ge=1, description="Vector-valued precision")
    jacobi_prec: int = Field(default=27, ge=1, description="Jacobi precision")
    trace_bound: int = Field(default=10, ge=0, description="Trace bound B")
    max_order: int = Field(default=6, ge=0, description="Largest pullback order")


class FieldConventions(BaseModel):
    """Conventions of one imaginary quadratic field

    Attributes:
        disc: Field discriminant
        twisted_labels: Residue m mod p -> label g of the printed twisted sums
        lambdas: Level l -> (x, y) with N(x + y*omega) = l, used for H_l
        anchors: Pullback cells that calibrate the per-group signs, as 'P0H1(E4)'
    """

    model_config = ConfigDict(frozen=True)

    disc: int = Field(..., description="Field discriminant")
    twisted_labels: Dict[int, int] = Field(default_factory=dict, description="Twisted-sum labels")
    lambdas: Dict[int, Tuple[int, int]] = Field(default_factory=dict, description="Lambda per level")
    anchors: Optional[List[str]] = Field(default=None, description="Anchor cells")

    @field_validator('disc')
    @classmethod
    def _supported(cls, value: int) -> int:
        if value not in (-7, -11):
            raise ValueError(f"Unsupported field discriminant: {value}. Available: -7, -11")
        return value


class ConventionSet(BaseModel):
    """Complete configuration: precisions, per-field conventions and catalog choices

    Example:
        {
          "precision": {"vv_prec": 26, "jacobi_prec": 27, "trace_bound": 10},
          "cases": {"d7": {"disc": -7, "lambdas": {"2": [0, 1]}}},
          "phi11_sign": 1
        }
    """

    model_config = ConfigDict(frozen=True)

    precision: PrecisionSettings = Field(default_factory=PrecisionSettings)
    cases: Dict[str, FieldConventions] = Field(default_factory=dict)
    phi11_sign: int = Field(default=1, description="Orientation of phi11 in levels 2 and 3")
    output_dir: str = Field(default='.', description="Where ledgers are written")

    @field_validator('phi11_sign')
    @classmethod
    def _sign(cls, value: int) -> int:
        if value not in (1, -1):
            raise ValueError(f"phi11_sign must be 1 or -1, got {value}")
        return value
