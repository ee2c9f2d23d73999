"""Pydantic schema for coefficient ledger headers

A ledger is a plain-text file: 'key: value' header lines, a blank line,
then one coefficient record per line.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field, model_validator

FORMAT_VERSION = 1


class LedgerKind(str, Enum):
    HERMITIAN = "hermitian"
    PARAMODULAR = "paramodular"
    VECTOR = "vector"


class LedgerHeader(BaseModel):
    """Header of a coefficient ledger

    Attributes:
        kind: What the records describe
        disc: Field discriminant (hermitian, and vector for fields)
        level: Paramodular level
        index: Jacobi index (vector ledgers of Jacobi discriminant forms)
        weight: Weight as an integer or 'num/den'
        prec: Trace bound, or scaled precision for vector ledgers
        name: Optional form name
        symmetry: 'symmetric', 'skew' or 'neither' (hermitian only)
        format_version: Ledger layout version
    """

    kind: LedgerKind = Field(..., description="Record type")
    disc: Optional[int] = Field(default=None, description="Field discriminant")
    level: Optional[int] = Field(default=None, description="Paramodular level")
    index: Optional[int] = Field(default=None, description="Jacobi index")
    weight: str = Field(..., description="Weight")
    prec: int = Field(..., ge=0, description="Precision")
    name: str = Field(default='', description="Form name")
    symmetry: Optional[str] = Field(default=None, description="Symmetry type")
    format_version: int = Field(default=FORMAT_VERSION, description="Layout version")

    @model_validator(mode='after')
    def _context(self) -> 'LedgerHeader':
        if self.kind == LedgerKind.HERMITIAN and self.disc is None:
            raise ValueError("hermitian ledgers need a disc")
        if self.kind == LedgerKind.PARAMODULAR and self.level is None:
            raise ValueError("paramodular ledgers need a level")
        if self.kind == LedgerKind.VECTOR and (self.disc is None) == (self.index is None):
            raise ValueError("vector ledgers need exactly one of disc and index")
        return self

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "hermitian",
                "disc": -7,
                "weight": "4",
                "prec": 10,
                "name": "E4",
                "symmetry": "symmetric",
                "format_version": 1
            }
        }
