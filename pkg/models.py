"""Wire models for the JSON formats read and written by the toolkit."""
from fractions import Fraction
from typing import List

from pydantic import BaseModel, Field, field_validator


class TermModel(BaseModel):
    """One coefficient of a symmetric function: {"partition": [2,1], "coeff": "3/2"}."""

    partition: List[int]
    coeff: str

    @field_validator("partition")
    @classmethod
    def parts_positive(cls, value: List[int]) -> List[int]:
        if any(p < 0 for p in value):
            raise ValueError(f"partition parts must be nonnegative: {value}")
        return value

    @field_validator("coeff", mode="before")
    @classmethod
    def exact_coefficient(cls, value) -> str:
        if isinstance(value, bool) or isinstance(value, float):
            raise ValueError("coefficients must be integers or strings 'num' / 'num/den'")
        try:
            Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not an exact rational: {value!r}")
        return str(value)


class SymFuncModel(BaseModel):
    basis: str = Field(pattern="^[pmhesPMHES]$")
    degree: int = Field(ge=0)
    terms: List[TermModel] = []


class ActionModel(BaseModel):
    """{"n": 4, "m": 3, "gens": [[2,1,3], [1,3,2], [2,1,3]]}"""

    n: int = Field(ge=1)
    m: int = Field(ge=0)
    gens: List[List[int]]


class OrbitRowModel(BaseModel):
    mu: List[int]
    orbits: str
