# relsim/models/request.py
"""Request bodies. Exact values travel as Scalar literals, e.g. ``3/4 - 1/2*r2``."""
from pydantic import BaseModel, Field


class VerifyRequest(BaseModel):
    suite: str = Field("all", description="'all' or a comma list of theorem ids")
    seed: int | None = Field(None, description="Defaults to RELSIM_SEED")


class ClassifySubgroupRequest(BaseModel):
    gens: list[str] = Field(..., description="Generators as Scalar literals")


class SpeedRequest(BaseModel):
    coords: str = Field(..., examples=["coords lambda=1 k=(1/2,0,0) A=I c=1"])
    direction: str = Field("(1,0,0)", description="Unit direction (S,S,S)")
