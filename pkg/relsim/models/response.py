# relsim/models/response.py
from pydantic import BaseModel

from relsim.modules.theorems import TheoremReport


class VerifyResponse(BaseModel):
    reports: list[TheoremReport]
    failed: list[str]
    processing_time_seconds: float


class ClassifySubgroupResponse(BaseModel):
    subgroup: str
    kind: str
    generator: str | None = None


class SpeedResponse(BaseModel):
    one_way: str
    two_way: str
    opposite_one_way: str
