# relsim/models/__init__.py
"""Request and response models of the HTTP service."""
from .request import ClassifySubgroupRequest, SpeedRequest, VerifyRequest
from .response import ClassifySubgroupResponse, SpeedResponse, VerifyResponse

__all__ = [
    "ClassifySubgroupRequest",
    "ClassifySubgroupResponse",
    "SpeedRequest",
    "SpeedResponse",
    "VerifyRequest",
    "VerifyResponse",
]
