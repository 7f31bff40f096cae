"""
Configuration for the theorem verifiers.
"""
from pydantic_settings import BaseSettings


class TheoremSettings(BaseSettings):
    """Bounds and default instance sizes for the theorem suite."""

    # Subgroup oracle: coefficient sweep |n_i| <= ORACLE_BOUND and hit intervals in [0, 1]
    ORACLE_BOUND: int = 1000
    ORACLE_INTERVALS: int = 100
    ORACLE_MAX_VALUES: int = 4_004_001  # (2·1000 + 1)², the full two-generator sweep

    # Integer-combination search for the rotation span
    SPAN_DEPTH: int = 4

    # Default aperture of the half-cone relation (Scalar literal)
    C_HAT: str = "1"

    # Random instances
    RANDOM_EVENTS: int = 30
    MEET_EVENTS: int = 20
    SAMPLED_MEMBERS: int = 8
    SAMPLED_PAIRS: int = 40

    class Config:
        env_prefix = "RELSIM_THEOREM_"
        case_sensitive = True


theorem_settings = TheoremSettings()
