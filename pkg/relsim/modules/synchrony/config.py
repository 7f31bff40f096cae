"""
Configuration for the synchrony module.
"""
from pydantic_settings import BaseSettings


class SynchronySettings(BaseSettings):
    """Search bounds for exact unit directions."""

    # Largest hypotenuse d of a Pythagorean quadruple a² + b² + c² = d²
    QUADRUPLE_BOUND: int = 15

    class Config:
        env_prefix = "RELSIM_SYNCHRONY_"
        case_sensitive = True


synchrony_settings = SynchronySettings()
