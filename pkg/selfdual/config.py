"""
Runtime configuration for the self-dual polytope toolkit.

Managed with pydantic-settings; every field can be overridden from the environment or a .env file.
"""

from pydantic import Field, computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict

VALID_LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class SelfDualSettings(BaseSettings):
    """Settings for constructions, the realisation oracle and the acceptance suite"""

    model_config = SettingsConfigDict(env_file=".env", env_ignore_empty=True, extra="ignore", case_sensitive=True)

    # =============================================================================
    # Oracle
    # =============================================================================

    SELFDUAL_ORDER_CAP: int = Field(default=11, description="Largest graph order the enumeration oracle accepts")

    SELFDUAL_ORACLE_WORKERS: int = Field(default=1, description="Worker processes for the enumeration oracle")

    # =============================================================================
    # Randomised checks
    # =============================================================================

    SELFDUAL_SEED: int = Field(default=0, description="Default seed for randomised checks")

    SELFDUAL_LEMMA_TRIALS: int = Field(default=200, description="Random tuples drawn by the adjacency-pattern criterion")

    SELFDUAL_RADIAL_TRIALS: int = Field(default=50, description="Random constructions drawn by the radial criterion")

    SELFDUAL_VALIDATE_SURGERY: bool = Field(
        default=False, description="Check the radial invariants after every Z-transformation"
    )

    SELFDUAL_LINEAR_TIME_BUDGET: float = Field(
        default=1.5, description="Seconds allowed for P(T) of order 10^5 in the full linear-time criterion"
    )

    # =============================================================================
    # Logging
    # =============================================================================

    SELFDUAL_LOG_LEVEL: str = Field(default="INFO", description="loguru level")

    SELFDUAL_LOG_FORMAT: str = Field(
        default="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | <cyan>{name}</cyan>:<cyan>{function}</cyan> - <level>{message}</level>",
        description="loguru sink format",
    )

    @computed_field
    @property
    def parallel_oracle(self) -> bool:
        return self.SELFDUAL_ORACLE_WORKERS > 1

    # =============================================================================
    # Validation
    # =============================================================================

    def validate_oracle_config(self) -> bool:
        errors = []

        if self.SELFDUAL_ORDER_CAP < 1:
            errors.append("SELFDUAL_ORDER_CAP must be positive")

        if self.SELFDUAL_ORACLE_WORKERS < 1:
            errors.append("SELFDUAL_ORACLE_WORKERS must be at least 1")

        if errors:
            raise ValueError("invalid oracle configuration:\n" + "\n".join(f"- {error}" for error in errors))

        return True

    def validate_check_config(self) -> bool:
        errors = []

        if self.SELFDUAL_LEMMA_TRIALS < 0:
            errors.append("SELFDUAL_LEMMA_TRIALS must not be negative")

        if self.SELFDUAL_RADIAL_TRIALS < 0:
            errors.append("SELFDUAL_RADIAL_TRIALS must not be negative")

        if self.SELFDUAL_LINEAR_TIME_BUDGET <= 0:
            errors.append("SELFDUAL_LINEAR_TIME_BUDGET must be positive")

        if self.SELFDUAL_LOG_LEVEL.upper() not in VALID_LOG_LEVELS:
            errors.append(f"SELFDUAL_LOG_LEVEL must be one of: {', '.join(VALID_LOG_LEVELS)}")

        if errors:
            raise ValueError("invalid check configuration:\n" + "\n".join(f"- {error}" for error in errors))

        return True

    def validate_all(self) -> bool:
        self.validate_oracle_config()
        self.validate_check_config()
        return True


settings = SelfDualSettings()
