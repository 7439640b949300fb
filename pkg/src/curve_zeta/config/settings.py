"""Configuration settings for the plane curve zeta toolkit."""

from fractions import Fraction
from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="CURVE_ZETA_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Application Configuration
    log_level: str = Field(default="WARNING")
    log_format: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s")
    debug: bool = Field(default=False)

    # Corpus Configuration
    corpus_seed: int = Field(default=1)
    corpus_count: int = Field(default=100, ge=1)
    corpus_max_vertices: int = Field(default=6, ge=1)
    corpus_max_coordinate: int = Field(default=30, ge=1)
    corpus_coefficients: str = Field(default="-3,-2,-1,1,2,3,1/2")
    corpus_extra_points: int = Field(default=3, ge=0)
    corpus_max_resamples: int = Field(default=20, ge=1)
    corpus_workers: int = Field(default=1, ge=1)

    @field_validator("corpus_coefficients")
    @classmethod
    def _coefficients_nonzero(cls, value: str) -> str:
        choices = parse_coefficients(value)
        if not choices or any(c == 0 for c in choices):
            raise ValueError("corpus_coefficients must be a list of nonzero rationals")
        return value

    @property
    def coefficient_choices(self) -> List[Fraction]:
        return parse_coefficients(self.corpus_coefficients)


def parse_coefficients(text: str) -> List[Fraction]:
    """Comma-separated rationals such as "-3,1/2"."""
    return [Fraction(item.strip()) for item in text.split(",") if item.strip()]


# Global settings instance
settings = Settings()
