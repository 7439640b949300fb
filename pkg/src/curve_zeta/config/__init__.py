"""Configuration management for the plane curve zeta toolkit."""

from .settings import Settings, parse_coefficients, settings

__all__ = ["Settings", "parse_coefficients", "settings"]
