"""Configuration package for the application settings."""

from .config import get_settings

__all__ = ["get_settings"]
