"""Exact zonotopal algebra of integer vector configurations."""

from .matroid import ExternalFrame, GroundSet
from .spaces import GradedPolySpace

__all__ = ["ExternalFrame", "GradedPolySpace", "GroundSet"]
__version__ = "0.1.0"
