"""
Conflict Lattice - Utilities Package
Contains logging helpers shared by the library, the CLI and the API.
"""

from .event_log import configure_logging, log_event

__all__ = ['configure_logging', 'log_event']
