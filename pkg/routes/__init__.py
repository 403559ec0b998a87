"""
Conflict Lattice - Routes Package
This package contains the Flask blueprints: JSON API routes and CLI commands.
"""

# Import blueprints for easy access
# Note: Import only when needed to avoid circular imports

def get_api_blueprint():
    """Get API blueprint."""
    from .api import api_bp
    return api_bp


def get_commands_blueprint():
    """Get CLI commands blueprint."""
    from .commands import commands_bp
    return commands_bp
