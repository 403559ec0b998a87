#!/usr/bin/env python3
"""
Conflict Lattice - Configuration Settings
Application configuration and settings management
"""

import os
from pathlib import Path

from dotenv import load_dotenv

BASE_DIR = Path(__file__).parent.absolute()

# Values from a local .env file never override the real environment
load_dotenv(BASE_DIR / '.env')

# Hard ceiling for full subset enumeration (2^24 conflict evaluations)
LATTICE_SOURCE_CEILING = 24


def _env_int(name, default):
    return int(os.environ.get(name, default))


def _env_float(name, default):
    return float(os.environ.get(name, default))


class Config:
    """
    Configuration class for the Conflict Lattice Flask application.
    Every setting can be overridden through an environment variable of the same name.
    """

    # Application Settings
    APP_NAME = 'Conflict Lattice'
    APP_VERSION = '1.0.0'
    BASE_DIR = BASE_DIR

    # Lattice Settings
    MAX_LATTICE_SOURCES = min(_env_int('MAX_LATTICE_SOURCES', LATTICE_SOURCE_CEILING),
                              LATTICE_SOURCE_CEILING)
    LATTICE_WORKERS = _env_int('LATTICE_WORKERS', 1)
    MEASURE_TOLERANCE = _env_float('MEASURE_TOLERANCE', 1e-9)

    # Stream Settings
    DEFAULT_WINDOW = _env_int('DEFAULT_WINDOW', 5)  # samples
    DEFAULT_STRIDE = _env_int('DEFAULT_STRIDE', 1)  # samples

    # Verification / Output
    GRID_ORACLE_CELLS = _env_int('GRID_ORACLE_CELLS', 10 ** 6)
    DECIMAL_PLACES = 6

    # Logging Configuration
    LOG_FILE = os.environ.get('LOG_FILE') or None
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING').upper()

    # Development Settings
    DEBUG = os.environ.get('FLASK_ENV') == 'development'
    TESTING = False

    @classmethod
    def init_app(cls, app):
        """Initialize application with configuration"""
        from utils.event_log import configure_logging, log_event

        configure_logging(app)
        log_event('INFO', 'SYSTEM', 'startup',
                  f"Configuration loaded - {app.config['APP_NAME']} v{app.config['APP_VERSION']}")


class TestingConfig(Config):
    """Configuration used by the test suite."""

    TESTING = True
    LOG_LEVEL = 'DEBUG'
    LOG_FILE = None
    LATTICE_WORKERS = 1
