#!/usr/bin/env python3
"""
Conflict Lattice - Main Flask Application
Measures conflict among interval-valued sources over their subset lattice
and over sliding windows of sensor time series.

This is the entry point: it builds the Flask app (configuration, logging,
blueprints) and exposes the command line through a FlaskGroup, so
``python app.py lattice example1.json`` and ``flask --app app lattice ...``
behave the same.
"""

import sys

import click
from flask import Flask
from flask.cli import FlaskGroup

from config import Config


def create_app(config_class=Config):
    """
    Application factory function to create and configure Flask app.
    This pattern avoids circular imports and allows for better testing.
    """
    app = Flask(__name__)

    # Load configuration from config.py
    app.config.from_object(config_class)
    config_class.init_app(app)

    # Register application blueprints (modular route organization)
    from routes import get_api_blueprint, get_commands_blueprint

    app.register_blueprint(get_api_blueprint(), url_prefix='/api')  # /api/examples, /api/drift
    app.register_blueprint(get_commands_blueprint())  # lattice, identify, stream, gen

    return app


cli = FlaskGroup(
    name='conflict-lattice',
    create_app=create_app,
    help='Measure conflict among interval-valued evidence sources.',
)


def cli_main(argv=None):
    """
    Run the command line and return its exit status.

    0 on success, 1 when input data is rejected, 2 on usage errors.
    """
    try:
        result = cli.main(args=argv, prog_name='conflict-lattice', standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo('Aborted!', err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == '__main__':
    sys.exit(cli_main())
