import os
import sys
import json

from helpers.logger import logger, setup_logger

DEFAULTS = {
    "bits": 128,
    "rel_tol": 1e-20,
    "max_escalations": 4,
    "quad_bits": 64,
    "quad_tol": 1e-10,
    "quad_degree": 8,
    "bell_max_degree": 12,
    "workers": 1,
    "database": "",
    "log_level": "WARNING",
    "log_file": "",
}

# Environment variable -> (config field, parser)
ENV_OVERRIDES = {
    "SPREADPOLY_BITS": ("bits", int),
    "SPREADPOLY_RTOL": ("rel_tol", float),
    "SPREADPOLY_ESCALATIONS": ("max_escalations", int),
    "SPREADPOLY_QUAD_BITS": ("quad_bits", int),
    "SPREADPOLY_QUAD_TOL": ("quad_tol", float),
    "SPREADPOLY_WORKERS": ("workers", int),
    "SPREADPOLY_DB": ("database", str),
    "SPREADPOLY_LOG_LEVEL": ("log_level", str),
    "SPREADPOLY_LOG_FILE": ("log_file", str),
}

def check_type(config: dict, field: str, type: type):
    """Ensure a present field has the correct type

    Args:
        config: config
        field: dict field to check
        type: type of field
    """
    value = config[field]
    # ints are acceptable where floats are expected, bools never are
    if type is float and isinstance(value, int) and not isinstance(value, bool):
        config[field] = float(value)
        return
    if not isinstance(value, type) or isinstance(value, bool):
        logger.error("Application started with invalid '{}' provided.".format(field))
        sys.exit(2)

def set_default(config: dict, field: str, default):
    """Check if field is present or use default

    Args:
        config: config
        field: dict field to check
        default (any): default value
    """
    if field not in config or config[field] is None:
        config[field] = default
    else:
        check_type(config, field, type(default))

def load_config(path: str, environ: dict) -> dict:
    """Build the effective configuration

    Args:
        path: JSON file to read (may not exist)
        environ: environment mapping consulted for overrides

    Returns:
        The merged configuration dict
    """
    config = {}
    if os.path.isfile(path):
        with open(path) as file:
            try:
                config = json.load(file)
            except json.JSONDecodeError as e:
                logger.error("Unable to parse config file '{}': {}".format(path, e))
                sys.exit(2)
        if not isinstance(config, dict):
            logger.error("Config file '{}' must contain a JSON object.".format(path))
            sys.exit(2)

    for field, default in DEFAULTS.items():
        set_default(config, field, default)

    for variable, (field, parse) in ENV_OVERRIDES.items():
        if variable in environ and environ[variable] != "":
            try:
                config[field] = parse(environ[variable])
            except ValueError:
                logger.error("Environment variable {} has an invalid value.".format(variable))
                sys.exit(2)
    return config

"""
Load config file
"""
config_file = os.environ.get(
    "SPREADPOLY_CONFIG", f"{os.path.realpath(os.path.dirname(__file__))}/../config.json")
config = load_config(config_file, os.environ)
setup_logger(config["log_level"], config["log_file"])
