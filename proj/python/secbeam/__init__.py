# SPDX-License-Identifier: Apache-2.0
"""Secrecy-rate hybrid beamforming simulator."""

from ._secbeam import (
    ConfigError,
    DimensionError,
    PrecoderError,
    __version__,
    db_to_linear,
    energy_efficiency,
    generate_channel,
    linear_to_db,
    normalize_columns,
    parse_config,
    precode,
    project,
    rate,
    run_campaign,
    secrecy,
    steering_vector,
)

__all__ = [
    "ConfigError",
    "DimensionError",
    "PrecoderError",
    "__version__",
    "db_to_linear",
    "energy_efficiency",
    "generate_channel",
    "linear_to_db",
    "normalize_columns",
    "parse_config",
    "precode",
    "project",
    "rate",
    "run_campaign",
    "secrecy",
    "steering_vector",
]
