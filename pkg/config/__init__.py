"""
Configuration of the scattering tool.

This module loads environment variables from a .env file and builds the process-wide `settings`
object from the SCATTER_* variables.

Imports:
    Settings, settings_from_env: Environment settings.
    FieldOptions, OutputOptions, RunConfig: Run configuration data classes.
    parse_angle: Angle parsing for pi-fractions.
    PRESETS, preset_names, preset_problem, describe: Named geometries.
    load_config, write_config, config_from_dict, config_to_dict, apply_overrides, parse_region: YAML handling.
"""
import dotenv

from config.Settings import Settings, settings_from_env
from config.RunConfig import FieldOptions, OutputOptions, RunConfig
from config.angles import parse_angle
from config.presets import PRESETS, preset_names, preset_problem, describe
from config.loader import (load_config, write_config, config_from_dict, config_to_dict, apply_overrides,
                           parse_region, parse_method)

dotenv.load_dotenv()

settings = settings_from_env()
