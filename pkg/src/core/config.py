"""
Configuration Management
Loads qweyl.ini (engine defaults, logging, output) and the .env file
"""

import configparser
import logging
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from core.scalars import LambdaMode

VALID_FAMILIES = ('aj', 'maltsiniotis')
VALID_FORMATS = ('text', 'json')


class QweylConfig:
    """Configuration loader with validation; every key has a built-in default"""

    def __init__(self, config_file: Optional[str] = None):
        load_dotenv(override=False)
        explicit = config_file or os.getenv('QWEYL_CONFIG')
        if explicit and not os.path.exists(explicit):
            raise FileNotFoundError(f"Configuration file not found: {explicit}")
        self.config_file = explicit or self._find_config_file()
        self.config = configparser.ConfigParser()
        self._load_config()
        self._validate_config()

    def _find_config_file(self) -> Optional[str]:
        """Find configuration file in standard locations"""
        for path in ('config/qweyl.ini', 'qweyl.ini'):
            if os.path.exists(path):
                return path
        return None

    def _load_config(self):
        if not self.config_file:
            logging.debug("No configuration file found, using defaults")
            return
        try:
            self.config.read(self.config_file)
        except configparser.Error as e:
            raise ValueError(f"Failed to load configuration from {self.config_file}: {e}")

    def _validate_config(self):
        engine = self.get_engine_config()
        if engine['default_radius'] < 1:
            raise ValueError(f"default_radius must be at least 1, got {engine['default_radius']}")
        if engine['default_radius'] > 8:
            logging.warning(f"Large default radius ({engine['default_radius']}): "
                            f"window sweeps grow as (2R+1)^n")
        if engine['generic_symbols'] < 0:
            raise ValueError(f"generic_symbols must be non-negative, got {engine['generic_symbols']}")
        if engine['lambda_mode'] not in {mode.value for mode in LambdaMode}:
            raise ValueError(f"Unknown lambda_mode: {engine['lambda_mode']}")
        if engine['family'] not in VALID_FAMILIES:
            raise ValueError(f"Unknown family: {engine['family']}")
        if self.get_output_config()['format'] not in VALID_FORMATS:
            raise ValueError(f"Unknown output format: {self.get_output_config()['format']}")

    def get_engine_config(self) -> Dict[str, Any]:
        """Get engine defaults"""
        return {
            'default_radius': self.config.getint('engine', 'default_radius', fallback=4),
            'generic_symbols': self.config.getint('engine', 'generic_symbols', fallback=2),
            'lambda_mode': self.config.get('engine', 'lambda_mode', fallback='symbolic'),
            'family': self.config.get('engine', 'family', fallback='aj'),
            'localized': self.config.getboolean('engine', 'localized', fallback=True),
        }

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration"""
        return {
            'log_level': os.getenv('QWEYL_LOG_LEVEL') or self.config.get('logging', 'log_level', fallback='INFO'),
            'log_to_file': self.config.getboolean('logging', 'log_to_file', fallback=False),
            'log_directory': self.config.get('logging', 'log_directory', fallback='logs'),
        }

    def get_output_config(self) -> Dict[str, Any]:
        """Get output and reporting configuration"""
        return {
            'reports_directory': self.config.get('output', 'reports_directory', fallback='reports'),
            'format': self.config.get('output', 'format', fallback='text'),
            'save_reports': self.config.getboolean('output', 'save_reports', fallback=False),
        }

    def get_seed(self) -> Optional[int]:
        seed = os.getenv('QWEYL_SEED')
        if not seed:
            return None
        try:
            return int(seed)
        except ValueError:
            raise ValueError(f"QWEYL_SEED must be an integer, got {seed!r}")

    def ensure_directories(self):
        """Create necessary directories if they don't exist"""
        directories = [self.get_output_config()['reports_directory']]
        if self.get_logging_config()['log_to_file']:
            directories.append(self.get_logging_config()['log_directory'])
        for directory in directories:
            os.makedirs(directory, exist_ok=True)


def load_config(config_file: Optional[str] = None) -> QweylConfig:
    """Load and validate configuration"""
    return QweylConfig(config_file)
