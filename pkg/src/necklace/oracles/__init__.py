# Avoid circular import (required by base)
CONFIG_VERSION = 'v1'  # noqa: E402

from .base import OracleRunBase
from .multicore import MultiCoreOracleRun
from .singlethreaded import SingleThreadedOracleRun

__all__ = (
    'OracleRunBase',
    'MultiCoreOracleRun',
    'SingleThreadedOracleRun',
)
