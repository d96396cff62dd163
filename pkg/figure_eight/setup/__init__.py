from .setup import RunConfig, default_threads
from .library import DefaultRunConfig, SimoRunConfig

__all__ = ["RunConfig", "default_threads", "DefaultRunConfig", "SimoRunConfig"]
