"""fullcycle - longest cycles and discharging audits on fullerene graphs."""

from .config import VERSION as __version__

__all__ = ["__version__"]
