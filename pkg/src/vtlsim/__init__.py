"""Single-intersection traffic simulator: reservation-based platoon control
with emergency-vehicle priority, plus fixed-time and adaptive signal
baselines."""

__version__ = "0.1.0"

from .model import (
    Approach,
    ConfigError,
    DrivingLimits,
    IntersectionGeometry,
    InvariantViolation,
    Movement,
    Turn,
    Vehicle,
    VehicleClass,
)

__all__ = [
    "Approach",
    "ConfigError",
    "DrivingLimits",
    "IntersectionGeometry",
    "InvariantViolation",
    "Movement",
    "Turn",
    "Vehicle",
    "VehicleClass",
    "__version__",
]
