"""Shared domain types for the intersection simulator.

One four-legged intersection. Each vehicle lives on a 1-D axis along its own
path: approach entry at pos 0, stop line at pos == approach_length, conflict
box from the stop line to approach_length + box_length, exit leg beyond.
`pos` is always the longitudinal distance of the vehicle FRONT from the entry.
"""

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional


class ConfigError(Exception):
    """Bad scenario configuration. CLI maps this to exit code 2."""


class InvariantViolation(Exception):
    """A safety invariant broke mid-run; this is a bug, not a recoverable
    state. CLI maps this to exit code 3."""


class SafetyViolation(InvariantViolation):
    """Physical safety violated (vehicle overlap, box conflict)."""


class VehicleClass(Enum):
    NORMAL = "normal"
    EMERGENCY = "emergency"


class Approach(str, Enum):
    N = "N"
    E = "E"
    S = "S"
    W = "W"


class Turn(str, Enum):
    THROUGH = "through"
    LEFT = "left"
    RIGHT = "right"


APPROACHES = (Approach.N, Approach.E, Approach.S, Approach.W)

# Exit side for each (approach, turn). A vehicle entering from the N side
# travels southbound, so its left points east.
_EXITS = {
    (Approach.N, Turn.THROUGH): Approach.S,
    (Approach.N, Turn.LEFT): Approach.E,
    (Approach.N, Turn.RIGHT): Approach.W,
    (Approach.S, Turn.THROUGH): Approach.N,
    (Approach.S, Turn.LEFT): Approach.W,
    (Approach.S, Turn.RIGHT): Approach.E,
    (Approach.E, Turn.THROUGH): Approach.W,
    (Approach.E, Turn.LEFT): Approach.S,
    (Approach.E, Turn.RIGHT): Approach.N,
    (Approach.W, Turn.THROUGH): Approach.E,
    (Approach.W, Turn.LEFT): Approach.N,
    (Approach.W, Turn.RIGHT): Approach.S,
}


@dataclass(frozen=True)
class Movement:
    """An approach plus the turn taken at the intersection."""

    approach: Approach
    turn: Turn

    @property
    def exit_approach(self) -> Approach:
        return _EXITS[(self.approach, self.turn)]


def movements_conflict(a: Movement, b: Movement) -> bool:
    """Whether two movements may not occupy the conflict box together.

    Single exclusive box model: every cross-approach pair conflicts;
    same-approach ordering is left to car-following.
    """
    return a.approach != b.approach


@dataclass(frozen=True)
class DrivingLimits:
    v_max: float = 13.89  # m/s
    a_max: float = 2.5  # m/s^2
    b_max: float = 4.5  # m/s^2, max braking (positive)

    def __post_init__(self):
        if self.v_max <= 0 or self.a_max <= 0 or self.b_max <= 0:
            raise ConfigError("driving limits must be positive")


@dataclass(frozen=True)
class IntersectionGeometry:
    approach_length: float = 300.0  # entry to stop line, m
    control_radius: float = 300.0  # ITC zone measured from the stop line, m
    box_length: float = 20.0  # stop line to far side of the conflict box, m
    lanes_per_approach: int = 1

    def __post_init__(self):
        if self.control_radius > self.approach_length:
            raise ConfigError("control_radius must not exceed approach_length")
        if self.box_length <= 0:
            raise ConfigError("box_length must be positive")
        if self.lanes_per_approach < 1:
            raise ConfigError("lanes_per_approach must be >= 1")

    @property
    def stop_line(self) -> float:
        return self.approach_length

    @property
    def box_end(self) -> float:
        return self.approach_length + self.box_length


class SimTime(NamedTuple):
    """Discrete simulation clock; wall time of tick k is exactly k*dt."""

    step: int
    dt: float

    @property
    def wall(self) -> float:
        return self.step * self.dt


def lane_id(approach: Approach, index: int = 0) -> str:
    return f"{approach.value}{index}"


def lane_approach(lane: str) -> Approach:
    return Approach(lane[0])


class Vehicle:
    """Mutable state of one simulated vehicle.

    Uses __slots__: there are hundreds of live vehicles touched every tick.
    """

    __slots__ = (
        "id",
        "vclass",
        "movement",
        "lane",
        "pos",
        "speed",
        "accel",
        "length",
        "spawn_time",
        "platoon",
    )

    def __init__(
        self,
        vid: int,
        vclass: VehicleClass,
        movement: Movement,
        lane: str,
        pos: float = 0.0,
        speed: float = 0.0,
        length: float = 3.0,
        spawn_time: float = 0.0,
    ):
        self.id = vid
        self.vclass = vclass
        self.movement = movement
        self.lane = lane
        self.pos = pos
        self.speed = speed
        self.accel = 0.0
        self.length = length
        self.spawn_time = spawn_time
        self.platoon: Optional[int] = None

    @property
    def rear(self) -> float:
        return self.pos - self.length

    @property
    def is_emergency(self) -> bool:
        return self.vclass is VehicleClass.EMERGENCY

    def __repr__(self):
        return (
            f"Vehicle(id={self.id}, lane={self.lane}, pos={self.pos:.2f}, "
            f"speed={self.speed:.2f}, class={self.vclass.value})"
        )


def distance_to_stop_line(v: Vehicle, g: IntersectionGeometry) -> float:
    """Signed distance from the vehicle front to the stop line.

    Negative once the front is past the line.
    """
    return g.approach_length - v.pos
