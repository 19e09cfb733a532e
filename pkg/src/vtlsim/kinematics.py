"""Per-tick vehicle motion: forward-Euler integration, platoon car-following,
and speed planning against a reservation time.

Integration order inside a tick is front-to-back per lane, so a follower
always sees its leader's already-updated state. The safe-following cap
exploits that: it is a Krauss-style bound guaranteeing the end-of-tick
bumper gap never drops below gap_min even if the leader brakes at b_max
from the next tick on.
"""

import math
from dataclasses import dataclass
from typing import Optional

from .model import (
    DrivingLimits,
    IntersectionGeometry,
    SafetyViolation,
    Vehicle,
)


@dataclass(frozen=True)
class TargetSpeed:
    v: float


@dataclass(frozen=True)
class StopAtLine:
    pass


@dataclass(frozen=True)
class FollowLeader:
    gap_target: float


MotionCommand = TargetSpeed | StopAtLine | FollowLeader

STOP_AT_LINE = StopAtLine()


@dataclass(frozen=True)
class KinematicsParams:
    k_gap: float = 0.5  # 1/s, proportional gap controller gain
    gap_target: float = 1.0  # m, default bumper gap inside platoons
    gap_min: float = 0.5  # m, hard floor for the bumper gap
    creep_speed: float = 0.5  # m/s, slowest commanded pacing speed


def wall_speed(d: float, limits: DrivingLimits, dt: float) -> float:
    """Max speed for this tick such that the front never passes a stopping
    point d meters ahead, braking within b_max.

    Algebraically guarantees pos + v'*dt <= wall for every d >= 0.
    """
    bd = limits.b_max * dt
    return max(0.0, -bd + math.sqrt(bd * bd + 2.0 * limits.b_max * max(0.0, d)))


def safe_follow_speed(
    gap: float,
    leader_speed: float,
    limits: DrivingLimits,
    dt: float,
    gap_floor: float,
) -> float:
    """Max speed for this tick that keeps the bumper gap >= gap_floor.

    `gap` is measured after the leader moved this tick; `leader_speed` is the
    leader's updated speed. Derived from the condition that if both vehicles
    brake at b_max from the next tick on, the final standstill gap stays at
    or above gap_floor.
    """
    bd = limits.b_max * dt
    slack = max(0.0, gap - gap_floor)
    return max(
        0.0,
        -bd + math.sqrt(bd * bd + leader_speed * leader_speed + 2.0 * limits.b_max * slack),
    )


def follower_speed(
    leader: Vehicle,
    follower: Vehicle,
    gap_target: float,
    limits: DrivingLimits,
    params: KinematicsParams,
) -> float:
    """Proportional gap controller: v = v_leader + k_gap * (gap - gap_target).

    Equals the leader speed at the target gap, closes above it, opens below.
    Raises SafetyViolation if the vehicles overlap.
    """
    gap = leader.rear - follower.pos
    if gap < 0.0:
        raise SafetyViolation(
            f"vehicles overlap on lane {follower.lane}: "
            f"{leader.id} rear {leader.rear:.2f} < {follower.id} front {follower.pos:.2f}"
        )
    v = leader.speed + params.k_gap * (gap - gap_target)
    return min(max(v, 0.0), limits.v_max)


def speed_to_arrive(d: float, t_remaining: float, v_max: float, creep_speed: float = 0.5) -> float:
    """Constant speed that covers d meters in t_remaining seconds, clamped.

    If the window cannot be met even at v_max, returns v_max (arrive as early
    as allowed). Tiny positive results are floored at creep_speed; pacing
    slower than that is the caller's cue to stop at the line instead.
    """
    if d <= 0.0:
        return v_max
    if t_remaining <= d / v_max:
        return v_max
    v = d / t_remaining
    if 0.0 < v < creep_speed:
        return creep_speed
    return v


def travel_time(dist: float, v0: float, limits: DrivingLimits) -> float:
    """Time to cover dist from speed v0, accelerating at a_max up to v_max."""
    if dist <= 0.0:
        return 0.0
    v0 = min(max(v0, 0.0), limits.v_max)
    ramp_dist = (limits.v_max * limits.v_max - v0 * v0) / (2.0 * limits.a_max)
    if dist <= ramp_dist:
        return (math.sqrt(v0 * v0 + 2.0 * limits.a_max * dist) - v0) / limits.a_max
    return (limits.v_max - v0) / limits.a_max + (dist - ramp_dist) / limits.v_max


def integrate(
    v: Vehicle,
    cmd: MotionCommand,
    leader: Optional[Vehicle],
    dt: float,
    geometry: IntersectionGeometry,
    limits: DrivingLimits,
    params: KinematicsParams,
) -> Vehicle:
    """Advance one vehicle by one tick under a motion command.

    Chooses accel in [-b_max, a_max] toward the commanded behavior, then
    speed' = clamp(speed + accel*dt, 0, v_max) and pos' = pos + speed'*dt.
    A present leader always imposes the safe-following cap, regardless of
    the command.
    """
    if dt <= 0.0:
        raise ValueError("dt must be positive")

    if isinstance(cmd, TargetSpeed):
        desired = min(max(cmd.v, 0.0), limits.v_max)
    elif isinstance(cmd, StopAtLine):
        desired = wall_speed(geometry.approach_length - v.pos, limits, dt)
    else:  # FollowLeader
        if leader is None:
            raise ValueError("FollowLeader requires a leader vehicle")
        desired = follower_speed(leader, v, cmd.gap_target, limits, params)

    if leader is not None:
        gap = leader.rear - v.pos
        if gap < 0.0:
            raise SafetyViolation(
                f"vehicles overlap on lane {v.lane}: "
                f"{leader.id} rear {leader.rear:.2f} < {v.id} front {v.pos:.2f}"
            )
        desired = min(
            desired,
            safe_follow_speed(gap, leader.speed, limits, dt, params.gap_min),
        )

    accel = (desired - v.speed) / dt
    accel = min(max(accel, -limits.b_max), limits.a_max)
    v.accel = accel
    v.speed = min(max(v.speed + accel * dt, 0.0), limits.v_max)
    v.pos += v.speed * dt
    return v


def stopping_distance(speed: float, limits: DrivingLimits) -> float:
    """Distance needed to brake to a stop at b_max."""
    return speed * speed / (2.0 * limits.b_max)


def can_stop_before(v: Vehicle, line_pos: float, limits: DrivingLimits, dt: float) -> bool:
    """Whether the vehicle can still halt with its front at or before line_pos.

    Includes one tick of travel slack, matching the discrete wall bound.
    """
    d = line_pos - v.pos
    if d < 0.0:
        return False
    return wall_speed(d, limits, dt) >= v.speed - limits.b_max * dt
