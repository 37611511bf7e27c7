"""Aircraft kinematics, obstacle propagation, and shared input constraints.

The taxiing aircraft is a non-holonomic car with state [px, py, theta, v]
and input [phi, beta] (rudder deflection, longitudinal acceleration),
discretized with an explicit Euler step of length dt:

    px    <- px + v cos(theta) dt
    py    <- py + v sin(theta) dt
    theta <- theta + (v / L) tan(phi) dt
    v     <- v + beta dt

Headings are kept in (-pi, pi] after every update. Obstacles are disks
moving at constant velocity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AircraftState",
    "ControlInput",
    "InputBounds",
    "AircraftParams",
    "Obstacle",
    "InvalidStateError",
    "wrap_angle",
    "step_dynamics",
    "step_dynamics_array",
    "dynamics_jacobians",
    "clamp_input",
    "propagate_obstacle",
]


class InvalidStateError(ValueError):
    """Raised when a state or input contains non-finite entries."""


def wrap_angle(theta):
    """Wrap an angle (scalar or array) into (-pi, pi]."""
    return -((np.pi - theta) % (2.0 * np.pi) - np.pi) + 0.0


@dataclass(frozen=True)
class AircraftState:
    """Planar kinematic state: position (m), heading (rad), forward speed (m/s)."""

    px: float
    py: float
    theta: float
    v: float

    def __post_init__(self):
        if not all(math.isfinite(f) for f in (self.px, self.py, self.theta, self.v)):
            raise InvalidStateError(f"non-finite aircraft state {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.px, self.py, self.theta, self.v], dtype=float)

    @classmethod
    def from_array(cls, x) -> "AircraftState":
        return cls(float(x[0]), float(x[1]), float(x[2]), float(x[3]))

    @property
    def position(self) -> np.ndarray:
        return np.array([self.px, self.py], dtype=float)


@dataclass(frozen=True)
class ControlInput:
    """Rudder deflection (rad) and longitudinal acceleration (m/s^2)."""

    phi: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.phi) and math.isfinite(self.beta)):
            raise InvalidStateError(f"non-finite control input {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.phi, self.beta], dtype=float)

    @classmethod
    def from_array(cls, u) -> "ControlInput":
        return cls(float(u[0]), float(u[1]))


@dataclass(frozen=True)
class InputBounds:
    """Symmetric saturation limits |phi| <= phi_max, |beta| <= beta_max."""

    phi_max: float
    beta_max: float

    def __post_init__(self):
        if not 0.0 < self.phi_max < math.pi / 2:
            raise ValueError(f"phi_max must be in (0, pi/2), got {self.phi_max}")
        if self.beta_max <= 0.0:
            raise ValueError(f"beta_max must be positive, got {self.beta_max}")


@dataclass(frozen=True)
class AircraftParams:
    """Per-aircraft physical limits and scheduling attributes.

    priority ranks intersection precedence: smaller values outrank larger
    ones. speed_limits is (v_min, v_max) enforced by controller and
    simulator; taxiing aircraft do not reverse, so v_min >= 0.
    """

    length: float
    bounds: InputBounds
    speed_limits: tuple[float, float]
    operating_speed: float
    priority: int
    goal_tolerance: float

    def __post_init__(self):
        v_min, v_max = self.speed_limits
        if self.length <= 0.0:
            raise ValueError(f"length must be positive, got {self.length}")
        if not (0.0 <= v_min <= self.operating_speed <= v_max):
            raise ValueError(
                f"need 0 <= v_min <= operating_speed <= v_max, got "
                f"v_min={v_min}, operating_speed={self.operating_speed}, v_max={v_max}"
            )
        if self.goal_tolerance <= 0.0:
            raise ValueError(f"goal_tolerance must be positive, got {self.goal_tolerance}")


@dataclass(frozen=True)
class Obstacle:
    """Disk obstacle with constant-velocity motion.

    position is the center at the reference time; velocity is held constant,
    which is a Lipschitz motion map, so predictions over a horizon are exact.
    """

    position: tuple[float, float]
    radius: float
    velocity: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.radius <= 0.0:
            raise ValueError(f"obstacle radius must be positive, got {self.radius}")

    def position_at(self, elapsed: float) -> np.ndarray:
        """Center after `elapsed` seconds of constant-velocity motion."""
        return np.array(
            [
                self.position[0] + elapsed * self.velocity[0],
                self.position[1] + elapsed * self.velocity[1],
            ]
        )


def step_dynamics_array(x: np.ndarray, u: np.ndarray, dt: float, length: float) -> np.ndarray:
    """Euler step on raw arrays; x is (4,), u is (2,). No validation."""
    px, py, theta, v = x
    phi, beta = u
    return np.array(
        [
            px + v * math.cos(theta) * dt,
            py + v * math.sin(theta) * dt,
            wrap_angle(theta + (v / length) * math.tan(phi) * dt),
            v + beta * dt,
        ]
    )


def step_dynamics(x: AircraftState, u: ControlInput, dt: float, length: float) -> AircraftState:
    """Advance the aircraft one Euler step of the car model."""
    if dt <= 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length}")
    nxt = step_dynamics_array(x.as_array(), u.as_array(), dt, length)
    return AircraftState.from_array(nxt)


def dynamics_jacobians(x, u, dt: float, length: float) -> tuple[np.ndarray, np.ndarray]:
    """Analytic Jacobians (A, B) of the Euler step w.r.t. state and input.

    Accepts AircraftState/ControlInput or raw arrays. The heading wrap is a
    shift and does not affect derivatives.
    """
    if isinstance(x, AircraftState):
        x = x.as_array()
    if isinstance(u, ControlInput):
        u = u.as_array()
    theta, v = float(x[2]), float(x[3])
    phi = float(u[0])
    sin_t, cos_t = math.sin(theta), math.cos(theta)
    tan_p = math.tan(phi)

    A = np.eye(4)
    A[0, 2] = -v * sin_t * dt
    A[0, 3] = cos_t * dt
    A[1, 2] = v * cos_t * dt
    A[1, 3] = sin_t * dt
    A[2, 3] = tan_p / length * dt

    B = np.zeros((4, 2))
    B[2, 0] = (v / length) * (1.0 + tan_p * tan_p) * dt
    B[3, 1] = dt
    return A, B


def clamp_input(u: ControlInput, bounds: InputBounds) -> ControlInput:
    """Saturate each input component to its symmetric bound."""
    return ControlInput(
        phi=min(max(u.phi, -bounds.phi_max), bounds.phi_max),
        beta=min(max(u.beta, -bounds.beta_max), bounds.beta_max),
    )


def propagate_obstacle(o: Obstacle, steps: int, dt: float) -> np.ndarray:
    """Predicted centers at k = 1..steps under constant velocity; shape (steps, 2)."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    if steps == 0:
        return np.zeros((0, 2))
    k = np.arange(1, steps + 1, dtype=float)[:, None]
    p0 = np.array(o.position, dtype=float)
    vel = np.array(o.velocity, dtype=float)
    return p0[None, :] + k * dt * vel[None, :]
