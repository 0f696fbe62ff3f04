//! Unit complex numbers as rotations of the circle.
//!
//! [`UnitPhase`] is the parameter `α` of the Hermitian adjacency matrix.
//! Roots of unity are kept as exact rational rotations so that walk values,
//! stores and monograph decisions involve no floating-point comparisons.
//! Arbitrary angles fall back to real rotations and are treated as having
//! infinite order.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::{MixedGraph, Step, Walk, WalkError};

/// Tolerance on rotations (in turns) when comparing non-exact phases.
pub const PHASE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PhaseError {
    #[error("unrecognised alpha {0:?} (expected i, gamma, omega, 1, root:k/n or angle:<radians>)")]
    Unrecognised(String),
    #[error("root of unity with zero denominator")]
    ZeroDenominator,
    #[error("angle {0:?} is not a finite number")]
    BadAngle(String),
}

/// An exact rotation by a rational fraction of a full turn, reduced to `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Turn(Rational64);

impl Turn {
    pub fn new(numer: i64, denom: i64) -> Option<Turn> {
        (denom != 0).then(|| Turn::wrap(Rational64::new(numer, denom)))
    }

    fn wrap(r: Rational64) -> Turn {
        Turn(r - r.floor())
    }

    pub fn zero() -> Turn {
        Turn(Rational64::zero())
    }

    pub fn half() -> Turn {
        Turn(Rational64::new(1, 2))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `m` times this rotation, computed without intermediate overflow.
    pub fn times(self, m: i64) -> Turn {
        let d = self.denom() as i128;
        let k = (self.numer() as i128 * m as i128).rem_euclid(d);
        Turn(Rational64::new(k as i64, d as i64))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(0.0)
    }

    /// The point `e^{2πi·turn}`; exact on the quarter turns and exact real
    /// parts on multiples of a sixth.
    pub fn to_complex(&self) -> Complex64 {
        let (k, d) = (self.numer(), self.denom());
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        match (k, d) {
            (0, 1) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (1, 3) => Complex64::new(-0.5, half_sqrt3),
            (2, 3) => Complex64::new(-0.5, -half_sqrt3),
            (1, 6) => Complex64::new(0.5, half_sqrt3),
            (5, 6) => Complex64::new(0.5, -half_sqrt3),
            _ => {
                let (s, c) = (TAU * self.to_f64()).sin_cos();
                Complex64::new(c, s)
            }
        }
    }

    pub fn cos(&self) -> f64 {
        self.to_complex().re
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// An element of the circle group, stored as a rotation in turns.
///
/// Exact phases arise from rational `α`; approximate ones from angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Phase {
    Exact(Turn),
    /// Rotation in turns, in `[0, 1)`.
    Approx(f64),
}

impl Phase {
    pub fn one() -> Phase {
        Phase::Exact(Turn::zero())
    }

    pub fn minus_one() -> Phase {
        Phase::Exact(Turn::half())
    }

    fn approx(turns: f64) -> Phase {
        let t = turns.rem_euclid(1.0);
        Phase::Approx(if t >= 1.0 { 0.0 } else { t })
    }

    pub fn turns(&self) -> f64 {
        match self {
            Phase::Exact(t) => t.to_f64(),
            Phase::Approx(t) => *t,
        }
    }

    pub fn conj(self) -> Phase {
        match self {
            Phase::Exact(t) => Phase::Exact(-t),
            Phase::Approx(t) => Phase::approx(-t),
        }
    }

    pub fn powi(self, m: i64) -> Phase {
        match self {
            Phase::Exact(t) => Phase::Exact(t.times(m)),
            Phase::Approx(t) => Phase::approx(t * m as f64),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Phase::Exact(t) => t.to_complex(),
            Phase::Approx(t) => {
                let (s, c) = (TAU * t).sin_cos();
                Complex64::new(c, s)
            }
        }
    }

    /// Real part, `cos(2π·turns)`.
    pub fn re(&self) -> f64 {
        self.to_complex().re
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Phase::Exact(_))
    }

    /// Circular distance between the rotations, in turns.
    pub fn distance(&self, other: &Phase) -> f64 {
        if let (Phase::Exact(a), Phase::Exact(b)) = (self, other) {
            let d = (*a + -*b).to_f64();
            return d.min(1.0 - d);
        }
        let d = (self.turns() - other.turns()).rem_euclid(1.0);
        d.min(1.0 - d)
    }

    /// Equality: exact for exact phases, within [`PHASE_TOL`] otherwise.
    pub fn approx_eq(&self, other: &Phase) -> bool {
        match (self, other) {
            (Phase::Exact(a), Phase::Exact(b)) => a == b,
            _ => self.distance(other) <= PHASE_TOL,
        }
    }

    pub fn is_one(&self) -> bool {
        self.approx_eq(&Phase::one())
    }
}

impl Add for Turn {
    type Output = Turn;

    fn add(self, other: Turn) -> Turn {
        Turn::wrap(self.0 + other.0)
    }
}

impl Neg for Turn {
    type Output = Turn;

    fn neg(self) -> Turn {
        Turn::wrap(-self.0)
    }
}

impl Mul for Phase {
    type Output = Phase;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Phase) -> Phase {
        match (self, rhs) {
            (Phase::Exact(a), Phase::Exact(b)) => Phase::Exact(a + b),
            (a, b) => Phase::approx(a.turns() + b.turns()),
        }
    }
}

impl Neg for Phase {
    type Output = Phase;

    fn neg(self) -> Phase {
        self * Phase::minus_one()
    }
}

impl fmt::Display for Phase {
    /// Fraction of a full turn: `0`, `1/3`, ... or a decimal for approximate phases.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Exact(t) => t.fmt(f),
            Phase::Approx(t) => write!(f, "{}", crate::round_sig(*t)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

/// The parameter `α` with `|α| = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnitPhase {
    /// `e^{2πik/n}`, stored reduced.
    Rational(Turn),
    /// `e^{iθ}` for an angle in radians.
    Angle(f64),
}

impl UnitPhase {
    /// `e^{2πik/n}`.
    pub fn root(k: i64, n: i64) -> Result<UnitPhase, PhaseError> {
        Turn::new(k, n)
            .map(UnitPhase::Rational)
            .ok_or(PhaseError::ZeroDenominator)
    }

    fn exact(k: i64, n: i64) -> UnitPhase {
        UnitPhase::Rational(Turn::new(k, n).expect("nonzero denominator"))
    }

    pub fn one() -> UnitPhase {
        UnitPhase::exact(0, 1)
    }

    pub fn i() -> UnitPhase {
        UnitPhase::exact(1, 4)
    }

    /// The primitive third root of unity `e^{2πi/3}`.
    pub fn gamma() -> UnitPhase {
        UnitPhase::exact(1, 3)
    }

    /// The primitive sixth root of unity `e^{πi/3}`.
    pub fn omega() -> UnitPhase {
        UnitPhase::exact(1, 6)
    }

    pub fn order(&self) -> Order {
        match self {
            UnitPhase::Rational(t) => Order::Finite(t.denom() as u64),
            UnitPhase::Angle(_) => Order::Infinite,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, UnitPhase::Rational(_))
    }

    /// `α^m`.
    pub fn pow(&self, m: i64) -> Phase {
        match self {
            UnitPhase::Rational(t) => Phase::Exact(t.times(m)),
            UnitPhase::Angle(theta) => Phase::approx(m as f64 * theta / TAU),
        }
    }

    /// Whether `(-1)^sign_exponent · α^m = 1`.
    ///
    /// Angles are taken to be of infinite order, so the answer for them is
    /// decided on the integers alone.
    pub fn is_trivial_power(&self, m: i64, sign_exponent: usize) -> bool {
        match self {
            UnitPhase::Rational(_) => {
                let mut value = self.pow(m);
                if sign_exponent % 2 == 1 {
                    value = -value;
                }
                value.is_one()
            }
            UnitPhase::Angle(_) => m == 0 && sign_exponent.is_multiple_of(2),
        }
    }

    /// True when no two powers of `α` are negatives of each other.
    pub fn avoids_negation(&self) -> bool {
        match self {
            UnitPhase::Rational(t) => t.denom() % 2 == 1,
            UnitPhase::Angle(_) => true,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        self.pow(1).to_complex()
    }

    /// The matrix entry seen when walking one step.
    pub fn step_phase(&self, step: Step) -> Phase {
        match step {
            Step::Digon => Phase::one(),
            Step::Forward => self.pow(1),
            Step::Backward => self.pow(-1),
        }
    }

    /// The entry `h_uv` for a step, as a complex number. The backward value
    /// is the exact conjugate of the forward one.
    pub fn step_entry(&self, step: Step) -> Complex64 {
        match step {
            Step::Digon => Complex64::new(1.0, 0.0),
            Step::Forward => self.to_complex(),
            Step::Backward => self.to_complex().conj(),
        }
    }
}

impl FromStr for UnitPhase {
    type Err = PhaseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spec = s.trim();
        match spec {
            "i" => return Ok(UnitPhase::i()),
            "gamma" => return Ok(UnitPhase::gamma()),
            "omega" => return Ok(UnitPhase::omega()),
            "1" => return Ok(UnitPhase::one()),
            _ => {}
        }
        if let Some(rest) = spec.strip_prefix("root:") {
            let (k, n) = rest
                .split_once('/')
                .ok_or_else(|| PhaseError::Unrecognised(s.to_string()))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| PhaseError::Unrecognised(s.to_string()))
            };
            return UnitPhase::root(parse(k)?, parse(n)?);
        }
        if let Some(rest) = spec.strip_prefix("angle:") {
            let theta: f64 = rest
                .trim()
                .parse()
                .map_err(|_| PhaseError::BadAngle(rest.to_string()))?;
            if !theta.is_finite() {
                return Err(PhaseError::BadAngle(rest.to_string()));
            }
            return Ok(UnitPhase::Angle(theta));
        }
        Err(PhaseError::Unrecognised(s.to_string()))
    }
}

/// Parses an `α` spec: `i`, `gamma`, `omega`, `1`, `root:k/n` or `angle:<radians>`.
pub fn make_alpha(spec: &str) -> Result<UnitPhase, PhaseError> {
    spec.parse()
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitPhase::Rational(t) => match (t.numer(), t.denom()) {
                (0, 1) => f.write_str("1"),
                (1, 4) => f.write_str("i"),
                (1, 3) => f.write_str("gamma"),
                (1, 6) => f.write_str("omega"),
                (k, n) => write!(f, "root:{k}/{n}"),
            },
            UnitPhase::Angle(theta) => write!(f, "angle:{theta}"),
        }
    }
}

/// Product of the matrix entries along `walk`.
pub fn walk_value_h(graph: &MixedGraph, alpha: UnitPhase, walk: &Walk) -> Result<Phase, WalkError> {
    Ok(walk
        .steps(graph)?
        .into_iter()
        .fold(Phase::one(), |acc, step| acc * alpha.step_phase(step)))
}

/// `(-1)^{edges} · h(W)`.
pub fn walk_value_g(graph: &MixedGraph, alpha: UnitPhase, walk: &Walk) -> Result<Phase, WalkError> {
    let h = walk_value_h(graph, alpha, walk)?;
    Ok(if walk.edge_count() % 2 == 1 { -h } else { h })
}

/// Forward minus backward arcs along the walk, and its number of edges.
pub fn arc_balance(graph: &MixedGraph, walk: &Walk) -> Result<(i64, usize), WalkError> {
    let steps = walk.steps(graph)?;
    let balance = steps
        .iter()
        .map(|s| match s {
            Step::Digon => 0,
            Step::Forward => 1,
            Step::Backward => -1,
        })
        .sum();
    Ok((balance, steps.len()))
}

/// Order of `α`; `Infinite` for every angle.
pub fn order_of(alpha: UnitPhase) -> Order {
    alpha.order()
}
