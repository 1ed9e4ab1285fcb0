//! Values of meromorphic functions with explicit zero/pole bookkeeping.

use core::ops::{Div, Mul};

use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeroKind {
    Finite,
    Zero(u32),
    Pole(u32),
}

impl MeroKind {
    /// Zero orders count positive, pole orders negative.
    pub fn net_order(&self) -> i64 {
        match *self {
            MeroKind::Finite => 0,
            MeroKind::Zero(m) => m as i64,
            MeroKind::Pole(m) => -(m as i64),
        }
    }

    pub fn from_net_order(n: i64) -> Self {
        match n {
            0 => MeroKind::Finite,
            n if n > 0 => MeroKind::Zero(n as u32),
            n => MeroKind::Pole((-n) as u32),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MeroKind::Finite => "finite",
            MeroKind::Zero(_) => "zero",
            MeroKind::Pole(_) => "pole",
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            MeroKind::Finite => 0,
            MeroKind::Zero(m) | MeroKind::Pole(m) => m,
        }
    }
}

/// A function value tagged finite, zero or pole.
///
/// At a zero or pole of order `m` the optional `leading` field holds the
/// coefficient `c` of `c (z - z0)^{±m}` with respect to the scalar argument of
/// the function that produced it, when that is known.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeroValue {
    pub value: C64,
    pub kind: MeroKind,
    pub distance_to_singularity: f64,
    pub leading: Option<C64>,
}

impl MeroValue {
    pub fn finite(value: C64) -> Self {
        MeroValue {
            value,
            kind: MeroKind::Finite,
            distance_to_singularity: f64::INFINITY,
            leading: Some(value),
        }
    }

    pub fn finite_near(value: C64, distance: f64) -> Self {
        MeroValue { distance_to_singularity: distance, ..Self::finite(value) }
    }

    pub fn zero(order: u32, distance: f64, leading: Option<C64>) -> Self {
        MeroValue {
            value: C64::new(0.0, 0.0),
            kind: MeroKind::Zero(order.max(1)),
            distance_to_singularity: distance,
            leading,
        }
    }

    pub fn pole(order: u32, distance: f64, leading: Option<C64>) -> Self {
        MeroValue {
            value: C64::new(f64::INFINITY, 0.0),
            kind: MeroKind::Pole(order.max(1)),
            distance_to_singularity: distance,
            leading,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind == MeroKind::Finite && self.value.re.is_finite() && self.value.im.is_finite()
    }

    pub fn is_pole(&self) -> bool {
        matches!(self.kind, MeroKind::Pole(_))
    }

    /// The finite value, treating zeros as 0 and poles as `None`.
    pub fn to_complex(&self) -> Option<C64> {
        match self.kind {
            MeroKind::Pole(_) => None,
            _ => Some(self.value),
        }
    }

    fn combine(kind: i64, leading: Option<C64>, finite_value: C64, distance: f64) -> Self {
        match MeroKind::from_net_order(kind) {
            MeroKind::Finite => {
                let v = if kind == 0 { leading.unwrap_or(finite_value) } else { finite_value };
                MeroValue { value: v, kind: MeroKind::Finite, distance_to_singularity: distance, leading: Some(v) }
            }
            MeroKind::Zero(m) => MeroValue::zero(m, distance, leading),
            MeroKind::Pole(m) => MeroValue::pole(m, distance, leading),
        }
    }

    pub fn recip(self) -> Self {
        let lead = self.leading.map(|l| l.inv());
        match self.kind {
            MeroKind::Finite => MeroValue {
                value: self.value.inv(),
                kind: MeroKind::Finite,
                distance_to_singularity: self.distance_to_singularity,
                leading: lead,
            },
            MeroKind::Zero(m) => MeroValue::pole(m, self.distance_to_singularity, lead),
            MeroKind::Pole(m) => MeroValue::zero(m, self.distance_to_singularity, lead),
        }
    }

    pub fn scale(self, s: C64) -> Self {
        match self.kind {
            MeroKind::Finite => MeroValue { value: self.value * s, leading: Some(self.value * s), ..self },
            _ => MeroValue { leading: self.leading.map(|l| l * s), ..self },
        }
    }
}

impl Mul for MeroValue {
    type Output = MeroValue;

    fn mul(self, rhs: MeroValue) -> MeroValue {
        let order = self.kind.net_order() + rhs.kind.net_order();
        let leading = match (self.leading, rhs.leading) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        let d = self.distance_to_singularity.min(rhs.distance_to_singularity);
        let nan = C64::new(f64::NAN, f64::NAN);
        MeroValue::combine(order, leading, if order == 0 && leading.is_none() { nan } else { self.value * rhs.value }, d)
    }
}

impl Div for MeroValue {
    type Output = MeroValue;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: MeroValue) -> MeroValue {
        self * rhs.recip()
    }
}

impl Mul<C64> for MeroValue {
    type Output = MeroValue;

    fn mul(self, rhs: C64) -> MeroValue {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_times_pole_cancels_to_leading_product() {
        let z = MeroValue::zero(1, 0.0, Some(C64::new(2.0, 0.0)));
        let p = MeroValue::pole(1, 0.0, Some(C64::new(0.0, 3.0)));
        let r = z * p;
        assert_eq!(r.kind, MeroKind::Finite);
        assert_eq!(r.value, C64::new(0.0, 6.0));
    }

    #[test]
    fn orders_add() {
        let z = MeroValue::zero(2, 0.0, None);
        let p = MeroValue::pole(1, 0.0, None);
        assert_eq!((z * p).kind, MeroKind::Zero(1));
        assert_eq!((p / z).kind, MeroKind::Pole(3));
        let f = MeroValue::finite(C64::new(2.0, 0.0));
        assert_eq!((f * p).kind, MeroKind::Pole(1));
    }

    #[test]
    fn unknown_leading_cancellation_is_nan() {
        let z = MeroValue::zero(1, 0.0, None);
        let p = MeroValue::pole(1, 0.0, None);
        assert!(!(z * p).is_finite());
    }
}
