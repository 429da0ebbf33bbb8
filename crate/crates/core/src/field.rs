//! Static 2-D electric fields of parallel line charges and their dual.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::real::Real;
use crate::vec2::Vec2;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FieldError {
    #[error("charge {index} has a non-finite position or density")]
    NonFinite { index: usize },
    #[error("charges {first} and {second} sit at the same position")]
    DuplicateCharge { first: usize, second: usize },
    #[error("field evaluated on top of charge {index}")]
    SingularPoint { index: usize },
    #[error("malformed charge file: {0}")]
    Parse(String),
}

/// An infinite line charge piercing the plane at `position` with linear density `lambda`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineCharge<T> {
    pub position: Vec2<T>,
    pub lambda: T,
}

impl<T: Real> LineCharge<T> {
    pub fn new(x: T, y: T, lambda: T) -> Self {
        Self {
            position: Vec2::new(x, y),
            lambda,
        }
    }
}

/// A set of line charges at distinct positions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FieldConfig<T> {
    charges: Vec<LineCharge<T>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChargeRecord<T> {
    x: T,
    y: T,
    lambda: T,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChargeFile<T> {
    charges: Vec<ChargeRecord<T>>,
}

impl<T: Real> FieldConfig<T> {
    pub fn new(charges: Vec<LineCharge<T>>) -> Result<Self, FieldError> {
        for (index, c) in charges.iter().enumerate() {
            if !c.position.is_finite() || !c.lambda.is_finite() {
                return Err(FieldError::NonFinite { index });
            }
        }
        for (first, a) in charges.iter().enumerate() {
            if let Some(off) = charges[first + 1..].iter().position(|b| b.position == a.position) {
                return Err(FieldError::DuplicateCharge {
                    first,
                    second: first + 1 + off,
                });
            }
        }
        Ok(Self { charges })
    }

    pub fn empty() -> Self {
        Self { charges: Vec::new() }
    }

    pub fn single(x: T, y: T, lambda: T) -> Self {
        Self {
            charges: vec![LineCharge::new(x, y, lambda)],
        }
    }

    pub fn charges(&self) -> &[LineCharge<T>] {
        &self.charges
    }

    pub fn len(&self) -> usize {
        self.charges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charges.is_empty()
    }

    /// Union of two configurations.
    pub fn merged(&self, other: &Self) -> Result<Self, FieldError> {
        let mut charges = self.charges.clone();
        charges.extend_from_slice(&other.charges);
        Self::new(charges)
    }

    /// `E(r) = Σ λ_i / (2π) (r - r_i) / |r - r_i|^2`.
    pub fn efield(&self, point: Vec2<T>) -> Result<Vec2<T>, FieldError> {
        if let Some(index) = self.charges.iter().position(|c| c.position == point) {
            return Err(FieldError::SingularPoint { index });
        }
        Ok(self.efield_unchecked(point))
    }

    /// Field without the coincidence check; infinite or NaN on a charge.
    #[inline]
    pub fn efield_unchecked(&self, point: Vec2<T>) -> Vec2<T> {
        let inv_two_pi = T::one() / T::TAU();
        let mut e = Vec2::zero();
        for c in &self.charges {
            let d = point - c.position;
            e += d * (c.lambda * inv_two_pi / d.norm_squared());
        }
        e
    }

    /// Dual field `S = (E_y, -E_x)` at `point`.
    pub fn dual_at(&self, point: Vec2<T>) -> Result<Vec2<T>, FieldError> {
        self.efield(point).map(dual_field)
    }
}

impl<T: Real + DeserializeOwned> FieldConfig<T> {
    /// Parses `{"charges": [{"x": .., "y": .., "lambda": ..}, ...]}`.
    pub fn from_json(text: &str) -> Result<Self, FieldError> {
        let file: ChargeFile<T> = serde_json_from_str(text)?;
        Self::new(
            file.charges
                .into_iter()
                .map(|r| LineCharge::new(r.x, r.y, r.lambda))
                .collect(),
        )
    }
}

impl<T: Real + Serialize> FieldConfig<T> {
    pub fn to_json(&self) -> String {
        let file = ChargeFile {
            charges: self
                .charges
                .iter()
                .map(|c| ChargeRecord {
                    x: c.position.x,
                    y: c.position.y,
                    lambda: c.lambda,
                })
                .collect(),
        };
        serde_json::to_string(&file).expect("charge records always serialize")
    }
}

fn serde_json_from_str<D: DeserializeOwned>(text: &str) -> Result<D, FieldError> {
    serde_json::from_str(text).map_err(|e| FieldError::Parse(e.to_string()))
}

/// Free-function form of [`FieldConfig::efield`].
pub fn efield<T: Real>(config: &FieldConfig<T>, point: Vec2<T>) -> Result<Vec2<T>, FieldError> {
    config.efield(point)
}

/// Spatial part of the dual field strength in a purely electric
/// configuration: `(E_x, E_y) -> (E_y, -E_x)`.
#[inline]
pub fn dual_field<T: Real>(e: Vec2<T>) -> Vec2<T> {
    Vec2::new(e.y, -e.x)
}
