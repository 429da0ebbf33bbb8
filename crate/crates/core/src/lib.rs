//! One-loop anomalous magnetic moment integrals in 2+1 dimensions and
//! Aharonov-Casher phases for spinor and scalar particles.
//!
//! Everything numerical is generic over [`Real`] (`f32`, `f64`); the
//! aliases below fix the scalar to `f64`, which is what the tolerances in
//! the tests and the CLI assume.

pub mod field;
pub mod formfactor;
pub mod phase;
pub mod quadrature;
pub mod real;
pub mod vec2;

pub use field::{dual_field, efield, FieldError, LineCharge};
pub use formfactor::{
    ir_scan, reduction_check, susy_form_factor, susy_integrand, yukawa_form_factor, yukawa_integrand,
    FormFactorError, Prefactor, YukawaTerm,
};
pub use phase::{ac_phase, fringe_shift, line_integral_dual, winding_number, Conventions, PhaseError, Species};
pub use quadrature::{integrate_triangle, mc_integrate_triangle, QuadratureError};
pub use real::Real;

pub type Point = vec2::Vec2<f64>;
pub type FieldConfig = field::FieldConfig<f64>;
pub type PolylinePath = phase::PolylinePath<f64>;
pub type PhaseResult = phase::PhaseResult<f64>;
pub type FringeShift = phase::FringeShift<f64>;
pub type SusyParams = formfactor::SusyParams<f64>;
pub type YukawaParams = formfactor::YukawaParams<f64>;
pub type FormFactorResult = formfactor::FormFactorResult<f64>;
pub type QuadratureResult = quadrature::QuadratureResult<f64>;
pub type IrScan = formfactor::IrScan<f64>;

pub type Point32 = vec2::Vec2<f32>;
pub type FieldConfig32 = field::FieldConfig<f32>;
pub type PolylinePath32 = phase::PolylinePath<f32>;
pub type SusyParams32 = formfactor::SusyParams<f32>;
