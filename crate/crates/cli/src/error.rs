use std::fmt;

use scalar_ac::field::FieldError;
use scalar_ac::formfactor::FormFactorError;
use scalar_ac::phase::PhaseError;
use scalar_ac::quadrature::QuadratureError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IR_DIVERGENT: i32 = 4;
pub const EXIT_NON_CONVERGENCE: i32 = 5;
pub const EXIT_PARSE: i32 = 6;

/// A diagnostic with a stable name and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, kind: "usage", message: message.into() }
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self { code: EXIT_PARSE, kind: "parse", message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error[{}]: {}", self.kind, self.message)
    }
}

impl From<QuadratureError> for CliError {
    fn from(e: QuadratureError) -> Self {
        let (code, kind) = match e {
            QuadratureError::InvalidTolerance(_) | QuadratureError::NoSamples => (EXIT_USAGE, "invalid-parameter"),
            QuadratureError::NonConvergence { .. } => (EXIT_NON_CONVERGENCE, "non-convergence"),
            QuadratureError::NonFiniteIntegrand { .. } => (EXIT_DOMAIN, "domain"),
        };
        Self { code, kind, message: e.to_string() }
    }
}

impl From<FormFactorError> for CliError {
    fn from(e: FormFactorError) -> Self {
        let (code, kind) = match &e {
            FormFactorError::InvalidParameter(_) => (EXIT_USAGE, "invalid-parameter"),
            FormFactorError::DomainError(_) => (EXIT_DOMAIN, "domain"),
            FormFactorError::InfraredDivergent(_) => (EXIT_IR_DIVERGENT, "ir-divergent"),
            FormFactorError::Quadrature(q) => return q.clone().into(),
        };
        Self { code, kind, message: e.to_string() }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        let (code, kind) = match e {
            FieldError::Parse(_) => (EXIT_PARSE, "parse"),
            FieldError::SingularPoint { .. } => (EXIT_DOMAIN, "domain"),
            FieldError::NonFinite { .. } | FieldError::DuplicateCharge { .. } => (EXIT_USAGE, "invalid-parameter"),
        };
        Self { code, kind, message: e.to_string() }
    }
}

impl From<PhaseError> for CliError {
    fn from(e: PhaseError) -> Self {
        let (code, kind) = match &e {
            PhaseError::Parse(_) => (EXIT_PARSE, "parse"),
            PhaseError::Field(f) => return f.clone().into(),
            PhaseError::PointOnPath | PhaseError::SingularPath { .. } => (EXIT_DOMAIN, "domain"),
            PhaseError::NonConvergence => (EXIT_NON_CONVERGENCE, "non-convergence"),
            PhaseError::TooFewVertices { .. }
            | PhaseError::DuplicatedClosingVertex
            | PhaseError::NonFiniteVertex { .. }
            | PhaseError::ExpectedClosedPath
            | PhaseError::ExpectedOpenPath
            | PhaseError::EndpointMismatch
            | PhaseError::InvalidTolerance => (EXIT_USAGE, "invalid-parameter"),
        };
        Self { code, kind, message: e.to_string() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_distinct_per_kind() {
        let cases: Vec<(CliError, i32)> = vec![
            (FormFactorError::InvalidParameter("x".into()).into(), EXIT_USAGE),
            (FormFactorError::DomainError("x".into()).into(), EXIT_DOMAIN),
            (FormFactorError::InfraredDivergent("x".into()).into(), EXIT_IR_DIVERGENT),
            (
                FormFactorError::Quadrature(QuadratureError::NonConvergence {
                    value: 0.0,
                    error_estimate: 1.0,
                    evaluations: 17,
                    tol: 1e-9,
                })
                .into(),
                EXIT_NON_CONVERGENCE,
            ),
            (PhaseError::Parse("x".into()).into(), EXIT_PARSE),
            (PhaseError::Field(FieldError::Parse("x".into())).into(), EXIT_PARSE),
            (PhaseError::SingularPath { charge: 0, distance: 0.0 }.into(), EXIT_DOMAIN),
            (PhaseError::NonConvergence.into(), EXIT_NON_CONVERGENCE),
            (PhaseError::EndpointMismatch.into(), EXIT_USAGE),
        ];
        for (e, code) in cases {
            assert_eq!(e.code, code, "{e}");
        }
    }
}
