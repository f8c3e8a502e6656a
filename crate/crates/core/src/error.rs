use thiserror::Error;

/// Errors produced by curve construction, evaluation and classification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {name} = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("control polygon is not in H-form (p1 != p2)")]
    NotHForm,
    #[error("velocity vanishes at t = {t} (|Z'| = {speed:e})")]
    SingularVelocity { t: f64, speed: f64 },
    #[error("end tangents are linearly dependent (cross product {0:e})")]
    DependentTangents(f64),
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
