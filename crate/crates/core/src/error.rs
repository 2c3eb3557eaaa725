use thiserror::Error;

use crate::expr::{EvalError, ParseError};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error(transparent)]
    Eval(#[from] EvalError),

    #[error("cannot differentiate `{node}`: not differentiable everywhere")]
    NotDifferentiable { node: String },

    #[error("`{function}` has no attached derivative")]
    MissingDerivative { function: String },

    #[error("{method} did not converge: {detail}")]
    NonConvergence {
        method: &'static str,
        detail: String,
    },

    #[error("g(b) - g(a) vanishes; the kernel normalisation divides by it")]
    ZeroDenominator,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
