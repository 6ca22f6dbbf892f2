use thiserror::Error;

use crate::algebra::ValidationReport;

/// Input that cannot even be interpreted as algebra data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedError {
    #[error("algebra has no elements")]
    Empty,
    #[error("{what} table does not match the {expected} declared elements")]
    SizeMismatch { what: &'static str, expected: usize },
    #[error("element index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Malformed(#[from] MalformedError),
    #[error("`{name}` violates {}", violation_summary(report))]
    Invalid { name: String, report: ValidationReport },
}

/// Errors raised by checks whose precondition is a class membership.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("`{algebra}` is not a BZ-lattice")]
    NotBz { algebra: String },
    #[error("`{algebra}` is not a PBZ*-lattice")]
    NotPbz { algebra: String },
    #[error("`{algebra}` is not an antiortholattice")]
    NotAntiortholattice { algebra: String },
    #[error("`{algebra}` fails precondition: {what}")]
    Other { algebra: String, what: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("twist1 needs a lattice with at least 2 elements")]
    TooSmall,
    #[error("horizontal sum summand `{0}` is trivial")]
    TrivialSummand(String),
    #[error("horizontal sum has {0} summands that are not orthomodular; at most one is allowed")]
    TooManyNonOrthomodular(usize),
    #[error("horizontal sum summand `{0}` is not a PBZ*-lattice")]
    SummandNotPbz(String),
    #[error("partition is not a congruence of `{0}`")]
    NotACongruence(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("element `{0}` is neither below nor above its Kleene complement")]
    NotCovered(String),
    #[error("twist map is not an isomorphism onto T{0}")]
    TwistMismatch(u8),
    #[error("subset is not closed under the operations (witness `{0}`)")]
    NotASubuniverse(String),
    #[error("recipe syntax error at {position}: {message}")]
    RecipeSyntax { position: usize, message: String },
    #[error("{op} expects {expected}")]
    WrongOperand { op: String, expected: &'static str },
    #[error("unknown recipe atom `{0}`")]
    UnknownAtom(String),
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("algebra has {size} elements; congruence lattice bound is {bound}")]
    TooLarge { size: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("requested size {requested} exceeds cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
}

fn violation_summary(report: &ValidationReport) -> String {
    let parts: Vec<String> = report
        .violations
        .iter()
        .map(|v| {
            let at: Vec<String> = v.witness.iter().map(|e| format!("#{}", e.index())).collect();
            format!("{} at {}", v.rule.name(), at.join(" "))
        })
        .collect();
    parts.join("; ")
}
