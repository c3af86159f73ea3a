use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("illegal root system {0}{1}")]
    IllegalRootSystem(char, usize),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not minuscule: {0}")]
    NotMinuscule(String),
    #[error("weight is minuscule: {0}")]
    Minuscule(String),
    #[error("no witness exists for {0}; use the obstruction certificate")]
    ObstructionCase(String),
    #[error("no ±1 vector found: {0}")]
    NoSignVector(String),
    #[error("relation {relation:?} has nonzero sign sum {sum}")]
    RelationViolated { relation: Vec<i64>, sum: i64 },
    #[error("degenerate point set: {0}")]
    Degenerate(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
