//! Process exit discipline.
//!
//! 0 means success or found, 2 a bad input, 3 an exhaustive search that
//! came up empty, 4 a budget that ran out first, and 5 a broken internal
//! invariant. Argument parsing errors also exit with 2, which is what the
//! argument parser does on its own.

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Exhausted(String),
    Timeout(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Exhausted(_) => 3,
            Failure::Timeout(_) => 4,
            Failure::Internal(_) => 5,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m)
            | Failure::Exhausted(m)
            | Failure::Timeout(m)
            | Failure::Internal(m) => m,
        }
    }
}

pub type CliResult = Result<(), Failure>;

pub fn input_error(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}
