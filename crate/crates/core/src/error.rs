use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("unknown world `{0}`")]
    UnknownWorld(String),

    #[error("undeclared variable `{0}`")]
    UndeclaredVariable(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("condition {condition} does not apply to {kind} frames")]
    KindMismatch { condition: String, kind: String },

    #[error("unknown logic `{0}`")]
    UnknownLogic(String),

    #[error("unknown schema `{0}`")]
    UnknownSchema(String),

    #[error("schema {schema}: no binding for metavariable {var}")]
    MissingBinding { schema: String, var: String },

    #[error("logic {0} has no registered counterpart")]
    NoCounterpart(String),

    #[error("formula is not in the unary fragment: {0}")]
    NotUnary(String),

    #[error("variable `{var}` is not modalized in {formula}")]
    NotModalized { var: String, formula: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("proof script line {line}: {message}")]
    Script { line: usize, message: String },

    #[error("model file: {0}")]
    ModelFormat(String),

    #[error("{0}")]
    Io(String),
}
