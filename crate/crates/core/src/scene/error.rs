use std::fmt;

/// Stable machine-readable error codes, rendered in SCREAMING_SNAKE_CASE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    UnresolvedRef,
    InvalidRange,
    LogNonpositive,
    ArrayMismatch,
    DuplicateId,
    OrientationConflict,
    InvalidStyle,
    InvalidTicks,
    BadPattern,
    InvalidValue,
    InvalidAnnotation,
    Schema,
    BadPath,
    IndexOutOfRange,
    TypeMismatch,
    ReadOnly,
    EndWithoutBegin,
    DataFile,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::UnresolvedRef => "UNRESOLVED_REF",
            ErrorCode::InvalidRange => "INVALID_RANGE",
            ErrorCode::LogNonpositive => "LOG_NONPOSITIVE",
            ErrorCode::ArrayMismatch => "ARRAY_MISMATCH",
            ErrorCode::DuplicateId => "DUPLICATE_ID",
            ErrorCode::OrientationConflict => "ORIENTATION_CONFLICT",
            ErrorCode::InvalidStyle => "INVALID_STYLE",
            ErrorCode::InvalidTicks => "INVALID_TICKS",
            ErrorCode::BadPattern => "BAD_PATTERN",
            ErrorCode::InvalidValue => "INVALID_VALUE",
            ErrorCode::InvalidAnnotation => "INVALID_ANNOTATION",
            ErrorCode::Schema => "SCHEMA",
            ErrorCode::BadPath => "BAD_PATH",
            ErrorCode::IndexOutOfRange => "INDEX_OUT_OF_RANGE",
            ErrorCode::TypeMismatch => "TYPE_MISMATCH",
            ErrorCode::ReadOnly => "READ_ONLY",
            ErrorCode::EndWithoutBegin => "END_WITHOUT_BEGIN",
            ErrorCode::DataFile => "DATA_FILE",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A scene construction or mutation failure, located by property path.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{path}: {code}: {message}")]
pub struct SceneError {
    pub code: ErrorCode,
    pub path: String,
    pub message: String,
}

impl SceneError {
    pub fn new(code: ErrorCode, path: impl Into<String>, message: impl Into<String>) -> Self {
        SceneError {
            code,
            path: path.into(),
            message: message.into(),
        }
    }
}
