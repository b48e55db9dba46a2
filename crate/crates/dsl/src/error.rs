use std::fmt;

use serde::Serialize;

/// 1-based source position.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Span {
    pub line: u32,
    pub column: u32,
}

impl Span {
    pub fn new(line: u32, column: u32) -> Self {
        Span { line, column }
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Error codes. `E1xx` are lexical, `E2xx` syntactic and `E3xx`
/// reference-resolution errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ErrorCode {
    E101,
    E102,
    E103,
    E201,
    E202,
    E203,
    E301,
    E302,
    E303,
    E304,
    E305,
    E306,
    E307,
    E308,
    E309,
    E310,
    E311,
    E312,
}

impl ErrorCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::E101 => "E101",
            ErrorCode::E102 => "E102",
            ErrorCode::E103 => "E103",
            ErrorCode::E201 => "E201",
            ErrorCode::E202 => "E202",
            ErrorCode::E203 => "E203",
            ErrorCode::E301 => "E301",
            ErrorCode::E302 => "E302",
            ErrorCode::E303 => "E303",
            ErrorCode::E304 => "E304",
            ErrorCode::E305 => "E305",
            ErrorCode::E306 => "E306",
            ErrorCode::E307 => "E307",
            ErrorCode::E308 => "E308",
            ErrorCode::E309 => "E309",
            ErrorCode::E310 => "E310",
            ErrorCode::E311 => "E311",
            ErrorCode::E312 => "E312",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            ErrorCode::E101 => "unexpected character",
            ErrorCode::E102 => "input is not valid UTF-8",
            ErrorCode::E103 => "incomplete operator",
            ErrorCode::E201 => "unexpected token",
            ErrorCode::E202 => "unexpected end of input",
            ErrorCode::E203 => "unknown keyword",
            ErrorCode::E301 => "duplicate name",
            ErrorCode::E302 => "unknown object",
            ErrorCode::E303 => "unknown arrow",
            ErrorCode::E304 => "unknown category or shape",
            ErrorCode::E305 => "unknown finite set",
            ErrorCode::E306 => "unknown functor",
            ErrorCode::E307 => "unknown element",
            ErrorCode::E308 => "binding is not total",
            ErrorCode::E309 => "duplicate binding",
            ErrorCode::E310 => "arrows are not composable",
            ErrorCode::E311 => "name used for both an object and an arrow",
            ErrorCode::E312 => "mismatched functors",
        }
    }

    pub fn is_lexical(self) -> bool {
        self.as_str().starts_with("E1")
    }

    pub fn is_syntactic(self) -> bool {
        self.as_str().starts_with("E2")
    }

    pub fn is_resolution(self) -> bool {
        self.as_str().starts_with("E3")
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("{code} at {span}: {message}{}", expected.as_ref().map(|e| format!(" (expected {e})")).unwrap_or_default())]
pub struct SpecError {
    pub code: ErrorCode,
    pub span: Span,
    pub message: String,
    /// What the parser would have accepted at this point.
    pub expected: Option<String>,
}

impl SpecError {
    pub fn new(code: ErrorCode, span: Span, message: impl Into<String>) -> Self {
        SpecError {
            code,
            span,
            message: message.into(),
            expected: None,
        }
    }

    pub fn expecting(mut self, expected: impl Into<String>) -> Self {
        self.expected = Some(expected.into());
        self
    }
}
