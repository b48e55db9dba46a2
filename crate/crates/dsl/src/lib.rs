//! A small text format for finite categories and the structures built on
//! them.
//!
//! ```text
//! category C {
//!   object A, B;
//!   arrow f : A -> B;
//! }
//! finset S = { a, b }
//! map swap : S -> S { a -> b; b -> a; }
//! ```

pub mod ast;
pub mod error;
pub mod format;
pub mod lexer;
pub mod model;
pub mod parser;
pub mod resolve;

pub use ast::SpecDocument;
pub use error::{ErrorCode, Span, SpecError};
pub use format::format_spec;
pub use model::Model;

/// Parses and resolves a document. Never panics; every failure is a coded
/// [`SpecError`].
pub fn parse_spec(text: &str) -> Result<SpecDocument, SpecError> {
    let doc = parser::parse_syntax(text)?;
    resolve::resolve(&doc)?;
    Ok(doc)
}

/// [`parse_spec`] for raw bytes, rejecting invalid UTF-8 with `E102`.
pub fn parse_spec_bytes(bytes: &[u8]) -> Result<SpecDocument, SpecError> {
    match std::str::from_utf8(bytes) {
        Ok(text) => parse_spec(text),
        Err(e) => {
            let valid = std::str::from_utf8(&bytes[..e.valid_up_to()]).unwrap_or_default();
            let line = valid.matches('\n').count() as u32 + 1;
            let column = valid.rsplit('\n').next().map_or(0, |l| l.chars().count()) as u32 + 1;
            Err(SpecError::new(
                ErrorCode::E102,
                Span::new(line, column),
                "invalid UTF-8 sequence",
            ))
        }
    }
}
