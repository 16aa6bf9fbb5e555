//! Formula input for `f(x, y)`.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' unary)?          // right associative
//! primary := number | 'x' | 'y' | 'pi' | 'e' | func '(' args ')' | '(' expr ')'
//! ```
//!
//! Functions: `sin cos tan exp log sqrt abs` (one argument) and `pow` (two).

mod ast;
mod lexer;
mod parser;

pub use ast::{BinOp, Expr, Func, NamedConst, Var};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("unexpected character {ch:?} at position {pos}")]
    Lex { pos: usize, ch: char },

    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("cannot evaluate {expr} at (x, y) = ({x}, {y}): {message}")]
    Eval {
        expr: String,
        x: f64,
        y: f64,
        message: String,
    },
}

impl ExprError {
    /// Source position for lex and parse errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            ExprError::Lex { pos, .. } | ExprError::Parse { pos, .. } => Some(*pos),
            ExprError::Eval { .. } => None,
        }
    }
}

/// Tokenizes and parses `source`.
pub fn parse_str(source: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(source)?;
    parse(&tokens, source.len())
}

/// Fully parenthesized text that parses back to the same tree.
pub fn pretty_print(ast: &Expr) -> String {
    ast.to_string()
}
