//! Text front-end: parsing expressions into an AST, lowering the AST to
//! canonical Bohl functions, and the canonical rendering that round-trips
//! through both.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | 'i' | 't' | ident | 'exp' '(' expr ')' | '(' expr ')' | '-' atom
//! rational := int ('/' uint)? | decimal
//! ```

mod ast;
mod format;
mod lower;
mod parse;

pub use ast::Expr;
pub use format::{exponent_expr, exponent_items};
pub use lower::{lower, lower_symbolic, parse_function, parse_symbolic};
pub use parse::{parse, ParseError};
