//! Expression language shared by the command line and the table files.

pub mod ast;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod value;

pub use ast::{Expr, ExprKind};
pub use eval::{eval, infer, Env, Tables};
pub use parser::parse;
pub use value::{Kind, Value};
