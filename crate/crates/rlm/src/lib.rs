//! Script frontend for the finite relations-language engine: lexer, parser,
//! executor, and the bundled worked-examples script.

pub mod ast;
pub mod exec;
pub mod lexer;
pub mod parser;

/// The worked-examples script shipped with the binary.
pub const EXAMPLES: &str = include_str!("../corpus/examples.rl");
