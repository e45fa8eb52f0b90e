//! Line-oriented tokenizer for `.rl` scripts. `#` starts a comment; newlines
//! terminate declarations.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {col}: {msg}")]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(i64),
    Str(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Assign,
    Define,
    DotDot,
    Plus,
    Minus,
    Star,
    Slash,
    Percent,
    Lt,
    Le,
    Gt,
    Ge,
    EqEq,
    Ne,
    Newline,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "{s}"),
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::LParen => write!(f, "("),
            Tok::RParen => write!(f, ")"),
            Tok::LBrace => write!(f, "{{"),
            Tok::RBrace => write!(f, "}}"),
            Tok::Comma => write!(f, ","),
            Tok::Assign => write!(f, "="),
            Tok::Define => write!(f, ":="),
            Tok::DotDot => write!(f, ".."),
            Tok::Plus => write!(f, "+"),
            Tok::Minus => write!(f, "-"),
            Tok::Star => write!(f, "*"),
            Tok::Slash => write!(f, "/"),
            Tok::Percent => write!(f, "%"),
            Tok::Lt => write!(f, "<"),
            Tok::Le => write!(f, "<="),
            Tok::Gt => write!(f, ">"),
            Tok::Ge => write!(f, ">="),
            Tok::EqEq => write!(f, "=="),
            Tok::Ne => write!(f, "!="),
            Tok::Newline => write!(f, "end of line"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub fn lex(source: &str) -> Result<Vec<Spanned>, LexError> {
    let mut out = Vec::new();
    for (lineno, raw) in source.lines().enumerate() {
        let line = lineno + 1;
        let text: &str = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let bytes: Vec<char> = text.chars().collect();
        let mut i = 0;
        let start_len = out.len();
        while i < bytes.len() {
            let c = bytes[i];
            let col = i + 1;
            let mut push = |tok: Tok, advance: usize| {
                out.push(Spanned { tok, line, col });
                advance
            };
            let two = |a: char| i + 1 < bytes.len() && bytes[i + 1] == a;
            i += match c {
                ' ' | '\t' | '\r' => 1,
                '(' => push(Tok::LParen, 1),
                ')' => push(Tok::RParen, 1),
                '{' => push(Tok::LBrace, 1),
                '}' => push(Tok::RBrace, 1),
                ',' => push(Tok::Comma, 1),
                '+' => push(Tok::Plus, 1),
                '-' => push(Tok::Minus, 1),
                '*' => push(Tok::Star, 1),
                '/' => push(Tok::Slash, 1),
                '%' => push(Tok::Percent, 1),
                ':' if two('=') => push(Tok::Define, 2),
                '=' if two('=') => push(Tok::EqEq, 2),
                '=' => push(Tok::Assign, 1),
                '!' if two('=') => push(Tok::Ne, 2),
                '<' if two('=') => push(Tok::Le, 2),
                '<' => push(Tok::Lt, 1),
                '>' if two('=') => push(Tok::Ge, 2),
                '>' => push(Tok::Gt, 1),
                '.' if two('.') => push(Tok::DotDot, 2),
                '"' => {
                    let mut j = i + 1;
                    while j < bytes.len() && bytes[j] != '"' {
                        j += 1;
                    }
                    if j >= bytes.len() {
                        return Err(LexError {
                            line,
                            col,
                            msg: "unterminated string".into(),
                        });
                    }
                    let s: String = bytes[i + 1..j].iter().collect();
                    push(Tok::Str(s), j - i + 1)
                }
                '0'..='9' => {
                    let mut j = i;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    let n: i64 = bytes[i..j]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| LexError {
                            line,
                            col,
                            msg: "integer too large".into(),
                        })?;
                    push(Tok::Int(n), j - i)
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let mut j = i;
                    while j < bytes.len()
                        && (bytes[j].is_ascii_alphanumeric() || bytes[j] == '_')
                    {
                        j += 1;
                    }
                    // A trailing '?' belongs to command names like filter?.
                    if j < bytes.len() && bytes[j] == '?' {
                        j += 1;
                    }
                    let s: String = bytes[i..j].iter().collect();
                    push(Tok::Ident(s), j - i)
                }
                other => {
                    return Err(LexError {
                        line,
                        col,
                        msg: format!("unexpected character {other:?}"),
                    })
                }
            };
        }
        if out.len() > start_len {
            out.push(Spanned {
                tok: Tok::Newline,
                line,
                col: bytes.len() + 1,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_tokens() {
        let toks = lex("universe F = 1..12 # trailing\n  \nclassify and(r, s)").unwrap();
        let kinds: Vec<&Tok> = toks.iter().map(|s| &s.tok).collect();
        assert_eq!(
            kinds,
            vec![
                &Tok::Ident("universe".into()),
                &Tok::Ident("F".into()),
                &Tok::Assign,
                &Tok::Int(1),
                &Tok::DotDot,
                &Tok::Int(12),
                &Tok::Newline,
                &Tok::Ident("classify".into()),
                &Tok::Ident("and".into()),
                &Tok::LParen,
                &Tok::Ident("r".into()),
                &Tok::Comma,
                &Tok::Ident("s".into()),
                &Tok::RParen,
                &Tok::Newline,
            ]
        );
    }

    #[test]
    fn question_suffix_and_strings() {
        let toks = lex("filter? balls\ncompare g \"(0,1)\" \"(1,0)\"").unwrap();
        assert_eq!(toks[0].tok, Tok::Ident("filter?".into()));
        assert_eq!(toks[5].tok, Tok::Str("(0,1)".into()));
    }

    #[test]
    fn reports_position() {
        let err = lex("relation r := @").unwrap_err();
        assert_eq!((err.line, err.col), (1, 15));
    }
}
