//! Tokenizer shared by the source-program parser and the ASP reader.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, SourceSpan};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tok {
    /// Lowercase identifier (predicate or constant), including `not`.
    Ident(String),
    /// Uppercase or underscore identifier.
    Var(String),
    Int(i64),
    /// `#const` and friends, without the `#`.
    Directive(String),
    LParen,
    RParen,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Dot,
    DotDot,
    Colon,
    /// `:-`
    If,
    /// `:+`
    CrIf,
    /// `:~`
    WeakIf,
    Eq,
    Neq,
    Lt,
    Le,
    Gt,
    Ge,
    Plus,
    Minus,
    Star,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(s) | Tok::Var(s) => return f.write_str(s),
            Tok::Int(v) => return write!(f, "{v}"),
            Tok::Directive(d) => return write!(f, "#{d}"),
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Dot => ".",
            Tok::DotDot => "..",
            Tok::Colon => ":",
            Tok::If => ":-",
            Tok::CrIf => ":+",
            Tok::WeakIf => ":~",
            Tok::Eq => "=",
            Tok::Neq => "!=",
            Tok::Lt => "<",
            Tok::Le => "<=",
            Tok::Gt => ">",
            Tok::Ge => ">=",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: SourceSpan,
}

/// Splits `text` into tokens. `%` starts a comment running to end of line.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let mut line = 1;
    let mut line_start = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c == b'\n' {
            pos += 1;
            line += 1;
            line_start = pos;
            continue;
        }
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c == b'%' {
            while pos < bytes.len() && bytes[pos] != b'\n' {
                pos += 1;
            }
            continue;
        }
        let start = pos;
        let span_of = |end: usize| SourceSpan {
            start,
            end,
            line,
            column: text[line_start..start].chars().count() + 1,
        };
        let peek = bytes.get(pos + 1).copied();
        let (tok, len) = if c.is_ascii_alphabetic() || c == b'_' {
            let mut end = pos;
            while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
                end += 1;
            }
            let word = &text[pos..end];
            let tok = if c.is_ascii_lowercase() {
                Tok::Ident(word.to_string())
            } else {
                Tok::Var(word.to_string())
            };
            (tok, end - pos)
        } else if c.is_ascii_digit() {
            let mut end = pos;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            let value = text[pos..end].parse::<i64>().map_err(|_| Error::Syntax {
                message: "integer literal out of range".to_string(),
                span: span_of(end),
            })?;
            (Tok::Int(value), end - pos)
        } else if c == b'#' {
            let mut end = pos + 1;
            while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                end += 1;
            }
            if end == pos + 1 {
                return Err(Error::Syntax {
                    message: "expected directive name after '#'".to_string(),
                    span: span_of(end),
                });
            }
            (Tok::Directive(text[pos + 1..end].to_string()), end - pos)
        } else {
            match (c, peek) {
                (b':', Some(b'-')) => (Tok::If, 2),
                (b':', Some(b'+')) => (Tok::CrIf, 2),
                (b':', Some(b'~')) => (Tok::WeakIf, 2),
                (b':', _) => (Tok::Colon, 1),
                (b'.', Some(b'.')) => (Tok::DotDot, 2),
                (b'.', _) => (Tok::Dot, 1),
                (b'!', Some(b'=')) => (Tok::Neq, 2),
                (b'<', Some(b'=')) => (Tok::Le, 2),
                (b'>', Some(b'=')) => (Tok::Ge, 2),
                (b'<', _) => (Tok::Lt, 1),
                (b'>', _) => (Tok::Gt, 1),
                (b'=', _) => (Tok::Eq, 1),
                (b'(', _) => (Tok::LParen, 1),
                (b')', _) => (Tok::RParen, 1),
                (b'{', _) => (Tok::LBrace, 1),
                (b'}', _) => (Tok::RBrace, 1),
                (b'[', _) => (Tok::LBracket, 1),
                (b']', _) => (Tok::RBracket, 1),
                (b',', _) => (Tok::Comma, 1),
                (b';', _) => (Tok::Semi, 1),
                (b'+', _) => (Tok::Plus, 1),
                (b'-', _) => (Tok::Minus, 1),
                (b'*', _) => (Tok::Star, 1),
                _ => {
                    let ch = text[pos..].chars().next().unwrap_or('?');
                    return Err(Error::Syntax {
                        message: alloc::format!("unexpected character '{ch}'"),
                        span: span_of(pos + ch.len_utf8()),
                    });
                }
            }
        };
        pos += len;
        out.push(Token {
            tok,
            span: span_of(pos),
        });
    }
    Ok(out)
}

/// Cursor over a token vector with span-carrying errors.
pub struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    text_len: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(tokens: &'a [Token], text_len: usize) -> Self {
        Cursor {
            tokens,
            pos: 0,
            text_len,
        }
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn peek(&self) -> Option<&'a Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, ahead: usize) -> Option<&'a Tok> {
        self.tokens.get(self.pos + ahead).map(|t| &t.tok)
    }

    pub fn next(&mut self) -> Option<&'a Token> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    /// Span of the current token, or an empty span at end of input.
    pub fn span(&self) -> SourceSpan {
        match self.tokens.get(self.pos) {
            Some(t) => t.span,
            None => {
                let (line, column) = self
                    .tokens
                    .last()
                    .map(|t| (t.span.line, t.span.column + (t.span.end - t.span.start)))
                    .unwrap_or((1, 1));
                SourceSpan {
                    start: self.text_len,
                    end: self.text_len,
                    line,
                    column,
                }
            }
        }
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            message: message.into(),
            span: self.span(),
        })
    }

    pub fn expect(&mut self, tok: &Tok) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            let found = match self.peek() {
                Some(t) => alloc::format!("'{t}'"),
                None => "end of input".to_string(),
            };
            self.error(alloc::format!("expected '{tok}', found {found}"))
        }
    }

    pub fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(s.clone())
            }
            _ => self.error("expected identifier"),
        }
    }
}
