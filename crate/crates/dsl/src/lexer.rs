//! Tokens: words, punctuation, and the operators `->` and `=>`. Comments run
//! from `#` or `//` to the end of the line.

use crate::error::{ErrorCode, Span, SpecError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Word(String),
    LBrace,
    RBrace,
    Semi,
    Comma,
    Colon,
    Dot,
    Equals,
    Arrow,
    DoubleArrow,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Word(w) => format!("`{w}`"),
            TokenKind::LBrace => "`{`".into(),
            TokenKind::RBrace => "`}`".into(),
            TokenKind::Semi => "`;`".into(),
            TokenKind::Comma => "`,`".into(),
            TokenKind::Colon => "`:`".into(),
            TokenKind::Dot => "`.`".into(),
            TokenKind::Equals => "`=`".into(),
            TokenKind::Arrow => "`->`".into(),
            TokenKind::DoubleArrow => "`=>`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
}

fn is_word_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

fn is_word_char(c: char) -> bool {
    is_word_start(c) || c == '\''
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: u32,
    column: u32,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn span(&self) -> Span {
        Span::new(self.line, self.column)
    }
}

pub fn tokenize(text: &str) -> Result<Vec<Token>, SpecError> {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut out = Vec::new();
    while let Some(c) = cur.peek() {
        let span = cur.span();
        if c.is_whitespace() {
            cur.bump();
            continue;
        }
        if c == '#' {
            while cur.peek().is_some_and(|c| c != '\n') {
                cur.bump();
            }
            continue;
        }
        cur.bump();
        let kind = match c {
            '{' => TokenKind::LBrace,
            '}' => TokenKind::RBrace,
            ';' => TokenKind::Semi,
            ',' => TokenKind::Comma,
            ':' => TokenKind::Colon,
            '.' => TokenKind::Dot,
            '=' if cur.peek() == Some('>') => {
                cur.bump();
                TokenKind::DoubleArrow
            }
            '=' => TokenKind::Equals,
            '-' if cur.peek() == Some('>') => {
                cur.bump();
                TokenKind::Arrow
            }
            '-' => {
                return Err(SpecError::new(ErrorCode::E103, span, "lone `-`").expecting("`->`"));
            }
            '/' if cur.peek() == Some('/') => {
                while cur.peek().is_some_and(|c| c != '\n') {
                    cur.bump();
                }
                continue;
            }
            '/' => {
                return Err(SpecError::new(ErrorCode::E103, span, "lone `/`").expecting("`//` comment"));
            }
            c if is_word_start(c) => {
                let mut word = String::from(c);
                loop {
                    match cur.peek() {
                        Some(n) if is_word_char(n) => {
                            word.push(n);
                            cur.bump();
                        }
                        // A hyphen continues a word only when a word
                        // character follows; `a->b` lexes as an arrow.
                        Some('-') => {
                            let mut ahead = cur.chars.clone();
                            ahead.next();
                            match ahead.peek() {
                                Some(&n) if is_word_start(n) => {
                                    word.push('-');
                                    cur.bump();
                                }
                                _ => break,
                            }
                        }
                        _ => break,
                    }
                }
                TokenKind::Word(word)
            }
            other => {
                return Err(SpecError::new(
                    ErrorCode::E101,
                    span,
                    format!("unexpected character {other:?}"),
                ));
            }
        };
        out.push(Token { kind, span });
    }
    Ok(out)
}
