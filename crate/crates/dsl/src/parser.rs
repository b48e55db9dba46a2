//! Recursive-descent parser. Stops at the first error.

use crate::ast::*;
use crate::error::{ErrorCode, Span, SpecError};
use crate::lexer::{tokenize, Token, TokenKind};

pub const DECL_KEYWORDS: [&str; 6] = ["category", "finset", "map", "diagram", "functor", "nattrans"];
pub const ITEM_KEYWORDS: [&str; 3] = ["object", "arrow", "compose"];

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: Span,
}

type PResult<T> = Result<T, SpecError>;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn unexpected(&self, expected: &str) -> SpecError {
        match self.peek() {
            Some(t) => SpecError::new(ErrorCode::E201, t.span, format!("unexpected {}", t.kind.describe())),
            None => SpecError::new(ErrorCode::E202, self.end, "unexpected end of input"),
        }
        .expecting(expected)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, kind: TokenKind) -> PResult<()> {
        if self.eat(&kind) {
            Ok(())
        } else {
            Err(self.unexpected(&kind.describe()))
        }
    }

    fn word(&mut self, what: &str) -> PResult<Name> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Word(w),
                span,
            }) => {
                let name = Name::at(w.clone(), *span);
                self.pos += 1;
                Ok(name)
            }
            _ => Err(self.unexpected(what)),
        }
    }

    fn document(&mut self) -> PResult<SpecDocument> {
        let mut decls = Vec::new();
        while self.peek().is_some() {
            decls.push(self.decl()?);
        }
        Ok(SpecDocument { decls })
    }

    fn decl(&mut self) -> PResult<Decl> {
        let expected = "a declaration (category, finset, map, diagram, functor, nattrans)";
        let kw = self.word(expected)?;
        match kw.text.as_str() {
            "category" => {
                let name = self.word("a category name")?;
                self.expect(TokenKind::LBrace)?;
                let mut items = Vec::new();
                while !self.eat(&TokenKind::RBrace) {
                    items.push(self.category_item()?);
                }
                Ok(Decl::Category(CategoryDecl { name, items }))
            }
            "finset" => {
                let name = self.word("a finite-set name")?;
                self.expect(TokenKind::Equals)?;
                self.expect(TokenKind::LBrace)?;
                let mut elements = Vec::new();
                if !self.eat(&TokenKind::RBrace) {
                    loop {
                        elements.push(self.word("an element name")?);
                        if self.eat(&TokenKind::RBrace) {
                            break;
                        }
                        if !self.eat(&TokenKind::Comma) {
                            return Err(self.unexpected("`,` or `}`"));
                        }
                    }
                }
                Ok(Decl::Finset(FinsetDecl { name, elements }))
            }
            "map" => {
                let (name, dom, cod) = self.signature("a map name", TokenKind::Arrow)?;
                let entries = self.bindings()?;
                Ok(Decl::Map(MapDecl {
                    name,
                    dom,
                    cod,
                    entries,
                }))
            }
            "diagram" => {
                let (name, shape, target) = self.signature("a diagram name", TokenKind::Arrow)?;
                let bindings = self.bindings()?;
                Ok(Decl::Diagram(DiagramDecl {
                    name,
                    shape,
                    target,
                    bindings,
                }))
            }
            "functor" => {
                let (name, source, target) = self.signature("a functor name", TokenKind::Arrow)?;
                let bindings = self.bindings()?;
                Ok(Decl::Functor(FunctorDecl {
                    name,
                    source,
                    target,
                    bindings,
                }))
            }
            "nattrans" => {
                let (name, from, to) = self.signature("a transformation name", TokenKind::DoubleArrow)?;
                let components = self.bindings()?;
                Ok(Decl::Nattrans(NattransDecl {
                    name,
                    from,
                    to,
                    components,
                }))
            }
            other => Err(
                SpecError::new(ErrorCode::E203, kw.span, format!("unknown declaration `{other}`")).expecting(expected),
            ),
        }
    }

    /// `NAME : A <sep> B`
    fn signature(&mut self, what: &str, sep: TokenKind) -> PResult<(Name, Name, Name)> {
        let name = self.word(what)?;
        self.expect(TokenKind::Colon)?;
        let a = self.word("a name")?;
        self.expect(sep)?;
        let b = self.word("a name")?;
        Ok((name, a, b))
    }

    fn bindings(&mut self) -> PResult<Vec<Binding>> {
        self.expect(TokenKind::LBrace)?;
        let mut out = Vec::new();
        while !self.eat(&TokenKind::RBrace) {
            let source = self.word("a binding `x -> y;` or `}`")?;
            self.expect(TokenKind::Arrow)?;
            let image = self.word("a name")?;
            self.expect(TokenKind::Semi)?;
            out.push(Binding { source, image });
        }
        Ok(out)
    }

    fn category_item(&mut self) -> PResult<CategoryItem> {
        let expected = "`object`, `arrow`, `compose` or `}`";
        let kw = self.word(expected)?;
        let item = match kw.text.as_str() {
            "object" => {
                let mut names = vec![self.word("an object name")?];
                while self.eat(&TokenKind::Comma) {
                    names.push(self.word("an object name")?);
                }
                CategoryItem::Objects { names }
            }
            "arrow" => {
                let name = self.word("an arrow name")?;
                self.expect(TokenKind::Colon)?;
                let dom = self.word("an object name")?;
                self.expect(TokenKind::Arrow)?;
                let cod = self.word("an object name")?;
                CategoryItem::Arrow { name, dom, cod }
            }
            "compose" => {
                let g = self.word("an arrow name")?;
                self.expect(TokenKind::Dot)?;
                let f = self.word("an arrow name")?;
                self.expect(TokenKind::Equals)?;
                let h = self.word("an arrow name")?;
                CategoryItem::Compose { g, f, h }
            }
            other => {
                return Err(
                    SpecError::new(ErrorCode::E203, kw.span, format!("unknown item `{other}`")).expecting(expected),
                );
            }
        };
        self.expect(TokenKind::Semi)?;
        Ok(item)
    }
}

fn end_span(text: &str) -> Span {
    let mut span = Span::new(1, 1);
    for c in text.chars() {
        if c == '\n' {
            span = Span::new(span.line + 1, 1);
        } else {
            span.column += 1;
        }
    }
    span
}

/// Lexes and parses without checking references.
pub fn parse_syntax(text: &str) -> Result<SpecDocument, SpecError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: end_span(text),
    };
    p.document()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_object_category() {
        let doc = parse_syntax("category C { object A; }").unwrap();
        assert_eq!(doc.decls.len(), 1);
        let Decl::Category(c) = &doc.decls[0] else { panic!() };
        assert_eq!(
            c.items,
            vec![CategoryItem::Objects {
                names: vec![Name::new("A")]
            }]
        );
    }

    #[test]
    fn every_declaration_kind() {
        let text = "
            category C { object A, B; arrow f : A -> B; compose f . id_A = f; }
            finset S = { a, b }
            finset E = {}
            map m : S -> S { a -> b; b -> a; }
            diagram D : parallel-pair -> C { X -> A; Y -> B; f -> f; g -> f; }
            functor F : C -> C { A -> A; B -> B; f -> f; }
            nattrans eta : F => F { A -> id_A; B -> id_B; }
        ";
        let doc = parse_syntax(text).unwrap();
        let kinds: Vec<&str> = doc.decls.iter().map(Decl::keyword).collect();
        assert_eq!(
            kinds,
            ["category", "finset", "finset", "map", "diagram", "functor", "nattrans"]
        );
    }

    #[test]
    fn errors_carry_position_and_hint() {
        let e = parse_syntax("category C {\n  arrow f A -> B;\n}").unwrap_err();
        assert_eq!(e.code, ErrorCode::E201);
        assert_eq!(e.span, Span::new(2, 11));
        assert_eq!(e.expected.as_deref(), Some("`:`"));

        let e = parse_syntax("category C { object A;").unwrap_err();
        assert_eq!(e.code, ErrorCode::E202);

        let e = parse_syntax("categroy C {}").unwrap_err();
        assert_eq!(e.code, ErrorCode::E203);
    }
}
