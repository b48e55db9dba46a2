use std::hash::{Hash, Hasher};

use serde::Serialize;

use crate::error::Span;

/// An identifier with its source position. Equality and hashing ignore the
/// position, so documents compare structurally.
#[derive(Debug, Clone, Serialize)]
pub struct Name {
    pub text: String,
    pub span: Span,
}

impl Name {
    pub fn new(text: impl Into<String>) -> Self {
        Name {
            text: text.into(),
            span: Span::default(),
        }
    }

    pub fn at(text: impl Into<String>, span: Span) -> Self {
        Name {
            text: text.into(),
            span,
        }
    }
}

impl PartialEq for Name {
    fn eq(&self, other: &Self) -> bool {
        self.text == other.text
    }
}

impl Eq for Name {}

impl Hash for Name {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.text.hash(state);
    }
}

impl AsRef<str> for Name {
    fn as_ref(&self) -> &str {
        &self.text
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecDocument {
    pub decls: Vec<Decl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Decl {
    Category(CategoryDecl),
    Finset(FinsetDecl),
    Map(MapDecl),
    Diagram(DiagramDecl),
    Functor(FunctorDecl),
    Nattrans(NattransDecl),
}

impl Decl {
    pub fn name(&self) -> &Name {
        match self {
            Decl::Category(d) => &d.name,
            Decl::Finset(d) => &d.name,
            Decl::Map(d) => &d.name,
            Decl::Diagram(d) => &d.name,
            Decl::Functor(d) => &d.name,
            Decl::Nattrans(d) => &d.name,
        }
    }

    pub fn keyword(&self) -> &'static str {
        match self {
            Decl::Category(_) => "category",
            Decl::Finset(_) => "finset",
            Decl::Map(_) => "map",
            Decl::Diagram(_) => "diagram",
            Decl::Functor(_) => "functor",
            Decl::Nattrans(_) => "nattrans",
        }
    }
}

/// `category C { object A, B; arrow f : A -> B; compose g . f = h; }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CategoryDecl {
    pub name: Name,
    pub items: Vec<CategoryItem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "item", rename_all = "kebab-case")]
pub enum CategoryItem {
    Objects { names: Vec<Name> },
    Arrow { name: Name, dom: Name, cod: Name },
    Compose { g: Name, f: Name, h: Name },
}

/// `finset S = { a, b, c }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FinsetDecl {
    pub name: Name,
    pub elements: Vec<Name>,
}

/// `source -> image;` inside a block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Binding {
    pub source: Name,
    pub image: Name,
}

/// `map f : S -> T { a -> x; ... }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapDecl {
    pub name: Name,
    pub dom: Name,
    pub cod: Name,
    pub entries: Vec<Binding>,
}

/// `diagram D : SHAPE -> C { X -> A; f -> u; }`. The shape is a declared
/// category or one of the built-in shape names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagramDecl {
    pub name: Name,
    pub shape: Name,
    pub target: Name,
    pub bindings: Vec<Binding>,
}

/// `functor F : C -> D { A -> X; f -> u; }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FunctorDecl {
    pub name: Name,
    pub source: Name,
    pub target: Name,
    pub bindings: Vec<Binding>,
}

/// `nattrans eta : F => G { A -> u; }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NattransDecl {
    pub name: Name,
    pub from: Name,
    pub to: Name,
    pub components: Vec<Binding>,
}
