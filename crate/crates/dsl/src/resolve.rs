//! Reference resolution: every name used in a document must be declared in
//! it, with the right kind and, for compositions, the right types.

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use fincat_core::limits::{build_shape, ShapeName};

use crate::ast::*;
use crate::error::{ErrorCode, SpecError};

/// Object and arrow names of a category, as seen by the resolver.
#[derive(Debug, Clone)]
pub(crate) struct CategorySymbols {
    pub objects: Vec<String>,
    /// `(name, dom, cod, is_identity)`
    pub arrows: Vec<(String, usize, usize, bool)>,
}

impl CategorySymbols {
    pub fn object(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.0 == name)
    }

    fn builtin(shape: ShapeName) -> Self {
        let cat = build_shape(shape);
        CategorySymbols {
            objects: cat.objects().map(|o| cat.object_name(o)).collect(),
            arrows: cat
                .arrows()
                .map(|a| (cat.arrow_name(a), cat.dom(a).0, cat.cod(a).0, cat.is_identity(a)))
                .collect(),
        }
    }
}

pub(crate) fn identity_name(object: &str) -> String {
    format!("id_{object}")
}

fn err(code: ErrorCode, at: &Name, message: String) -> SpecError {
    SpecError::new(code, at.span, message)
}

#[derive(Default)]
struct Scope<'a> {
    categories: HashMap<&'a str, CategorySymbols>,
    finsets: HashMap<&'a str, &'a FinsetDecl>,
    /// Functors and diagrams by name, as `(source, target)` category names.
    functors: HashMap<&'a str, (&'a str, &'a str)>,
}

fn category_symbols(decl: &CategoryDecl) -> Result<CategorySymbols, SpecError> {
    let mut objects: Vec<&Name> = Vec::new();
    for item in &decl.items {
        if let CategoryItem::Objects { names } = item {
            for n in names {
                if objects.iter().any(|o| o.text == n.text) {
                    return Err(err(
                        ErrorCode::E301,
                        n,
                        format!("object `{}` is declared twice in `{}`", n.text, decl.name.text),
                    ));
                }
                objects.push(n);
            }
        }
    }
    let mut syms = CategorySymbols {
        objects: objects.iter().map(|o| o.text.clone()).collect(),
        arrows: (0..objects.len())
            .map(|i| (identity_name(&objects[i].text), i, i, true))
            .collect(),
    };
    for item in &decl.items {
        if let CategoryItem::Arrow { name, dom, cod } = item {
            if syms.arrow(&name.text).is_some() {
                return Err(err(
                    ErrorCode::E301,
                    name,
                    format!("arrow `{}` is declared twice in `{}`", name.text, decl.name.text),
                ));
            }
            if syms.object(&name.text).is_some() {
                return Err(err(
                    ErrorCode::E311,
                    name,
                    format!("`{}` is both an object and an arrow of `{}`", name.text, decl.name.text),
                ));
            }
            let end = |n: &Name| {
                syms.object(&n.text).ok_or_else(|| {
                    err(
                        ErrorCode::E302,
                        n,
                        format!("unknown object `{}` in `{}`", n.text, decl.name.text),
                    )
                })
            };
            let (d, c) = (end(dom)?, end(cod)?);
            syms.arrows.push((name.text.clone(), d, c, false));
        }
    }
    if let Some(o) = objects.iter().find(|o| syms.arrows.iter().any(|a| a.0 == o.text)) {
        return Err(err(
            ErrorCode::E311,
            o,
            format!("`{}` is both an object and an arrow of `{}`", o.text, decl.name.text),
        ));
    }
    let mut seen = HashSet::new();
    for item in &decl.items {
        if let CategoryItem::Compose { g, f, h } = item {
            let arrow = |n: &Name| {
                syms.arrow(&n.text).ok_or_else(|| {
                    err(
                        ErrorCode::E303,
                        n,
                        format!(
                            "unknown arrow `{}` in `{}` (line {})",
                            n.text, decl.name.text, n.span.line
                        ),
                    )
                })
            };
            let (gi, fi, _) = (arrow(g)?, arrow(f)?, arrow(h)?);
            if syms.arrows[fi].2 != syms.arrows[gi].1 {
                return Err(err(
                    ErrorCode::E310,
                    g,
                    format!(
                        "`{}` . `{}`: the codomain of `{}` is not the domain of `{}`",
                        g.text, f.text, f.text, g.text
                    ),
                ));
            }
            if !seen.insert((gi, fi)) {
                return Err(err(
                    ErrorCode::E309,
                    g,
                    format!("`{} . {}` is composed twice", g.text, f.text),
                ));
            }
        }
    }
    Ok(syms)
}

/// Checks object and arrow bindings of a functor-like block: every object
/// and every non-identity arrow of the source is bound exactly once, to an
/// object or arrow of the target respectively.
fn check_functor_bindings(
    owner: &Name,
    source: &CategorySymbols,
    target: &CategorySymbols,
    bindings: &[Binding],
) -> Result<(), SpecError> {
    let mut bound_objects = vec![false; source.objects.len()];
    let mut bound_arrows = vec![false; source.arrows.len()];
    for b in bindings {
        let slot = if let Some(o) = source.object(&b.source.text) {
            if target.object(&b.image.text).is_none() {
                return Err(err(
                    ErrorCode::E302,
                    &b.image,
                    format!("unknown object `{}` in the target of `{}`", b.image.text, owner.text),
                ));
            }
            &mut bound_objects[o]
        } else if let Some(a) = source.arrow(&b.source.text) {
            if target.arrow(&b.image.text).is_none() {
                return Err(err(
                    ErrorCode::E303,
                    &b.image,
                    format!("unknown arrow `{}` in the target of `{}`", b.image.text, owner.text),
                ));
            }
            &mut bound_arrows[a]
        } else {
            return Err(err(
                ErrorCode::E302,
                &b.source,
                format!(
                    "`{}` is neither an object nor an arrow of the source of `{}`",
                    b.source.text, owner.text
                ),
            ));
        };
        if std::mem::replace(slot, true) {
            return Err(err(
                ErrorCode::E309,
                &b.source,
                format!("`{}` is bound twice in `{}`", b.source.text, owner.text),
            ));
        }
    }
    if let Some(o) = bound_objects.iter().position(|b| !b) {
        return Err(err(
            ErrorCode::E308,
            owner,
            format!("`{}` does not bind object `{}`", owner.text, source.objects[o]),
        ));
    }
    if let Some(a) = (0..source.arrows.len()).find(|&a| !bound_arrows[a] && !source.arrows[a].3) {
        return Err(err(
            ErrorCode::E308,
            owner,
            format!("`{}` does not bind arrow `{}`", owner.text, source.arrows[a].0),
        ));
    }
    Ok(())
}

impl<'a> Scope<'a> {
    fn category(&self, n: &Name) -> Result<&CategorySymbols, SpecError> {
        self.categories
            .get(n.text.as_str())
            .ok_or_else(|| err(ErrorCode::E304, n, format!("unknown category `{}`", n.text)))
    }

    fn finset(&self, n: &Name) -> Result<&'a FinsetDecl, SpecError> {
        self.finsets
            .get(n.text.as_str())
            .copied()
            .ok_or_else(|| err(ErrorCode::E305, n, format!("unknown finite set `{}`", n.text)))
    }

    fn shape(&self, n: &Name) -> Result<CategorySymbols, SpecError> {
        if let Some(c) = self.categories.get(n.text.as_str()) {
            return Ok(c.clone());
        }
        ShapeName::from_str(&n.text)
            .map(CategorySymbols::builtin)
            .map_err(|_| err(ErrorCode::E304, n, format!("unknown shape `{}`", n.text)))
    }
}

/// Resolves every reference, in declaration order. Names may only refer to
/// earlier declarations.
pub fn resolve(doc: &SpecDocument) -> Result<(), SpecError> {
    let mut scope = Scope::default();
    let mut names: HashSet<(&str, &str)> = HashSet::new();
    for decl in &doc.decls {
        let name = decl.name();
        let kind = match decl {
            Decl::Diagram(_) | Decl::Functor(_) => "functor",
            other => other.keyword(),
        };
        if !names.insert((kind, name.text.as_str())) {
            return Err(err(
                ErrorCode::E301,
                name,
                format!("{} `{}` is declared twice", decl.keyword(), name.text),
            ));
        }
        match decl {
            Decl::Category(c) => {
                let syms = category_symbols(c)?;
                scope.categories.insert(&c.name.text, syms);
            }
            Decl::Finset(f) => {
                for (i, e) in f.elements.iter().enumerate() {
                    if f.elements[..i].contains(e) {
                        return Err(err(
                            ErrorCode::E301,
                            e,
                            format!("element `{}` is listed twice in `{}`", e.text, f.name.text),
                        ));
                    }
                }
                scope.finsets.insert(&f.name.text, f);
            }
            Decl::Map(m) => {
                let dom = scope.finset(&m.dom)?;
                let cod = scope.finset(&m.cod)?;
                let mut hit = vec![false; dom.elements.len()];
                for b in &m.entries {
                    let i = dom.elements.iter().position(|e| e == &b.source).ok_or_else(|| {
                        err(
                            ErrorCode::E307,
                            &b.source,
                            format!("`{}` is not an element of `{}`", b.source.text, dom.name.text),
                        )
                    })?;
                    if !cod.elements.contains(&b.image) {
                        return Err(err(
                            ErrorCode::E307,
                            &b.image,
                            format!("`{}` is not an element of `{}`", b.image.text, cod.name.text),
                        ));
                    }
                    if std::mem::replace(&mut hit[i], true) {
                        return Err(err(
                            ErrorCode::E309,
                            &b.source,
                            format!("`{}` is mapped twice by `{}`", b.source.text, m.name.text),
                        ));
                    }
                }
                if let Some(i) = hit.iter().position(|h| !h) {
                    return Err(err(
                        ErrorCode::E308,
                        &m.name,
                        format!(
                            "map `{}` is not total: `{}` has no image",
                            m.name.text, dom.elements[i].text
                        ),
                    ));
                }
            }
            Decl::Diagram(d) => {
                let shape = scope.shape(&d.shape)?;
                let target = scope.category(&d.target)?;
                check_functor_bindings(&d.name, &shape, target, &d.bindings)?;
                scope.functors.insert(&d.name.text, (&d.shape.text, &d.target.text));
            }
            Decl::Functor(f) => {
                let source = scope.category(&f.source)?;
                let target = scope.category(&f.target)?;
                check_functor_bindings(&f.name, source, target, &f.bindings)?;
                scope.functors.insert(&f.name.text, (&f.source.text, &f.target.text));
            }
            Decl::Nattrans(t) => {
                let lookup = |n: &Name| {
                    scope
                        .functors
                        .get(n.text.as_str())
                        .copied()
                        .ok_or_else(|| err(ErrorCode::E306, n, format!("unknown functor `{}`", n.text)))
                };
                let (from, to) = (lookup(&t.from)?, lookup(&t.to)?);
                if from != to {
                    return Err(err(
                        ErrorCode::E312,
                        &t.to,
                        format!("`{}` and `{}` are not parallel", t.from.text, t.to.text),
                    ));
                }
                let source = scope.shape(&Name::at(from.0, t.from.span))?;
                let target = scope.category(&Name::at(from.1, t.from.span))?;
                let mut hit = vec![false; source.objects.len()];
                for b in &t.components {
                    let o = source.object(&b.source.text).ok_or_else(|| {
                        err(
                            ErrorCode::E302,
                            &b.source,
                            format!("unknown object `{}` in the source of `{}`", b.source.text, t.from.text),
                        )
                    })?;
                    if target.arrow(&b.image.text).is_none() {
                        return Err(err(
                            ErrorCode::E303,
                            &b.image,
                            format!("unknown arrow `{}` in `{}`", b.image.text, from.1),
                        ));
                    }
                    if std::mem::replace(&mut hit[o], true) {
                        return Err(err(
                            ErrorCode::E309,
                            &b.source,
                            format!("component at `{}` is given twice", b.source.text),
                        ));
                    }
                }
                if let Some(o) = hit.iter().position(|h| !h) {
                    return Err(err(
                        ErrorCode::E308,
                        &t.name,
                        format!("`{}` has no component at `{}`", t.name.text, source.objects[o]),
                    ));
                }
            }
        }
    }
    Ok(())
}
