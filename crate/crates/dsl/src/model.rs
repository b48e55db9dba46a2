//! Builds core structures from a resolved document.

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use fincat_core::category::{ArrowId, CategoryBuilder, ObjectId, PresentedCategory};
use fincat_core::finset::{FinSetArrow, FinSetObject};
use fincat_core::functor::{Functor, NatTrans};
use fincat_core::limits::{build_shape, ShapeName};
use fincat_core::{Error, Result};

use crate::ast::*;

#[derive(Debug, Clone)]
pub struct NamedMap {
    pub dom: String,
    pub cod: String,
    pub arrow: FinSetArrow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctorKind {
    Functor,
    Diagram,
}

/// Every declaration of a document, elaborated. Lookups are by declared
/// name.
#[derive(Debug, Clone, Default)]
pub struct Model {
    pub categories: BTreeMap<String, Arc<PresentedCategory>>,
    pub finsets: BTreeMap<String, FinSetObject>,
    pub maps: BTreeMap<String, NamedMap>,
    pub functors: BTreeMap<String, (FunctorKind, Functor)>,
    pub nattrans: BTreeMap<String, NatTrans>,
    shapes: BTreeMap<String, Arc<PresentedCategory>>,
}

fn missing(what: &str, name: &str) -> Error {
    Error::Structural(format!("unresolved {what} `{name}`"))
}

fn build_category(decl: &CategoryDecl) -> Result<PresentedCategory> {
    let mut b = CategoryBuilder::new();
    let mut objects: Vec<(String, ObjectId)> = Vec::new();
    for item in &decl.items {
        if let CategoryItem::Objects { names } = item {
            for n in names {
                objects.push((n.text.clone(), b.add_object(n.text.clone())));
            }
        }
    }
    let mut arrows: BTreeMap<String, ArrowId> = BTreeMap::new();
    for (name, o) in &objects {
        arrows.insert(crate::resolve::identity_name(name), b.add_identity(*o));
    }
    let object = |n: &Name| {
        objects
            .iter()
            .find(|(m, _)| *m == n.text)
            .map(|(_, o)| *o)
            .ok_or_else(|| missing("object", &n.text))
    };
    for item in &decl.items {
        if let CategoryItem::Arrow { name, dom, cod } = item {
            let a = b.add_arrow(name.text.clone(), object(dom)?, object(cod)?);
            arrows.insert(name.text.clone(), a);
        }
    }
    let arrow = |n: &Name| arrows.get(&n.text).copied().ok_or_else(|| missing("arrow", &n.text));
    for item in &decl.items {
        if let CategoryItem::Compose { g, f, h } = item {
            b.set_compose(arrow(g)?, arrow(f)?, arrow(h)?);
        }
    }
    b.fill_identity_composites();
    b.build()
}

impl Model {
    pub fn build(doc: &SpecDocument) -> Result<Model> {
        let mut model = Model::default();
        for decl in &doc.decls {
            match decl {
                Decl::Category(c) => {
                    model
                        .categories
                        .insert(c.name.text.clone(), Arc::new(build_category(c)?));
                }
                Decl::Finset(f) => {
                    let obj = FinSetObject::labeled(f.elements.iter().map(|e| e.text.clone()))?;
                    model.finsets.insert(f.name.text.clone(), obj);
                }
                Decl::Map(m) => {
                    let dom = model.finset(&m.dom.text)?.clone();
                    let cod = model.finset(&m.cod.text)?.clone();
                    let mut table = vec![0; dom.size];
                    for e in &m.entries {
                        let i = dom
                            .element_index(&e.source.text)
                            .ok_or_else(|| missing("element", &e.source.text))?;
                        table[i] = cod
                            .element_index(&e.image.text)
                            .ok_or_else(|| missing("element", &e.image.text))?;
                    }
                    let arrow = FinSetArrow::new(dom, cod, table)?;
                    model.maps.insert(
                        m.name.text.clone(),
                        NamedMap {
                            dom: m.dom.text.clone(),
                            cod: m.cod.text.clone(),
                            arrow,
                        },
                    );
                }
                Decl::Diagram(d) => {
                    let shape = model.shape(&d.shape.text)?;
                    let target = model.category(&d.target.text)?.clone();
                    let f = build_functor(shape, target, &d.bindings)?;
                    model.functors.insert(d.name.text.clone(), (FunctorKind::Diagram, f));
                }
                Decl::Functor(f) => {
                    let source = model.category(&f.source.text)?.clone();
                    let target = model.category(&f.target.text)?.clone();
                    let functor = build_functor(source, target, &f.bindings)?;
                    model
                        .functors
                        .insert(f.name.text.clone(), (FunctorKind::Functor, functor));
                }
                Decl::Nattrans(t) => {
                    let from = model.functor(&t.from.text)?.clone();
                    let to = model.functor(&t.to.text)?.clone();
                    let (src, tgt) = (from.source().clone(), from.target().clone());
                    let mut components = vec![None; src.object_count()];
                    for c in &t.components {
                        let o = src
                            .find_object(&c.source.text)
                            .ok_or_else(|| missing("object", &c.source.text))?;
                        components[o.0] = Some(
                            tgt.find_arrow(&c.image.text)
                                .ok_or_else(|| missing("arrow", &c.image.text))?,
                        );
                    }
                    let components = components
                        .into_iter()
                        .collect::<Option<Vec<_>>>()
                        .ok_or_else(|| Error::Structural(format!("`{}` is missing a component", t.name.text)))?;
                    model
                        .nattrans
                        .insert(t.name.text.clone(), NatTrans::new(from, to, components)?);
                }
            }
        }
        Ok(model)
    }

    pub fn category(&self, name: &str) -> Result<&Arc<PresentedCategory>> {
        self.categories.get(name).ok_or_else(|| missing("category", name))
    }

    pub fn finset(&self, name: &str) -> Result<&FinSetObject> {
        self.finsets.get(name).ok_or_else(|| missing("finite set", name))
    }

    pub fn map(&self, name: &str) -> Result<&NamedMap> {
        self.maps.get(name).ok_or_else(|| missing("map", name))
    }

    pub fn functor(&self, name: &str) -> Result<&Functor> {
        self.functors
            .get(name)
            .map(|(_, f)| f)
            .ok_or_else(|| missing("functor", name))
    }

    pub fn diagram(&self, name: &str) -> Result<&Functor> {
        match self.functors.get(name) {
            Some((FunctorKind::Diagram, f)) => Ok(f),
            _ => Err(missing("diagram", name)),
        }
    }

    pub fn transformation(&self, name: &str) -> Result<&NatTrans> {
        self.nattrans
            .get(name)
            .ok_or_else(|| missing("natural transformation", name))
    }

    /// A declared category, or a built-in shape built once and shared.
    fn shape(&mut self, name: &str) -> Result<Arc<PresentedCategory>> {
        if let Some(c) = self.categories.get(name) {
            return Ok(c.clone());
        }
        if let Some(c) = self.shapes.get(name) {
            return Ok(c.clone());
        }
        let shape = ShapeName::from_str(name).map_err(|_| missing("shape", name))?;
        let cat = Arc::new(build_shape(shape));
        self.shapes.insert(name.to_string(), cat.clone());
        Ok(cat)
    }
}

fn build_functor(
    source: Arc<PresentedCategory>,
    target: Arc<PresentedCategory>,
    bindings: &[Binding],
) -> Result<Functor> {
    let mut objects = vec![None; source.object_count()];
    let mut arrows = vec![None; source.arrow_count()];
    for b in bindings {
        if let Some(o) = source.find_object(&b.source.text) {
            objects[o.0] = Some(
                target
                    .find_object(&b.image.text)
                    .ok_or_else(|| missing("object", &b.image.text))?,
            );
        } else {
            let a = source
                .find_arrow(&b.source.text)
                .ok_or_else(|| missing("arrow", &b.source.text))?;
            arrows[a.0] = Some(
                target
                    .find_arrow(&b.image.text)
                    .ok_or_else(|| missing("arrow", &b.image.text))?,
            );
        }
    }
    let objects = objects
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Structural("an object is unbound".into()))?;
    let mut arrow_map = Vec::with_capacity(arrows.len());
    for a in source.arrows() {
        let image = match arrows[a.0] {
            Some(x) => x,
            None if source.is_identity(a) => target.identity(objects[source.dom(a).0])?,
            None => {
                return Err(Error::Structural(format!(
                    "arrow `{}` is unbound",
                    source.arrow_name(a)
                )))
            }
        };
        arrow_map.push(image);
    }
    Functor::new(source, target, objects, arrow_map)
}
