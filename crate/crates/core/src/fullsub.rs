//! Full subcategories of finite sets, materialized as presented categories.
//!
//! This is the bridge between the generic solvers, which only see arrow ids
//! and a composition table, and the direct finite-set constructions.

use std::sync::Arc;

use crate::category::{ArrowId, FinSetLayout, ObjectId, PresentedCategory};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::finset::{decode_mapping, encode_mapping, FinSetArrow, FinSetObject};
use crate::functor::Functor;

#[derive(Debug, Clone)]
pub struct FinSetSubcategory {
    category: Arc<PresentedCategory>,
    layout: FinSetLayout,
}

/// One object per listed size and one arrow per total mapping between the
/// carriers, with composition given by composing mappings.
pub fn full_subcategory_of_finset(sizes: &[usize]) -> Result<FinSetSubcategory> {
    full_subcategory_of_finset_with(sizes, &Config::default())
}

pub fn full_subcategory_of_finset_with(sizes: &[usize], config: &Config) -> Result<FinSetSubcategory> {
    let mut labels = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let repeats = sizes[..i].iter().filter(|&&m| m == n).count();
        labels.push(if repeats == 0 {
            format!("S{n}")
        } else {
            format!("S{n}_{repeats}")
        });
    }
    let (category, layout) = PresentedCategory::finset_layout(sizes, labels, config.max_arrows)?;
    Ok(FinSetSubcategory {
        category: Arc::new(category),
        layout,
    })
}

impl FinSetSubcategory {
    pub fn category(&self) -> &Arc<PresentedCategory> {
        &self.category
    }

    pub fn sizes(&self) -> &[usize] {
        &self.layout.sizes
    }

    pub fn size_of(&self, o: ObjectId) -> usize {
        self.layout.sizes[o.0]
    }

    /// First object with the given carrier size.
    pub fn object_of_size(&self, n: usize) -> Option<ObjectId> {
        self.layout.sizes.iter().position(|&m| m == n).map(ObjectId)
    }

    pub fn finset_object(&self, o: ObjectId) -> FinSetObject {
        FinSetObject::new(self.size_of(o))
    }

    pub fn table(&self, a: ArrowId) -> Vec<usize> {
        let cat = &self.category;
        let (d, c) = (cat.dom(a), cat.cod(a));
        decode_mapping(a.0 - self.layout.offset(d, c), self.size_of(d), self.size_of(c))
    }

    pub fn finset_arrow(&self, a: ArrowId) -> FinSetArrow {
        let cat = &self.category;
        FinSetArrow {
            dom: self.finset_object(cat.dom(a)),
            cod: self.finset_object(cat.cod(a)),
            table: self.table(a),
        }
    }

    pub fn arrow_with_table(&self, dom: ObjectId, cod: ObjectId, table: &[usize]) -> Result<ArrowId> {
        self.category.check_object(dom)?;
        self.category.check_object(cod)?;
        let (nd, nc) = (self.size_of(dom), self.size_of(cod));
        if table.len() != nd || table.iter().any(|&t| t >= nc) {
            return Err(Error::contract(format!(
                "table {table:?} is not a mapping {nd} -> {nc}"
            )));
        }
        Ok(ArrowId(self.layout.offset(dom, cod) + encode_mapping(table, nc)))
    }

    /// The arrow of this category with the same table as `f`, between the
    /// first objects of matching sizes.
    pub fn embed(&self, f: &FinSetArrow) -> Result<ArrowId> {
        let missing = |n: usize| Error::contract(format!("no object of size {n} in the subcategory"));
        let dom = self.object_of_size(f.dom.size).ok_or_else(|| missing(f.dom.size))?;
        let cod = self.object_of_size(f.cod.size).ok_or_else(|| missing(f.cod.size))?;
        self.arrow_with_table(dom, cod, &f.table)
    }
}

/// A functor between finite-set subcategories given by its action on
/// mappings. Objects go wherever the images of their identities land.
pub fn lift_functor(
    src: &FinSetSubcategory,
    tgt: &FinSetSubcategory,
    on_arrows: impl Fn(&FinSetArrow) -> Result<FinSetArrow>,
) -> Result<Functor> {
    let cat = src.category();
    let mut object_map = Vec::with_capacity(cat.object_count());
    for o in cat.objects() {
        let image = on_arrows(&FinSetArrow::identity(&src.finset_object(o)))?;
        object_map.push(tgt.embed(&image).map(|a| tgt.category().dom(a))?);
    }
    let mut arrow_map = Vec::with_capacity(cat.arrow_count());
    for a in cat.arrows() {
        let image = on_arrows(&src.finset_arrow(a))?;
        let (d, c) = (object_map[cat.dom(a).0], object_map[cat.cod(a).0]);
        arrow_map.push(tgt.arrow_with_table(d, c, &image.table)?);
    }
    Functor::new(cat.clone(), tgt.category().clone(), object_map, arrow_map)
}
