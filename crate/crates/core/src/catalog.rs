//! Small named categories used as examples, test fixtures and index shapes.

use std::collections::HashMap;

use crate::category::{ArrowId, CategoryBuilder, ObjectId, PresentedCategory};
use crate::error::{Error, Result};

/// One object, one arrow.
pub fn terminal_category() -> PresentedCategory {
    discrete(1)
}

/// `n` objects and only their identities.
pub fn discrete(n: usize) -> PresentedCategory {
    preorder(n, |i, j| i == j).expect("the diagonal is a preorder")
}

/// The linear order `0 < 1 < … < n−1` as a category. `chain(2)` has three
/// arrows.
pub fn chain(n: usize) -> PresentedCategory {
    preorder(n, |i, j| i <= j).expect("<= is a preorder")
}

/// The thin category with an arrow `i → j` exactly when `rel(i, j)`. The
/// relation must be reflexive and transitive.
pub fn preorder(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<PresentedCategory> {
    let mut b = CategoryBuilder::new();
    let objects: Vec<ObjectId> = (0..n).map(|i| b.add_object(format!("P{i}"))).collect();
    let mut arrow_of: HashMap<(usize, usize), ArrowId> = HashMap::new();
    for i in 0..n {
        if !rel(i, i) {
            return Err(Error::Structural(format!("relation is not reflexive at {i}")));
        }
        for j in 0..n {
            if rel(i, j) {
                let a = if i == j {
                    b.add_identity(objects[i])
                } else {
                    b.add_arrow(format!("p{i}_{j}"), objects[i], objects[j])
                };
                arrow_of.insert((i, j), a);
            }
        }
    }
    for (&(i, j), &f) in &arrow_of {
        for k in 0..n {
            if let Some(&g) = arrow_of.get(&(j, k)) {
                let h = *arrow_of
                    .get(&(i, k))
                    .ok_or_else(|| Error::Structural(format!("relation is not transitive at {i}, {j}, {k}")))?;
                b.set_compose(g, f, h);
            }
        }
    }
    b.build()
}

/// A single object whose endo-arrows form the given monoid. `mul(a, b)` is
/// the index of `a · b`, where `0` must be the unit. Composition `g ∘ f` is
/// `mul(g, f)`.
pub fn monoid(size: usize, mul: impl Fn(usize, usize) -> usize) -> Result<PresentedCategory> {
    if size == 0 {
        return Err(Error::Structural("a monoid needs a unit".into()));
    }
    let mut b = CategoryBuilder::new();
    let o = b.add_object("M");
    let mut arrows = vec![b.add_identity(o)];
    for i in 1..size {
        arrows.push(b.add_arrow(format!("m{i}"), o, o));
    }
    for g in 0..size {
        for f in 0..size {
            let h = mul(g, f);
            if h >= size {
                return Err(Error::Structural(format!("product {g}.{f} = {h} is out of range")));
            }
            b.set_compose(arrows[g], arrows[f], arrows[h]);
        }
    }
    b.build()
}
