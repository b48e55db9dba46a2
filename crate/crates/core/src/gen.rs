//! Seeded random lawful categories.
//!
//! Two families: subcategories of finite sets generated by a few random
//! functions and closed under composition, and random finite preorders.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::preorder;
use crate::category::{ArrowId, CategoryBuilder, ObjectId, PresentedCategory};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenLimits {
    pub max_objects: usize,
    pub max_arrows: usize,
    pub max_carrier: usize,
}

impl Default for GenLimits {
    fn default() -> Self {
        GenLimits {
            max_objects: 4,
            max_arrows: 12,
            max_carrier: 3,
        }
    }
}

/// Deterministic stream of random categories.
pub struct CategoryGenerator {
    rng: ChaCha8Rng,
    limits: GenLimits,
}

type Mapping = (usize, usize, Vec<usize>);

impl CategoryGenerator {
    pub fn new(seed: u64, limits: GenLimits) -> Self {
        CategoryGenerator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            limits,
        }
    }

    /// Alternates between the two families, retrying until the arrow limit
    /// is respected.
    pub fn next_category(&mut self) -> PresentedCategory {
        loop {
            let cat = if self.rng.gen_bool(0.5) {
                self.finset_closure()
            } else {
                self.random_preorder()
            };
            if let Some(cat) = cat {
                return cat;
            }
        }
    }

    fn random_preorder(&mut self) -> Option<PresentedCategory> {
        let n = self.rng.gen_range(1..=self.limits.max_objects);
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = i == j || self.rng.gen_bool(0.3);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rel[i][k] && rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        let arrows = rel.iter().flatten().filter(|&&x| x).count();
        if arrows > self.limits.max_arrows {
            return None;
        }
        preorder(n, |i, j| rel[i][j]).ok()
    }

    fn finset_closure(&mut self) -> Option<PresentedCategory> {
        let n = self.rng.gen_range(1..=self.limits.max_objects);
        let sizes: Vec<usize> = (0..n)
            .map(|_| self.rng.gen_range(0..=self.limits.max_carrier))
            .collect();
        let mut arrows: Vec<Mapping> = (0..n).map(|o| (o, o, (0..sizes[o]).collect())).collect();
        let generators = self.rng.gen_range(0..=3);
        for _ in 0..generators {
            let (d, c) = (self.rng.gen_range(0..n), self.rng.gen_range(0..n));
            if sizes[d] > 0 && sizes[c] == 0 {
                continue;
            }
            let table: Vec<usize> = (0..sizes[d]).map(|_| self.rng.gen_range(0..sizes[c])).collect();
            let m = (d, c, table);
            if !arrows.contains(&m) {
                arrows.push(m);
            }
        }
        let mut grew = true;
        while grew {
            grew = false;
            let snapshot = arrows.clone();
            for f in &snapshot {
                for g in &snapshot {
                    if f.1 != g.0 {
                        continue;
                    }
                    let h = (f.0, g.1, f.2.iter().map(|&x| g.2[x]).collect());
                    if !arrows.contains(&h) {
                        arrows.push(h);
                        grew = true;
                        if arrows.len() > self.limits.max_arrows {
                            return None;
                        }
                    }
                }
            }
        }
        closure_category(&sizes, &arrows).ok()
    }
}

fn closure_category(sizes: &[usize], arrows: &[Mapping]) -> Result<PresentedCategory> {
    let mut b = CategoryBuilder::new();
    let objects: Vec<ObjectId> = sizes
        .iter()
        .enumerate()
        .map(|(i, s)| b.add_object(format!("G{i}_{s}")))
        .collect();
    let mut index: HashMap<&Mapping, ArrowId> = HashMap::new();
    let mut ids = Vec::with_capacity(arrows.len());
    for (k, m) in arrows.iter().enumerate() {
        let a = if k < sizes.len() {
            b.add_identity(objects[k])
        } else {
            b.add_arrow(format!("g{k}"), objects[m.0], objects[m.1])
        };
        index.insert(m, a);
        ids.push(a);
    }
    for (fi, f) in arrows.iter().enumerate() {
        for (gi, g) in arrows.iter().enumerate() {
            if f.1 == g.0 {
                let h = (f.0, g.1, f.2.iter().map(|&x| g.2[x]).collect());
                b.set_compose(ids[gi], ids[fi], index[&h]);
            }
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;

    #[test]
    fn generated_categories_are_lawful_and_reproducible() {
        let mut a = CategoryGenerator::new(7, GenLimits::default());
        let mut b = CategoryGenerator::new(7, GenLimits::default());
        for _ in 0..50 {
            let (x, y) = (a.next_category(), b.next_category());
            assert!(validate_category(&x).ok);
            assert!(x.object_count() <= 4 && x.arrow_count() <= 12);
            assert_eq!(x, y);
        }
    }
}
