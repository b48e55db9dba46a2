//! Subobjects of an object in a presented category: monics into it,
//! preordered by factorization and identified when they factor both ways.

use serde::Serialize;

use crate::category::{is_monic, ArrowId, ObjectId, PresentedCategory};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubobjectPoset {
    pub object: ObjectId,
    /// Least-index monic representing each class, ascending.
    pub representatives: Vec<ArrowId>,
    leq: Vec<Vec<bool>>,
}

/// `m` factors through `n` when some `k` has `n ∘ k = m`.
fn factors_through(cat: &PresentedCategory, m: ArrowId, n: ArrowId) -> Result<bool> {
    for &k in cat.hom(cat.dom(m), cat.dom(n)) {
        if cat.compose(n, k)? == m {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn subobject_poset(cat: &PresentedCategory, a: ObjectId) -> Result<SubobjectPoset> {
    cat.check_object(a)?;
    let mut monics = Vec::new();
    for s in cat.objects() {
        for &m in cat.hom(s, a) {
            if is_monic(cat, m)?.holds {
                monics.push(m);
            }
        }
    }
    monics.sort_unstable();
    let n = monics.len();
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            rel[i][j] = factors_through(cat, monics[i], monics[j])?;
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    let mut members = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = representatives.len();
        representatives.push(monics[i]);
        members.push(i);
        for j in i..n {
            if rel[i][j] && rel[j][i] {
                class_of[j] = c;
            }
        }
    }
    let leq = members
        .iter()
        .map(|&i| members.iter().map(|&j| rel[i][j]).collect())
        .collect();
    Ok(SubobjectPoset {
        object: a,
        representatives,
        leq,
    })
}

impl SubobjectPoset {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    fn greatest(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.len()).filter(|&x| pred(x)).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&x| self.leq(x, m)))
    }

    fn least(&self, pred: impl Fn(usize) -> bool) -> Option<usize> {
        let candidates: Vec<usize> = (0..self.len()).filter(|&x| pred(x)).collect();
        candidates
            .iter()
            .copied()
            .find(|&m| candidates.iter().all(|&x| self.leq(m, x)))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(|_| true)
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(|_| true)
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, i: usize, j: usize) -> Option<usize> {
        self.greatest(|x| self.leq(x, i) && self.leq(x, j))
    }

    pub fn join(&self, i: usize, j: usize) -> Option<usize> {
        self.least(|x| self.leq(i, x) && self.leq(j, x))
    }

    /// The largest `u` with `i ∧ u ≤ j`.
    pub fn implies(&self, i: usize, j: usize) -> Option<usize> {
        self.greatest(|u| self.meet(i, u).is_some_and(|m| self.leq(m, j)))
    }

    /// Some `c` with `i ∧ c = ⊥` and `i ∨ c = ⊤`.
    pub fn complement(&self, i: usize) -> Option<usize> {
        let (bottom, top) = (self.bottom()?, self.top()?);
        (0..self.len()).find(|&c| self.meet(i, c) == Some(bottom) && self.join(i, c) == Some(top))
    }

    pub fn is_boolean(&self) -> bool {
        (0..self.len()).all(|i| self.complement(i).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, terminal_category};
    use crate::finset::{sub_algebra, FinSetObject};
    use crate::fullsub::full_subcategory_of_finset;

    #[test]
    fn finite_sets_match_direct_algebra() {
        let sub = full_subcategory_of_finset(&[0, 1, 2]).unwrap();
        let cat = sub.category();
        for o in cat.objects() {
            let poset = subobject_poset(cat, o).unwrap();
            let algebra = sub_algebra(&FinSetObject::new(sub.size_of(o))).unwrap();
            assert_eq!(poset.len(), algebra.elements().len());
            assert!(poset.is_boolean());
            for i in 0..poset.len() {
                let c = poset.complement(i).unwrap();
                assert_eq!(poset.implies(i, poset.bottom().unwrap()), Some(c));
            }
        }
    }

    #[test]
    fn chain_middle_subobject_has_no_complement() {
        let c = chain(2);
        assert!(subobject_poset(&c, ObjectId(1)).unwrap().is_boolean());
        let c = chain(3);
        let poset = subobject_poset(&c, ObjectId(2)).unwrap();
        assert_eq!(poset.len(), 3);
        assert_eq!(poset.complement(1), None);
        assert_eq!(poset.implies(1, 0), Some(0));
        assert!(!poset.is_boolean());
        let t = terminal_category();
        assert!(subobject_poset(&t, ObjectId(0)).unwrap().is_boolean());
    }
}
