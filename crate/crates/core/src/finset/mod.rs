//! Direct constructions in the category of finite sets.
//!
//! Elements of a carrier of size `n` are the indices `0..n`. Every
//! construction uses a canonical encoding, and objects unique up to
//! isomorphism come out bit-identical:
//!
//! * pairs `(a, b)` of `A × B` are stored row-major at `a * |B| + b`;
//! * a mapping `m: A → B` is the base-`|B|` number whose most significant
//!   digit is `m(0)`;
//! * quotient classes are numbered by their least member;
//! * subobjects are sorted member lists.

mod exponential;
mod limits;
mod subobject;
mod union_find;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub use exponential::{
    fs_curry, fs_exp_arrow, fs_exponential, fs_exponential_with, fs_name, fs_uncurry, ExponentialBundle,
};
pub use limits::{
    fs_coequalizer, fs_coproduct, fs_equalizer, fs_extremal, fs_product, fs_product_arrow, fs_pullback, fs_pushout,
    Coequalizer, Coproduct, Equalizer, Extremal, Product, Pullback, Pushout,
};
pub use subobject::{
    fs_characteristic, fs_inverse_image, fs_is_pullback, fs_power_object, fs_power_object_with,
    fs_subobject_classifier, sub_algebra, Omega, PowerObject, Subobject, SubobjectAlgebra,
};
pub use union_find::UnionFind;

/// Number of total mappings `a → b`, with `0^0 = 1`. Saturates.
pub fn count_mappings(dom: usize, cod: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..dom {
        acc = acc.saturating_mul(cod as u128);
        if acc == 0 {
            break;
        }
    }
    acc
}

/// Canonical code of a mapping table: `Σ m(i)·|B|^(|A|−1−i)`.
pub fn encode_mapping(table: &[usize], cod: usize) -> usize {
    table.iter().fold(0, |acc, &d| acc * cod + d)
}

/// Inverse of [`encode_mapping`].
pub fn decode_mapping(mut code: usize, dom: usize, cod: usize) -> Vec<usize> {
    let mut table = vec![0; dom];
    if cod == 0 {
        return table;
    }
    for slot in table.iter_mut().rev() {
        *slot = code % cod;
        code /= cod;
    }
    table
}

/// Every mapping table `dom → cod` in code order.
pub fn all_mappings(dom: usize, cod: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = count_mappings(dom, cod) as usize;
    (0..count).map(move |code| decode_mapping(code, dom, cod))
}

/// A finite carrier `{0, …, size−1}` with optional display labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinSetObject {
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FinSetObject {
    pub fn new(size: usize) -> Self {
        FinSetObject { size, labels: None }
    }

    pub fn labeled<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::contract(format!("duplicate element label `{l}`")));
            }
        }
        Ok(FinSetObject {
            size: labels.len(),
            labels: Some(labels),
        })
    }

    pub fn terminal() -> Self {
        Self::new(1)
    }

    pub fn initial() -> Self {
        Self::new(0)
    }

    pub fn element_name(&self, i: usize) -> String {
        match &self.labels {
            Some(l) if i < l.len() => l[i].clone(),
            _ => i.to_string(),
        }
    }

    pub fn element_index(&self, label: &str) -> Option<usize> {
        match &self.labels {
            Some(l) => l.iter().position(|x| x == label),
            None => label.parse().ok().filter(|&i: &usize| i < self.size),
        }
    }

    /// Every arrow `self → cod`, in code order.
    pub fn arrows_to<'a>(&'a self, cod: &'a FinSetObject) -> impl Iterator<Item = FinSetArrow> + 'a {
        all_mappings(self.size, cod.size).map(move |table| FinSetArrow {
            dom: self.clone(),
            cod: cod.clone(),
            table,
        })
    }
}

impl fmt::Display for FinSetObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for i in 0..self.size {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.element_name(i))?;
        }
        write!(f, "}}")
    }
}

/// A total mapping between carriers, given by its table of codomain indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FinSetArrow {
    pub dom: FinSetObject,
    pub cod: FinSetObject,
    pub table: Vec<usize>,
}

impl FinSetArrow {
    pub fn new(dom: FinSetObject, cod: FinSetObject, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size {
            return Err(Error::contract(format!(
                "mapping table has {} entries for a domain of size {}",
                table.len(),
                dom.size
            )));
        }
        if let Some(&bad) = table.iter().find(|&&t| t >= cod.size) {
            return Err(Error::contract(format!(
                "mapping entry {bad} is outside a codomain of size {}",
                cod.size
            )));
        }
        Ok(FinSetArrow { dom, cod, table })
    }

    pub fn identity(obj: &FinSetObject) -> Self {
        FinSetArrow {
            dom: obj.clone(),
            cod: obj.clone(),
            table: (0..obj.size).collect(),
        }
    }

    /// The unique arrow into the terminal object.
    pub fn to_terminal(obj: &FinSetObject) -> Self {
        FinSetArrow {
            dom: obj.clone(),
            cod: FinSetObject::terminal(),
            table: vec![0; obj.size],
        }
    }

    /// The unique arrow out of the initial object.
    pub fn from_initial(obj: &FinSetObject) -> Self {
        FinSetArrow {
            dom: FinSetObject::initial(),
            cod: obj.clone(),
            table: Vec::new(),
        }
    }

    /// The member `1 → cod` selecting `element`.
    pub fn point(cod: &FinSetObject, element: usize) -> Result<Self> {
        Self::new(FinSetObject::terminal(), cod.clone(), vec![element])
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &FinSetArrow) -> Result<FinSetArrow> {
        if f.cod.size != self.dom.size {
            return Err(Error::contract(format!(
                "cannot compose: codomain size {} != domain size {}",
                f.cod.size, self.dom.size
            )));
        }
        Ok(FinSetArrow {
            dom: f.dom.clone(),
            cod: self.cod.clone(),
            table: f.table.iter().map(|&x| self.table[x]).collect(),
        })
    }

    pub fn is_parallel(&self, other: &FinSetArrow) -> bool {
        self.dom.size == other.dom.size && self.cod.size == other.cod.size
    }

    pub fn code(&self) -> usize {
        encode_mapping(&self.table, self.cod.size)
    }

    /// Distinct image elements in ascending order.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.table.clone();
        img.sort_unstable();
        img.dedup();
        img
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.table.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.cod.size
    }
}

/// Every member `1 → a`, in element order.
pub fn fs_members(a: &FinSetObject) -> Vec<FinSetArrow> {
    (0..a.size)
        .map(|i| FinSetArrow {
            dom: FinSetObject::terminal(),
            cod: a.clone(),
            table: vec![i],
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PointClassification {
    pub injective: bool,
    pub surjective: bool,
}

/// Classifies `f` through its action on members: injective when `f∘x = f∘y`
/// forces `x = y`, surjective when every member of the codomain is some
/// `f∘x`.
pub fn fs_point_classify(f: &FinSetArrow) -> PointClassification {
    let images: Vec<FinSetArrow> = fs_members(&f.dom)
        .iter()
        .map(|x| f.after(x).expect("members land in the domain"))
        .collect();
    let injective = images
        .iter()
        .enumerate()
        .all(|(i, fx)| images[i + 1..].iter().all(|fy| fx != fy));
    let surjective = fs_members(&f.cod).iter().all(|y| images.contains(y));
    PointClassification { injective, surjective }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(count_mappings(0, 0), 1);
        assert_eq!(count_mappings(0, 5), 1);
        assert_eq!(count_mappings(3, 0), 0);
        assert_eq!(count_mappings(2, 3), 9);
        assert_eq!(all_mappings(0, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn encoding_is_most_significant_first() {
        assert_eq!(encode_mapping(&[1, 0], 3), 3);
        assert_eq!(decode_mapping(3, 2, 3), vec![1, 0]);
        assert_eq!(decode_mapping(0, 0, 0), Vec::<usize>::new());
    }

    proptest! {
        #[test]
        fn encode_decode_roundtrip(dom in 0usize..5, cod in 1usize..5, seed in any::<u64>()) {
            let count = count_mappings(dom, cod) as u64;
            let code = (seed % count) as usize;
            let table = decode_mapping(code, dom, cod);
            prop_assert!(table.iter().all(|&t| t < cod));
            prop_assert_eq!(encode_mapping(&table, cod), code);
        }
    }

    #[test]
    fn arrow_validation() {
        let two = FinSetObject::new(2);
        assert!(FinSetArrow::new(two.clone(), two.clone(), vec![0, 2]).is_err());
        assert!(FinSetArrow::new(two.clone(), two.clone(), vec![0]).is_err());
        let empty = FinSetArrow::from_initial(&two);
        assert!(empty.table.is_empty());
        assert!(FinSetObject::labeled(["a", "a"]).is_err());
    }

    #[test]
    fn members() {
        assert_eq!(fs_members(&FinSetObject::terminal()).len(), 1);
        assert!(fs_members(&FinSetObject::initial()).is_empty());
        let three = fs_members(&FinSetObject::new(3));
        assert_eq!(three.len(), 3);
        for (i, m) in three.iter().enumerate() {
            assert_eq!(m.table, vec![i]);
        }
    }

    #[test]
    fn point_classification() {
        let two = FinSetObject::new(2);
        let id = FinSetArrow::identity(&two);
        assert_eq!(
            fs_point_classify(&id),
            PointClassification {
                injective: true,
                surjective: true
            }
        );
        let constant = FinSetArrow::new(two.clone(), two, vec![1, 1]).unwrap();
        assert_eq!(
            fs_point_classify(&constant),
            PointClassification {
                injective: false,
                surjective: false
            }
        );
    }

    #[test]
    fn point_classification_matches_tables() {
        for a in 0..=3 {
            for b in 0..=3 {
                let (x, y) = (FinSetObject::new(a), FinSetObject::new(b));
                for f in x.arrows_to(&y) {
                    let pc = fs_point_classify(&f);
                    assert_eq!(pc.injective, f.is_injective(), "{f:?}");
                    assert_eq!(pc.surjective, f.is_surjective(), "{f:?}");
                }
            }
        }
    }
}
