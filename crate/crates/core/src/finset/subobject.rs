use serde::Serialize;

use super::exponential::{fs_exponential_with, ExponentialBundle};
use super::limits::fs_pullback;
use super::{encode_mapping, FinSetArrow, FinSetObject};
use crate::config::Config;
use crate::error::{Error, Result};

pub const FALSE: usize = 0;
pub const TRUE: usize = 1;

/// The subobject classifier `Ω = {false, true}` with `true : 1 → Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Omega {
    pub object: FinSetObject,
    pub true_arrow: FinSetArrow,
}

impl Omega {
    pub fn false_arrow(&self) -> FinSetArrow {
        FinSetArrow {
            dom: FinSetObject::terminal(),
            cod: self.object.clone(),
            table: vec![FALSE],
        }
    }
}

pub fn fs_subobject_classifier() -> Omega {
    let object = FinSetObject::labeled(["false", "true"]).expect("distinct labels");
    Omega {
        true_arrow: FinSetArrow {
            dom: FinSetObject::terminal(),
            cod: object.clone(),
            table: vec![TRUE],
        },
        object,
    }
}

/// A subobject in canonical form: the sorted, duplicate-free members of
/// the ambient carrier. Two subobjects are equal iff they have the same
/// ambient and members, which is exactly equivalence of monomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subobject {
    ambient: FinSetObject,
    members: Vec<usize>,
}

impl Subobject {
    pub fn new(ambient: FinSetObject, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&bad) = members.iter().find(|&&m| m >= ambient.size) {
            return Err(Error::contract(format!(
                "member {bad} is outside an ambient of size {}",
                ambient.size
            )));
        }
        Ok(Subobject { ambient, members })
    }

    /// Normalizes a monomorphism to its image.
    pub fn from_mono(m: &FinSetArrow) -> Result<Self> {
        if !m.is_injective() {
            return Err(Error::contract("a subobject must be given by an injective arrow"));
        }
        Ok(Subobject {
            ambient: m.cod.clone(),
            members: m.image(),
        })
    }

    pub fn empty(ambient: &FinSetObject) -> Self {
        Subobject {
            ambient: ambient.clone(),
            members: Vec::new(),
        }
    }

    pub fn full(ambient: &FinSetObject) -> Self {
        Subobject {
            ambient: ambient.clone(),
            members: (0..ambient.size).collect(),
        }
    }

    /// Subobject whose members are the set bits of `mask`.
    pub fn from_mask(ambient: &FinSetObject, mask: u64) -> Self {
        Subobject {
            ambient: ambient.clone(),
            members: (0..ambient.size).filter(|&i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn ambient(&self) -> &FinSetObject {
        &self.ambient
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// The canonical monomorphism `S ↪ A`.
    pub fn inclusion(&self) -> FinSetArrow {
        FinSetArrow {
            dom: FinSetObject::new(self.members.len()),
            cod: self.ambient.clone(),
            table: self.members.clone(),
        }
    }
}

/// `χ_S : A → Ω`, sending members to true and everything else to false.
pub fn fs_characteristic(s: &Subobject) -> FinSetArrow {
    let omega = fs_subobject_classifier();
    FinSetArrow {
        dom: s.ambient.clone(),
        cod: omega.object,
        table: (0..s.ambient.size)
            .map(|x| if s.contains(x) { TRUE } else { FALSE })
            .collect(),
    }
}

/// Whether the square `f∘p1 = g∘p2` commutes and `(P; p1, p2)` is a
/// pullback of `f` and `g`: the comparison map into the canonical pullback
/// must be a bijection.
pub fn fs_is_pullback(p1: &FinSetArrow, p2: &FinSetArrow, f: &FinSetArrow, g: &FinSetArrow) -> Result<bool> {
    if p1.dom.size != p2.dom.size || p1.cod.size != f.dom.size || p2.cod.size != g.dom.size {
        return Err(Error::contract("square is not well typed"));
    }
    if f.after(p1)? != g.after(p2)? {
        return Ok(false);
    }
    let canonical = fs_pullback(f, g)?;
    let mut hit = vec![false; canonical.object.size];
    let pairs: Vec<(usize, usize)> = canonical
        .p1
        .table
        .iter()
        .copied()
        .zip(canonical.p2.table.iter().copied())
        .collect();
    for k in 0..p1.dom.size {
        let idx = pairs
            .binary_search(&(p1.apply(k), p2.apply(k)))
            .expect("commuting square lands in the pullback");
        if std::mem::replace(&mut hit[idx], true) {
            return Ok(false);
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

/// `f⁻¹(S)`, computed as the pullback of the inclusion of `S` along `f`.
pub fn fs_inverse_image(f: &FinSetArrow, s: &Subobject) -> Result<Subobject> {
    if f.cod.size != s.ambient.size {
        return Err(Error::contract("subobject ambient differs from the arrow's codomain"));
    }
    let pb = fs_pullback(f, &s.inclusion())?;
    let mut sub = Subobject::from_mono(&pb.p1)?;
    sub.ambient = f.dom.clone();
    Ok(sub)
}

/// The lattice `Sub(A)` with operations computed on canonical subobjects.
/// Implication is found by searching for the largest `U` with `S ∧ U ≤ T`.
#[derive(Debug, Clone)]
pub struct SubobjectAlgebra {
    ambient: FinSetObject,
}

pub fn sub_algebra(a: &FinSetObject) -> Result<SubobjectAlgebra> {
    SubobjectAlgebra::with_budget(a, Config::default().max_carrier)
}

impl SubobjectAlgebra {
    pub fn with_budget(a: &FinSetObject, max_carrier: usize) -> Result<Self> {
        let needed = 1u128.checked_shl(a.size as u32).unwrap_or(u128::MAX);
        if a.size >= 64 || needed > max_carrier as u128 {
            return Err(Error::Capacity {
                what: "subobject lattice",
                needed,
                budget: max_carrier as u128,
            });
        }
        Ok(SubobjectAlgebra { ambient: a.clone() })
    }

    pub fn ambient(&self) -> &FinSetObject {
        &self.ambient
    }

    /// All `2^|A|` subobjects, in bitmask order.
    pub fn elements(&self) -> Vec<Subobject> {
        (0..1u64 << self.ambient.size)
            .map(|mask| Subobject::from_mask(&self.ambient, mask))
            .collect()
    }

    pub fn bottom(&self) -> Subobject {
        Subobject::empty(&self.ambient)
    }

    pub fn top(&self) -> Subobject {
        Subobject::full(&self.ambient)
    }

    fn check(&self, s: &Subobject) -> Result<()> {
        if s.ambient.size != self.ambient.size {
            return Err(Error::contract("subobject belongs to a different ambient"));
        }
        Ok(())
    }

    pub fn leq(&self, s: &Subobject, t: &Subobject) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        Ok(s.members.iter().all(|&x| t.contains(x)))
    }

    pub fn meet(&self, s: &Subobject, t: &Subobject) -> Result<Subobject> {
        self.check(s)?;
        self.check(t)?;
        let members = s.members.iter().copied().filter(|&x| t.contains(x)).collect();
        Ok(Subobject {
            ambient: self.ambient.clone(),
            members,
        })
    }

    pub fn join(&self, s: &Subobject, t: &Subobject) -> Result<Subobject> {
        self.check(s)?;
        self.check(t)?;
        let mut members: Vec<usize> = s.members.iter().chain(&t.members).copied().collect();
        members.sort_unstable();
        members.dedup();
        Ok(Subobject {
            ambient: self.ambient.clone(),
            members,
        })
    }

    /// The largest `U` with `S ∧ U ≤ T`, by exhaustive search.
    pub fn implies(&self, s: &Subobject, t: &Subobject) -> Result<Subobject> {
        self.check(s)?;
        self.check(t)?;
        let mut qualifying = Vec::new();
        for u in self.elements() {
            if self.leq(&self.meet(s, &u)?, t)? {
                qualifying.push(u);
            }
        }
        for candidate in &qualifying {
            let mut greatest = true;
            for other in &qualifying {
                if !self.leq(other, candidate)? {
                    greatest = false;
                    break;
                }
            }
            if greatest {
                return Ok(candidate.clone());
            }
        }
        Err(Error::contract(
            "no largest subobject satisfies the implication condition",
        ))
    }

    /// `¬S = S ⇒ 0`.
    pub fn complement(&self, s: &Subobject) -> Result<Subobject> {
        self.implies(s, &self.bottom())
    }
}

/// `P(A) = Ω^A` with membership `∈_A = ev : A × P(A) → Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerObject {
    pub object: FinSetObject,
    pub membership: FinSetArrow,
    #[serde(skip)]
    pub bundle: ExponentialBundle,
}

impl PowerObject {
    /// The point `⌜χ_S⌝ : 1 → P(A)`.
    pub fn point_of(&self, s: &Subobject) -> Result<FinSetArrow> {
        if s.ambient.size != self.bundle.base.size {
            return Err(Error::contract("subobject belongs to a different ambient"));
        }
        let chi = fs_characteristic(s);
        Ok(FinSetArrow {
            dom: FinSetObject::terminal(),
            cod: self.object.clone(),
            table: vec![encode_mapping(&chi.table, 2)],
        })
    }

    /// The subobject named by element `k` of `P(A)`.
    pub fn subobject_at(&self, k: usize) -> Subobject {
        let chi = self.bundle.decode(k);
        Subobject {
            ambient: self.bundle.base.clone(),
            members: (0..chi.dom.size).filter(|&x| chi.apply(x) == TRUE).collect(),
        }
    }

    pub fn member(&self, a: usize, k: usize) -> bool {
        self.membership.apply(self.bundle.product.encode(a, k)) == TRUE
    }
}

pub fn fs_power_object(a: &FinSetObject) -> Result<PowerObject> {
    fs_power_object_with(a, Config::default().max_carrier)
}

pub fn fs_power_object_with(a: &FinSetObject, max_carrier: usize) -> Result<PowerObject> {
    let omega = fs_subobject_classifier();
    let bundle = fs_exponential_with(a, &omega.object, max_carrier)?;
    Ok(PowerObject {
        object: bundle.exp_object.clone(),
        membership: bundle.ev.clone(),
        bundle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn obj(n: usize) -> FinSetObject {
        FinSetObject::new(n)
    }

    #[test]
    fn classifier_shape() {
        let omega = fs_subobject_classifier();
        assert_eq!(omega.object.size, 2);
        assert_eq!(omega.true_arrow.table, vec![1]);
        assert_eq!(omega.object.element_name(1), "true");
        for n in 0..=4 {
            assert_eq!(obj(n).arrows_to(&omega.object).count(), 1 << n);
        }
    }

    #[test]
    fn characteristic_examples() {
        let a = obj(3);
        assert_eq!(fs_characteristic(&Subobject::full(&a)).table, vec![1, 1, 1]);
        let false_arrow = fs_characteristic(&Subobject::empty(&FinSetObject::terminal()));
        assert_eq!(false_arrow, fs_subobject_classifier().false_arrow());
        let s = Subobject::new(obj(2), vec![0]).unwrap();
        assert_eq!(fs_characteristic(&s).table, vec![1, 0]);
    }

    #[test]
    fn characteristic_is_the_unique_pullback() {
        let omega = fs_subobject_classifier();
        let a = obj(2);
        let s = Subobject::new(a.clone(), vec![0]).unwrap();
        let incl = s.inclusion();
        let bang = FinSetArrow::to_terminal(&incl.dom);
        let winners: Vec<FinSetArrow> = a
            .arrows_to(&omega.object)
            .filter(|chi| fs_is_pullback(&incl, &bang, chi, &omega.true_arrow).unwrap())
            .collect();
        assert_eq!(winners, vec![fs_characteristic(&s)]);
    }

    #[test]
    fn subobject_canonical_form() {
        let s = Subobject::new(obj(4), vec![3, 1, 3]).unwrap();
        assert_eq!(s.members(), &[1, 3]);
        assert!(Subobject::new(obj(2), vec![2]).is_err());
        let mono = FinSetArrow::new(obj(2), obj(4), vec![3, 1]).unwrap();
        assert_eq!(Subobject::from_mono(&mono).unwrap(), s);
        let not_mono = FinSetArrow::new(obj(2), obj(4), vec![1, 1]).unwrap();
        assert!(Subobject::from_mono(&not_mono).is_err());
    }

    #[test]
    fn inverse_image_examples() {
        let f = FinSetArrow::new(obj(3), obj(2), vec![0, 1, 1]).unwrap();
        let s = Subobject::new(obj(2), vec![1]).unwrap();
        assert_eq!(fs_inverse_image(&f, &s).unwrap().members(), &[1, 2]);
        let id = FinSetArrow::identity(&obj(3));
        let t = Subobject::new(obj(3), vec![0, 2]).unwrap();
        assert_eq!(fs_inverse_image(&id, &t).unwrap(), t);
        assert_eq!(
            fs_inverse_image(&f, &Subobject::full(&obj(2))).unwrap(),
            Subobject::full(&obj(3))
        );
        assert!(fs_inverse_image(&f, &t).is_err());
    }

    #[test]
    fn implication_examples() {
        let alg = sub_algebra(&obj(2)).unwrap();
        let s = Subobject::new(obj(2), vec![0]).unwrap();
        let t = Subobject::new(obj(2), vec![1]).unwrap();
        assert_eq!(alg.implies(&s, &s).unwrap(), alg.top());
        assert_eq!(alg.implies(&s, &t).unwrap(), t);
        assert_eq!(alg.complement(&s).unwrap(), t);
        assert!(alg.meet(&s, &Subobject::full(&obj(3))).is_err());
    }

    #[test]
    fn power_object_points() {
        assert_eq!(fs_power_object(&obj(0)).unwrap().object.size, 1);
        let p = fs_power_object(&obj(2)).unwrap();
        assert_eq!(p.object.size, 4);
        let alg = sub_algebra(&obj(2)).unwrap();
        let mut seen: Vec<usize> = alg.elements().iter().map(|s| p.point_of(s).unwrap().table[0]).collect();
        seen.sort_unstable();
        assert_eq!(seen, vec![0, 1, 2, 3]);
        for s in alg.elements() {
            let k = p.point_of(&s).unwrap().table[0];
            assert_eq!(p.subobject_at(k), s);
        }
    }

    #[test]
    fn membership_is_not_monic() {
        let p = fs_power_object(&obj(2)).unwrap();
        assert_eq!(p.membership.dom.size, 8);
        assert_eq!(p.membership.cod.size, 2);
        assert!(!p.membership.is_injective());
        assert!(p.member(1, p.point_of(&Subobject::full(&obj(2))).unwrap().table[0]));
        assert!(!p.member(0, p.point_of(&Subobject::empty(&obj(2))).unwrap().table[0]));
        assert!(fs_power_object(&obj(0)).unwrap().membership.is_injective());
    }

    #[test]
    fn power_object_budget() {
        assert!(matches!(fs_power_object(&obj(20)), Err(Error::Capacity { .. })));
        assert!(matches!(sub_algebra(&obj(13)), Err(Error::Capacity { .. })));
    }
}
