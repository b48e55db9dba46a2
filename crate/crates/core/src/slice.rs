//! Slice categories `C/X`, arrow categories `C(→)`, and the functors and
//! fiber views relating them.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::category::{ArrowId, CategoryBuilder, ObjectId, PresentedCategory};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::finset::{FinSetArrow, FinSetObject};
use crate::functor::Functor;

/// `C/X` with provenance back to the base category.
#[derive(Debug, Clone)]
pub struct Slice {
    pub category: Arc<PresentedCategory>,
    pub base: ObjectId,
    /// Slice object `i` is the base arrow `objects[i]` into `X`.
    pub objects: Vec<ArrowId>,
    /// Slice arrow `k` is the triangle with underlying base arrow
    /// `arrows[k]`.
    pub arrows: Vec<ArrowId>,
}

impl Slice {
    pub fn object_of(&self, phi: ArrowId) -> Option<ObjectId> {
        self.objects.iter().position(|&a| a == phi).map(ObjectId)
    }
}

/// `C(→)` with provenance. Object `i` is the base arrow `i`.
#[derive(Debug, Clone)]
pub struct ArrowCategory {
    pub category: Arc<PresentedCategory>,
    /// Square `k` is the pair `(u, f)` with `ψ ∘ f = u ∘ φ`.
    pub squares: Vec<(ArrowId, ArrowId)>,
}

fn capacity(what: &'static str, needed: usize, config: &Config) -> Result<()> {
    if needed > config.max_arrows {
        return Err(Error::Capacity {
            what,
            needed: needed as u128,
            budget: config.max_arrows as u128,
        });
    }
    Ok(())
}

pub fn slice_category(cat: &PresentedCategory, x: ObjectId) -> Result<Slice> {
    slice_category_with(cat, x, &Config::default())
}

pub fn slice_category_with(cat: &PresentedCategory, x: ObjectId, config: &Config) -> Result<Slice> {
    cat.check_object(x)?;
    let objects: Vec<ArrowId> = cat.objects().flat_map(|o| cat.hom(o, x).iter().copied()).collect();
    capacity("slice objects", objects.len(), config)?;

    let mut triangles: Vec<(usize, usize, ArrowId)> = Vec::new();
    for (i, &phi) in objects.iter().enumerate() {
        for (j, &psi) in objects.iter().enumerate() {
            for &f in cat.hom(cat.dom(phi), cat.dom(psi)) {
                if cat.compose(psi, f)? == phi {
                    triangles.push((i, j, f));
                }
            }
        }
        capacity("slice arrows", triangles.len(), config)?;
    }

    let mut b = CategoryBuilder::new();
    let slice_objects: Vec<ObjectId> = objects
        .iter()
        .map(|&phi| b.add_object(format!("{}_over_{}", cat.arrow_name(phi), cat.object_name(x))))
        .collect();
    let mut index: HashMap<(usize, usize, ArrowId), ArrowId> = HashMap::new();
    let mut underlying = Vec::with_capacity(triangles.len());
    for &(i, j, f) in &triangles {
        let id = if i == j && cat.is_identity(f) {
            b.add_identity(slice_objects[i])
        } else {
            b.add_unlabeled_arrow(slice_objects[i], slice_objects[j])
        };
        index.insert((i, j, f), id);
        underlying.push(f);
    }
    for &(j, k, g) in &triangles {
        for &(i, j2, f) in &triangles {
            if j2 == j {
                let gf = cat.compose(g, f)?;
                let h = index[&(i, k, gf)];
                b.set_compose(index[&(j, k, g)], index[&(i, j, f)], h);
            }
        }
    }
    Ok(Slice {
        category: Arc::new(b.build()?),
        base: x,
        objects,
        arrows: underlying,
    })
}

pub fn arrow_category(cat: &PresentedCategory) -> Result<ArrowCategory> {
    arrow_category_with(cat, &Config::default())
}

pub fn arrow_category_with(cat: &PresentedCategory, config: &Config) -> Result<ArrowCategory> {
    capacity("arrow-category objects", cat.arrow_count(), config)?;
    let mut squares: Vec<(ArrowId, ArrowId, ArrowId, ArrowId)> = Vec::new();
    for phi in cat.arrows() {
        for psi in cat.arrows() {
            for &u in cat.hom(cat.cod(phi), cat.cod(psi)) {
                let along = cat.compose(u, phi)?;
                for &f in cat.hom(cat.dom(phi), cat.dom(psi)) {
                    if cat.compose(psi, f)? == along {
                        squares.push((phi, psi, u, f));
                    }
                }
            }
        }
        capacity("arrow-category arrows", squares.len(), config)?;
    }

    let mut b = CategoryBuilder::new();
    let objects: Vec<ObjectId> = cat
        .arrows()
        .map(|a| b.add_object(format!("arr_{}", cat.arrow_name(a))))
        .collect();
    let mut index: HashMap<(ArrowId, ArrowId, ArrowId, ArrowId), ArrowId> = HashMap::new();
    let mut by_dom: HashMap<ArrowId, Vec<usize>> = HashMap::new();
    for (k, &(phi, psi, u, f)) in squares.iter().enumerate() {
        let id = if phi == psi && cat.is_identity(u) && cat.is_identity(f) {
            b.add_identity(objects[phi.0])
        } else {
            b.add_unlabeled_arrow(objects[phi.0], objects[psi.0])
        };
        index.insert((phi, psi, u, f), id);
        by_dom.entry(phi).or_default().push(k);
    }
    for &(phi, psi, u, f) in &squares {
        for &k in by_dom.get(&psi).map_or(&[][..], Vec::as_slice) {
            let (_, chi, v, g) = squares[k];
            let composite = (phi, chi, cat.compose(v, u)?, cat.compose(g, f)?);
            b.set_compose(index[&squares[k]], index[&(phi, psi, u, f)], index[&composite]);
        }
    }
    Ok(ArrowCategory {
        category: Arc::new(b.build()?),
        squares: squares.into_iter().map(|(_, _, u, f)| (u, f)).collect(),
    })
}

/// `C(→) → C`, sending an arrow to its codomain and a square `(u, f)` to `u`.
pub fn codomain_functor(arrows: &ArrowCategory, cat: &Arc<PresentedCategory>) -> Result<Functor> {
    Functor::new(
        arrows.category.clone(),
        cat.clone(),
        cat.arrows().map(|a| cat.cod(a)).collect(),
        arrows.squares.iter().map(|&(u, _)| u).collect(),
    )
}

#[derive(Debug, Clone)]
pub struct Inclusion {
    pub functor: Functor,
    /// Squares between included objects whose base component is not `id_X`,
    /// in index order. Empty exactly when the inclusion is full.
    pub non_full_witnesses: Vec<ArrowId>,
}

impl Inclusion {
    pub fn is_full(&self) -> bool {
        self.non_full_witnesses.is_empty()
    }
}

/// `C/X → C(→)`, sending a triangle `f` to the square `(id_X, f)`.
pub fn inclusion_functor(slice: &Slice, arrows: &ArrowCategory, cat: &PresentedCategory) -> Result<Inclusion> {
    let id_x = cat.identity(slice.base)?;
    let acat = &arrows.category;
    let object_map: Vec<ObjectId> = slice.objects.iter().map(|a| ObjectId(a.0)).collect();
    let mut arrow_map = Vec::with_capacity(slice.arrows.len());
    for (k, &f) in slice.arrows.iter().enumerate() {
        let sa = ArrowId(k);
        let (src, dst) = (
            object_map[slice.category.dom(sa).0],
            object_map[slice.category.cod(sa).0],
        );
        let square = acat
            .hom(src, dst)
            .iter()
            .copied()
            .find(|s| arrows.squares[s.0] == (id_x, f))
            .ok_or_else(|| Error::contract("triangle has no matching square"))?;
        arrow_map.push(square);
    }
    let included: Vec<ObjectId> = object_map.clone();
    let mut non_full_witnesses = Vec::new();
    for s in acat.arrows() {
        if included.contains(&acat.dom(s)) && included.contains(&acat.cod(s)) && arrows.squares[s.0].0 != id_x {
            non_full_witnesses.push(s);
        }
    }
    Ok(Inclusion {
        functor: Functor::new(slice.category.clone(), acat.clone(), object_map, arrow_map)?,
        non_full_witnesses,
    })
}

/// The restriction of `f` to the fiber over one base index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub index: usize,
    /// `φ⁻¹(i)`, ascending; position `k` is element `k` of the fiber arrow's
    /// domain.
    pub domain: Vec<usize>,
    /// `ψ⁻¹(u(i))`, ascending.
    pub codomain: Vec<usize>,
    pub arrow: FinSetArrow,
}

/// Splits a morphism `(u, f)` of `Sets(→)` from `φ : X → I` to `ψ : Y → J`
/// into the maps `f_i : φ⁻¹(i) → ψ⁻¹(u(i))`.
pub fn fiber_decompose(phi: &FinSetArrow, f: &FinSetArrow, psi: &FinSetArrow, u: &FinSetArrow) -> Result<Vec<Fiber>> {
    if f.dom.size != phi.dom.size
        || f.cod.size != psi.dom.size
        || u.dom.size != phi.cod.size
        || u.cod.size != psi.cod.size
    {
        return Err(Error::contract("fiber_decompose: arrows do not form a square"));
    }
    if psi.after(f)?.table != u.after(phi)?.table {
        return Err(Error::contract("fiber_decompose: the square does not commute"));
    }
    let preimage = |g: &FinSetArrow, i: usize| -> Vec<usize> { (0..g.dom.size).filter(|&x| g.apply(x) == i).collect() };
    let mut fibers = Vec::with_capacity(phi.cod.size);
    for i in 0..phi.cod.size {
        let domain = preimage(phi, i);
        let codomain = preimage(psi, u.apply(i));
        let table = domain
            .iter()
            .map(|&x| {
                codomain
                    .binary_search(&f.apply(x))
                    .expect("commuting square keeps fibers")
            })
            .collect();
        let arrow = FinSetArrow::new(
            FinSetObject::new(domain.len()),
            FinSetObject::new(codomain.len()),
            table,
        )?;
        fibers.push(Fiber {
            index: i,
            domain,
            codomain,
            arrow,
        });
    }
    Ok(fibers)
}

/// Rebuilds `f : X → Y` from its fibers.
pub fn reassemble_fibers(fibers: &[Fiber], dom: &FinSetObject, cod: &FinSetObject) -> Result<FinSetArrow> {
    let mut table = vec![usize::MAX; dom.size];
    for fiber in fibers {
        for (k, &x) in fiber.domain.iter().enumerate() {
            table[x] = fiber.codomain[fiber.arrow.apply(k)];
        }
    }
    if table.contains(&usize::MAX) {
        return Err(Error::contract("fibers do not cover the domain"));
    }
    FinSetArrow::new(dom.clone(), cod.clone(), table)
}
