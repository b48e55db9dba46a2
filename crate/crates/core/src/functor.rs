//! Functors between presented categories and natural transformations
//! between parallel functors.

use std::sync::Arc;

use crate::category::{ArrowId, ObjectId, PresentedCategory};
use crate::error::{Error, Result};
use crate::fullsub::{full_subcategory_of_finset_with, FinSetSubcategory};
use crate::report::{Law, ValidationReport, ViolationSink};
use crate::Config;

/// Object and arrow assignments between two categories. The functor laws
/// are not assumed; check them with [`validate_functor`].
#[derive(Debug, Clone)]
pub struct Functor {
    source: Arc<PresentedCategory>,
    target: Arc<PresentedCategory>,
    object_map: Vec<ObjectId>,
    arrow_map: Vec<ArrowId>,
}

pub(crate) fn same_category(a: &Arc<PresentedCategory>, b: &Arc<PresentedCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Functor {
    /// Fails when a map has the wrong length or points outside the target.
    pub fn new(
        source: Arc<PresentedCategory>,
        target: Arc<PresentedCategory>,
        object_map: Vec<ObjectId>,
        arrow_map: Vec<ArrowId>,
    ) -> Result<Self> {
        if object_map.len() != source.object_count() || arrow_map.len() != source.arrow_count() {
            return Err(Error::Structural(format!(
                "functor maps {} objects and {} arrows but the source has {} and {}",
                object_map.len(),
                arrow_map.len(),
                source.object_count(),
                source.arrow_count()
            )));
        }
        for &o in &object_map {
            target.check_object(o)?;
        }
        for &a in &arrow_map {
            target.check_arrow(a)?;
        }
        Ok(Functor {
            source,
            target,
            object_map,
            arrow_map,
        })
    }

    pub fn identity(cat: Arc<PresentedCategory>) -> Self {
        Functor {
            object_map: cat.objects().collect(),
            arrow_map: cat.arrows().collect(),
            source: cat.clone(),
            target: cat,
        }
    }

    /// Every object to `d`, every arrow to `id_d`.
    pub fn constant(source: Arc<PresentedCategory>, target: Arc<PresentedCategory>, d: ObjectId) -> Result<Self> {
        let id = target.identity(d)?;
        Ok(Functor {
            object_map: vec![d; source.object_count()],
            arrow_map: vec![id; source.arrow_count()],
            source,
            target,
        })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Result<Functor> {
        if !same_category(&first.target, &self.source) {
            return Err(Error::contract("functor composition: target and source differ"));
        }
        Ok(Functor {
            source: first.source.clone(),
            target: self.target.clone(),
            object_map: first.object_map.iter().map(|&o| self.object_map[o.0]).collect(),
            arrow_map: first.arrow_map.iter().map(|&a| self.arrow_map[a.0]).collect(),
        })
    }

    pub fn source(&self) -> &Arc<PresentedCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedCategory> {
        &self.target
    }

    pub fn object_map(&self) -> &[ObjectId] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[ArrowId] {
        &self.arrow_map
    }

    pub fn obj(&self, o: ObjectId) -> ObjectId {
        self.object_map[o.0]
    }

    pub fn arr(&self, a: ArrowId) -> ArrowId {
        self.arrow_map[a.0]
    }

    /// The same assignments viewed between the opposite categories.
    pub fn opposite(&self) -> Functor {
        Functor {
            source: Arc::new(self.source.opposite()),
            target: Arc::new(self.target.opposite()),
            object_map: self.object_map.clone(),
            arrow_map: self.arrow_map.clone(),
        }
    }

    /// Same assignments into a different (but compatible) target.
    pub fn with_target(&self, target: Arc<PresentedCategory>) -> Result<Functor> {
        Functor::new(
            self.source.clone(),
            target,
            self.object_map.clone(),
            self.arrow_map.clone(),
        )
    }

    pub fn with_source(&self, source: Arc<PresentedCategory>) -> Result<Functor> {
        Functor::new(
            source,
            self.target.clone(),
            self.object_map.clone(),
            self.arrow_map.clone(),
        )
    }
}

pub fn validate_functor(functor: &Functor) -> ValidationReport {
    let (src, tgt) = (&*functor.source, &*functor.target);
    let mut sink = ViolationSink::default();

    for o in src.objects() {
        let (Some(id), Some(target_id)) = (src.designated_identity(o), tgt.designated_identity(functor.obj(o))) else {
            continue;
        };
        if functor.arr(id) != target_id {
            sink.push(
                Law::FunctorIdentity,
                vec![o],
                vec![id],
                format!(
                    "F({}) = {} is not the identity of {}",
                    src.arrow_name(id),
                    tgt.arrow_name(functor.arr(id)),
                    tgt.object_name(functor.obj(o))
                ),
            );
        }
    }

    for f in src.arrows() {
        let image = functor.arr(f);
        if tgt.dom(image) != functor.obj(src.dom(f)) || tgt.cod(image) != functor.obj(src.cod(f)) {
            sink.push(
                Law::FunctorTyping,
                vec![],
                vec![f],
                format!(
                    "F({}) = {} does not run F({}) -> F({})",
                    src.arrow_name(f),
                    tgt.arrow_name(image),
                    src.object_name(src.dom(f)),
                    src.object_name(src.cod(f))
                ),
            );
        }
    }

    'comp: for g in src.arrows() {
        for f in src.arrows() {
            if src.cod(f) != src.dom(g) {
                continue;
            }
            let Some(gf) = src.composite(g, f) else { continue };
            let lhs = functor.arr(gf);
            let rhs = tgt.composite(functor.arr(g), functor.arr(f));
            if rhs != Some(lhs) {
                let rhs_name = rhs.map_or_else(|| "undefined".to_owned(), |r| tgt.arrow_name(r));
                sink.push(
                    Law::FunctorComposition,
                    vec![],
                    vec![g, f],
                    format!(
                        "F({} . {}) = {} but F({}) . F({}) = {rhs_name}",
                        src.arrow_name(g),
                        src.arrow_name(f),
                        tgt.arrow_name(lhs),
                        src.arrow_name(g),
                        src.arrow_name(f),
                    ),
                );
                break 'comp;
            }
        }
    }

    sink.finish()
}

/// A hom-functor `Hom(A, −)` landing in a freshly built finite-set category.
#[derive(Debug, Clone)]
pub struct HomFunctor {
    pub functor: Functor,
    pub finsets: FinSetSubcategory,
    /// For each source object `B`, the arrows of `Hom(A, B)` in index order;
    /// element `i` of the carrier of `F(B)` is `members[B][i]`.
    pub members: Vec<Vec<ArrowId>>,
}

pub fn hom_functor(cat: &Arc<PresentedCategory>, a: ObjectId) -> Result<HomFunctor> {
    hom_functor_with(cat, a, &Config::default())
}

/// Object `i` of the target category is the carrier for source object `i`,
/// so the object map is the identity on indices.
pub fn hom_functor_with(cat: &Arc<PresentedCategory>, a: ObjectId, config: &Config) -> Result<HomFunctor> {
    cat.check_object(a)?;
    let members: Vec<Vec<ArrowId>> = cat.objects().map(|b| cat.hom(a, b).to_vec()).collect();
    let sizes: Vec<usize> = members.iter().map(Vec::len).collect();
    let finsets = full_subcategory_of_finset_with(&sizes, config)?;
    let mut arrow_map = Vec::with_capacity(cat.arrow_count());
    for f in cat.arrows() {
        let (b, c) = (cat.dom(f), cat.cod(f));
        let table = members[b.0]
            .iter()
            .map(|&h| {
                let fh = cat.compose(f, h)?;
                Ok(members[c.0].binary_search(&fh).expect("composite lies in Hom(A, C)"))
            })
            .collect::<Result<Vec<usize>>>()?;
        arrow_map.push(finsets.arrow_with_table(b, c, &table)?);
    }
    let functor = Functor {
        source: cat.clone(),
        target: finsets.category().clone(),
        object_map: cat.objects().collect(),
        arrow_map,
    };
    Ok(HomFunctor {
        functor,
        finsets,
        members,
    })
}

/// Components `F(A) → G(A)` for two parallel functors.
#[derive(Debug, Clone)]
pub struct NatTrans {
    from: Functor,
    to: Functor,
    components: Vec<ArrowId>,
}

impl NatTrans {
    pub fn new(from: Functor, to: Functor, components: Vec<ArrowId>) -> Result<Self> {
        if !same_category(&from.source, &to.source) || !same_category(&from.target, &to.target) {
            return Err(Error::contract("natural transformation between non-parallel functors"));
        }
        if components.len() != from.source.object_count() {
            return Err(Error::Structural(format!(
                "{} components given for {} objects",
                components.len(),
                from.source.object_count()
            )));
        }
        for &c in &components {
            from.target.check_arrow(c)?;
        }
        Ok(NatTrans { from, to, components })
    }

    pub fn identity(functor: &Functor) -> Result<Self> {
        let components = functor
            .object_map
            .iter()
            .map(|&o| functor.target.identity(o))
            .collect::<Result<_>>()?;
        Ok(NatTrans {
            from: functor.clone(),
            to: functor.clone(),
            components,
        })
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn components(&self) -> &[ArrowId] {
        &self.components
    }

    pub fn at(&self, o: ObjectId) -> ArrowId {
        self.components[o.0]
    }
}

/// Checks the typing of every component and every naturality square
/// `η_B ∘ F(f) = G(f) ∘ η_A`, reporting the least failing object and arrow.
pub fn validate_nat_trans(eta: &NatTrans) -> ValidationReport {
    let (f_, g_) = (&eta.from, &eta.to);
    let (src, tgt) = (&*f_.source, &*f_.target);
    let mut sink = ViolationSink::default();
    for o in src.objects() {
        let c = eta.at(o);
        if tgt.dom(c) != f_.obj(o) || tgt.cod(c) != g_.obj(o) {
            sink.push(
                Law::ComponentTyping,
                vec![o],
                vec![c],
                format!(
                    "component at {} is {} but must run {} -> {}",
                    src.object_name(o),
                    tgt.arrow_name(c),
                    tgt.object_name(f_.obj(o)),
                    tgt.object_name(g_.obj(o))
                ),
            );
        }
    }
    for f in src.arrows() {
        let (a, b) = (src.dom(f), src.cod(f));
        let lhs = tgt.composite(eta.at(b), f_.arr(f));
        let rhs = tgt.composite(g_.arr(f), eta.at(a));
        if lhs.is_none() || lhs != rhs {
            sink.push(
                Law::Naturality,
                vec![a, b],
                vec![f],
                format!("naturality square for {} does not commute", src.arrow_name(f)),
            );
            break;
        }
    }
    sink.finish()
}

/// `(μ ∘ η)_A = μ_A ∘ η_A`.
pub fn vertical_compose(mu: &NatTrans, eta: &NatTrans) -> Result<NatTrans> {
    if !functors_equal(&eta.to, &mu.from) {
        return Err(Error::contract("vertical composition: middle functors differ"));
    }
    let tgt = &eta.from.target;
    let components = eta
        .components
        .iter()
        .zip(&mu.components)
        .map(|(&e, &m)| tgt.compose(m, e))
        .collect::<Result<_>>()?;
    Ok(NatTrans {
        from: eta.from.clone(),
        to: mu.to.clone(),
        components,
    })
}

pub fn functors_equal(a: &Functor, b: &Functor) -> bool {
    same_category(&a.source, &b.source)
        && same_category(&a.target, &b.target)
        && a.object_map == b.object_map
        && a.arrow_map == b.arrow_map
}

/// Horizontal composite `β ∗ α : H∘F ⇒ K∘G` for `α : F ⇒ G` (C → D) and
/// `β : H ⇒ K` (D → E).
#[derive(Debug, Clone)]
pub struct HorizontalComposite {
    /// Components `β_{G(A)} ∘ H(α_A)`.
    pub transformation: NatTrans,
    /// Components `K(α_A) ∘ β_{F(A)}`.
    pub alternative: Vec<ArrowId>,
    /// Least object where the two formulas disagree.
    pub interchange_failure: Option<ObjectId>,
}

pub fn horizontal_compose(beta: &NatTrans, alpha: &NatTrans) -> Result<HorizontalComposite> {
    if !same_category(&alpha.from.target, &beta.from.source) {
        return Err(Error::contract("horizontal composition: categories do not chain"));
    }
    let (f_, g_) = (&alpha.from, &alpha.to);
    let (h_, k_) = (&beta.from, &beta.to);
    let e = &beta.from.target;
    let mut components = Vec::new();
    let mut alternative = Vec::new();
    let mut interchange_failure = None;
    for o in f_.source.objects() {
        let a = alpha.at(o);
        let first = e.compose(beta.at(g_.obj(o)), h_.arr(a))?;
        let second = e.compose(k_.arr(a), beta.at(f_.obj(o)))?;
        if first != second && interchange_failure.is_none() {
            interchange_failure = Some(o);
        }
        components.push(first);
        alternative.push(second);
    }
    Ok(HorizontalComposite {
        transformation: NatTrans {
            from: h_.after(f_)?,
            to: k_.after(g_)?,
            components,
        },
        alternative,
        interchange_failure,
    })
}
