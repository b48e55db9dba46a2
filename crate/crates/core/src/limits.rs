//! Limits and colimits of finite diagrams by exhaustive cone enumeration.
//!
//! A cone `(L, φ)` is universal when, for every object `N`, the map
//! `u ↦ (φ_X ∘ u)_X` from `Hom(N, L)` to the cones with apex `N` is a
//! bijection. The search checks this literally: hom-set and cone counts
//! must agree, and the map must be injective onto genuine cones.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;

use crate::category::{are_isomorphic, ArrowId, CategoryBuilder, ObjectId, PresentedCategory};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::functor::{validate_functor, Functor};
use crate::report::ValidationReport;

/// A diagram is a functor out of a (small) index category.
pub type Diagram = Functor;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cone {
    pub apex: ObjectId,
    /// One leg per index object, `apex → D(X)`.
    pub legs: Vec<ArrowId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cocone {
    pub nadir: ObjectId,
    /// One leg per index object, `D(X) → nadir`.
    pub legs: Vec<ArrowId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeName {
    Empty,
    DiscretePair,
    ParallelPair,
    Cospan,
    Span,
}

impl ShapeName {
    pub const ALL: [ShapeName; 5] = [
        ShapeName::Empty,
        ShapeName::DiscretePair,
        ShapeName::ParallelPair,
        ShapeName::Cospan,
        ShapeName::Span,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ShapeName::Empty => "empty",
            ShapeName::DiscretePair => "discrete-pair",
            ShapeName::ParallelPair => "parallel-pair",
            ShapeName::Cospan => "cospan",
            ShapeName::Span => "span",
        }
    }
}

impl fmt::Display for ShapeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ShapeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ShapeName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::contract(format!("unknown shape `{s}`")))
    }
}

/// The index category for a named shape. Objects are `X`, `Y` (and `Z`);
/// the non-identity arrows are `f` and `g`.
///
/// * parallel-pair: `f, g : X → Y`
/// * cospan: `f : X → Z`, `g : Y → Z`
/// * span: `f : Z → X`, `g : Z → Y`
pub fn build_shape(shape: ShapeName) -> PresentedCategory {
    let mut b = CategoryBuilder::new();
    let names: &[&str] = match shape {
        ShapeName::Empty => &[],
        ShapeName::DiscretePair | ShapeName::ParallelPair => &["X", "Y"],
        ShapeName::Cospan | ShapeName::Span => &["X", "Y", "Z"],
    };
    let objs: Vec<ObjectId> = names.iter().map(|n| b.add_object(*n)).collect();
    for &o in &objs {
        b.add_identity(o);
    }
    match shape {
        ShapeName::Empty | ShapeName::DiscretePair => {}
        ShapeName::ParallelPair => {
            b.add_arrow("f", objs[0], objs[1]);
            b.add_arrow("g", objs[0], objs[1]);
        }
        ShapeName::Cospan => {
            b.add_arrow("f", objs[0], objs[2]);
            b.add_arrow("g", objs[1], objs[2]);
        }
        ShapeName::Span => {
            b.add_arrow("f", objs[2], objs[0]);
            b.add_arrow("g", objs[2], objs[1]);
        }
    }
    b.fill_identity_composites();
    b.build().expect("shapes are well formed")
}

/// A diagram of the given shape: `objects` are the images of the index
/// objects and `arrows` the images of the non-identity index arrows, both in
/// index order. Identities go to identities.
pub fn diagram_over(
    shape: Arc<PresentedCategory>,
    target: Arc<PresentedCategory>,
    objects: &[ObjectId],
    arrows: &[ArrowId],
) -> Result<Diagram> {
    let mut given = arrows.iter();
    let mut arrow_map = Vec::with_capacity(shape.arrow_count());
    for a in shape.arrows() {
        if shape.is_identity(a) {
            let o = *objects
                .get(shape.dom(a).0)
                .ok_or_else(|| Error::Structural("too few object images for the shape".into()))?;
            arrow_map.push(target.identity(o)?);
        } else {
            arrow_map.push(
                *given
                    .next()
                    .ok_or_else(|| Error::Structural("too few arrow images for the shape".into()))?,
            );
        }
    }
    if given.next().is_some() {
        return Err(Error::Structural("too many arrow images for the shape".into()));
    }
    Functor::new(shape, target, objects.to_vec(), arrow_map)
}

/// A diagram of a named shape.
pub fn shape_diagram(
    shape: ShapeName,
    target: Arc<PresentedCategory>,
    objects: &[ObjectId],
    arrows: &[ArrowId],
) -> Result<Diagram> {
    diagram_over(Arc::new(build_shape(shape)), target, objects, arrows)
}

pub fn validate_diagram(d: &Diagram) -> ValidationReport {
    validate_functor(d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    /// Every cone was enumerated and universality was checked exhaustively.
    Verified,
    /// The cone count exceeded the budget; nothing was verified.
    BudgetExceeded,
    /// Several non-isomorphic apexes passed the universality test, which a
    /// lawful composition table cannot produce.
    Inconsistent,
}

/// One cone together with its factorization through the universal cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mediation<C> {
    pub cone: C,
    pub mediating: ArrowId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalSearch<C> {
    pub status: SearchStatus,
    /// The least universal cone by apex index, when one exists.
    pub universal: Option<C>,
    /// Every apex carrying some universal cone, ascending.
    pub qualifying: Vec<ObjectId>,
    /// The mediating arrow for every enumerated cone, in enumeration order.
    pub certificate: Vec<Mediation<C>>,
    pub cones_examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

pub type LimitSearch = UniversalSearch<Cone>;
pub type ColimitSearch = UniversalSearch<Cocone>;

impl<C> UniversalSearch<C> {
    pub fn found(&self) -> Option<&C> {
        match self.status {
            SearchStatus::Verified => self.universal.as_ref(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Limit,
    Colimit,
}

struct Engine<'a> {
    d: &'a Diagram,
    cat: &'a PresentedCategory,
    shape: &'a PresentedCategory,
    side: Side,
    /// Index arrows grouped by the larger of their endpoint indices, so a
    /// partial leg assignment can be checked as soon as both ends are set.
    checks_at: Vec<Vec<ArrowId>>,
}

type LegSets = Vec<Vec<Vec<ArrowId>>>;

impl<'a> Engine<'a> {
    fn new(d: &'a Diagram, side: Side) -> Result<Self> {
        let report = validate_diagram(d);
        if !report.ok {
            return Err(Error::contract(format!(
                "diagram violates {}",
                report.violations[0].law
            )));
        }
        let shape = &**d.source();
        let mut checks_at = vec![Vec::new(); shape.object_count()];
        for a in shape.arrows() {
            if !shape.is_identity(a) {
                let hi = shape.dom(a).0.max(shape.cod(a).0);
                checks_at[hi].push(a);
            }
        }
        Ok(Engine {
            d,
            cat: d.target(),
            shape,
            side,
            checks_at,
        })
    }

    fn leg_candidates(&self, n: ObjectId, x: ObjectId) -> &'a [ArrowId] {
        let dx = self.d.obj(x);
        match self.side {
            Side::Limit => self.cat.hom(n, dx),
            Side::Colimit => self.cat.hom(dx, n),
        }
    }

    fn mediating_candidates(&self, n: ObjectId, l: ObjectId) -> &'a [ArrowId] {
        match self.side {
            Side::Limit => self.cat.hom(n, l),
            Side::Colimit => self.cat.hom(l, n),
        }
    }

    /// The leg of the induced cone: `leg ∘ u` for limits, `u ∘ leg` for
    /// colimits.
    fn through(&self, u: ArrowId, leg: ArrowId) -> Result<ArrowId> {
        match self.side {
            Side::Limit => self.cat.compose(leg, u),
            Side::Colimit => self.cat.compose(u, leg),
        }
    }

    /// Condition for index arrow `a : X → Y`: `D(a) ∘ ψ_X = ψ_Y` for cones,
    /// `λ_Y ∘ D(a) = λ_X` for cocones.
    fn commutes(&self, legs: &[ArrowId], a: ArrowId) -> Result<bool> {
        let (x, y) = (self.shape.dom(a).0, self.shape.cod(a).0);
        let da = self.d.arr(a);
        Ok(match self.side {
            Side::Limit => self.cat.compose(da, legs[x])? == legs[y],
            Side::Colimit => self.cat.compose(legs[y], da)? == legs[x],
        })
    }

    fn is_cone(&self, apex: ObjectId, legs: &[ArrowId]) -> Result<bool> {
        if !self.cat.has_object(apex) || legs.len() != self.shape.object_count() {
            return Ok(false);
        }
        for x in self.shape.objects() {
            if !self.leg_candidates(apex, x).contains(&legs[x.0]) {
                return Ok(false);
            }
        }
        for a in self.shape.arrows() {
            if !self.commutes(legs, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cones with apex `n` in lexicographic leg order. Returns `None` once
    /// more than `cap` cones have been found.
    fn cones_at(&self, n: ObjectId, cap: usize) -> Result<Option<Vec<Vec<ArrowId>>>> {
        let k = self.shape.object_count();
        let mut out = Vec::new();
        let mut legs = Vec::with_capacity(k);
        if self.extend(n, &mut legs, &mut out, cap)? {
            Ok(Some(out))
        } else {
            Ok(None)
        }
    }

    fn extend(&self, n: ObjectId, legs: &mut Vec<ArrowId>, out: &mut Vec<Vec<ArrowId>>, cap: usize) -> Result<bool> {
        let i = legs.len();
        if i == self.shape.object_count() {
            if out.len() == cap {
                return Ok(false);
            }
            out.push(legs.clone());
            return Ok(true);
        }
        for &leg in self.leg_candidates(n, ObjectId(i)) {
            legs.push(leg);
            let mut ok = true;
            for &a in &self.checks_at[i] {
                if !self.commutes(legs, a)? {
                    ok = false;
                    break;
                }
            }
            if ok && !self.extend(n, legs, out, cap)? {
                return Ok(false);
            }
            legs.pop();
        }
        Ok(true)
    }

    fn all_cones(&self, budget: usize) -> Result<Option<LegSets>> {
        let mut all = Vec::with_capacity(self.cat.object_count());
        let mut remaining = budget;
        for n in self.cat.objects() {
            match self.cones_at(n, remaining)? {
                Some(cones) => {
                    remaining -= cones.len();
                    all.push(cones);
                }
                None => return Ok(None),
            }
        }
        Ok(Some(all))
    }

    /// Enumerates every cone once; `None` past the budget.
    fn space(self, budget: usize) -> Result<Option<ConeSpace<'a>>> {
        let Some(cones) = self.all_cones(budget)? else {
            return Ok(None);
        };
        let lookup = cones
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect())
            .collect();
        let mut order: Vec<ObjectId> = self.cat.objects().collect();
        order.sort_by_key(|n| cones[n.0].len());
        Ok(Some(ConeSpace {
            engine: self,
            cones,
            lookup,
            order,
        }))
    }
}

fn over_budget(config: &Config) -> Error {
    Error::Capacity {
        what: "cones",
        needed: config.max_cones as u128 + 1,
        budget: config.max_cones as u128,
    }
}

/// Every cone (or cocone) over one diagram, enumerated once and shared by
/// all universality tests.
pub struct ConeSpace<'a> {
    engine: Engine<'a>,
    cones: LegSets,
    lookup: Vec<HashMap<Vec<ArrowId>, usize>>,
    /// Objects by ascending cone count.
    order: Vec<ObjectId>,
}

impl<'a> ConeSpace<'a> {
    /// Cones over `d`. Fails with a capacity error past `max_cones`.
    pub fn cones(d: &'a Diagram, config: &Config) -> Result<Self> {
        Engine::new(d, Side::Limit)?
            .space(config.max_cones)?
            .ok_or_else(|| over_budget(config))
    }

    pub fn cocones(d: &'a Diagram, config: &Config) -> Result<Self> {
        Engine::new(d, Side::Colimit)?
            .space(config.max_cones)?
            .ok_or_else(|| over_budget(config))
    }

    pub fn len(&self) -> usize {
        self.cones.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cones with the given apex, in leg order.
    pub fn at(&self, apex: ObjectId) -> &[Vec<ArrowId>] {
        &self.cones[apex.0]
    }

    pub fn is_cone(&self, apex: ObjectId, legs: &[ArrowId]) -> Result<bool> {
        self.engine.is_cone(apex, legs)
    }

    /// For a cone at `l`, the mediating arrow of every cone (indexed like
    /// [`ConeSpace::at`]) when the cone is universal.
    fn mediations(&self, l: ObjectId, phi: &[ArrowId]) -> Result<Option<Vec<Vec<ArrowId>>>> {
        let engine = &self.engine;
        let unset = ArrowId(usize::MAX);
        let mut mediating: Vec<Vec<ArrowId>> = self.cones.iter().map(|c| vec![unset; c.len()]).collect();
        let mut image = Vec::with_capacity(phi.len());
        for &n in &self.order {
            let candidates = engine.mediating_candidates(n, l);
            if candidates.len() != self.cones[n.0].len() {
                return Ok(None);
            }
            for &u in candidates {
                image.clear();
                for &p in phi {
                    image.push(engine.through(u, p)?);
                }
                match self.lookup[n.0].get(image.as_slice()) {
                    Some(&idx) if mediating[n.0][idx] == unset => mediating[n.0][idx] = u,
                    _ => return Ok(None),
                }
            }
        }
        Ok(Some(mediating))
    }

    /// Whether the cone `(apex, legs)` is universal. Fails when it is not a
    /// cone.
    pub fn is_universal(&self, apex: ObjectId, legs: &[ArrowId]) -> Result<bool> {
        if !self.is_cone(apex, legs)? {
            return Err(Error::contract("candidate is not a cone over the diagram"));
        }
        Ok(self.mediations(apex, legs)?.is_some())
    }

    /// The unique arrow factoring `other` through the universal cone.
    pub fn mediating(&self, universal: (ObjectId, &[ArrowId]), other: (ObjectId, &[ArrowId])) -> Result<ArrowId> {
        if !self.is_cone(other.0, other.1)? {
            return Err(Error::contract("the second argument is not a cone over the diagram"));
        }
        if !self.is_universal(universal.0, universal.1)? {
            return Err(Error::contract("the first argument is not a verified universal cone"));
        }
        // Existence and uniqueness by direct search, independent of the
        // bijection used by the universality test.
        let mut found = None;
        for &u in self.engine.mediating_candidates(other.0, universal.0) {
            let mut matches = true;
            for (&p, &q) in universal.1.iter().zip(other.1) {
                if self.engine.through(u, p)? != q {
                    matches = false;
                    break;
                }
            }
            if matches {
                if found.is_some() {
                    return Err(Error::contract("mediating arrow is not unique"));
                }
                found = Some(u);
            }
        }
        found.ok_or_else(|| Error::contract("no mediating arrow exists"))
    }

    fn search(&self) -> Result<UniversalSearch<(ObjectId, Vec<ArrowId>)>> {
        let engine = &self.engine;
        let cat = engine.cat;
        let mut universal: Option<(ObjectId, Vec<ArrowId>, Vec<Vec<ArrowId>>)> = None;
        let mut qualifying = Vec::new();
        for l in cat.objects() {
            let counts_match = self
                .order
                .iter()
                .all(|&n| engine.mediating_candidates(n, l).len() == self.cones[n.0].len());
            if !counts_match {
                continue;
            }
            for phi in &self.cones[l.0] {
                if let Some(med) = self.mediations(l, phi)? {
                    qualifying.push(l);
                    if universal.is_none() {
                        universal = Some((l, phi.clone(), med));
                    }
                    break;
                }
            }
        }

        let mut status = SearchStatus::Verified;
        let mut diagnostic = None;
        if let Some(&first) = qualifying.first() {
            for &other in &qualifying[1..] {
                if !are_isomorphic(cat, first, other)? {
                    status = SearchStatus::Inconsistent;
                    diagnostic = Some(format!(
                        "universal apexes {} and {} are not isomorphic",
                        cat.object_name(first),
                        cat.object_name(other)
                    ));
                    break;
                }
            }
        }

        let mut certificate = Vec::new();
        let universal = universal.map(|(l, phi, med)| {
            for (n, cs) in self.cones.iter().enumerate() {
                for (i, legs) in cs.iter().enumerate() {
                    certificate.push(Mediation {
                        cone: (ObjectId(n), legs.clone()),
                        mediating: med[n][i],
                    });
                }
            }
            (l, phi)
        });
        Ok(UniversalSearch {
            status,
            universal,
            qualifying,
            certificate,
            cones_examined: self.len(),
            diagnostic,
        })
    }
}

fn run_search(engine: Engine<'_>, config: &Config) -> Result<UniversalSearch<(ObjectId, Vec<ArrowId>)>> {
    match engine.space(config.max_cones)? {
        Some(space) => space.search(),
        None => Ok(UniversalSearch {
            status: SearchStatus::BudgetExceeded,
            universal: None,
            qualifying: Vec::new(),
            certificate: Vec::new(),
            cones_examined: config.max_cones,
            diagnostic: Some(format!("more than {} cones; universality unverified", config.max_cones)),
        }),
    }
}

impl<T> UniversalSearch<T> {
    fn map<C>(self, f: impl Fn(T) -> C) -> UniversalSearch<C> {
        UniversalSearch {
            status: self.status,
            universal: self.universal.map(&f),
            qualifying: self.qualifying,
            certificate: self
                .certificate
                .into_iter()
                .map(|m| Mediation {
                    cone: f(m.cone),
                    mediating: m.mediating,
                })
                .collect(),
            cones_examined: self.cones_examined,
            diagnostic: self.diagnostic,
        }
    }
}

fn to_cone((apex, legs): (ObjectId, Vec<ArrowId>)) -> Cone {
    Cone { apex, legs }
}

fn to_cocone((nadir, legs): (ObjectId, Vec<ArrowId>)) -> Cocone {
    Cocone { nadir, legs }
}

pub fn is_cone(d: &Diagram, cone: &Cone) -> Result<bool> {
    Engine::new(d, Side::Limit)?.is_cone(cone.apex, &cone.legs)
}

pub fn is_cocone(d: &Diagram, cocone: &Cocone) -> Result<bool> {
    Engine::new(d, Side::Colimit)?.is_cone(cocone.nadir, &cocone.legs)
}

pub fn enumerate_cones(d: &Diagram) -> Result<Vec<Cone>> {
    enumerate_cones_with(d, &Config::default())
}

/// Every cone, ordered by apex index and then by leg indices. Fails with a
/// capacity error past `max_cones`.
pub fn enumerate_cones_with(d: &Diagram, config: &Config) -> Result<Vec<Cone>> {
    enumerate(d, Side::Limit, config).map(|v| v.into_iter().map(to_cone).collect())
}

pub fn enumerate_cocones(d: &Diagram) -> Result<Vec<Cocone>> {
    enumerate_cocones_with(d, &Config::default())
}

pub fn enumerate_cocones_with(d: &Diagram, config: &Config) -> Result<Vec<Cocone>> {
    enumerate(d, Side::Colimit, config).map(|v| v.into_iter().map(to_cocone).collect())
}

fn enumerate(d: &Diagram, side: Side, config: &Config) -> Result<Vec<(ObjectId, Vec<ArrowId>)>> {
    let engine = Engine::new(d, side)?;
    let all = engine.all_cones(config.max_cones)?.ok_or_else(|| over_budget(config))?;
    Ok(all
        .into_iter()
        .enumerate()
        .flat_map(|(n, cs)| cs.into_iter().map(move |legs| (ObjectId(n), legs)))
        .collect())
}

pub fn find_limit(d: &Diagram) -> Result<LimitSearch> {
    find_limit_with(d, &Config::default())
}

pub fn find_limit_with(d: &Diagram, config: &Config) -> Result<LimitSearch> {
    Ok(run_search(Engine::new(d, Side::Limit)?, config)?.map(to_cone))
}

pub fn find_colimit(d: &Diagram) -> Result<ColimitSearch> {
    find_colimit_with(d, &Config::default())
}

pub fn find_colimit_with(d: &Diagram, config: &Config) -> Result<ColimitSearch> {
    Ok(run_search(Engine::new(d, Side::Colimit)?, config)?.map(to_cocone))
}

/// Whether `cone` is a limit of `d`. Fails when it is not a cone at all or
/// when the cone budget is exceeded.
pub fn is_limit_cone(d: &Diagram, cone: &Cone, config: &Config) -> Result<bool> {
    ConeSpace::cones(d, config)?.is_universal(cone.apex, &cone.legs)
}

pub fn is_colimit_cocone(d: &Diagram, cocone: &Cocone, config: &Config) -> Result<bool> {
    ConeSpace::cocones(d, config)?.is_universal(cocone.nadir, &cocone.legs)
}

/// The unique `u : N → L` with `φ_X ∘ u = ψ_X` for every index object.
pub fn mediating_morphism(d: &Diagram, universal: &Cone, other: &Cone, config: &Config) -> Result<ArrowId> {
    ConeSpace::cones(d, config)?.mediating((universal.apex, &universal.legs), (other.apex, &other.legs))
}

/// The unique `u : L → N` with `u ∘ λ_X = ψ_X` for every index object.
pub fn comediating_morphism(d: &Diagram, universal: &Cocone, other: &Cocone, config: &Config) -> Result<ArrowId> {
    ConeSpace::cocones(d, config)?.mediating((universal.nadir, &universal.legs), (other.nadir, &other.legs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain, discrete, terminal_category};
    use crate::category::validate_category;
    use crate::finset::{fs_coproduct, fs_product};
    use crate::fullsub::full_subcategory_of_finset;

    fn arc(c: PresentedCategory) -> Arc<PresentedCategory> {
        Arc::new(c)
    }

    #[test]
    fn shapes() {
        for s in ShapeName::ALL {
            let c = build_shape(s);
            assert!(validate_category(&c).ok, "{s}");
            assert_eq!(s.name().parse::<ShapeName>().unwrap(), s);
        }
        assert_eq!(build_shape(ShapeName::Empty).object_count(), 0);
        let pp = build_shape(ShapeName::ParallelPair);
        assert_eq!((pp.object_count(), pp.arrow_count()), (2, 4));
        let cs = build_shape(ShapeName::Cospan);
        let f = cs.find_arrow("f").unwrap();
        let g = cs.find_arrow("g").unwrap();
        assert_eq!(cs.cod(f), cs.cod(g));
        assert!("wedge".parse::<ShapeName>().is_err());
    }

    #[test]
    fn empty_diagram_cones_are_objects() {
        let c = arc(chain(3));
        let d = shape_diagram(ShapeName::Empty, c.clone(), &[], &[]).unwrap();
        assert!(validate_diagram(&d).ok);
        let cones = enumerate_cones(&d).unwrap();
        assert_eq!(cones.len(), 3);
        assert!(cones.iter().all(|c| c.legs.is_empty()));
    }

    #[test]
    fn identity_to_non_identity_is_invalid() {
        let c = arc(chain(2));
        let shape = arc(terminal_category());
        let p = c.find_arrow("p0_1").unwrap();
        let d = Functor::new(shape, c, vec![ObjectId(0)], vec![p]).unwrap();
        assert!(!validate_diagram(&d).ok);
        assert!(find_limit(&d).is_err());
    }

    #[test]
    fn terminal_and_initial_in_a_chain() {
        let c = arc(chain(3));
        let d = shape_diagram(ShapeName::Empty, c.clone(), &[], &[]).unwrap();
        let lim = find_limit(&d).unwrap();
        assert_eq!(lim.found().unwrap().apex, ObjectId(2));
        assert_eq!(lim.qualifying, vec![ObjectId(2)]);
        let colim = find_colimit(&d).unwrap();
        assert_eq!(colim.found().unwrap().nadir, ObjectId(0));
    }

    #[test]
    fn no_terminal_in_discrete_two() {
        let c = arc(discrete(2));
        let d = shape_diagram(ShapeName::Empty, c, &[], &[]).unwrap();
        let lim = find_limit(&d).unwrap();
        assert_eq!(lim.status, SearchStatus::Verified);
        assert!(lim.universal.is_none());
    }

    #[test]
    fn discrete_pair_cone_count() {
        let sub = full_subcategory_of_finset(&[2, 3, 6]).unwrap_err();
        assert!(matches!(sub, Error::Capacity { .. }));
        let cfg = Config::default().with_budget(100_000);
        let sub = crate::fullsub::full_subcategory_of_finset_with(&[2, 3, 6], &cfg).unwrap();
        let c = sub.category().clone();
        let d = shape_diagram(ShapeName::DiscretePair, c.clone(), &[ObjectId(0), ObjectId(1)], &[]).unwrap();
        let cones = enumerate_cones_with(&d, &cfg).unwrap();
        let at6 = cones.iter().filter(|k| k.apex == ObjectId(2)).count();
        assert_eq!(
            at6,
            c.hom(ObjectId(2), ObjectId(0)).len() * c.hom(ObjectId(2), ObjectId(1)).len()
        );
        assert_eq!(at6, 64 * 729);
    }

    #[test]
    fn product_agrees_with_direct_construction() {
        let sub = full_subcategory_of_finset(&[1, 2, 3, 6]).unwrap_err();
        assert!(matches!(sub, Error::Capacity { .. }));
        let cfg = Config::default().with_budget(100_000);
        let sub = crate::fullsub::full_subcategory_of_finset_with(&[1, 2, 3, 6], &cfg).unwrap();
        let c = sub.category().clone();
        let d = shape_diagram(ShapeName::DiscretePair, c.clone(), &[ObjectId(1), ObjectId(2)], &[]).unwrap();
        let lim = find_limit_with(&d, &cfg).unwrap();
        let cone = lim.found().unwrap();
        let direct = fs_product(&sub.finset_object(ObjectId(1)), &sub.finset_object(ObjectId(2)));
        assert_eq!(sub.size_of(cone.apex), direct.object.size);
        assert_eq!(lim.certificate.len(), lim.cones_examined);
    }

    #[test]
    fn coproduct_in_small_universe() {
        let sub = full_subcategory_of_finset(&[1, 2, 3]).unwrap();
        let c = sub.category().clone();
        let d = shape_diagram(ShapeName::DiscretePair, c.clone(), &[ObjectId(0), ObjectId(1)], &[]).unwrap();
        let colim = find_colimit(&d).unwrap();
        let cocone = colim.found().unwrap();
        let direct = fs_coproduct(&sub.finset_object(ObjectId(0)), &sub.finset_object(ObjectId(1)));
        assert_eq!(sub.size_of(cocone.nadir), direct.object.size);
    }

    #[test]
    fn coequalizer_of_equal_maps_is_codomain() {
        let sub = full_subcategory_of_finset(&[1, 2]).unwrap();
        let c = sub.category().clone();
        let (a, b) = (ObjectId(0), ObjectId(1));
        let f = sub.arrow_with_table(a, b, &[1]).unwrap();
        let d = shape_diagram(ShapeName::ParallelPair, c.clone(), &[a, b], &[f, f]).unwrap();
        let colim = find_colimit(&d).unwrap();
        assert_eq!(colim.found().unwrap().nadir, b);
        // Cones over equal parallel maps: the second leg is forced.
        let cones = enumerate_cones(&d).unwrap();
        for n in c.objects() {
            assert_eq!(cones.iter().filter(|k| k.apex == n).count(), c.hom(n, a).len());
        }
    }

    #[test]
    fn mediating_arrows() {
        let sub = full_subcategory_of_finset(&[1, 2, 4]).unwrap();
        let c = sub.category().clone();
        let cfg = Config::default();
        let two = ObjectId(1);
        let d = shape_diagram(ShapeName::DiscretePair, c.clone(), &[two, two], &[]).unwrap();
        let lim = find_limit(&d).unwrap();
        let cone = lim.found().unwrap().clone();
        let u = mediating_morphism(&d, &cone, &cone, &cfg).unwrap();
        assert!(c.is_identity(u));

        for m in &lim.certificate {
            let u = mediating_morphism(&d, &cone, &m.cone, &cfg).unwrap();
            assert_eq!(u, m.mediating);
            for (p, q) in cone.legs.iter().zip(&m.cone.legs) {
                assert_eq!(c.compose(*p, u).unwrap(), *q);
            }
        }

        let bogus = Cone {
            apex: ObjectId(0),
            legs: vec![cone.legs[0], cone.legs[1]],
        };
        assert!(mediating_morphism(&d, &cone, &bogus, &cfg).is_err());
        let not_universal = &lim.certificate[0].cone;
        assert!(mediating_morphism(&d, not_universal, &cone, &cfg).is_err());
    }

    #[test]
    fn duality_on_opposite() {
        let sub = full_subcategory_of_finset(&[0, 1, 2]).unwrap();
        let c = sub.category().clone();
        let op = arc(c.opposite());
        for s in [ShapeName::Empty, ShapeName::DiscretePair] {
            let objs: Vec<ObjectId> = (0..build_shape(s).object_count()).map(|i| ObjectId(i + 1)).collect();
            let d = shape_diagram(s, c.clone(), &objs, &[]).unwrap();
            let dop = d.opposite().with_target(op.clone()).unwrap();
            let colim = find_colimit(&d).unwrap();
            let lim = find_limit(&dop).unwrap();
            assert_eq!(colim.qualifying, lim.qualifying);
            assert_eq!(
                colim.universal.as_ref().map(|k| (k.nadir, k.legs.clone())),
                lim.universal.as_ref().map(|k| (k.apex, k.legs.clone()))
            );
        }
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let sub = full_subcategory_of_finset(&[1, 2, 3]).unwrap();
        let c = sub.category().clone();
        let d = shape_diagram(ShapeName::DiscretePair, c, &[ObjectId(2), ObjectId(2)], &[]).unwrap();
        let cfg = Config {
            max_cones: 10,
            ..Config::default()
        };
        let lim = find_limit_with(&d, &cfg).unwrap();
        assert_eq!(lim.status, SearchStatus::BudgetExceeded);
        assert!(lim.found().is_none());
        assert!(matches!(enumerate_cones_with(&d, &cfg), Err(Error::Capacity { .. })));
    }
}
