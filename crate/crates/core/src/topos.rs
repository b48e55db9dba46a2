//! Checking the topos axioms, and classifying kinds of topos, inside a
//! presented category.
//!
//! Finite limits are checked through the usual reduction to a terminal
//! object, binary products and equalizers (dually for colimits). Every
//! universal property is decided by the generic cone search.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::category::{is_monic, ArrowId, ObjectId, PresentedCategory};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::limits::{
    build_shape, diagram_over, find_colimit_with, find_limit_with, ConeSpace, SearchStatus, ShapeName, UniversalSearch,
};
use crate::subobjects::subobject_poset;

pub const LIMIT_REDUCTION: &str =
    "terminal object, binary products and equalizers; dually initial object, binary coproducts and coequalizers";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    /// A search ran out of budget before deciding the clause.
    Unverified,
    /// The clause needs a structure an earlier clause failed to provide.
    PrerequisiteMissing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub status: ClauseStatus,
    pub detail: String,
    pub objects: Vec<ObjectId>,
    pub arrows: Vec<ArrowId>,
}

impl Clause {
    fn pass(detail: impl Into<String>, objects: Vec<ObjectId>, arrows: Vec<ArrowId>) -> Self {
        Clause {
            status: ClauseStatus::Pass,
            detail: detail.into(),
            objects,
            arrows,
        }
    }

    fn fail(detail: impl Into<String>, objects: Vec<ObjectId>, arrows: Vec<ArrowId>) -> Self {
        Clause {
            status: ClauseStatus::Fail,
            detail: detail.into(),
            objects,
            arrows,
        }
    }

    fn unverified(detail: impl Into<String>) -> Self {
        Clause {
            status: ClauseStatus::Unverified,
            detail: detail.into(),
            objects: vec![],
            arrows: vec![],
        }
    }

    fn missing(detail: impl Into<String>) -> Self {
        Clause {
            status: ClauseStatus::PrerequisiteMissing,
            detail: detail.into(),
            objects: vec![],
            arrows: vec![],
        }
    }

    pub fn passed(&self) -> bool {
        self.status == ClauseStatus::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToposReport {
    pub reduction: &'static str,
    pub finite_limits: Clause,
    pub finite_colimits: Clause,
    pub exponentials: Clause,
    pub classifier: Clause,
    pub terminal: Option<ObjectId>,
    pub initial: Option<ObjectId>,
    /// The classifier `(Ω, true)` found, if any.
    pub omega: Option<(ObjectId, ArrowId)>,
}

impl ToposReport {
    pub fn is_topos(&self) -> bool {
        [
            &self.finite_limits,
            &self.finite_colimits,
            &self.exponentials,
            &self.classifier,
        ]
        .iter()
        .all(|c| c.passed())
    }

    pub fn clauses(&self) -> [(&'static str, &Clause); 4] {
        [
            ("finite_limits", &self.finite_limits),
            ("finite_colimits", &self.finite_colimits),
            ("exponentials", &self.exponentials),
            ("classifier", &self.classifier),
        ]
    }
}

/// A chosen binary product with its factorization table.
struct ProductData {
    apex: ObjectId,
    pi1: ArrowId,
    pi2: ArrowId,
    mediating: HashMap<(ObjectId, ArrowId, ArrowId), ArrowId>,
}

enum Outcome<T> {
    Found(T),
    Absent,
    OverBudget,
}

fn outcome<C: Clone>(search: UniversalSearch<C>) -> Outcome<(C, UniversalSearch<C>)> {
    match search.status {
        SearchStatus::BudgetExceeded => Outcome::OverBudget,
        _ => match search.found().cloned() {
            Some(c) => Outcome::Found((c, search)),
            None => Outcome::Absent,
        },
    }
}

struct Checker<'a> {
    cat: &'a Arc<PresentedCategory>,
    config: &'a Config,
}

impl Checker<'_> {
    fn shape(&self, shape: ShapeName, objects: &[ObjectId], arrows: &[ArrowId]) -> Result<crate::limits::Diagram> {
        diagram_over(Arc::new(build_shape(shape)), self.cat.clone(), objects, arrows)
    }

    fn parallel_pairs(&self) -> Vec<(ArrowId, ArrowId)> {
        let cat = self.cat;
        let mut out = Vec::new();
        for f in cat.arrows() {
            for &g in cat.hom(cat.dom(f), cat.cod(f)) {
                if g > f {
                    out.push((f, g));
                }
            }
        }
        out
    }

    fn limits(&self, products: &mut HashMap<(ObjectId, ObjectId), ProductData>) -> Result<(Clause, Option<ObjectId>)> {
        let cat = self.cat;
        let empty = self.shape(ShapeName::Empty, &[], &[])?;
        let terminal = match outcome(find_limit_with(&empty, self.config)?) {
            Outcome::Found((c, _)) => c.apex,
            Outcome::Absent => return Ok((Clause::fail("no terminal object", vec![], vec![]), None)),
            Outcome::OverBudget => {
                return Ok((
                    Clause::unverified("terminal object search exceeded the cone budget"),
                    None,
                ))
            }
        };
        for a in cat.objects() {
            for b in cat.objects() {
                let d = self.shape(ShapeName::DiscretePair, &[a, b], &[])?;
                match outcome(find_limit_with(&d, self.config)?) {
                    Outcome::Found((cone, search)) => {
                        let mediating = search
                            .certificate
                            .iter()
                            .map(|m| ((m.cone.apex, m.cone.legs[0], m.cone.legs[1]), m.mediating))
                            .collect();
                        products.insert(
                            (a, b),
                            ProductData {
                                apex: cone.apex,
                                pi1: cone.legs[0],
                                pi2: cone.legs[1],
                                mediating,
                            },
                        );
                    }
                    Outcome::Absent => {
                        return Ok((
                            Clause::fail(
                                format!("no product of {} and {}", cat.object_name(a), cat.object_name(b)),
                                vec![a, b],
                                vec![],
                            ),
                            Some(terminal),
                        ))
                    }
                    Outcome::OverBudget => {
                        return Ok((
                            Clause::unverified(format!(
                                "product of {} and {} exceeded the cone budget",
                                cat.object_name(a),
                                cat.object_name(b)
                            )),
                            Some(terminal),
                        ))
                    }
                }
            }
        }
        for (f, g) in self.parallel_pairs() {
            let d = self.shape(ShapeName::ParallelPair, &[cat.dom(f), cat.cod(f)], &[f, g])?;
            match outcome(find_limit_with(&d, self.config)?) {
                Outcome::Found(_) => {}
                Outcome::Absent => {
                    return Ok((
                        Clause::fail(
                            format!("no equalizer of {} and {}", cat.arrow_name(f), cat.arrow_name(g)),
                            vec![],
                            vec![f, g],
                        ),
                        Some(terminal),
                    ))
                }
                Outcome::OverBudget => {
                    return Ok((
                        Clause::unverified("equalizer search exceeded the cone budget"),
                        Some(terminal),
                    ))
                }
            }
        }
        Ok((
            Clause::pass(
                format!(
                    "terminal object {}, all binary products and equalizers",
                    cat.object_name(terminal)
                ),
                vec![terminal],
                vec![],
            ),
            Some(terminal),
        ))
    }

    fn colimits(&self) -> Result<(Clause, Option<ObjectId>)> {
        let cat = self.cat;
        let empty = self.shape(ShapeName::Empty, &[], &[])?;
        let initial = match outcome(find_colimit_with(&empty, self.config)?) {
            Outcome::Found((c, _)) => c.nadir,
            Outcome::Absent => return Ok((Clause::fail("no initial object", vec![], vec![]), None)),
            Outcome::OverBudget => {
                return Ok((
                    Clause::unverified("initial object search exceeded the cone budget"),
                    None,
                ))
            }
        };
        for a in cat.objects() {
            for b in cat.objects() {
                let d = self.shape(ShapeName::DiscretePair, &[a, b], &[])?;
                match outcome(find_colimit_with(&d, self.config)?) {
                    Outcome::Found(_) => {}
                    Outcome::Absent => {
                        return Ok((
                            Clause::fail(
                                format!("no coproduct of {} and {}", cat.object_name(a), cat.object_name(b)),
                                vec![a, b],
                                vec![],
                            ),
                            Some(initial),
                        ))
                    }
                    Outcome::OverBudget => {
                        return Ok((
                            Clause::unverified("coproduct search exceeded the cone budget"),
                            Some(initial),
                        ))
                    }
                }
            }
        }
        for (f, g) in self.parallel_pairs() {
            let d = self.shape(ShapeName::ParallelPair, &[cat.dom(f), cat.cod(f)], &[f, g])?;
            match outcome(find_colimit_with(&d, self.config)?) {
                Outcome::Found(_) => {}
                Outcome::Absent => {
                    return Ok((
                        Clause::fail(
                            format!("no coequalizer of {} and {}", cat.arrow_name(f), cat.arrow_name(g)),
                            vec![],
                            vec![f, g],
                        ),
                        Some(initial),
                    ))
                }
                Outcome::OverBudget => {
                    return Ok((
                        Clause::unverified("coequalizer search exceeded the cone budget"),
                        Some(initial),
                    ))
                }
            }
        }
        Ok((
            Clause::pass(
                format!(
                    "initial object {}, all binary coproducts and coequalizers",
                    cat.object_name(initial)
                ),
                vec![initial],
                vec![],
            ),
            Some(initial),
        ))
    }

    /// `id_A × g : A×C → A×E` through the chosen products.
    fn times(
        &self,
        products: &HashMap<(ObjectId, ObjectId), ProductData>,
        a: ObjectId,
        c: ObjectId,
        e: ObjectId,
        g: ArrowId,
    ) -> Result<ArrowId> {
        let (ac, ae) = (&products[&(a, c)], &products[&(a, e)]);
        let leg = self.cat.compose(g, ac.pi2)?;
        ae.mediating
            .get(&(ac.apex, ac.pi1, leg))
            .copied()
            .ok_or_else(|| Error::contract("product certificate lacks a cone"))
    }

    /// Some `(E, ev)` such that `g ↦ ev ∘ (id_A × g)` is a bijection
    /// `Hom(C, E) → Hom(A×C, B)` for every `C`.
    fn exponential(
        &self,
        products: &HashMap<(ObjectId, ObjectId), ProductData>,
        a: ObjectId,
        b: ObjectId,
    ) -> Result<Option<(ObjectId, ArrowId)>> {
        let cat = self.cat;
        let mut order: Vec<ObjectId> = cat.objects().collect();
        order.sort_by_key(|&c| cat.hom(products[&(a, c)].apex, b).len());
        for e in cat.objects() {
            let counts_match = order
                .iter()
                .all(|&c| cat.hom(c, e).len() == cat.hom(products[&(a, c)].apex, b).len());
            if !counts_match {
                continue;
            }
            let ae = products[&(a, e)].apex;
            'ev: for &ev in cat.hom(ae, b) {
                for &c in &order {
                    let mut seen = HashSet::new();
                    for &g in cat.hom(c, e) {
                        let f = cat.compose(ev, self.times(products, a, c, e, g)?)?;
                        if !seen.insert(f) {
                            continue 'ev;
                        }
                    }
                }
                return Ok(Some((e, ev)));
            }
        }
        Ok(None)
    }

    fn exponentials(&self, products: &HashMap<(ObjectId, ObjectId), ProductData>) -> Result<Clause> {
        let cat = self.cat;
        for a in cat.objects() {
            for b in cat.objects() {
                if self.exponential(products, a, b)?.is_none() {
                    return Ok(Clause::fail(
                        format!("no exponential {}^{}", cat.object_name(b), cat.object_name(a)),
                        vec![a, b],
                        vec![],
                    ));
                }
            }
        }
        Ok(Clause::pass("every pair of objects has an exponential", vec![], vec![]))
    }

    fn to_terminal(&self, terminal: ObjectId, s: ObjectId) -> Result<ArrowId> {
        self.cat
            .hom(s, terminal)
            .first()
            .copied()
            .ok_or_else(|| Error::contract("terminal object without an arrow into it"))
    }

    /// The least monic that `(Ω, t)` fails to classify uniquely, with the
    /// number of classifying arrows found.
    fn classify_failure(
        &self,
        terminal: ObjectId,
        omega: ObjectId,
        t: ArrowId,
        monics: &[ArrowId],
    ) -> Result<Option<(ArrowId, usize)>> {
        let cat = self.cat;
        let mut counts: HashMap<ArrowId, usize> = monics.iter().map(|&m| (m, 0)).collect();
        for a in cat.objects() {
            let into_a: Vec<ArrowId> = monics.iter().copied().filter(|&m| cat.cod(m) == a).collect();
            if into_a.is_empty() {
                continue;
            }
            for &chi in cat.hom(a, omega) {
                let d = self.shape(ShapeName::Cospan, &[a, terminal, omega], &[chi, t])?;
                let space = ConeSpace::cones(&d, self.config)?;
                for &m in &into_a {
                    let s = cat.dom(m);
                    let bang = self.to_terminal(terminal, s)?;
                    let diagonal = cat.compose(chi, m)?;
                    if diagonal != cat.compose(t, bang)? {
                        continue;
                    }
                    if space.is_universal(s, &[m, bang, diagonal])? {
                        *counts.get_mut(&m).expect("listed monic") += 1;
                    }
                }
            }
        }
        Ok(monics.iter().map(|&m| (m, counts[&m])).find(|&(_, n)| n != 1))
    }

    fn classifier(&self, terminal: ObjectId) -> Result<(Clause, Option<(ObjectId, ArrowId)>)> {
        let cat = self.cat;
        let mut monics = Vec::new();
        for f in cat.arrows() {
            if is_monic(cat, f)?.holds {
                monics.push(f);
            }
        }
        let mut first_failure: Option<(ObjectId, ArrowId, ArrowId, usize)> = None;
        for omega in cat.objects() {
            for &t in cat.hom(terminal, omega) {
                match self.classify_failure(terminal, omega, t, &monics)? {
                    None => {
                        return Ok((
                            Clause::pass(
                                format!(
                                    "({}, {}) classifies every monic",
                                    cat.object_name(omega),
                                    cat.arrow_name(t)
                                ),
                                vec![omega],
                                vec![t],
                            ),
                            Some((omega, t)),
                        ))
                    }
                    Some((m, n)) => {
                        if first_failure.is_none() {
                            first_failure = Some((omega, t, m, n));
                        }
                    }
                }
            }
        }
        let clause = match first_failure {
            None => Clause::fail("no subobject classifier: no arrow out of the terminal object", vec![], vec![]),
            Some((omega, t, m, n)) => Clause::fail(
                format!(
                    "no subobject classifier: the least candidate ({}, {}) has {n} characteristic arrows for the monic {}",
                    cat.object_name(omega),
                    cat.arrow_name(t),
                    cat.arrow_name(m)
                ),
                vec![omega],
                vec![t, m],
            ),
        };
        Ok((clause, None))
    }
}

fn capacity_to_unverified(r: Result<Clause>) -> Result<Clause> {
    match r {
        Err(Error::Capacity { what, needed, budget }) => Ok(Clause::unverified(format!(
            "{what} budget exceeded ({needed} > {budget})"
        ))),
        other => other,
    }
}

pub fn topos_check(cat: &Arc<PresentedCategory>) -> Result<ToposReport> {
    topos_check_with(cat, &Config::default())
}

pub fn topos_check_with(cat: &Arc<PresentedCategory>, config: &Config) -> Result<ToposReport> {
    let checker = Checker { cat, config };
    let mut products = HashMap::new();
    let (finite_limits, terminal) = checker.limits(&mut products)?;
    let (finite_colimits, initial) = checker.colimits()?;

    let exponentials = if finite_limits.passed() {
        capacity_to_unverified(checker.exponentials(&products))?
    } else {
        Clause::missing("exponentials need finite limits")
    };

    let mut omega = None;
    let classifier = match (finite_limits.passed(), terminal) {
        (true, Some(t)) => match checker.classifier(t) {
            Ok((clause, found)) => {
                omega = found;
                clause
            }
            Err(e) => capacity_to_unverified(Err(e))?,
        },
        _ => Clause::missing("the classifier needs a terminal object and pullbacks"),
    };

    Ok(ToposReport {
        reduction: LIMIT_REDUCTION,
        finite_limits,
        finite_colimits,
        exponentials,
        classifier,
        terminal,
        initial,
        omega,
    })
}

/// A value that could only be computed when its prerequisite structure
/// exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum Kind<T> {
    Computed(T),
    PrerequisiteMissing,
}

impl<T> Kind<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Kind::Computed(v) => Some(v),
            Kind::PrerequisiteMissing => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NnoWitness {
    pub object: ObjectId,
    pub zero: ArrowId,
    pub successor: ArrowId,
    /// The recursion property was only checked against objects of this
    /// category.
    pub universe_relative: bool,
}

/// The classification predicates. Fields with the `_literal` suffix use a
/// counting definition that differs from the standard notion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToposKinds {
    /// More than one object and more than one arrow.
    pub nondegenerate_literal: bool,
    /// The only arrow `1 → 1` is the identity.
    pub well_pointed_literal: Kind<bool>,
    /// Exactly two objects and two arrows.
    pub bivalent_literal: bool,
    /// Every subobject of every object has a complement.
    pub boolean: Kind<bool>,
    /// `|Hom(1, Ω)|`.
    pub truth_value_count: Kind<usize>,
    pub nno_witness: Kind<Option<NnoWitness>>,
}

pub fn topos_kinds(cat: &Arc<PresentedCategory>) -> Result<ToposKinds> {
    topos_kinds_from(cat, &topos_check(cat)?)
}

pub fn topos_kinds_from(cat: &Arc<PresentedCategory>, report: &ToposReport) -> Result<ToposKinds> {
    let nondegenerate_literal = cat.object_count() > 1 && cat.arrow_count() > 1;
    let bivalent_literal = cat.object_count() == 2 && cat.arrow_count() == 2;
    let well_pointed_literal = match report.terminal {
        Some(t) => Kind::Computed(cat.hom(t, t).len() == 1),
        None => Kind::PrerequisiteMissing,
    };
    let (boolean, truth_value_count) = match (report.terminal, report.omega) {
        (Some(t), Some((omega, _))) => {
            let mut all = true;
            for o in cat.objects() {
                if !subobject_poset(cat, o)?.is_boolean() {
                    all = false;
                    break;
                }
            }
            (Kind::Computed(all), Kind::Computed(cat.hom(t, omega).len()))
        }
        _ => (Kind::PrerequisiteMissing, Kind::PrerequisiteMissing),
    };
    let nno_witness = match report.terminal {
        Some(t) => Kind::Computed(find_nno(cat, t)?),
        None => Kind::PrerequisiteMissing,
    };
    Ok(ToposKinds {
        nondegenerate_literal,
        well_pointed_literal,
        bivalent_literal,
        boolean,
        truth_value_count,
        nno_witness,
    })
}

/// The least `(N, z, s)` such that for every `A`, `f : 1 → A` and
/// `g : A → A` exactly one `h : N → A` has `h ∘ z = f` and `h ∘ s = g ∘ h`.
pub fn find_nno(cat: &PresentedCategory, terminal: ObjectId) -> Result<Option<NnoWitness>> {
    for n in cat.objects() {
        for &z in cat.hom(terminal, n) {
            'succ: for &s in cat.hom(n, n) {
                for a in cat.objects() {
                    for &f in cat.hom(terminal, a) {
                        for &g in cat.hom(a, a) {
                            let mut count = 0;
                            for &h in cat.hom(n, a) {
                                if cat.compose(h, z)? == f && cat.compose(h, s)? == cat.compose(g, h)? {
                                    count += 1;
                                }
                            }
                            if count != 1 {
                                continue 'succ;
                            }
                        }
                    }
                }
                return Ok(Some(NnoWitness {
                    object: n,
                    zero: z,
                    successor: s,
                    universe_relative: true,
                }));
            }
        }
    }
    Ok(None)
}
