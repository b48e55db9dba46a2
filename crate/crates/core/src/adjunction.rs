//! Adjunctions `F ⊣ G` with `F : D → C` and `G : C → D`, checked through
//! three independent definitions: triangle identities, a natural hom-set
//! bijection, and universal morphisms.

use std::collections::HashMap;

use serde::Serialize;

use crate::category::{ArrowId, ObjectId, PresentedCategory};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::finset::{fs_exp_arrow, fs_exponential, fs_product, fs_product_arrow, FinSetArrow, FinSetObject};
use crate::fullsub::{lift_functor, FinSetSubcategory};
use crate::functor::{functors_equal, same_category, validate_functor, validate_nat_trans, Functor, NatTrans};
use crate::limits::{is_limit_cone, Cone, Diagram};

/// Data for the triangle-identity definition. Nothing is verified on
/// construction.
#[derive(Debug, Clone)]
pub struct AdjunctionCandidate {
    /// `F : D → C`.
    pub left: Functor,
    /// `G : C → D`.
    pub right: Functor,
    /// `η : 1_D ⇒ GF`.
    pub unit: NatTrans,
    /// `ε : FG ⇒ 1_C`.
    pub counit: NatTrans,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Triangle {
    /// `ε_{F(Y)} ∘ F(η_Y) = id_{F(Y)}` for `Y` in `D`.
    Left,
    /// `G(ε_X) ∘ η_{G(X)} = id_{G(X)}` for `X` in `C`.
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleReport {
    pub holds: bool,
    /// The first failing triangle and the object where it fails.
    pub failure: Option<(Triangle, ObjectId)>,
}

pub fn check_unit_counit(c: &AdjunctionCandidate) -> Result<TriangleReport> {
    let (f, g) = (&c.left, &c.right);
    let (d, cc) = (f.source().clone(), f.target().clone());
    if !same_category(g.source(), &cc) || !same_category(g.target(), &d) {
        return Err(Error::contract("F and G do not run in opposite directions"));
    }
    let gf = g.after(f)?;
    let fg = f.after(g)?;
    if !functors_equal(c.unit.from(), &Functor::identity(d.clone())) || !functors_equal(c.unit.to(), &gf) {
        return Err(Error::contract("the unit must run 1_D => GF"));
    }
    if !functors_equal(c.counit.from(), &fg) || !functors_equal(c.counit.to(), &Functor::identity(cc.clone())) {
        return Err(Error::contract("the counit must run FG => 1_C"));
    }
    for (name, t) in [("unit", &c.unit), ("counit", &c.counit)] {
        let report = validate_nat_trans(t);
        if !report.ok {
            return Err(Error::contract(format!(
                "the {name} violates {}",
                report.violations[0].law
            )));
        }
    }
    for y in d.objects() {
        let fy = f.obj(y);
        let lhs = cc.compose(c.counit.at(fy), f.arr(c.unit.at(y)))?;
        if lhs != cc.identity(fy)? {
            return Ok(TriangleReport {
                holds: false,
                failure: Some((Triangle::Left, y)),
            });
        }
    }
    for x in cc.objects() {
        let gx = g.obj(x);
        let lhs = d.compose(g.arr(c.counit.at(x)), c.unit.at(gx))?;
        if lhs != d.identity(gx)? {
            return Ok(TriangleReport {
                holds: false,
                failure: Some((Triangle::Right, x)),
            });
        }
    }
    Ok(TriangleReport {
        holds: true,
        failure: None,
    })
}

/// A family `φ_{A,B} : Hom_C(F(A), B) → Hom_D(A, G(B))`. The entry for
/// `(A, B)` lists the image of each arrow of `Hom_C(F(A), B)` in index order.
pub type HomBijection = HashMap<(ObjectId, ObjectId), Vec<ArrowId>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomsetStatus {
    Pass,
    Fail,
    /// No family was supplied and a hom-set exceeded the search bound.
    Unverified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomsetViolation {
    /// `φ_{A,B}` is not a bijection onto `Hom_D(A, G(B))`.
    NotBijective { a: ObjectId, b: ObjectId },
    /// `φ(f ∘ F(x)) ≠ φ(f) ∘ x` for `x : A' → A` in `D`.
    NaturalInFirst {
        a: ObjectId,
        b: ObjectId,
        x: ArrowId,
        f: ArrowId,
    },
    /// `φ(y ∘ f) ≠ G(y) ∘ φ(f)` for `y : B → B'` in `C`.
    NaturalInSecond {
        a: ObjectId,
        b: ObjectId,
        y: ArrowId,
        f: ArrowId,
    },
    /// The search found no natural family.
    NoFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomsetReport {
    pub status: HomsetStatus,
    pub violation: Option<HomsetViolation>,
    /// The verified family: the supplied one, or the one found by search.
    #[serde(skip)]
    pub family: Option<HomBijection>,
    pub detail: String,
}

struct HomsetProblem<'a> {
    f: &'a Functor,
    g: &'a Functor,
    d: &'a PresentedCategory,
    c: &'a PresentedCategory,
}

impl HomsetProblem<'_> {
    fn left(&self, a: ObjectId, b: ObjectId) -> &[ArrowId] {
        self.c.hom(self.f.obj(a), b)
    }

    fn right(&self, a: ObjectId, b: ObjectId) -> &[ArrowId] {
        self.d.hom(a, self.g.obj(b))
    }

    fn pairs(&self) -> Vec<(ObjectId, ObjectId)> {
        self.d
            .objects()
            .flat_map(|a| self.c.objects().map(move |b| (a, b)))
            .collect()
    }

    fn index_in(hom: &[ArrowId], arrow: ArrowId) -> usize {
        hom.binary_search(&arrow).expect("arrow lies in the hom-set")
    }

    fn verify(&self, family: &HomBijection) -> Result<Option<HomsetViolation>> {
        for (a, b) in self.pairs() {
            let images = family
                .get(&(a, b))
                .ok_or_else(|| Error::contract("family is missing a pair of objects"))?;
            let right = self.right(a, b);
            let mut sorted = images.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if images.len() != self.left(a, b).len() || sorted.as_slice() != right {
                return Ok(Some(HomsetViolation::NotBijective { a, b }));
            }
        }
        for (a, b) in self.pairs() {
            let left = self.left(a, b);
            for a2 in self.d.objects() {
                for &x in self.d.hom(a2, a) {
                    for (i, &f) in left.iter().enumerate() {
                        let fx = self.c.compose(f, self.f.arr(x))?;
                        let lhs = family[&(a2, b)][Self::index_in(self.left(a2, b), fx)];
                        let rhs = self.d.compose(family[&(a, b)][i], x)?;
                        if lhs != rhs {
                            return Ok(Some(HomsetViolation::NaturalInFirst { a, b, x, f }));
                        }
                    }
                }
            }
            for b2 in self.c.objects() {
                for &y in self.c.hom(b, b2) {
                    for (i, &f) in left.iter().enumerate() {
                        let yf = self.c.compose(y, f)?;
                        let lhs = family[&(a, b2)][Self::index_in(self.left(a, b2), yf)];
                        let rhs = self.d.compose(self.g.arr(y), family[&(a, b)][i])?;
                        if lhs != rhs {
                            return Ok(Some(HomsetViolation::NaturalInSecond { a, b, y, f }));
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Backtracking search for a natural bijection family. Variables are the
/// images of each arrow of each `Hom_C(F(A), B)`; a naturality equation is
/// checked as soon as both of its sides are assigned.
struct FamilySearch<'a> {
    p: &'a HomsetProblem<'a>,
    pairs: Vec<(ObjectId, ObjectId)>,
    pair_index: HashMap<(ObjectId, ObjectId), usize>,
    /// `(pair, slot)` for each variable, in assignment order.
    vars: Vec<(usize, usize)>,
    /// Equations `lhs_var = rhs_var ∘ x` or `lhs_var = G(y) ∘ rhs_var`,
    /// attached to whichever variable is assigned last.
    equations: Vec<Vec<Equation>>,
    values: Vec<Vec<Option<ArrowId>>>,
    used: Vec<Vec<bool>>,
}

#[derive(Clone, Copy)]
enum Equation {
    First { lhs: usize, rhs: usize, x: ArrowId },
    Second { lhs: usize, rhs: usize, gy: ArrowId },
}

impl<'a> FamilySearch<'a> {
    fn new(p: &'a HomsetProblem<'a>) -> Result<Option<Self>> {
        let pairs = p.pairs();
        for &(a, b) in &pairs {
            if p.left(a, b).len() != p.right(a, b).len() {
                return Ok(None);
            }
        }
        let pair_index: HashMap<_, _> = pairs.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut vars = Vec::new();
        let mut var_of = HashMap::new();
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            for slot in 0..p.left(a, b).len() {
                var_of.insert((pi, slot), vars.len());
                vars.push((pi, slot));
            }
        }
        let mut equations = vec![Vec::new(); vars.len()];
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            let left = p.left(a, b);
            for a2 in p.d.objects() {
                for &x in p.d.hom(a2, a) {
                    for (i, &f) in left.iter().enumerate() {
                        let fx = p.c.compose(f, p.f.arr(x))?;
                        let lhs = var_of[&(pair_index[&(a2, b)], HomsetProblem::index_in(p.left(a2, b), fx))];
                        let rhs = var_of[&(pi, i)];
                        equations[lhs.max(rhs)].push(Equation::First { lhs, rhs, x });
                    }
                }
            }
            for b2 in p.c.objects() {
                for &y in p.c.hom(b, b2) {
                    let gy = p.g.arr(y);
                    for (i, &f) in left.iter().enumerate() {
                        let yf = p.c.compose(y, f)?;
                        let lhs = var_of[&(pair_index[&(a, b2)], HomsetProblem::index_in(p.left(a, b2), yf))];
                        let rhs = var_of[&(pi, i)];
                        equations[lhs.max(rhs)].push(Equation::Second { lhs, rhs, gy });
                    }
                }
            }
        }
        let values = pairs.iter().map(|&(a, b)| vec![None; p.left(a, b).len()]).collect();
        let used = pairs.iter().map(|&(a, b)| vec![false; p.right(a, b).len()]).collect();
        Ok(Some(FamilySearch {
            p,
            pairs,
            pair_index,
            vars,
            equations,
            values,
            used,
        }))
    }

    fn value(&self, var: usize) -> ArrowId {
        let (pi, slot) = self.vars[var];
        self.values[pi][slot].expect("assigned before its equations are checked")
    }

    fn consistent(&self, var: usize) -> Result<bool> {
        for eq in &self.equations[var] {
            let ok = match *eq {
                Equation::First { lhs, rhs, x } => self.value(lhs) == self.p.d.compose(self.value(rhs), x)?,
                Equation::Second { lhs, rhs, gy } => self.value(lhs) == self.p.d.compose(gy, self.value(rhs))?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn solve(&mut self, var: usize) -> Result<bool> {
        if var == self.vars.len() {
            return Ok(true);
        }
        let (pi, slot) = self.vars[var];
        let (a, b) = self.pairs[pi];
        let right = self.p.right(a, b).to_vec();
        for (k, candidate) in right.into_iter().enumerate() {
            if self.used[pi][k] {
                continue;
            }
            self.used[pi][k] = true;
            self.values[pi][slot] = Some(candidate);
            if self.consistent(var)? && self.solve(var + 1)? {
                return Ok(true);
            }
            self.values[pi][slot] = None;
            self.used[pi][k] = false;
        }
        Ok(false)
    }

    fn family(&self) -> HomBijection {
        self.pairs
            .iter()
            .map(|&k| {
                (
                    k,
                    self.values[self.pair_index[&k]]
                        .iter()
                        .map(|v| v.expect("solved"))
                        .collect(),
                )
            })
            .collect()
    }
}

/// Checks a supplied hom-set bijection family, or searches for one when
/// `family` is `None` and every hom-set has at most `max_search_hom`
/// elements.
pub fn check_homset_adjunction(
    f: &Functor,
    g: &Functor,
    family: Option<&HomBijection>,
    config: &Config,
) -> Result<HomsetReport> {
    if !same_category(g.source(), f.target()) || !same_category(g.target(), f.source()) {
        return Err(Error::contract("F and G do not run in opposite directions"));
    }
    let p = HomsetProblem {
        f,
        g,
        d: f.source(),
        c: f.target(),
    };
    if let Some(family) = family {
        let violation = p.verify(family)?;
        return Ok(HomsetReport {
            status: if violation.is_none() {
                HomsetStatus::Pass
            } else {
                HomsetStatus::Fail
            },
            detail: match &violation {
                None => "the supplied family is a natural bijection".into(),
                Some(v) => format!("{v:?}"),
            },
            violation,
            family: Some(family.clone()),
        });
    }
    let largest = p
        .pairs()
        .iter()
        .map(|&(a, b)| p.left(a, b).len().max(p.right(a, b).len()))
        .max()
        .unwrap_or(0);
    if largest > config.max_search_hom {
        return Ok(HomsetReport {
            status: HomsetStatus::Unverified,
            violation: None,
            family: None,
            detail: format!(
                "a hom-set has {largest} elements, above the search bound {}",
                config.max_search_hom
            ),
        });
    }
    let Some(mut search) = FamilySearch::new(&p)? else {
        return Ok(HomsetReport {
            status: HomsetStatus::Fail,
            violation: Some(HomsetViolation::NoFamily),
            family: None,
            detail: "some pair of hom-sets differ in size".into(),
        });
    };
    if search.solve(0)? {
        let family = search.family();
        debug_assert!(p.verify(&family)?.is_none());
        Ok(HomsetReport {
            status: HomsetStatus::Pass,
            violation: None,
            family: Some(family),
            detail: "found a natural bijection family".into(),
        })
    } else {
        Ok(HomsetReport {
            status: HomsetStatus::Fail,
            violation: Some(HomsetViolation::NoFamily),
            family: None,
            detail: "no natural bijection family exists".into(),
        })
    }
}

/// The bijection `g ↦ G(g) ∘ η_A` induced by a unit, as a family indexed
/// like [`HomBijection`].
pub fn family_from_unit(f: &Functor, g: &Functor, unit: &NatTrans) -> Result<HomBijection> {
    let (d, c) = (f.source(), f.target());
    let mut family = HomBijection::new();
    for a in d.objects() {
        for b in c.objects() {
            let images = c
                .hom(f.obj(a), b)
                .iter()
                .map(|&h| d.compose(g.arr(h), unit.at(a)))
                .collect::<Result<_>>()?;
            family.insert((a, b), images);
        }
    }
    Ok(family)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalFailure {
    pub y: ObjectId,
    pub f: ArrowId,
    /// Every `g` with `ε ∘ F(g) = f`; empty when none exists.
    pub candidates: Vec<ArrowId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniversalReport {
    pub holds: bool,
    pub failure: Option<UniversalFailure>,
}

/// Whether `ε : F(GX) → X` is universal from `F` to `X`: every
/// `f : F(Y) → X` factors as `ε ∘ F(g)` for exactly one `g : Y → GX`.
pub fn universal_morphism_check(f: &Functor, x: ObjectId, gx: ObjectId, eps: ArrowId) -> Result<UniversalReport> {
    let (d, c) = (f.source(), f.target());
    c.check_object(x)?;
    d.check_object(gx)?;
    c.check_arrow(eps)?;
    if c.dom(eps) != f.obj(gx) || c.cod(eps) != x {
        return Err(Error::contract("the counit component must run F(GX) -> X"));
    }
    for y in d.objects() {
        for &h in c.hom(f.obj(y), x) {
            let mut candidates = Vec::new();
            for &g in d.hom(y, gx) {
                if c.compose(eps, f.arr(g))? == h {
                    candidates.push(g);
                }
            }
            if candidates.len() != 1 {
                return Ok(UniversalReport {
                    holds: false,
                    failure: Some(UniversalFailure { y, f: h, candidates }),
                });
            }
        }
    }
    Ok(UniversalReport {
        holds: true,
        failure: None,
    })
}

/// Whether `F` sends the limit cone `lim` of `d` to a limit of `F ∘ d`.
pub fn check_preserves_limit(functor: &Functor, d: &Diagram, lim: &Cone, config: &Config) -> Result<bool> {
    if !validate_functor(functor).ok {
        return Err(Error::contract("F is not a functor"));
    }
    if !is_limit_cone(d, lim, config)? {
        return Err(Error::contract("the given cone is not a limit of the diagram"));
    }
    let image = functor.after(d)?;
    let cone = Cone {
        apex: functor.obj(lim.apex),
        legs: lim.legs.iter().map(|&l| functor.arr(l)).collect(),
    };
    is_limit_cone(&image, &cone, config)
}

/// The currying adjunction `A × − ⊣ (−)^A` between full subcategories of
/// finite sets: `D` must contain every `(A × Y)^A` and `C` every `A × X^A`.
/// The unit is `curry(id)` and the counit is evaluation.
pub fn curry_adjunction(a: usize, d: &FinSetSubcategory, c: &FinSetSubcategory) -> Result<AdjunctionCandidate> {
    let base = FinSetObject::new(a);
    let id_a = FinSetArrow::identity(&base);
    let left = lift_functor(d, c, |f| Ok(fs_product_arrow(&id_a, f)))?;
    let right = lift_functor(c, d, |h| fs_exp_arrow(&base, h))?;
    let gf = right.after(&left)?;
    let fg = left.after(&right)?;
    let mut unit = Vec::with_capacity(d.category().object_count());
    for y in d.category().objects() {
        let fy = d.finset_object(y);
        let ay = fs_product(&base, &fy).object;
        let eta = fs_exponential(&base, &ay)?.curry(&FinSetArrow::identity(&ay), &fy)?;
        unit.push(d.arrow_with_table(y, gf.obj(y), &eta.table)?);
    }
    let mut counit = Vec::with_capacity(c.category().object_count());
    for x in c.category().objects() {
        let ev = fs_exponential(&base, &c.finset_object(x))?.ev;
        counit.push(c.arrow_with_table(fg.obj(x), x, &ev.table)?);
    }
    Ok(AdjunctionCandidate {
        unit: NatTrans::new(Functor::identity(d.category().clone()), gf, unit)?,
        counit: NatTrans::new(fg, Functor::identity(c.category().clone()), counit)?,
        left,
        right,
    })
}

/// Currying as a hom-set family for [`curry_adjunction`].
pub fn curry_family(
    a: usize,
    d: &FinSetSubcategory,
    c: &FinSetSubcategory,
    cand: &AdjunctionCandidate,
) -> Result<HomBijection> {
    let base = FinSetObject::new(a);
    let mut family = HomBijection::new();
    for y in d.category().objects() {
        for x in c.category().objects() {
            let bundle = fs_exponential(&base, &c.finset_object(x))?;
            let images = c
                .category()
                .hom(cand.left.obj(y), x)
                .iter()
                .map(|&f| {
                    let curried = bundle.curry(&c.finset_arrow(f), &d.finset_object(y))?;
                    d.arrow_with_table(y, cand.right.obj(x), &curried.table)
                })
                .collect::<Result<_>>()?;
            family.insert((y, x), images);
        }
    }
    Ok(family)
}
