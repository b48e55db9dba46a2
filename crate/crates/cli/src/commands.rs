use std::sync::Arc;

use serde_json::{json, Value};

use fincat_core::adjunction::{
    check_homset_adjunction, check_preserves_limit, check_unit_counit, family_from_unit, AdjunctionCandidate,
    HomsetStatus, HomsetViolation, Triangle,
};
use fincat_core::finset::{
    fs_characteristic, fs_coequalizer, fs_coproduct, fs_equalizer, fs_exponential_with, fs_inverse_image, fs_members,
    fs_name, fs_power_object_with, fs_product, fs_pullback, fs_pushout, fs_subobject_classifier, FinSetArrow,
    FinSetObject, Subobject, SubobjectAlgebra,
};
use fincat_core::fullsub::full_subcategory_of_finset_with;
use fincat_core::functor::{validate_functor, validate_nat_trans, Functor, NatTrans};
use fincat_core::limits::{find_colimit_with, find_limit_with, validate_diagram, Diagram, SearchStatus};
use fincat_core::slice::{arrow_category_with, slice_category_with};
use fincat_core::topos::{topos_check_with, topos_kinds_from, ClauseStatus};
use fincat_core::{
    is_epic, is_iso, is_monic, validate_category, Config, Law, ObjectId, PresentedCategory, ValidationReport,
};
use fincat_dsl::{Model, SpecDocument};

use crate::args::{CheckCmd, Command, FinsetCmd, ToposCmd};
use crate::refs;
use crate::report::{Outcome, Report, Witness};
use crate::CliError;

type CmdResult = Result<Report, CliError>;

fn pass(summary: impl Into<String>) -> Report {
    Report::new("", Outcome::Pass, summary)
}

fn fail(summary: impl Into<String>, witness: Witness) -> Report {
    Report::new("", Outcome::Fail, summary).with_witness(witness)
}

fn names_of_objects(cat: &PresentedCategory, objects: &[ObjectId]) -> Vec<String> {
    objects.iter().map(|&o| cat.object_name(o)).collect()
}

fn names_of_arrows(cat: &PresentedCategory, arrows: &[fincat_core::ArrowId]) -> Vec<String> {
    arrows.iter().map(|&a| cat.arrow_name(a)).collect()
}

/// Turns a law report into a pass, or a failure witnessed by the first
/// violation. Violation objects live in `objects_in`, arrows in `arrows_in`
/// (component typing refers to the target category).
fn law_report(
    report: &ValidationReport,
    summary: &str,
    objects_in: &PresentedCategory,
    arrows_in: &PresentedCategory,
    components_in: &PresentedCategory,
) -> Report {
    match report.violations.first() {
        None => pass(summary),
        Some(v) => {
            let arrows_cat = if v.law == Law::ComponentTyping {
                components_in
            } else {
                arrows_in
            };
            fail(
                v.law.name(),
                Witness {
                    description: v.detail.clone(),
                    objects: names_of_objects(objects_in, &v.objects),
                    arrows: names_of_arrows(arrows_cat, &v.arrows),
                },
            )
            .fact("violations", report.violations.len())
        }
    }
}

fn functor<'m>(model: &'m Model, name: &str) -> Result<&'m Functor, CliError> {
    model
        .functors
        .get(name)
        .map(|(_, f)| f)
        .ok_or_else(|| CliError::Unknown {
            kind: "functor",
            name: name.to_string(),
        })
}

fn diagram<'m>(model: &'m Model, name: &str) -> Result<&'m Diagram, CliError> {
    model.diagram(name).map_err(|_| CliError::Unknown {
        kind: "diagram",
        name: name.to_string(),
    })
}

fn transformation<'m>(model: &'m Model, name: &str) -> Result<&'m NatTrans, CliError> {
    model.nattrans.get(name).ok_or_else(|| CliError::Unknown {
        kind: "natural transformation",
        name: name.to_string(),
    })
}

pub fn dispatch(cmd: &Command, doc: &SpecDocument, config: &Config) -> CmdResult {
    let model = Model::build(doc)?;
    match cmd {
        Command::Validate { category } => {
            let cat = refs::category(&model, category, config)?;
            let r = validate_category(&cat);
            Ok(law_report(&r, "every category law holds", &cat, &cat, &cat)
                .fact("objects", cat.object_count())
                .fact("arrows", cat.arrow_count()))
        }
        Command::Check(c) => check(c, &model, config),
        Command::Limit { diagram: d } => universal(diagram(&model, d)?, true, config),
        Command::Colimit { diagram: d } => universal(diagram(&model, d)?, false, config),
        Command::Finset(f) => finset(f, &model, config),
        Command::Slice { category, object } => {
            let cat = refs::category(&model, category, config)?;
            let x = refs::object(&cat, object)?;
            slice(&cat, x, config)
        }
        Command::Arrowcat { category } => {
            let cat = refs::category(&model, category, config)?;
            let arrows = arrow_category_with(&cat, config)?;
            let r = validate_category(&arrows.category);
            Ok(law_report(
                &r,
                "the arrow category is lawful",
                &arrows.category,
                &arrows.category,
                &arrows.category,
            )
            .fact("objects", arrows.category.object_count())
            .fact("arrows", arrows.category.arrow_count()))
        }
        Command::Topos(ToposCmd::Check { category }) => {
            let cat = refs::category(&model, category, config)?;
            topos_check(&cat, config)
        }
        Command::Topos(ToposCmd::Kinds { category }) => {
            let cat = refs::category(&model, category, config)?;
            let report = topos_check_with(&cat, config)?;
            let kinds = topos_kinds_from(&cat, &report)?;
            let mut out = pass(if report.is_topos() {
                "classified a topos"
            } else {
                "classified a category that is not a topos"
            })
            .fact("is_topos", report.is_topos());
            if let Value::Object(fields) = serde_json::to_value(&kinds).expect("kinds serialize") {
                for (k, v) in fields {
                    out = out.fact(&k, v);
                }
            }
            Ok(out)
        }
        Command::Fullsubcat { sizes } => {
            let sub = full_subcategory_of_finset_with(sizes, config)?;
            let cat = sub.category();
            let rows = cat
                .objects()
                .flat_map(|a| cat.objects().map(move |b| (a, b)))
                .map(|(a, b)| vec![cat.object_name(a), cat.object_name(b), cat.hom(a, b).len().to_string()])
                .collect();
            Ok(pass("built the full subcategory of finite sets")
                .fact("objects", cat.object_count())
                .fact("arrows", cat.arrow_count())
                .table("hom-set sizes", &["from", "to", "arrows"], rows))
        }
    }
}

fn check(c: &CheckCmd, model: &Model, config: &Config) -> CmdResult {
    match c {
        CheckCmd::Monic { category, arrow } | CheckCmd::Epic { category, arrow } => {
            let cat = refs::category(model, category, config)?;
            let f = refs::arrow(&cat, arrow)?;
            let monic = matches!(c, CheckCmd::Monic { .. });
            let result = if monic { is_monic(&cat, f)? } else { is_epic(&cat, f)? };
            let word = if monic { "monic" } else { "epic" };
            let name = cat.arrow_name(f);
            Ok(match result.witness {
                None => pass(format!("{name} is {word}")),
                Some((g, h)) => {
                    let (gn, hn) = (cat.arrow_name(g), cat.arrow_name(h));
                    let description = if monic {
                        format!("{name} . {gn} = {name} . {hn} with {gn} != {hn}")
                    } else {
                        format!("{gn} . {name} = {hn} . {name} with {gn} != {hn}")
                    };
                    fail(
                        format!("{name} is not {word}"),
                        Witness {
                            description,
                            objects: vec![],
                            arrows: vec![gn, hn],
                        },
                    )
                }
            })
        }
        CheckCmd::Iso { category, arrow } => {
            let cat = refs::category(model, category, config)?;
            let f = refs::arrow(&cat, arrow)?;
            let name = cat.arrow_name(f);
            Ok(match is_iso(&cat, f)? {
                Some(inv) => pass(format!("{name} is an isomorphism")).fact("inverse", cat.arrow_name(inv)),
                None => {
                    let (a, b) = (cat.dom(f), cat.cod(f));
                    fail(
                        format!("{name} is not an isomorphism"),
                        Witness {
                            description: format!(
                                "no arrow {} -> {} is a two-sided inverse of {name}",
                                cat.object_name(b),
                                cat.object_name(a)
                            ),
                            objects: vec![cat.object_name(a), cat.object_name(b)],
                            arrows: names_of_arrows(&cat, cat.hom(b, a)),
                        },
                    )
                }
            })
        }
        CheckCmd::Functor { functor: name } => {
            let f = functor(model, name)?;
            let r = validate_functor(f);
            Ok(law_report(
                &r,
                "every functor law holds",
                f.source(),
                f.source(),
                f.target(),
            ))
        }
        CheckCmd::Nattrans { transformation: name } => {
            let t = transformation(model, name)?;
            let r = validate_nat_trans(t);
            let (src, tgt) = (t.from().source(), t.from().target());
            Ok(law_report(&r, "every naturality square commutes", src, src, tgt))
        }
        CheckCmd::Adjunction {
            left,
            right,
            unit,
            counit,
        } => adjunction(model, left, right, unit.as_deref().zip(counit.as_deref()), config),
        CheckCmd::PreservesLimit { functor: f, diagram: d } => {
            let f = functor(model, f)?;
            let d = diagram(model, d)?;
            let search = find_limit_with(d, config)?;
            match search.status {
                SearchStatus::BudgetExceeded => Err(budget_error(search.cones_examined, config)),
                SearchStatus::Inconsistent => Err(inconsistent(search.diagnostic)),
                SearchStatus::Verified => {
                    match &search.universal {
                        None => Ok(pass("the diagram has no limit, so preservation holds vacuously")
                            .fact("limit_exists", false)),
                        Some(cone) => {
                            let (d_cat, c_cat) = (f.source(), f.target());
                            let apex = d_cat.object_name(cone.apex);
                            if check_preserves_limit(f, d, cone, config)? {
                                Ok(pass("the image of the limit cone is a limit")
                                    .fact("limit_exists", true)
                                    .fact("apex", apex)
                                    .fact("image_apex", c_cat.object_name(f.obj(cone.apex))))
                            } else {
                                Ok(fail(
                                    "the image of the limit cone is not a limit",
                                    Witness {
                                        description: format!("F({apex}) with the image legs is not universal"),
                                        objects: vec![c_cat.object_name(f.obj(cone.apex))],
                                        arrows: cone.legs.iter().map(|&l| c_cat.arrow_name(f.arr(l))).collect(),
                                    },
                                )
                                .fact("limit_exists", true)
                                .fact("apex", apex))
                            }
                        }
                    }
                }
            }
        }
    }
}

fn budget_error(examined: usize, config: &Config) -> CliError {
    CliError::Core(fincat_core::Error::Capacity {
        what: "cone enumeration",
        needed: examined as u128,
        budget: config.max_cones as u128,
    })
}

fn inconsistent(diagnostic: Option<String>) -> CliError {
    CliError::Core(fincat_core::Error::Structural(diagnostic.unwrap_or_else(|| {
        "non-isomorphic universal cones; the composition table is unlawful".into()
    })))
}

fn adjunction(model: &Model, left: &str, right: &str, unit_counit: Option<(&str, &str)>, config: &Config) -> CmdResult {
    let f = functor(model, left)?;
    let g = functor(model, right)?;
    let (d, c) = (f.source(), f.target());
    let family = match unit_counit {
        None => None,
        Some((u, e)) => {
            let cand = AdjunctionCandidate {
                left: f.clone(),
                right: g.clone(),
                unit: transformation(model, u)?.clone(),
                counit: transformation(model, e)?.clone(),
            };
            let tri = check_unit_counit(&cand)?;
            if let Some((which, o)) = tri.failure {
                let (side, cat) = match which {
                    Triangle::Left => ("left", d),
                    Triangle::Right => ("right", c),
                };
                return Ok(fail(
                    format!("the {side} triangle identity fails"),
                    Witness {
                        description: format!("the {side} triangle does not commute at {}", cat.object_name(o)),
                        objects: vec![cat.object_name(o)],
                        arrows: vec![],
                    },
                ));
            }
            Some(family_from_unit(f, g, &cand.unit)?)
        }
    };
    let r = check_homset_adjunction(f, g, family.as_ref(), config)?;
    match r.status {
        HomsetStatus::Pass => {
            let mut out = pass(format!("{left} is left adjoint to {right}")).fact("detail", r.detail);
            if family.is_some() {
                out = out.fact("triangles", true);
            }
            Ok(out)
        }
        HomsetStatus::Unverified => Err(CliError::Core(fincat_core::Error::Capacity {
            what: "bijection-family search",
            needed: 0,
            budget: config.max_search_hom as u128,
        })),
        HomsetStatus::Fail => {
            let witness = match r.violation {
                Some(HomsetViolation::NotBijective { a, b }) => Witness {
                    description: format!(
                        "Hom(F{}, {}) and Hom({}, G{}) are not in bijection",
                        d.object_name(a),
                        c.object_name(b),
                        d.object_name(a),
                        c.object_name(b)
                    ),
                    objects: vec![d.object_name(a), c.object_name(b)],
                    arrows: vec![],
                },
                Some(HomsetViolation::NaturalInFirst { a, b, x, f: h }) => Witness {
                    description: "the bijection is not natural in the first argument".into(),
                    objects: vec![d.object_name(a), c.object_name(b)],
                    arrows: vec![d.arrow_name(x), c.arrow_name(h)],
                },
                Some(HomsetViolation::NaturalInSecond { a, b, y, f: h }) => Witness {
                    description: "the bijection is not natural in the second argument".into(),
                    objects: vec![d.object_name(a), c.object_name(b)],
                    arrows: vec![c.arrow_name(y), c.arrow_name(h)],
                },
                Some(HomsetViolation::NoFamily) | None => Witness {
                    description: r.detail.clone(),
                    ..Witness::default()
                },
            };
            Ok(fail(format!("{left} is not left adjoint to {right}"), witness).fact("detail", r.detail))
        }
    }
}

fn universal(d: &Diagram, limit: bool, config: &Config) -> CmdResult {
    let (shape, cat) = (d.source().clone(), d.target().clone());
    let r = validate_diagram(d);
    if let Some(v) = r.violations.first() {
        return Err(CliError::Core(fincat_core::Error::Contract(format!(
            "the diagram is not a functor: {}",
            v.detail
        ))));
    }
    let word = if limit { "limit" } else { "colimit" };
    let legs_of = |apex: ObjectId, legs: &[fincat_core::ArrowId]| -> Vec<String> {
        let mut row = vec![cat.object_name(apex)];
        row.push(
            shape
                .objects()
                .zip(legs)
                .map(|(x, &l)| format!("{}:{}", shape.object_name(x), cat.arrow_name(l)))
                .collect::<Vec<_>>()
                .join(" "),
        );
        row
    };
    let (status, found, qualifying, examined, diagnostic, rows) = if limit {
        let s = find_limit_with(d, config)?;
        let rows: Vec<Vec<String>> = s
            .certificate
            .iter()
            .map(|m| {
                let mut row = legs_of(m.cone.apex, &m.cone.legs);
                row.push(cat.arrow_name(m.mediating));
                row
            })
            .collect();
        let found = s.found().map(|c| (c.apex, c.legs.clone()));
        (s.status, found, s.qualifying, s.cones_examined, s.diagnostic, rows)
    } else {
        let s = find_colimit_with(d, config)?;
        let rows: Vec<Vec<String>> = s
            .certificate
            .iter()
            .map(|m| {
                let mut row = legs_of(m.cone.nadir, &m.cone.legs);
                row.push(cat.arrow_name(m.mediating));
                row
            })
            .collect();
        let found = s.found().map(|c| (c.nadir, c.legs.clone()));
        (s.status, found, s.qualifying, s.cones_examined, s.diagnostic, rows)
    };
    match status {
        SearchStatus::BudgetExceeded => return Err(budget_error(examined, config)),
        SearchStatus::Inconsistent => return Err(inconsistent(diagnostic)),
        SearchStatus::Verified => {}
    }
    let vertex = if limit { "apex" } else { "nadir" };
    Ok(match found {
        Some((apex, legs)) => {
            let leg_names: Vec<Value> = shape
                .objects()
                .zip(&legs)
                .map(|(x, &l)| json!({ "index": shape.object_name(x), "arrow": cat.arrow_name(l) }))
                .collect();
            pass(format!("found a {word} at {}", cat.object_name(apex)))
                .fact(vertex, cat.object_name(apex))
                .fact("legs", leg_names)
                .fact("qualifying", names_of_objects(&cat, &qualifying))
                .fact("cones_examined", examined)
                .fact("certificate", "verified")
                .table("certificate", &[vertex, "legs", "mediating"], rows)
        }
        None => fail(
            format!("the diagram has no {word}"),
            Witness {
                description: diagnostic.unwrap_or_else(|| format!("none of the {examined} cones is universal")),
                objects: shape.objects().map(|x| cat.object_name(d.obj(x))).collect(),
                arrows: vec![],
            },
        )
        .fact("cones_examined", examined),
    })
}

fn slice(cat: &Arc<PresentedCategory>, x: ObjectId, config: &Config) -> CmdResult {
    let s = slice_category_with(cat, x, config)?;
    let sc = &s.category;
    let r = validate_category(sc);
    if !r.ok {
        return Ok(law_report(&r, "", sc, sc, sc));
    }
    let id = cat.identity(x)?;
    let top = s.object_of(id).ok_or_else(|| {
        CliError::Core(fincat_core::Error::Structural(
            "the identity is missing from the slice".into(),
        ))
    })?;
    let not_unique = sc.objects().find(|&o| sc.hom(o, top).len() != 1);
    let rows = s
        .objects
        .iter()
        .enumerate()
        .map(|(i, &phi)| {
            vec![
                sc.object_name(ObjectId(i)),
                cat.arrow_name(phi),
                cat.object_name(cat.dom(phi)),
            ]
        })
        .collect();
    let base = pass(format!(
        "the slice over {} is lawful and its identity is terminal",
        cat.object_name(x)
    ))
    .fact("objects", sc.object_count())
    .fact("arrows", sc.arrow_count())
    .fact("terminal", sc.object_name(top))
    .table("objects", &["object", "arrow", "domain"], rows);
    Ok(match not_unique {
        None => base,
        Some(o) => fail(
            "the identity is not terminal in the slice",
            Witness {
                description: format!(
                    "{} has {} arrows to the identity",
                    sc.object_name(o),
                    sc.hom(o, top).len()
                ),
                objects: vec![sc.object_name(o)],
                arrows: vec![],
            },
        ),
    })
}

fn topos_check(cat: &Arc<PresentedCategory>, config: &Config) -> CmdResult {
    let report = topos_check_with(cat, config)?;
    let rows = report
        .clauses()
        .iter()
        .map(|(name, c)| {
            let status = serde_json::to_value(c.status).expect("status serializes");
            vec![
                name.to_string(),
                status.as_str().unwrap_or_default().to_string(),
                c.detail.clone(),
            ]
        })
        .collect();
    if report.is_topos() {
        return Ok(pass("every topos clause holds")
            .fact("reduction", report.reduction)
            .table("clauses", &["clause", "status", "detail"], rows));
    }
    let clauses = report.clauses();
    if let Some((name, c)) = clauses.iter().find(|(_, c)| c.status == ClauseStatus::Fail) {
        return Ok(fail(
            format!("not a topos: {}", c.detail),
            Witness {
                description: format!("{name}: {}", c.detail),
                objects: names_of_objects(cat, &c.objects),
                arrows: names_of_arrows(cat, &c.arrows),
            },
        )
        .fact("failed_clause", *name)
        .table("clauses", &["clause", "status", "detail"], rows));
    }
    Err(CliError::Core(fincat_core::Error::Capacity {
        what: "topos clause search",
        needed: 0,
        budget: config.max_cones as u128,
    }))
}

fn elements(s: &FinSetObject) -> Vec<String> {
    (0..s.size).map(|i| s.element_name(i)).collect()
}

fn map_rows(f: &FinSetArrow) -> Vec<Vec<String>> {
    (0..f.dom.size)
        .map(|x| vec![f.dom.element_name(x), f.cod.element_name(f.apply(x))])
        .collect()
}

fn show_mapping(f: &FinSetArrow) -> String {
    let parts: Vec<String> = (0..f.dom.size)
        .map(|x| format!("{}->{}", f.dom.element_name(x), f.cod.element_name(f.apply(x))))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn show_subset(s: &Subobject) -> String {
    let names: Vec<String> = s.members().iter().map(|&m| s.ambient().element_name(m)).collect();
    format!("{{{}}}", names.join(", "))
}

fn mono(f: &FinSetArrow) -> Result<Subobject, CliError> {
    Ok(Subobject::from_mono(f)?)
}

fn finset(cmd: &FinsetCmd, model: &Model, config: &Config) -> CmdResult {
    let set = |n: &str| refs::finset(model, n);
    let map = |n: &str| refs::map(model, n);
    let carrier = |size: usize, what: &'static str| -> Result<(), CliError> {
        if size > config.max_carrier {
            return Err(CliError::Core(fincat_core::Error::Capacity {
                what,
                needed: size as u128,
                budget: config.max_carrier as u128,
            }));
        }
        Ok(())
    };
    Ok(match cmd {
        FinsetCmd::Product { a, b } => {
            let (a, b) = (set(a)?, set(b)?);
            carrier(a.size.saturating_mul(b.size), "product")?;
            let p = fs_product(&a, &b);
            let rows = (0..p.object.size)
                .map(|i| {
                    vec![
                        i.to_string(),
                        a.element_name(p.pi1.apply(i)),
                        b.element_name(p.pi2.apply(i)),
                    ]
                })
                .collect();
            pass(format!("the product has {} elements", p.object.size))
                .fact("size", p.object.size)
                .table("projections", &["element", "pi1", "pi2"], rows)
        }
        FinsetCmd::Coproduct { a, b } => {
            let (a, b) = (set(a)?, set(b)?);
            carrier(a.size.saturating_add(b.size), "coproduct")?;
            let c = fs_coproduct(&a, &b);
            let mut rows: Vec<Vec<String>> = (0..a.size)
                .map(|x| vec!["iota1".into(), a.element_name(x), c.iota1.apply(x).to_string()])
                .collect();
            rows.extend((0..b.size).map(|y| vec!["iota2".into(), b.element_name(y), c.iota2.apply(y).to_string()]));
            pass(format!("the coproduct has {} elements", c.object.size))
                .fact("size", c.object.size)
                .table("injections", &["injection", "element", "image"], rows)
        }
        FinsetCmd::Equalizer { f, g } => {
            let e = fs_equalizer(&map(f)?, &map(g)?)?;
            pass(format!("the equalizer has {} elements", e.object.size))
                .fact("size", e.object.size)
                .table("inclusion", &["element", "image"], map_rows(&e.inclusion))
        }
        FinsetCmd::Coequalizer { f, g } => {
            let q = fs_coequalizer(&map(f)?, &map(g)?)?;
            pass(format!("the coequalizer has {} classes", q.object.size))
                .fact("size", q.object.size)
                .table("quotient", &["element", "class"], map_rows(&q.quotient))
        }
        FinsetCmd::Pullback { f, g } => {
            let (f, g) = (map(f)?, map(g)?);
            let p = fs_pullback(&f, &g)?;
            let rows = (0..p.object.size)
                .map(|i| {
                    vec![
                        i.to_string(),
                        f.dom.element_name(p.p1.apply(i)),
                        g.dom.element_name(p.p2.apply(i)),
                    ]
                })
                .collect();
            pass(format!("the pullback has {} elements", p.object.size))
                .fact("size", p.object.size)
                .table("projections", &["element", "p1", "p2"], rows)
        }
        FinsetCmd::Pushout { f, g } => {
            let (f, g) = (map(f)?, map(g)?);
            let p = fs_pushout(&f, &g)?;
            let mut rows: Vec<Vec<String>> = (0..f.cod.size)
                .map(|x| vec!["iota1".into(), f.cod.element_name(x), p.iota1.apply(x).to_string()])
                .collect();
            rows.extend(
                (0..g.cod.size).map(|y| vec!["iota2".into(), g.cod.element_name(y), p.iota2.apply(y).to_string()]),
            );
            pass(format!("the pushout has {} elements", p.object.size))
                .fact("size", p.object.size)
                .table("injections", &["injection", "element", "class"], rows)
        }
        FinsetCmd::Exp { a, b } => {
            let (a, b) = (set(a)?, set(b)?);
            let e = fs_exponential_with(&a, &b, config.max_carrier)?;
            carrier(e.product.object.size, "evaluation table")?;
            let members = (0..e.exp_object.size)
                .map(|k| vec![k.to_string(), show_mapping(&e.decode(k))])
                .collect();
            let mut eval = Vec::with_capacity(e.product.object.size);
            for x in 0..a.size {
                for k in 0..e.exp_object.size {
                    eval.push(vec![
                        a.element_name(x),
                        k.to_string(),
                        b.element_name(e.ev.apply(e.product.encode(x, k))),
                    ]);
                }
            }
            pass(format!("the exponential has {} elements", e.exp_object.size))
                .fact("size", e.exp_object.size)
                .table("elements", &["code", "mapping"], members)
                .table("evaluation", &["argument", "code", "value"], eval)
        }
        FinsetCmd::Curry { map: m, a } => {
            let (f, a) = (map(m)?, set(a)?);
            if a.size == 0 || f.dom.size % a.size != 0 {
                return Err(CliError::Usage(format!(
                    "the domain of `{m}` has {} elements, which is not a multiple of {}",
                    f.dom.size, a.size
                )));
            }
            let c = FinSetObject::new(f.dom.size / a.size);
            let bundle = fs_exponential_with(&a, &f.cod, config.max_carrier)?;
            let curried = bundle.curry(&f, &c)?;
            let rows = (0..c.size)
                .map(|y| {
                    let k = curried.apply(y);
                    vec![y.to_string(), k.to_string(), show_mapping(&bundle.decode(k))]
                })
                .collect();
            pass(format!("curried into {} -> {}^{}", c.size, f.cod.size, a.size))
                .fact("exponent", a.size)
                .fact("parameter", c.size)
                .table("curried", &["parameter", "code", "mapping"], rows)
        }
        FinsetCmd::Name { map: m } => {
            let f = map(m)?;
            let name = fs_name(&f)?;
            pass(format!(
                "the name of {m} is element {} of the exponential",
                name.apply(0)
            ))
            .fact("code", name.apply(0))
            .fact("exponential_size", name.cod.size)
            .fact("mapping", show_mapping(&f))
        }
        FinsetCmd::Members { set: s } => {
            let s = set(s)?;
            carrier(s.size, "members")?;
            let points = fs_members(&s);
            let rows = points
                .iter()
                .enumerate()
                .map(|(i, p)| vec![i.to_string(), s.element_name(p.apply(0))])
                .collect();
            pass(format!("{} members", points.len()))
                .fact("count", points.len())
                .table("members", &["point", "element"], rows)
        }
        FinsetCmd::Classifier => {
            let omega = fs_subobject_classifier();
            pass("the classifier has two truth values")
                .fact("size", omega.object.size)
                .fact("true", omega.true_arrow.apply(0))
                .fact("false", omega.false_arrow().apply(0))
                .table(
                    "truth values",
                    &["element"],
                    elements(&omega.object).into_iter().map(|e| vec![e]).collect(),
                )
        }
        FinsetCmd::Char { map: m } => {
            let s = mono(&map(m)?)?;
            let chi = fs_characteristic(&s);
            pass(format!("the characteristic arrow of {}", show_subset(&s)))
                .fact("subobject", show_subset(&s))
                .table("characteristic", &["element", "truth"], map_rows(&chi))
        }
        FinsetCmd::Invimage { map: m, sub } => {
            let f = map(m)?;
            let s = mono(&map(sub)?)?;
            let pre = fs_inverse_image(&f, &s)?;
            pass(format!("the inverse image is {}", show_subset(&pre)))
                .fact("size", pre.len())
                .fact("inverse_image", show_subset(&pre))
        }
        FinsetCmd::Subalg { set: s } => {
            let s = set(s)?;
            let alg = SubobjectAlgebra::with_budget(&s, config.max_carrier)?;
            let subs = alg.elements();
            let mut rows = Vec::with_capacity(subs.len());
            let mut boolean = true;
            for x in &subs {
                let neg = alg.complement(x)?;
                boolean &= alg.join(x, &neg)? == alg.top();
                rows.push(vec![show_subset(x), show_subset(&neg)]);
            }
            pass(format!("{} subobjects", subs.len()))
                .fact("count", subs.len())
                .fact("boolean", boolean)
                .table("subobjects", &["subobject", "complement"], rows)
        }
        FinsetCmd::Power { set: s } => {
            let s = set(s)?;
            let p = fs_power_object_with(&s, config.max_carrier)?;
            let rows = (0..p.object.size)
                .map(|k| vec![k.to_string(), show_subset(&p.subobject_at(k))])
                .collect();
            pass(format!("the power object has {} elements", p.object.size))
                .fact("size", p.object.size)
                .table("elements", &["code", "subset"], rows)
        }
    })
}
