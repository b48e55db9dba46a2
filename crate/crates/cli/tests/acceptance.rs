//! The acceptance criteria, each against an oracle that does not share code
//! with the routine under test. Prints one line per criterion and exits
//! non-zero if any fails.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use fincat_core::adjunction::{
    check_homset_adjunction, check_unit_counit, curry_adjunction, curry_family, HomsetStatus,
};
use fincat_core::catalog::{chain, terminal_category};
use fincat_core::config::DEFAULT_SEED;
use fincat_core::finset::*;
use fincat_core::fullsub::{full_subcategory_of_finset, full_subcategory_of_finset_with, FinSetSubcategory};
use fincat_core::gen::{CategoryGenerator, GenLimits};
use fincat_core::limits::*;
use fincat_core::slice::slice_category;
use fincat_core::topos::{topos_check, ClauseStatus};
use fincat_core::{is_epic, is_monic, validate_category, ArrowId, Config, ObjectId, PresentedCategory};
use fincat_dsl::{format_spec, parse_spec, parse_spec_bytes};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn set(n: usize) -> FinSetObject {
    FinSetObject::new(n)
}

fn arrows(d: usize, c: usize) -> Vec<FinSetArrow> {
    set(d).arrows_to(&set(c)).collect()
}

fn pow(b: u64, e: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b)
}

fn injective(table: &[usize]) -> bool {
    (0..table.len()).all(|i| (0..i).all(|j| table[i] != table[j]))
}

fn surjective(table: &[usize], cod: usize) -> bool {
    (0..cod).all(|y| table.contains(&y))
}

/// Brute-force isomorphism test straight from the composition table.
fn isomorphic(cat: &PresentedCategory, a: ObjectId, b: ObjectId) -> bool {
    let (ia, ib) = (cat.identity(a).unwrap(), cat.identity(b).unwrap());
    cat.hom(a, b).iter().any(|&f| {
        cat.hom(b, a)
            .iter()
            .any(|&g| cat.composite(g, f) == Some(ia) && cat.composite(f, g) == Some(ib))
    })
}

fn terminals(cat: &PresentedCategory) -> Vec<ObjectId> {
    cat.objects()
        .filter(|&t| cat.objects().all(|o| cat.hom(o, t).len() == 1))
        .collect()
}

fn initials(cat: &PresentedCategory) -> Vec<ObjectId> {
    cat.objects()
        .filter(|&t| cat.objects().all(|o| cat.hom(t, o).len() == 1))
        .collect()
}

fn monic_epic_oracle() -> Verdict {
    let sub = full_subcategory_of_finset(&[0, 1, 2, 3]).map_err(|e| e.to_string())?;
    let cat = sub.category();
    let mut checked = 0;
    for a in cat.arrows() {
        let f = sub.finset_arrow(a);
        let monic = is_monic(cat, a).unwrap().holds;
        let epic = is_epic(cat, a).unwrap().holds;
        ensure!(monic == injective(&f.table), "monic mismatch at {f:?}");
        ensure!(epic == surjective(&f.table, f.cod.size), "epic mismatch at {f:?}");
        checked += 1;
    }
    Ok(format!("{checked} arrows agree"))
}

/// Generic solver against direct constructions. Both the found cone and
/// the directly built cone must pass the universality check.
struct LimitCheck<'a> {
    sub: &'a FinSetSubcategory,
    cfg: Config,
    checked: usize,
}

impl LimitCheck<'_> {
    fn obj(&self, n: usize) -> ObjectId {
        self.sub.object_of_size(n).expect("universe holds every size")
    }

    fn emb(&self, f: &FinSetArrow) -> ArrowId {
        self.sub.embed(f).unwrap()
    }

    fn limit(&mut self, d: &Diagram, direct: Cone) -> Result<(), String> {
        let cat = self.sub.category();
        let s = find_limit_with(d, &self.cfg).unwrap();
        let found = s.found().ok_or("generic limit not found")?;
        ensure!(isomorphic(cat, found.apex, direct.apex), "apexes differ");
        ensure!(
            is_limit_cone(d, &direct, &self.cfg).unwrap(),
            "direct cone not universal"
        );
        for m in &s.certificate {
            let through: Vec<ArrowId> = found
                .legs
                .iter()
                .map(|&l| cat.compose(l, m.mediating).unwrap())
                .collect();
            ensure!(through == m.cone.legs, "certificate entry does not factor");
        }
        self.checked += 1;
        Ok(())
    }

    fn colimit(&mut self, d: &Diagram, direct: Cocone) -> Result<(), String> {
        let cat = self.sub.category();
        let s = find_colimit_with(d, &self.cfg).unwrap();
        let found = s.found().ok_or("generic colimit not found")?;
        ensure!(isomorphic(cat, found.nadir, direct.nadir), "nadirs differ");
        ensure!(
            is_colimit_cocone(d, &direct, &self.cfg).unwrap(),
            "direct cocone not universal"
        );
        for m in &s.certificate {
            let through: Vec<ArrowId> = found
                .legs
                .iter()
                .map(|&l| cat.compose(m.mediating, l).unwrap())
                .collect();
            ensure!(through == m.cone.legs, "certificate entry does not factor");
        }
        self.checked += 1;
        Ok(())
    }

    fn binary(&mut self, a: usize, b: usize) -> Result<(), String> {
        let cat = self.sub.category().clone();
        let d = shape_diagram(ShapeName::DiscretePair, cat, &[self.obj(a), self.obj(b)], &[]).unwrap();
        let p = fs_product(&set(a), &set(b));
        let cone = Cone {
            apex: self.obj(p.object.size),
            legs: vec![self.emb(&p.pi1), self.emb(&p.pi2)],
        };
        self.limit(&d, cone)?;
        let c = fs_coproduct(&set(a), &set(b));
        let cocone = Cocone {
            nadir: self.obj(c.object.size),
            legs: vec![self.emb(&c.iota1), self.emb(&c.iota2)],
        };
        self.colimit(&d, cocone)
    }

    fn pair(&mut self, f: &FinSetArrow, g: &FinSetArrow) -> Result<(), String> {
        let cat = self.sub.category().clone();
        let (fa, ga) = (self.emb(f), self.emb(g));
        let (a, b) = (self.obj(f.dom.size), self.obj(f.cod.size));
        let d = shape_diagram(ShapeName::ParallelPair, cat.clone(), &[a, b], &[fa, ga]).unwrap();
        let eq = fs_equalizer(f, g).unwrap();
        let e = self.emb(&eq.inclusion);
        self.limit(
            &d,
            Cone {
                apex: self.obj(eq.object.size),
                legs: vec![e, cat.compose(fa, e).unwrap()],
            },
        )?;
        let coeq = fs_coequalizer(f, g).unwrap();
        let q = self.emb(&coeq.quotient);
        self.colimit(
            &d,
            Cocone {
                nadir: self.obj(coeq.object.size),
                legs: vec![cat.compose(q, fa).unwrap(), q],
            },
        )?;
        let d = shape_diagram(ShapeName::Cospan, cat.clone(), &[a, a, b], &[fa, ga]).unwrap();
        let pb = fs_pullback(f, g).unwrap();
        let (p1, p2) = (self.emb(&pb.p1), self.emb(&pb.p2));
        self.limit(
            &d,
            Cone {
                apex: self.obj(pb.object.size),
                legs: vec![p1, p2, cat.compose(fa, p1).unwrap()],
            },
        )?;
        let d = shape_diagram(ShapeName::Span, cat.clone(), &[b, b, a], &[fa, ga]).unwrap();
        let po = fs_pushout(f, g).unwrap();
        let (i1, i2) = (self.emb(&po.iota1), self.emb(&po.iota2));
        self.colimit(
            &d,
            Cocone {
                nadir: self.obj(po.object.size),
                legs: vec![i1, i2, cat.compose(i1, fa).unwrap()],
            },
        )
    }
}

fn generic_vs_direct() -> Verdict {
    let cfg = Config::default().with_budget(100_000);
    let universe = full_subcategory_of_finset(&[0, 1, 2, 3, 4]).unwrap();
    let mut check = LimitCheck {
        sub: &universe,
        cfg,
        checked: 0,
    };
    for a in 0..=2 {
        for b in 0..=2 {
            check.binary(a, b)?;
            for f in arrows(a, b) {
                for g in arrows(a, b) {
                    check.pair(&f, &g)?;
                }
            }
        }
    }
    let mut total = check.checked;
    let wide = full_subcategory_of_finset_with(&[1, 2, 3, 5, 6], &cfg).unwrap();
    let mut check = LimitCheck {
        sub: &wide,
        cfg,
        checked: 0,
    };
    check.binary(3, 2)?;
    let three = full_subcategory_of_finset(&[0, 1, 2, 3]).unwrap();
    let mut spot = LimitCheck {
        sub: &three,
        cfg,
        checked: 0,
    };
    let f = FinSetArrow::new(set(3), set(3), vec![0, 1, 2]).unwrap();
    let g = FinSetArrow::new(set(3), set(3), vec![0, 2, 2]).unwrap();
    spot.pair(&f, &g)?;
    total += check.checked + spot.checked;
    Ok(format!("{total} universal constructions agree"))
}

fn counting_laws() -> Verdict {
    let omega = fs_subobject_classifier();
    for a in 0..=4usize {
        for b in 0..=4usize {
            let (a64, b64) = (a as u64, b as u64);
            ensure!(
                fs_product(&set(a), &set(b)).object.size as u64 == a64 * b64,
                "product {a} {b}"
            );
            ensure!(
                fs_coproduct(&set(a), &set(b)).object.size as u64 == a64 + b64,
                "coproduct {a} {b}"
            );
            let exp = fs_exponential(&set(a), &set(b)).unwrap().exp_object.size as u64;
            ensure!(exp == pow(b64, a64), "exponential {b}^{a}");
        }
        ensure!(
            sub_algebra(&set(a)).unwrap().elements().len() as u64 == pow(2, a as u64),
            "Sub({a})"
        );
        ensure!(fs_members(&set(a)).len() == a, "Hom(1, {a})");
        ensure!(
            set(a).arrows_to(&omega.object).count() as u64 == pow(2, a as u64),
            "Hom({a}, Omega)"
        );
    }
    ensure!(count_mappings(0, 0) == 1, "0^0");
    Ok("sizes 0..=4".into())
}

/// Whether `m : S → A`, `S → 1`, `χ`, `true` form a pullback square,
/// decided from tables: the square commutes and `m` is a bijection onto
/// `χ⁻¹(true)`.
fn pullback_oracle(m: &FinSetArrow, chi: &FinSetArrow, truth: usize) -> bool {
    let commutes = m.table.iter().all(|&x| chi.table[x] == truth);
    let fiber: BTreeSet<usize> = (0..chi.dom.size).filter(|&x| chi.table[x] == truth).collect();
    let image: BTreeSet<usize> = m.table.iter().copied().collect();
    commutes && injective(&m.table) && image == fiber
}

fn classifier_bijection() -> Verdict {
    let omega = fs_subobject_classifier();
    let truth = omega.true_arrow.table[0];
    let mut squares = 0;
    for a in 0..=4usize {
        let ambient = set(a);
        let subs = sub_algebra(&ambient).unwrap().elements();
        let chars: HashSet<Vec<usize>> = subs.iter().map(|s| fs_characteristic(s).table).collect();
        ensure!(chars.len() == subs.len(), "not injective at {a}");
        ensure!(chars.len() as u64 == pow(2, a as u64), "not surjective at {a}");
        for s in &subs {
            let m = s.inclusion();
            let to_one = FinSetArrow::to_terminal(&m.dom);
            let mut winners = Vec::new();
            for chi in ambient.arrows_to(&omega.object) {
                let engine = fs_is_pullback(&m, &to_one, &chi, &omega.true_arrow).unwrap();
                ensure!(engine == pullback_oracle(&m, &chi, truth), "pullback test disagrees");
                if engine {
                    winners.push(chi);
                }
                squares += 1;
            }
            ensure!(
                winners == vec![fs_characteristic(s)],
                "classifying arrow not unique for {s:?}"
            );
        }
    }
    Ok(format!("{squares} candidate squares"))
}

fn name_bijection() -> Verdict {
    for a in 0..=3usize {
        for b in 0..=3usize {
            let bundle = fs_exponential(&set(a), &set(b)).unwrap();
            let mut points = BTreeSet::new();
            for f in arrows(a, b) {
                let name = fs_name(&f).unwrap();
                let code = name.table[0];
                // Base-|B| digits, most significant first.
                let digits: Vec<usize> = (0..a)
                    .map(|i| code / pow(b as u64, (a - 1 - i) as u64) as usize % b.max(1))
                    .collect();
                ensure!(digits == f.table, "name of {f:?} decodes to {digits:?}");
                let back = bundle
                    .ev
                    .after(&fs_product_arrow(&FinSetArrow::identity(&set(a)), &name))
                    .unwrap();
                ensure!(back.table == f.table, "ev . (id x name) != f for {f:?}");
                points.insert(code);
            }
            ensure!(
                points == (0..bundle.exp_object.size).collect(),
                "names miss points of {b}^{a}"
            );
        }
    }
    Ok("sizes 0..=3".into())
}

fn heyting_is_boolean() -> Verdict {
    let mut pairs = 0;
    for a in 0..=4usize {
        let ambient = set(a);
        let alg = sub_algebra(&ambient).unwrap();
        let full: u64 = (1 << a) - 1;
        let mask = |s: &Subobject| s.members().iter().fold(0u64, |m, &i| m | 1 << i);
        for s in 0..=full {
            let ss = Subobject::from_mask(&ambient, s);
            let not_s = alg.complement(&ss).unwrap();
            ensure!(mask(&alg.join(&ss, &not_s).unwrap()) == full, "S v ~S != A");
            for t in 0..=full {
                let largest = (0..=full).filter(|u| s & u & !t == 0).fold(0, |acc, u| acc | u);
                let tt = Subobject::from_mask(&ambient, t);
                let imp = mask(&alg.implies(&ss, &tt).unwrap());
                ensure!(imp == largest, "implication differs from the largest U");
                ensure!(imp == (!s & full) | t, "implication differs from ~S v T");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn curry(a: usize, f: &FinSetArrow, y: usize) -> FinSetArrow {
    fs_exponential(&set(a), &f.cod).unwrap().curry(f, &set(y)).unwrap()
}

fn curry_adjunction_instance() -> Verdict {
    // Presented adjunction, where the universes are closed under both functors.
    for (a, d, c) in [(0usize, vec![0, 1, 2], vec![0]), (1, vec![0, 1, 2], vec![0, 1, 2])] {
        let (d, c) = (
            full_subcategory_of_finset(&d).unwrap(),
            full_subcategory_of_finset(&c).unwrap(),
        );
        let cand = curry_adjunction(a, &d, &c).unwrap();
        ensure!(check_unit_counit(&cand).unwrap().holds, "triangles fail for A = {a}");
        let family = curry_family(a, &d, &c, &cand).unwrap();
        let r = check_homset_adjunction(&cand.left, &cand.right, Some(&family), &Config::default()).unwrap();
        ensure!(
            r.status == HomsetStatus::Pass,
            "hom-set check fails for A = {a}: {}",
            r.detail
        );
    }
    // Pointwise in finite sets for every exponent up to two.
    let mut cases: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..=2 {
        for x in 0..=2 {
            for y in 0..=2 {
                cases.push((a, x, y));
            }
        }
    }
    cases.push((2, 3, 2));
    for &(a, x, y) in &cases {
        let id_a = FinSetArrow::identity(&set(a));
        let images: HashSet<Vec<usize>> = arrows(a * y, x).iter().map(|f| curry(a, f, y).table).collect();
        ensure!(
            images.len() as u64 == pow(pow(x as u64, a as u64), y as u64),
            "curry not bijective at {a},{x},{y}"
        );
        for f in arrows(a * y, x) {
            let cf = curry(a, &f, y);
            for y0 in 0..=2usize {
                for u in arrows(y0, y) {
                    let lhs = curry(a, &f.after(&fs_product_arrow(&id_a, &u)).unwrap(), y0);
                    ensure!(lhs == cf.after(&u).unwrap(), "not natural in Y at {a},{x},{y}");
                }
            }
            for x1 in 0..=2usize {
                for v in arrows(x, x1) {
                    let lhs = curry(a, &v.after(&f).unwrap(), y);
                    ensure!(
                        lhs == fs_exp_arrow(&set(a), &v).unwrap().after(&cf).unwrap(),
                        "not natural in X"
                    );
                }
            }
        }
    }
    for a in 0..=2usize {
        let base = set(a);
        let id_a = FinSetArrow::identity(&base);
        for n in 0..=3usize {
            let obj = set(n);
            let ay = fs_product(&base, &obj).object;
            let outer = fs_exponential(&base, &ay).unwrap();
            let eta = outer.curry(&FinSetArrow::identity(&ay), &obj).unwrap();
            ensure!(
                outer.ev.after(&fs_product_arrow(&id_a, &eta)).unwrap() == FinSetArrow::identity(&ay),
                "left triangle at {a},{n}"
            );
            let inner = fs_exponential(&base, &obj).unwrap();
            let xa = inner.exp_object.clone();
            let axa = fs_product(&base, &xa).object;
            let eta_g = fs_exponential(&base, &axa)
                .unwrap()
                .curry(&FinSetArrow::identity(&axa), &xa)
                .unwrap();
            let right = fs_exp_arrow(&base, &inner.ev).unwrap().after(&eta_g).unwrap();
            ensure!(right == FinSetArrow::identity(&xa), "right triangle at {a},{n}");
        }
    }
    Ok(format!("{} pointwise cases, presented for A <= 1", cases.len()))
}

fn uniqueness_up_to_iso() -> Verdict {
    let mut gen = CategoryGenerator::new(DEFAULT_SEED, GenLimits::default());
    let mut slices = 0;
    for i in 0..200 {
        let cat = Arc::new(gen.next_category());
        ensure!(
            cat.object_count() <= 4 && cat.arrow_count() <= 12,
            "category {i} too large"
        );
        ensure!(validate_category(&cat).ok, "category {i} is unlawful");
        let empty = shape_diagram(ShapeName::Empty, cat.clone(), &[], &[]).unwrap();
        let lim = find_limit(&empty).unwrap();
        let colim = find_colimit(&empty).unwrap();
        ensure!(lim.qualifying == terminals(&cat), "terminals differ in category {i}");
        ensure!(colim.qualifying == initials(&cat), "initials differ in category {i}");
        for group in [&lim.qualifying, &colim.qualifying] {
            for &x in group.iter() {
                for &y in group.iter() {
                    ensure!(isomorphic(&cat, x, y), "category {i}: {x} and {y} not isomorphic");
                }
            }
        }
        for x in cat.objects() {
            let s = slice_category(&cat, x).unwrap();
            let top = s
                .object_of(cat.identity(x).unwrap())
                .ok_or("identity missing from slice")?;
            ensure!(
                terminals(&s.category).contains(&top),
                "Id_{x} not terminal in slice {i}"
            );
            slices += 1;
        }
    }
    Ok(format!("200 categories, {slices} slices"))
}

/// Least fixed point of the relation generated by `(f(x), g(x))`.
fn relational_closure(f: &FinSetArrow, g: &FinSetArrow) -> Vec<Vec<bool>> {
    let n = f.cod.size;
    let mut rel = vec![vec![false; n]; n];
    for (i, row) in rel.iter_mut().enumerate() {
        row[i] = true;
    }
    for x in 0..f.dom.size {
        rel[f.table[x]][g.table[x]] = true;
        rel[g.table[x]][f.table[x]] = true;
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if rel[i][j] && rel[j][k] && !rel[i][k] {
                        rel[i][k] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn coequalizer_oracle() -> Verdict {
    let mut pairs = 0;
    for d in 0..=3usize {
        for c in 0..=3usize {
            for f in arrows(d, c) {
                for g in arrows(d, c) {
                    let q = fs_coequalizer(&f, &g).unwrap().quotient;
                    let rel = relational_closure(&f, &g);
                    for i in 0..c {
                        for j in 0..c {
                            ensure!(
                                (q.table[i] == q.table[j]) == rel[i][j],
                                "classes differ for {f:?} {g:?}"
                            );
                        }
                    }
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} parallel pairs"))
}

fn topos_verdicts() -> Verdict {
    let t = Arc::new(terminal_category());
    ensure!(topos_check(&t).unwrap().is_topos(), "terminal category is not a topos");
    let slice = slice_category(&t, ObjectId(0)).unwrap();
    ensure!(
        topos_check(&slice.category).unwrap().is_topos(),
        "its slice is not a topos"
    );
    let two_three = full_subcategory_of_finset(&[2, 3]).unwrap();
    let r = topos_check(two_three.category()).unwrap();
    ensure!(
        r.finite_limits.status == ClauseStatus::Fail,
        "[2,3] passes finite limits"
    );
    ensure!(
        r.finite_limits.detail == "no terminal object",
        "[2,3] reports `{}`",
        r.finite_limits.detail
    );
    let r = topos_check(&Arc::new(chain(2))).unwrap();
    ensure!(
        r.classifier.status == ClauseStatus::Fail,
        "chain(2) classifier clause is {:?}",
        r.classifier.status
    );
    Ok("four verdicts as expected".into())
}

fn corpus_files() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../dsl/corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "cat"))
        .collect();
    files.sort();
    files
}

const SOUP: [&str; 24] = [
    "category", "finset", "map", "diagram", "functor", "nattrans", "object", "arrow", "compose", "{", "}", ";", ",",
    ":", ".", "=", "->", "=>", "A", "f", "id_A", "span", "\n", "#",
];

fn fuzz_input(rng: &mut ChaCha8Rng, corpus: &[Vec<u8>]) -> Vec<u8> {
    match rng.gen_range(0..3) {
        0 => (0..rng.gen_range(0..200)).map(|_| rng.gen()).collect(),
        1 => (0..rng.gen_range(0..60))
            .map(|_| SOUP[rng.gen_range(0..SOUP.len())])
            .collect::<Vec<_>>()
            .join(" ")
            .into_bytes(),
        _ => {
            let mut out = corpus[rng.gen_range(0..corpus.len())].clone();
            for _ in 0..rng.gen_range(1..10) {
                let pos = rng.gen_range(0..=out.len());
                match rng.gen_range(0..3) {
                    0 if pos < out.len() => {
                        out.remove(pos);
                    }
                    1 => out.insert(pos, rng.gen()),
                    _ => out.truncate(pos),
                }
            }
            out
        }
    }
}

fn parser_robustness() -> Verdict {
    let corpus: Vec<Vec<u8>> = corpus_files().iter().map(|p| std::fs::read(p).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let (mut errors, mut documents) = (0, 0);
    for i in 0..10_000 {
        let input = fuzz_input(&mut rng, &corpus);
        let outcome = catch_unwind(|| parse_spec_bytes(&input)).map_err(|_| format!("input {i} panicked"))?;
        match outcome {
            Ok(doc) => {
                ensure!(
                    parse_spec(&format_spec(&doc)).as_ref() == Ok(&doc),
                    "input {i} does not round-trip"
                );
                documents += 1;
            }
            Err(e) => {
                ensure!(
                    e.code.as_str().starts_with('E') && e.span.line >= 1,
                    "input {i} has an uncoded error"
                );
                errors += 1;
            }
        }
    }
    for (path, bytes) in corpus_files().iter().zip(&corpus) {
        let doc = parse_spec_bytes(bytes).map_err(|e| format!("{}: {e}", path.display()))?;
        let text = format_spec(&doc);
        let again = parse_spec(&text).map_err(|e| e.to_string())?;
        ensure!(again == doc, "{} does not round-trip", path.display());
        ensure!(
            format_spec(&again) == text,
            "{} formatting is not idempotent",
            path.display()
        );
    }
    Ok(format!(
        "{errors} coded errors, {documents} documents, {} corpus files",
        corpus.len()
    ))
}

struct Criterion {
    title: &'static str,
    limit: Option<Duration>,
    run: fn() -> Verdict,
}

fn main() {
    let criteria = [
        Criterion {
            title: "monic iff injective, epic iff surjective",
            limit: Some(Duration::from_secs(10)),
            run: monic_epic_oracle,
        },
        Criterion {
            title: "generic limits match direct constructions",
            limit: Some(Duration::from_secs(60)),
            run: generic_vs_direct,
        },
        Criterion {
            title: "counting laws",
            limit: None,
            run: counting_laws,
        },
        Criterion {
            title: "classifier bijection and uniqueness",
            limit: None,
            run: classifier_bijection,
        },
        Criterion {
            title: "names are the points of the exponential",
            limit: None,
            run: name_bijection,
        },
        Criterion {
            title: "Heyting implication is Boolean",
            limit: None,
            run: heyting_is_boolean,
        },
        Criterion {
            title: "currying adjunction",
            limit: None,
            run: curry_adjunction_instance,
        },
        Criterion {
            title: "terminal and initial objects unique up to iso",
            limit: None,
            run: uniqueness_up_to_iso,
        },
        Criterion {
            title: "coequalizer equals relational closure",
            limit: None,
            run: coequalizer_oracle,
        },
        Criterion {
            title: "topos verdicts",
            limit: None,
            run: topos_verdicts,
        },
        Criterion {
            title: "parser robustness and round trip",
            limit: Some(Duration::from_secs(30)),
            run: parser_robustness,
        },
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let suite = Instant::now();
    let mut failures = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut verdict = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&verdict, c.limit) {
            if elapsed > limit {
                verdict = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d.clone()),
            Err(d) => {
                failures += 1;
                ("FAIL", d.clone())
            }
        };
        println!("criterion {:>2} {tag} [{elapsed:>9.2?}] {}: {detail}", i + 1, c.title);
    }
    let total = suite.elapsed();
    println!(
        "acceptance: {} of {} passed in {total:.2?}",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 || total > Duration::from_secs(300) {
        std::process::exit(1);
    }
}
