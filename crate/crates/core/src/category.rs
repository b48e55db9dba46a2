//! Finite presented categories.
//!
//! A [`PresentedCategory`] lists its objects and arrows explicitly, designates
//! one identity per object and carries a composition table that is consulted,
//! never extended. Every property in this module is decided by exhaustive
//! quantification over the finite arrow set, and every counterexample is the
//! lexicographically least violating tuple by arrow index.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finset::{decode_mapping, encode_mapping};
use crate::report::{Law, ValidationReport, ViolationSink};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ObjectId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ArrowId(pub usize);

impl fmt::Display for ObjectId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for ArrowId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ObjectInfo {
    label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ArrowInfo {
    label: Option<String>,
    dom: ObjectId,
    cod: ObjectId,
}

/// Where composites come from.
#[derive(Debug, Clone, PartialEq, Eq)]
enum CompositionTable {
    Explicit(HashMap<(ArrowId, ArrowId), ArrowId>),
    /// Hom-sets of a full subcategory of finite sets, laid out as contiguous
    /// blocks of canonically encoded mapping tables. Entries are looked up by
    /// decoding, composing and re-encoding.
    FinSet(FinSetLayout),
    /// The table of the opposite category: `g ∘op f = f ∘ g`.
    Opposite(Box<CompositionTable>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FinSetLayout {
    pub sizes: Vec<usize>,
    /// First arrow of `Hom(a, b)` at `a * n + b`.
    pub offsets: Vec<usize>,
}

impl FinSetLayout {
    pub fn offset(&self, dom: ObjectId, cod: ObjectId) -> usize {
        self.offsets[dom.0 * self.sizes.len() + cod.0]
    }
}

impl CompositionTable {
    /// `flipped` means `arrows` has dom and cod swapped relative to the
    /// category this table belongs to.
    fn lookup(&self, arrows: &[ArrowInfo], flipped: bool, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        match self {
            CompositionTable::Explicit(map) => map.get(&(g, f)).copied(),
            CompositionTable::Opposite(inner) => inner.lookup(arrows, !flipped, f, g),
            CompositionTable::FinSet(layout) => {
                let ends = |x: ArrowId| {
                    let info = &arrows[x.0];
                    if flipped {
                        (info.cod, info.dom)
                    } else {
                        (info.dom, info.cod)
                    }
                };
                let (a, b) = ends(f);
                let c = ends(g).1;
                let (na, nb, nc) = (layout.sizes[a.0], layout.sizes[b.0], layout.sizes[c.0]);
                let ft = decode_mapping(f.0 - layout.offset(a, b), na, nb);
                let gt = decode_mapping(g.0 - layout.offset(b, c), nb, nc);
                let composite: Vec<usize> = ft.iter().map(|&x| gt[x]).collect();
                Some(ArrowId(layout.offset(a, c) + encode_mapping(&composite, nc)))
            }
        }
    }
}

/// A finite category given by explicit object and arrow lists, designated
/// identities and a composition table. Construction only checks that
/// references resolve; the category axioms are checked by
/// [`validate_category`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedCategory {
    objects: Vec<ObjectInfo>,
    arrows: Vec<ArrowInfo>,
    identities: Vec<Option<ArrowId>>,
    table: CompositionTable,
    homs: Vec<Vec<ArrowId>>,
}

#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    objects: Vec<ObjectInfo>,
    arrows: Vec<ArrowInfo>,
    identities: Vec<Option<ArrowId>>,
    compose: HashMap<(ArrowId, ArrowId), ArrowId>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_object(&mut self, label: impl Into<String>) -> ObjectId {
        self.push_object(Some(label.into()))
    }

    pub fn add_unlabeled_object(&mut self) -> ObjectId {
        self.push_object(None)
    }

    fn push_object(&mut self, label: Option<String>) -> ObjectId {
        self.objects.push(ObjectInfo { label });
        self.identities.push(None);
        ObjectId(self.objects.len() - 1)
    }

    pub fn add_arrow(&mut self, label: impl Into<String>, dom: ObjectId, cod: ObjectId) -> ArrowId {
        self.push_arrow(Some(label.into()), dom, cod)
    }

    pub fn add_unlabeled_arrow(&mut self, dom: ObjectId, cod: ObjectId) -> ArrowId {
        self.push_arrow(None, dom, cod)
    }

    fn push_arrow(&mut self, label: Option<String>, dom: ObjectId, cod: ObjectId) -> ArrowId {
        self.arrows.push(ArrowInfo { label, dom, cod });
        ArrowId(self.arrows.len() - 1)
    }

    /// Adds an arrow `id_<label>` on `obj` and designates it as the identity.
    pub fn add_identity(&mut self, obj: ObjectId) -> ArrowId {
        let label = self
            .objects
            .get(obj.0)
            .and_then(|o| o.label.as_ref())
            .map(|l| format!("id_{l}"));
        let id = self.push_arrow(label, obj, obj);
        if let Some(slot) = self.identities.get_mut(obj.0) {
            *slot = Some(id);
        }
        id
    }

    pub fn set_identity(&mut self, obj: ObjectId, arrow: ArrowId) {
        if let Some(slot) = self.identities.get_mut(obj.0) {
            *slot = Some(arrow);
        }
    }

    pub fn set_compose(&mut self, g: ArrowId, f: ArrowId, h: ArrowId) {
        self.compose.insert((g, f), h);
    }

    pub fn has_compose(&self, g: ArrowId, f: ArrowId) -> bool {
        self.compose.contains_key(&(g, f))
    }

    /// Fills `id ∘ f = f` and `f ∘ id = f` for every designated identity
    /// wherever the table has no explicit entry.
    pub fn fill_identity_composites(&mut self) {
        for (i, arrow) in self.arrows.iter().enumerate() {
            let f = ArrowId(i);
            if let Some(Some(id_cod)) = self.identities.get(arrow.cod.0) {
                self.compose.entry((*id_cod, f)).or_insert(f);
            }
            if let Some(Some(id_dom)) = self.identities.get(arrow.dom.0) {
                self.compose.entry((f, *id_dom)).or_insert(f);
            }
        }
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn build(self) -> Result<PresentedCategory> {
        let n_obj = self.objects.len();
        let n_arr = self.arrows.len();
        let obj_ok = |o: ObjectId| o.0 < n_obj;
        let arr_ok = |a: ArrowId| a.0 < n_arr;

        unique_labels(self.objects.iter().map(|o| o.label.as_deref()), "object")?;
        unique_labels(self.arrows.iter().map(|a| a.label.as_deref()), "arrow")?;
        for (i, a) in self.arrows.iter().enumerate() {
            if !obj_ok(a.dom) || !obj_ok(a.cod) {
                return Err(Error::Structural(format!(
                    "arrow {} references a missing object",
                    ArrowId(i)
                )));
            }
        }
        for (o, id) in self.identities.iter().enumerate() {
            if let Some(id) = id {
                if !arr_ok(*id) {
                    return Err(Error::Structural(format!(
                        "identity of {} is the missing arrow {id}",
                        ObjectId(o)
                    )));
                }
            }
        }
        for (&(g, f), &h) in &self.compose {
            if !arr_ok(g) || !arr_ok(f) || !arr_ok(h) {
                return Err(Error::Structural(format!(
                    "composition entry {g} . {f} = {h} references a missing arrow"
                )));
            }
            if self.arrows[f.0].cod != self.arrows[g.0].dom {
                return Err(Error::Structural(format!(
                    "composition entry {g} . {f} is given for a non-composable pair"
                )));
            }
        }
        Ok(PresentedCategory::assemble(
            self.objects,
            self.arrows,
            self.identities,
            CompositionTable::Explicit(self.compose),
        ))
    }
}

fn unique_labels<'a>(labels: impl Iterator<Item = Option<&'a str>>, kind: &str) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for label in labels.flatten() {
        if !seen.insert(label) {
            return Err(Error::Structural(format!("duplicate {kind} label `{label}`")));
        }
    }
    Ok(())
}

impl PresentedCategory {
    fn assemble(
        objects: Vec<ObjectInfo>,
        arrows: Vec<ArrowInfo>,
        identities: Vec<Option<ArrowId>>,
        table: CompositionTable,
    ) -> Self {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, a) in arrows.iter().enumerate() {
            homs[a.dom.0 * n + a.cod.0].push(ArrowId(i));
        }
        PresentedCategory {
            objects,
            arrows,
            identities,
            table,
            homs,
        }
    }

    /// Full subcategory of finite sets with one object per carrier size. Arrow
    /// `offset(a, b) + code` is the mapping whose canonical encoding is `code`.
    pub(crate) fn finset_layout(
        sizes: &[usize],
        labels: Vec<String>,
        max_arrows: usize,
    ) -> Result<(Self, FinSetLayout)> {
        let n = sizes.len();
        let mut total: u128 = 0;
        for &a in sizes {
            for &b in sizes {
                total += crate::finset::count_mappings(a, b);
            }
        }
        if total > max_arrows as u128 {
            return Err(Error::Capacity {
                what: "full finite-set subcategory arrows",
                needed: total,
                budget: max_arrows as u128,
            });
        }
        let objects = labels.into_iter().map(|l| ObjectInfo { label: Some(l) }).collect();
        let mut arrows = Vec::with_capacity(total as usize);
        let mut offsets = Vec::with_capacity(n * n);
        let mut identities = vec![None; n];
        for a in 0..n {
            for b in 0..n {
                offsets.push(arrows.len());
                let count = crate::finset::count_mappings(sizes[a], sizes[b]) as usize;
                if a == b {
                    let id: Vec<usize> = (0..sizes[a]).collect();
                    identities[a] = Some(ArrowId(arrows.len() + encode_mapping(&id, sizes[a])));
                }
                for _ in 0..count {
                    arrows.push(ArrowInfo {
                        label: None,
                        dom: ObjectId(a),
                        cod: ObjectId(b),
                    });
                }
            }
        }
        let layout = FinSetLayout {
            sizes: sizes.to_vec(),
            offsets,
        };
        let cat = Self::assemble(objects, arrows, identities, CompositionTable::FinSet(layout.clone()));
        Ok((cat, layout))
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjectId> + '_ {
        (0..self.objects.len()).map(ObjectId)
    }

    pub fn arrows(&self) -> impl Iterator<Item = ArrowId> + '_ {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn has_object(&self, o: ObjectId) -> bool {
        o.0 < self.objects.len()
    }

    pub fn has_arrow(&self, a: ArrowId) -> bool {
        a.0 < self.arrows.len()
    }

    pub fn check_object(&self, o: ObjectId) -> Result<ObjectId> {
        if self.has_object(o) {
            Ok(o)
        } else {
            Err(Error::UnknownObject(o))
        }
    }

    pub fn check_arrow(&self, a: ArrowId) -> Result<ArrowId> {
        if self.has_arrow(a) {
            Ok(a)
        } else {
            Err(Error::UnknownArrow(a))
        }
    }

    pub fn object_label(&self, o: ObjectId) -> Option<&str> {
        self.objects.get(o.0).and_then(|i| i.label.as_deref())
    }

    pub fn arrow_label(&self, a: ArrowId) -> Option<&str> {
        self.arrows.get(a.0).and_then(|i| i.label.as_deref())
    }

    /// Label if present, otherwise the index form `o3`.
    pub fn object_name(&self, o: ObjectId) -> String {
        self.object_label(o).map_or_else(|| o.to_string(), str::to_owned)
    }

    pub fn arrow_name(&self, a: ArrowId) -> String {
        self.arrow_label(a).map_or_else(|| a.to_string(), str::to_owned)
    }

    pub fn find_object(&self, label: &str) -> Option<ObjectId> {
        self.objects
            .iter()
            .position(|o| o.label.as_deref() == Some(label))
            .map(ObjectId)
    }

    pub fn find_arrow(&self, label: &str) -> Option<ArrowId> {
        self.arrows
            .iter()
            .position(|a| a.label.as_deref() == Some(label))
            .map(ArrowId)
    }

    /// Domain of `a`. Panics when `a` does not belong to this category.
    pub fn dom(&self, a: ArrowId) -> ObjectId {
        self.arrows[a.0].dom
    }

    /// Codomain of `a`. Panics when `a` does not belong to this category.
    pub fn cod(&self, a: ArrowId) -> ObjectId {
        self.arrows[a.0].cod
    }

    pub fn identity(&self, o: ObjectId) -> Result<ArrowId> {
        self.check_object(o)?;
        self.identities[o.0].ok_or(Error::MissingIdentity(o))
    }

    pub fn designated_identity(&self, o: ObjectId) -> Option<ArrowId> {
        self.identities.get(o.0).copied().flatten()
    }

    pub fn is_identity(&self, a: ArrowId) -> bool {
        self.has_arrow(a) && self.identities[self.dom(a).0] == Some(a)
    }

    /// Arrows `a → b` in index order.
    pub fn hom(&self, a: ObjectId, b: ObjectId) -> &[ArrowId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// The table entry for `g ∘ f`, or `None` when there is none.
    pub fn composite(&self, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        self.table.lookup(&self.arrows, false, g, f)
    }

    /// `g ∘ f`, read from the composition table.
    pub fn compose(&self, g: ArrowId, f: ArrowId) -> Result<ArrowId> {
        self.check_arrow(g)?;
        self.check_arrow(f)?;
        if self.cod(f) != self.dom(g) {
            return Err(Error::NotComposable { g, f });
        }
        self.composite(g, f).ok_or(Error::MissingComposite { g, f })
    }

    /// Composes a path given in application order: `chain(&[f, g, h]) = h ∘ g ∘ f`.
    pub fn chain(&self, path: &[ArrowId]) -> Result<ArrowId> {
        let (&first, rest) = path
            .split_first()
            .ok_or_else(|| Error::contract("empty composition path"))?;
        rest.iter().try_fold(first, |acc, &next| self.compose(next, acc))
    }

    /// The opposite category. Arrow and object ids are preserved; dom and cod
    /// swap and the composition table is transposed.
    pub fn opposite(&self) -> PresentedCategory {
        let arrows = self
            .arrows
            .iter()
            .map(|a| ArrowInfo {
                label: a.label.clone(),
                dom: a.cod,
                cod: a.dom,
            })
            .collect();
        let table = match &self.table {
            CompositionTable::Opposite(inner) => (**inner).clone(),
            other => CompositionTable::Opposite(Box::new(other.clone())),
        };
        Self::assemble(self.objects.clone(), arrows, self.identities.clone(), table)
    }
}

/// Checks every category axiom exhaustively, reporting one least witness per
/// violated law.
pub fn validate_category(cat: &PresentedCategory) -> ValidationReport {
    let mut sink = ViolationSink::default();

    for o in cat.objects() {
        match cat.designated_identity(o) {
            None => sink.push(
                Law::IdentityMissing,
                vec![o],
                vec![],
                format!("object {} has no identity", cat.object_name(o)),
            ),
            Some(id) if cat.dom(id) != o || cat.cod(id) != o => sink.push(
                Law::IdentityTyping,
                vec![o],
                vec![id],
                format!("identity of {} is not an arrow {0} -> {0}", cat.object_name(o)),
            ),
            Some(_) => {}
        }
    }

    for g in cat.arrows() {
        for f in cat.arrows() {
            if cat.cod(f) != cat.dom(g) {
                continue;
            }
            match cat.composite(g, f) {
                None => sink.push(
                    Law::CompositionIncomplete,
                    vec![],
                    vec![g, f],
                    format!("no entry for {} . {}", cat.arrow_name(g), cat.arrow_name(f)),
                ),
                Some(h) if cat.dom(h) != cat.dom(f) || cat.cod(h) != cat.cod(g) => sink.push(
                    Law::CompositeTyping,
                    vec![],
                    vec![g, f, h],
                    format!(
                        "{} . {} = {} has the wrong type",
                        cat.arrow_name(g),
                        cat.arrow_name(f),
                        cat.arrow_name(h)
                    ),
                ),
                Some(_) => {}
            }
        }
    }

    for f in cat.arrows() {
        let (a, b) = (cat.dom(f), cat.cod(f));
        if let Some(id_b) = cat.designated_identity(b) {
            if cat.composite(id_b, f).is_some_and(|h| h != f) {
                sink.push(
                    Law::LeftIdentity,
                    vec![b],
                    vec![id_b, f],
                    format!("id . {} != {}", cat.arrow_name(f), cat.arrow_name(f)),
                );
            }
        }
        if let Some(id_a) = cat.designated_identity(a) {
            if cat.composite(f, id_a).is_some_and(|h| h != f) {
                sink.push(
                    Law::RightIdentity,
                    vec![a],
                    vec![f, id_a],
                    format!("{} . id != {}", cat.arrow_name(f), cat.arrow_name(f)),
                );
            }
        }
    }

    // (h ∘ g) ∘ f = h ∘ (g ∘ f), witnesses ordered as (h, g, f).
    'assoc: for h in cat.arrows() {
        let c = cat.dom(h);
        for b in cat.objects() {
            for &g in cat.hom(b, c) {
                for a in cat.objects() {
                    for &f in cat.hom(a, b) {
                        let left = cat.composite(h, g).and_then(|hg| cat.composite(hg, f));
                        let right = cat.composite(g, f).and_then(|gf| cat.composite(h, gf));
                        if let (Some(l), Some(r)) = (left, right) {
                            if l != r {
                                sink.push(
                                    Law::Associativity,
                                    vec![],
                                    vec![h, g, f],
                                    format!(
                                        "({h} . {g}) . {f} = {} but {h} . ({g} . {f}) = {}",
                                        cat.arrow_name(l),
                                        cat.arrow_name(r),
                                        h = cat.arrow_name(h),
                                        g = cat.arrow_name(g),
                                        f = cat.arrow_name(f),
                                    ),
                                );
                                break 'assoc;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut report = sink.finish();
    report.violations.sort_by_key(|v| v.law);
    report
}

/// Verdict of a cancellation test, with the least counterexample pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cancellation {
    pub holds: bool,
    pub witness: Option<(ArrowId, ArrowId)>,
}

impl Cancellation {
    fn from_witness(witness: Option<(ArrowId, ArrowId)>) -> Self {
        Cancellation {
            holds: witness.is_none(),
            witness,
        }
    }
}

/// Least pair `(g, h)`, `g < h`, among `candidates` with equal image.
fn least_collision(
    candidates: &[ArrowId],
    mut image: impl FnMut(ArrowId) -> Result<ArrowId>,
) -> Result<Option<(ArrowId, ArrowId)>> {
    let mut groups: HashMap<ArrowId, (ArrowId, Option<ArrowId>)> = HashMap::new();
    for &g in candidates {
        let key = image(g)?;
        let entry = groups.entry(key).or_insert((g, None));
        if entry.1.is_none() && entry.0 != g {
            entry.1 = Some(g);
        }
    }
    Ok(groups
        .into_values()
        .filter_map(|(first, second)| second.map(|s| (first, s)))
        .min())
}

/// `f` is monic iff `f ∘ g = f ∘ h` forces `g = h` for all parallel `g, h`
/// into `dom(f)`.
pub fn is_monic(cat: &PresentedCategory, f: ArrowId) -> Result<Cancellation> {
    cat.check_arrow(f)?;
    let a = cat.dom(f);
    let mut best: Option<(ArrowId, ArrowId)> = None;
    for c in cat.objects() {
        if let Some(w) = least_collision(cat.hom(c, a), |g| cat.compose(f, g))? {
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    Ok(Cancellation::from_witness(best))
}

/// `f` is epic iff `g ∘ f = h ∘ f` forces `g = h` for all parallel `g, h`
/// out of `cod(f)`.
pub fn is_epic(cat: &PresentedCategory, f: ArrowId) -> Result<Cancellation> {
    cat.check_arrow(f)?;
    let b = cat.cod(f);
    let mut best: Option<(ArrowId, ArrowId)> = None;
    for c in cat.objects() {
        if let Some(w) = least_collision(cat.hom(b, c), |g| cat.compose(g, f))? {
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    Ok(Cancellation::from_witness(best))
}

/// The two-sided inverse of `f`, if one exists.
pub fn is_iso(cat: &PresentedCategory, f: ArrowId) -> Result<Option<ArrowId>> {
    cat.check_arrow(f)?;
    let (a, b) = (cat.dom(f), cat.cod(f));
    let (id_a, id_b) = (cat.identity(a)?, cat.identity(b)?);
    for &g in cat.hom(b, a) {
        if cat.compose(g, f)? == id_a && cat.compose(f, g)? == id_b {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Every isomorphism `a → b`, in arrow-index order.
pub fn find_isomorphisms(cat: &PresentedCategory, a: ObjectId, b: ObjectId) -> Result<Vec<ArrowId>> {
    cat.check_object(a)?;
    cat.check_object(b)?;
    let mut out = Vec::new();
    for &f in cat.hom(a, b) {
        if is_iso(cat, f)?.is_some() {
            out.push(f);
        }
    }
    Ok(out)
}

pub fn are_isomorphic(cat: &PresentedCategory, a: ObjectId, b: ObjectId) -> Result<bool> {
    cat.check_object(a)?;
    cat.check_object(b)?;
    if a == b {
        return Ok(true);
    }
    for &f in cat.hom(a, b) {
        if is_iso(cat, f)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn terminal() -> PresentedCategory {
        let mut b = CategoryBuilder::new();
        let o = b.add_object("*");
        b.add_identity(o);
        b.fill_identity_composites();
        b.build().unwrap()
    }

    fn chain3() -> (PresentedCategory, [ArrowId; 3]) {
        let mut b = CategoryBuilder::new();
        let [x, y, z] = [b.add_object("A"), b.add_object("B"), b.add_object("C")];
        for o in [x, y, z] {
            b.add_identity(o);
        }
        let ab = b.add_arrow("ab", x, y);
        let bc = b.add_arrow("bc", y, z);
        let ac = b.add_arrow("ac", x, z);
        b.set_compose(bc, ab, ac);
        b.fill_identity_composites();
        (b.build().unwrap(), [ab, bc, ac])
    }

    #[test]
    fn terminal_category_is_valid() {
        let cat = terminal();
        let report = validate_category(&cat);
        assert!(report.ok, "{report:?}");
        let id = cat.identity(ObjectId(0)).unwrap();
        assert_eq!(cat.compose(id, id).unwrap(), id);
    }

    #[test]
    fn missing_identity_is_reported() {
        let mut b = CategoryBuilder::new();
        let o = b.add_object("A");
        let a = b.add_arrow("e", o, o);
        b.set_compose(a, a, a);
        let cat = b.build().unwrap();
        let report = validate_category(&cat);
        assert!(!report.ok);
        assert_eq!(report.violations[0].law, Law::IdentityMissing);
        assert_eq!(report.violations[0].law.name(), "identity missing for object");
    }

    #[test]
    fn linear_poset_is_valid() {
        let (cat, _) = chain3();
        assert!(validate_category(&cat).ok);
    }

    #[test]
    fn incomplete_table_is_reported() {
        let mut b = CategoryBuilder::new();
        let [x, y, z] = [b.add_object("A"), b.add_object("B"), b.add_object("C")];
        for o in [x, y, z] {
            b.add_identity(o);
        }
        let ab = b.add_arrow("ab", x, y);
        let bc = b.add_arrow("bc", y, z);
        b.fill_identity_composites();
        let cat = b.build().unwrap();
        let report = validate_category(&cat);
        let v = report.first(Law::CompositionIncomplete).unwrap();
        assert_eq!(v.arrows, vec![bc, ab]);
    }

    #[test]
    fn broken_associativity_has_least_witness() {
        let mut b = CategoryBuilder::new();
        let o = b.add_object("A");
        b.add_identity(o);
        let p = b.add_arrow("p", o, o);
        let q = b.add_arrow("q", o, o);
        // (p.p).p = q.p = q but p.(p.p) = p.q = p
        b.set_compose(p, p, q);
        b.set_compose(q, q, p);
        b.set_compose(p, q, p);
        b.set_compose(q, p, q);
        b.fill_identity_composites();
        let cat = b.build().unwrap();
        let report = validate_category(&cat);
        let v = report.first(Law::Associativity).unwrap();
        assert_eq!(v.arrows, vec![p, p, p]);
    }

    #[test]
    fn dangling_references_are_structural() {
        let mut b = CategoryBuilder::new();
        let o = b.add_object("A");
        b.add_arrow("f", o, ObjectId(7));
        assert!(matches!(b.build(), Err(Error::Structural(_))));

        let mut b = CategoryBuilder::new();
        let o = b.add_object("A");
        let f = b.add_arrow("f", o, o);
        b.set_compose(f, f, ArrowId(9));
        assert!(matches!(b.build(), Err(Error::Structural(_))));
    }

    #[test]
    fn non_composable_table_entry_rejected() {
        let mut b = CategoryBuilder::new();
        let [x, y] = [b.add_object("A"), b.add_object("B")];
        let f = b.add_arrow("f", x, y);
        b.set_compose(f, f, f);
        assert!(matches!(b.build(), Err(Error::Structural(_))));
    }

    #[test]
    fn compose_reads_table_and_checks_order() {
        let (cat, [ab, bc, ac]) = chain3();
        assert_eq!(cat.compose(bc, ab).unwrap(), ac);
        assert_eq!(cat.compose(ab, bc), Err(Error::NotComposable { g: ab, f: bc }));
        let id_b = cat.identity(ObjectId(1)).unwrap();
        assert_eq!(cat.compose(id_b, ab).unwrap(), ab);
        assert_eq!(cat.chain(&[ab, bc]).unwrap(), ac);
    }

    #[test]
    fn poset_arrow_has_no_inverse() {
        let (cat, [ab, ..]) = chain3();
        assert_eq!(is_iso(&cat, ab).unwrap(), None);
        let id = cat.identity(ObjectId(0)).unwrap();
        assert_eq!(is_iso(&cat, id).unwrap(), Some(id));
        assert!(is_monic(&cat, id).unwrap().holds);
        assert!(is_epic(&cat, id).unwrap().holds);
    }

    #[test]
    fn terminal_isomorphisms() {
        let cat = terminal();
        let id = cat.identity(ObjectId(0)).unwrap();
        assert_eq!(find_isomorphisms(&cat, ObjectId(0), ObjectId(0)).unwrap(), vec![id]);
    }

    #[test]
    fn opposite_reverses_and_transposes() {
        let (cat, [ab, bc, ac]) = chain3();
        let op = cat.opposite();
        assert!(validate_category(&op).ok);
        assert_eq!(op.dom(ab), ObjectId(1));
        assert_eq!(op.compose(ab, bc).unwrap(), ac);
        assert_eq!(op.opposite(), cat);
    }
}
