use serde::Serialize;

use super::{FinSetArrow, FinSetObject, UnionFind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Product {
    pub object: FinSetObject,
    pub pi1: FinSetArrow,
    pub pi2: FinSetArrow,
}

impl Product {
    pub fn encode(&self, a: usize, b: usize) -> usize {
        a * self.pi2.cod.size + b
    }

    /// The mediating arrow `⟨f, g⟩` with `π1∘u = f` and `π2∘u = g`.
    pub fn pair(&self, f: &FinSetArrow, g: &FinSetArrow) -> Result<FinSetArrow> {
        if f.dom.size != g.dom.size || f.cod.size != self.pi1.cod.size || g.cod.size != self.pi2.cod.size {
            return Err(Error::contract("pairing legs do not form a cone over the factors"));
        }
        let table = f.table.iter().zip(&g.table).map(|(&a, &b)| self.encode(a, b)).collect();
        Ok(FinSetArrow {
            dom: f.dom.clone(),
            cod: self.object.clone(),
            table,
        })
    }
}

pub fn fs_product(a: &FinSetObject, b: &FinSetObject) -> Product {
    let object = FinSetObject::new(a.size * b.size);
    let (pi1, pi2) = if b.size == 0 {
        (Vec::new(), Vec::new())
    } else {
        (0..object.size).map(|i| (i / b.size, i % b.size)).unzip()
    };
    Product {
        pi1: FinSetArrow {
            dom: object.clone(),
            cod: a.clone(),
            table: pi1,
        },
        pi2: FinSetArrow {
            dom: object.clone(),
            cod: b.clone(),
            table: pi2,
        },
        object,
    }
}

/// `f × g : A×C → A'×C'`, acting componentwise on canonical pairs.
pub fn fs_product_arrow(f: &FinSetArrow, g: &FinSetArrow) -> FinSetArrow {
    let src = fs_product(&f.dom, &g.dom);
    let dst = fs_product(&f.cod, &g.cod);
    let table = (0..src.object.size)
        .map(|i| dst.encode(f.apply(src.pi1.apply(i)), g.apply(src.pi2.apply(i))))
        .collect();
    FinSetArrow {
        dom: src.object,
        cod: dst.object,
        table,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coproduct {
    pub object: FinSetObject,
    pub iota1: FinSetArrow,
    pub iota2: FinSetArrow,
}

impl Coproduct {
    /// The mediating arrow `[f, g]` with `u∘ι1 = f` and `u∘ι2 = g`.
    pub fn copair(&self, f: &FinSetArrow, g: &FinSetArrow) -> Result<FinSetArrow> {
        if f.cod.size != g.cod.size || f.dom.size != self.iota1.dom.size || g.dom.size != self.iota2.dom.size {
            return Err(Error::contract(
                "copairing legs do not form a cocone under the summands",
            ));
        }
        Ok(FinSetArrow {
            dom: self.object.clone(),
            cod: f.cod.clone(),
            table: f.table.iter().chain(&g.table).copied().collect(),
        })
    }
}

pub fn fs_coproduct(a: &FinSetObject, b: &FinSetObject) -> Coproduct {
    let object = FinSetObject::new(a.size + b.size);
    Coproduct {
        iota1: FinSetArrow {
            dom: a.clone(),
            cod: object.clone(),
            table: (0..a.size).collect(),
        },
        iota2: FinSetArrow {
            dom: b.clone(),
            cod: object.clone(),
            table: (a.size..a.size + b.size).collect(),
        },
        object,
    }
}

fn require_parallel(f: &FinSetArrow, g: &FinSetArrow, what: &str) -> Result<()> {
    if f.is_parallel(g) {
        Ok(())
    } else {
        Err(Error::contract(format!("{what} needs parallel arrows")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equalizer {
    pub object: FinSetObject,
    pub inclusion: FinSetArrow,
    #[serde(skip)]
    f: FinSetArrow,
    #[serde(skip)]
    g: FinSetArrow,
}

impl Equalizer {
    /// The unique `u` with `e∘u = z`, for `z` equalizing the pair.
    pub fn factor(&self, z: &FinSetArrow) -> Result<FinSetArrow> {
        if z.cod.size != self.f.dom.size || self.f.after(z)? != self.g.after(z)? {
            return Err(Error::contract("arrow does not equalize the pair"));
        }
        let table = z
            .table
            .iter()
            .map(|x| self.inclusion.table.binary_search(x).expect("equalized element"))
            .collect();
        Ok(FinSetArrow {
            dom: z.dom.clone(),
            cod: self.object.clone(),
            table,
        })
    }
}

pub fn fs_equalizer(f: &FinSetArrow, g: &FinSetArrow) -> Result<Equalizer> {
    require_parallel(f, g, "equalizer")?;
    let members: Vec<usize> = (0..f.dom.size).filter(|&a| f.apply(a) == g.apply(a)).collect();
    let object = FinSetObject::new(members.len());
    Ok(Equalizer {
        inclusion: FinSetArrow {
            dom: object.clone(),
            cod: f.dom.clone(),
            table: members,
        },
        object,
        f: f.clone(),
        g: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coequalizer {
    pub object: FinSetObject,
    pub quotient: FinSetArrow,
    #[serde(skip)]
    f: FinSetArrow,
    #[serde(skip)]
    g: FinSetArrow,
}

impl Coequalizer {
    /// The unique `u` with `u∘q = z`, for `z` coequalizing the pair.
    pub fn factor(&self, z: &FinSetArrow) -> Result<FinSetArrow> {
        if z.dom.size != self.f.cod.size || z.after(&self.f)? != z.after(&self.g)? {
            return Err(Error::contract("arrow does not coequalize the pair"));
        }
        let mut table = vec![usize::MAX; self.object.size];
        for (x, &class) in self.quotient.table.iter().enumerate() {
            if table[class] == usize::MAX {
                table[class] = z.apply(x);
            } else if table[class] != z.apply(x) {
                return Err(Error::contract("arrow is not constant on a quotient class"));
            }
        }
        Ok(FinSetArrow {
            dom: self.object.clone(),
            cod: z.cod.clone(),
            table,
        })
    }
}

/// Quotients the codomain by the equivalence relation generated by
/// `f(a) ~ g(a)`; classes are numbered by least member.
pub fn fs_coequalizer(f: &FinSetArrow, g: &FinSetArrow) -> Result<Coequalizer> {
    require_parallel(f, g, "coequalizer")?;
    let mut uf = UnionFind::new(f.cod.size);
    for a in 0..f.dom.size {
        uf.union(f.apply(a), g.apply(a));
    }
    let (count, classes) = uf.canonical_classes();
    let object = FinSetObject::new(count);
    Ok(Coequalizer {
        quotient: FinSetArrow {
            dom: f.cod.clone(),
            cod: object.clone(),
            table: classes,
        },
        object,
        f: f.clone(),
        g: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pullback {
    pub object: FinSetObject,
    pub p1: FinSetArrow,
    pub p2: FinSetArrow,
    #[serde(skip)]
    f: FinSetArrow,
    #[serde(skip)]
    g: FinSetArrow,
}

impl Pullback {
    /// The unique `u` with `p1∘u = q1` and `p2∘u = q2`.
    pub fn factor(&self, q1: &FinSetArrow, q2: &FinSetArrow) -> Result<FinSetArrow> {
        if q1.dom.size != q2.dom.size
            || q1.cod.size != self.f.dom.size
            || q2.cod.size != self.g.dom.size
            || self.f.after(q1)? != self.g.after(q2)?
        {
            return Err(Error::contract("legs do not form a commuting square"));
        }
        let pairs: Vec<(usize, usize)> = self
            .p1
            .table
            .iter()
            .copied()
            .zip(self.p2.table.iter().copied())
            .collect();
        let table = q1
            .table
            .iter()
            .zip(&q2.table)
            .map(|(&x, &y)| pairs.binary_search(&(x, y)).expect("commuting pair"))
            .collect();
        Ok(FinSetArrow {
            dom: q1.dom.clone(),
            cod: self.object.clone(),
            table,
        })
    }
}

/// Pairs `(x, y)` with `f(x) = g(y)`, in lexicographic order.
pub fn fs_pullback(f: &FinSetArrow, g: &FinSetArrow) -> Result<Pullback> {
    if f.cod.size != g.cod.size {
        return Err(Error::contract("pullback needs arrows with a common codomain"));
    }
    let pairs: Vec<(usize, usize)> = (0..f.dom.size)
        .flat_map(|x| (0..g.dom.size).map(move |y| (x, y)))
        .filter(|&(x, y)| f.apply(x) == g.apply(y))
        .collect();
    let object = FinSetObject::new(pairs.len());
    let (t1, t2) = pairs.into_iter().unzip();
    Ok(Pullback {
        p1: FinSetArrow {
            dom: object.clone(),
            cod: f.dom.clone(),
            table: t1,
        },
        p2: FinSetArrow {
            dom: object.clone(),
            cod: g.dom.clone(),
            table: t2,
        },
        object,
        f: f.clone(),
        g: g.clone(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pushout {
    pub object: FinSetObject,
    pub iota1: FinSetArrow,
    pub iota2: FinSetArrow,
    #[serde(skip)]
    f: FinSetArrow,
    #[serde(skip)]
    g: FinSetArrow,
}

impl Pushout {
    /// The unique `u` with `u∘ι1 = q1` and `u∘ι2 = q2`.
    pub fn factor(&self, q1: &FinSetArrow, q2: &FinSetArrow) -> Result<FinSetArrow> {
        if q1.cod.size != q2.cod.size
            || q1.dom.size != self.f.cod.size
            || q2.dom.size != self.g.cod.size
            || q1.after(&self.f)? != q2.after(&self.g)?
        {
            return Err(Error::contract("legs do not form a commuting square"));
        }
        let mut table = vec![usize::MAX; self.object.size];
        let legs = [(&self.iota1, q1), (&self.iota2, q2)];
        for (iota, q) in legs {
            for x in 0..iota.dom.size {
                let slot = &mut table[iota.apply(x)];
                if *slot != usize::MAX && *slot != q.apply(x) {
                    return Err(Error::contract("legs disagree on an identified class"));
                }
                *slot = q.apply(x);
            }
        }
        Ok(FinSetArrow {
            dom: self.object.clone(),
            cod: q1.cod.clone(),
            table,
        })
    }
}

/// Coproduct of the codomains quotiented by `f(z) ~ g(z)`.
pub fn fs_pushout(f: &FinSetArrow, g: &FinSetArrow) -> Result<Pushout> {
    if f.dom.size != g.dom.size {
        return Err(Error::contract("pushout needs arrows with a common domain"));
    }
    let sum = fs_coproduct(&f.cod, &g.cod);
    let coeq = fs_coequalizer(&sum.iota1.after(f)?, &sum.iota2.after(g)?)?;
    Ok(Pushout {
        iota1: coeq.quotient.after(&sum.iota1)?,
        iota2: coeq.quotient.after(&sum.iota2)?,
        object: coeq.object,
        f: f.clone(),
        g: g.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremal {
    Terminal,
    Initial,
}

pub fn fs_extremal(kind: Extremal) -> FinSetObject {
    match kind {
        Extremal::Terminal => FinSetObject::terminal(),
        Extremal::Initial => FinSetObject::initial(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(dom: usize, cod: usize, table: &[usize]) -> FinSetArrow {
        FinSetArrow::new(FinSetObject::new(dom), FinSetObject::new(cod), table.to_vec()).unwrap()
    }

    #[test]
    fn product_sizes_and_projections() {
        let p = fs_product(&FinSetObject::new(2), &FinSetObject::new(3));
        assert_eq!(p.object.size, 6);
        assert_eq!(p.pi1.table, vec![0, 0, 0, 1, 1, 1]);
        assert_eq!(p.pi2.table, vec![0, 1, 2, 0, 1, 2]);
        let empty = fs_product(&FinSetObject::new(0), &FinSetObject::new(3));
        assert_eq!(empty.object.size, 0);
        assert!(empty.pi1.table.is_empty() && empty.pi2.table.is_empty());
    }

    #[test]
    fn product_pairing_is_universal() {
        let p = fs_product(&FinSetObject::new(2), &FinSetObject::new(2));
        let (x, y) = (FinSetObject::new(2), FinSetObject::new(2));
        let c = FinSetObject::new(3);
        for f in c.arrows_to(&x) {
            for g in c.arrows_to(&y) {
                let u = p.pair(&f, &g).unwrap();
                assert_eq!(p.pi1.after(&u).unwrap(), f);
                assert_eq!(p.pi2.after(&u).unwrap(), g);
                let others = c
                    .arrows_to(&p.object)
                    .filter(|v| p.pi1.after(v).unwrap() == f && p.pi2.after(v).unwrap() == g)
                    .count();
                assert_eq!(others, 1);
            }
        }
    }

    #[test]
    fn coproduct_layout() {
        let c = fs_coproduct(&FinSetObject::new(2), &FinSetObject::new(3));
        assert_eq!(c.object.size, 5);
        assert_eq!(c.iota2.table, vec![2, 3, 4]);
        let c0 = fs_coproduct(&FinSetObject::new(0), &FinSetObject::new(3));
        assert!(c0.iota2.is_injective() && c0.iota2.is_surjective());
    }

    #[test]
    fn copair_of_two_points_recovers_every_arrow() {
        let one = FinSetObject::terminal();
        let c = fs_coproduct(&one, &one);
        let x = FinSetObject::new(3);
        for h in c.object.arrows_to(&x) {
            let hits = one
                .arrows_to(&x)
                .flat_map(|f| one.arrows_to(&x).map(move |g| (f.clone(), g)))
                .filter(|(f, g)| c.copair(f, g).unwrap() == h)
                .count();
            assert_eq!(hits, 1);
        }
    }

    #[test]
    fn equalizer_cases() {
        let f = arrow(2, 2, &[0, 1]);
        let swap = arrow(2, 2, &[1, 0]);
        assert_eq!(fs_equalizer(&f, &f).unwrap().object.size, 2);
        assert_eq!(fs_equalizer(&f, &swap).unwrap().object.size, 0);
        let e = fs_equalizer(&arrow(3, 2, &[0, 1, 0]), &arrow(3, 2, &[1, 1, 1])).unwrap();
        assert_eq!(e.object.size, 1);
        assert_eq!(e.inclusion.table, vec![1]);
        assert!(fs_equalizer(&f, &arrow(2, 3, &[0, 1])).is_err());
    }

    #[test]
    fn equalizer_factorization() {
        let (f, g) = (arrow(3, 2, &[0, 1, 0]), arrow(3, 2, &[1, 1, 0]));
        let e = fs_equalizer(&f, &g).unwrap();
        let z = arrow(2, 3, &[2, 1]);
        let u = e.factor(&z).unwrap();
        assert_eq!(e.inclusion.after(&u).unwrap(), z);
        assert!(e.factor(&arrow(1, 3, &[0])).is_err());
    }

    #[test]
    fn coequalizer_cases() {
        let id = arrow(3, 3, &[0, 1, 2]);
        assert_eq!(fs_coequalizer(&id, &id).unwrap().object.size, 3);
        let q = fs_coequalizer(&arrow(1, 2, &[0]), &arrow(1, 2, &[1])).unwrap();
        assert_eq!(q.object.size, 1);
        let chain = fs_coequalizer(&arrow(2, 3, &[0, 1]), &arrow(2, 3, &[1, 2])).unwrap();
        assert_eq!(chain.object.size, 1);
        let partial = fs_coequalizer(&arrow(1, 3, &[2]), &arrow(1, 3, &[1])).unwrap();
        assert_eq!(partial.quotient.table, vec![0, 1, 1]);
    }

    #[test]
    fn coequalizer_factorization() {
        let (f, g) = (arrow(1, 3, &[2]), arrow(1, 3, &[1]));
        let q = fs_coequalizer(&f, &g).unwrap();
        let z = arrow(3, 2, &[1, 0, 0]);
        let u = q.factor(&z).unwrap();
        assert_eq!(u.after(&q.quotient).unwrap(), z);
        assert!(q.factor(&arrow(3, 2, &[0, 0, 1])).is_err());
    }

    // Fixed-point closure of {(f(a), g(a))} as a boolean relation matrix.
    #[allow(clippy::needless_range_loop)]
    fn naive_closure_classes(f: &FinSetArrow, g: &FinSetArrow) -> Vec<usize> {
        let n = f.cod.size;
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for a in 0..f.dom.size {
            let (x, y) = (f.apply(a), g.apply(a));
            rel[x][y] = true;
            rel[y][x] = true;
        }
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    if !rel[i][j] {
                        continue;
                    }
                    for k in 0..n {
                        if rel[j][k] && !rel[i][k] {
                            rel[i][k] = true;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut classes = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if classes[i] == usize::MAX {
                for j in i..n {
                    if rel[i][j] {
                        classes[j] = next;
                    }
                }
                next += 1;
            }
        }
        classes
    }

    #[test]
    fn union_find_matches_naive_closure() {
        for a in 0..=3 {
            for b in 0..=3 {
                let (x, y) = (FinSetObject::new(a), FinSetObject::new(b));
                let arrows: Vec<_> = x.arrows_to(&y).collect();
                for f in &arrows {
                    for g in &arrows {
                        let q = fs_coequalizer(f, g).unwrap();
                        assert_eq!(q.quotient.table, naive_closure_classes(f, g));
                    }
                }
            }
        }
    }

    #[test]
    fn pullback_cases() {
        let id2 = arrow(2, 2, &[0, 1]);
        let f = arrow(3, 2, &[0, 1, 1]);
        let along_id = fs_pullback(&f, &id2).unwrap();
        assert_eq!(along_id.object.size, 3);
        assert!(along_id.p1.is_injective() && along_id.p1.is_surjective());

        let point = arrow(1, 2, &[0]);
        assert_eq!(fs_pullback(&id2, &point).unwrap().object.size, 1);

        let bang = arrow(2, 1, &[0, 0]);
        let full = fs_pullback(&bang, &bang).unwrap();
        let prod = fs_product(&FinSetObject::new(2), &FinSetObject::new(2));
        assert_eq!(
            full.p1,
            FinSetArrow {
                dom: full.object.clone(),
                ..prod.pi1
            }
        );
        assert_eq!(full.object.size, 4);

        assert!(fs_pullback(&id2, &arrow(1, 3, &[0])).is_err());
    }

    #[test]
    fn pullback_factorization() {
        let (f, g) = (arrow(3, 2, &[0, 0, 1]), arrow(2, 2, &[0, 1]));
        let pb = fs_pullback(&f, &g).unwrap();
        let (q1, q2) = (arrow(2, 3, &[2, 0]), arrow(2, 2, &[1, 0]));
        let u = pb.factor(&q1, &q2).unwrap();
        assert_eq!(pb.p1.after(&u).unwrap(), q1);
        assert_eq!(pb.p2.after(&u).unwrap(), q2);
        assert!(pb.factor(&q1, &arrow(2, 2, &[0, 0])).is_err());
    }

    #[test]
    fn pushout_cases() {
        let id2 = arrow(2, 2, &[0, 1]);
        assert_eq!(fs_pushout(&id2, &id2).unwrap().object.size, 2);
        let (e1, e2) = (arrow(0, 2, &[]), arrow(0, 3, &[]));
        assert_eq!(fs_pushout(&e1, &e2).unwrap().object.size, 5);
        let (p, q) = (arrow(1, 2, &[0]), arrow(1, 2, &[0]));
        let po = fs_pushout(&p, &q).unwrap();
        assert_eq!(po.object.size, 3);
        assert_eq!(po.iota1.table, vec![0, 1]);
        assert_eq!(po.iota2.table, vec![0, 2]);
        assert!(fs_pushout(&p, &arrow(2, 2, &[0, 1])).is_err());
    }

    #[test]
    fn pushout_factorization() {
        let (f, g) = (arrow(1, 2, &[0]), arrow(1, 2, &[1]));
        let po = fs_pushout(&f, &g).unwrap();
        let (q1, q2) = (arrow(2, 3, &[2, 0]), arrow(2, 3, &[1, 2]));
        let u = po.factor(&q1, &q2).unwrap();
        assert_eq!(u.after(&po.iota1).unwrap(), q1);
        assert_eq!(u.after(&po.iota2).unwrap(), q2);
    }

    #[test]
    fn extremal_objects() {
        assert_eq!(fs_extremal(Extremal::Terminal).size, 1);
        assert_eq!(fs_extremal(Extremal::Initial).size, 0);
        let (one, zero) = (fs_extremal(Extremal::Terminal), fs_extremal(Extremal::Initial));
        for n in 0..=4 {
            let x = FinSetObject::new(n);
            assert_eq!(x.arrows_to(&one).count(), 1);
            assert_eq!(zero.arrows_to(&x).count(), 1);
        }
    }

    #[test]
    fn product_arrow_componentwise() {
        let f = arrow(2, 3, &[2, 0]);
        let g = arrow(1, 2, &[1]);
        let fg = fs_product_arrow(&f, &g);
        assert_eq!(fg.dom.size, 2);
        assert_eq!(fg.cod.size, 6);
        assert_eq!(fg.table, vec![2 * 2 + 1, 1]);
    }
}
