use serde::Serialize;

use super::limits::{fs_product, fs_product_arrow, Product};
use super::{count_mappings, decode_mapping, encode_mapping, FinSetArrow, FinSetObject};
use crate::config::Config;
use crate::error::{Error, Result};

/// `B^A` together with its evaluation arrow `ev : A × B^A → B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExponentialBundle {
    pub base: FinSetObject,
    pub target: FinSetObject,
    pub exp_object: FinSetObject,
    /// `A × B^A`, the domain of `ev`.
    pub product: Product,
    pub ev: FinSetArrow,
}

impl ExponentialBundle {
    /// The mapping `A → B` encoded by element `k` of `B^A`.
    pub fn decode(&self, k: usize) -> FinSetArrow {
        FinSetArrow {
            dom: self.base.clone(),
            cod: self.target.clone(),
            table: decode_mapping(k, self.base.size, self.target.size),
        }
    }

    pub fn encode(&self, f: &FinSetArrow) -> Result<usize> {
        if f.dom.size != self.base.size || f.cod.size != self.target.size {
            return Err(Error::contract("arrow does not have the exponent's type"));
        }
        Ok(encode_mapping(&f.table, self.target.size))
    }

    /// `f̂ : C → B^A` for `f : A × C → B`.
    pub fn curry(&self, f: &FinSetArrow, c: &FinSetObject) -> Result<FinSetArrow> {
        if f.dom.size != self.base.size * c.size || f.cod.size != self.target.size {
            return Err(Error::contract(format!(
                "curry expects an arrow A×C → B with |A|={}, |C|={}, |B|={}",
                self.base.size, c.size, self.target.size
            )));
        }
        let table = (0..c.size)
            .map(|ci| {
                let column: Vec<usize> = (0..self.base.size).map(|a| f.apply(a * c.size + ci)).collect();
                encode_mapping(&column, self.target.size)
            })
            .collect();
        Ok(FinSetArrow {
            dom: c.clone(),
            cod: self.exp_object.clone(),
            table,
        })
    }

    /// `ev ∘ (id_A × g) : A × C → B` for `g : C → B^A`.
    pub fn uncurry(&self, g: &FinSetArrow) -> Result<FinSetArrow> {
        if g.cod.size != self.exp_object.size {
            return Err(Error::contract("uncurry expects an arrow into the exponential"));
        }
        let lifted = fs_product_arrow(&FinSetArrow::identity(&self.base), g);
        self.ev.after(&lifted)
    }
}

pub fn fs_exponential(a: &FinSetObject, b: &FinSetObject) -> Result<ExponentialBundle> {
    fs_exponential_with(a, b, Config::default().max_carrier)
}

pub fn fs_exponential_with(a: &FinSetObject, b: &FinSetObject, max_carrier: usize) -> Result<ExponentialBundle> {
    let size = count_mappings(a.size, b.size);
    let ev_size = size.saturating_mul(a.size as u128);
    let needed = size.max(ev_size);
    if needed > max_carrier as u128 {
        return Err(Error::Capacity {
            what: "exponential carrier",
            needed,
            budget: max_carrier as u128,
        });
    }
    let exp_object = FinSetObject::new(size as usize);
    let product = fs_product(a, &exp_object);
    let ev_table = (0..product.object.size)
        .map(|i| {
            let (x, k) = (product.pi1.apply(i), product.pi2.apply(i));
            decode_mapping(k, a.size, b.size)[x]
        })
        .collect();
    let ev = FinSetArrow {
        dom: product.object.clone(),
        cod: b.clone(),
        table: ev_table,
    };
    Ok(ExponentialBundle {
        base: a.clone(),
        target: b.clone(),
        exp_object,
        product,
        ev,
    })
}

/// Curries `f : A × C → B` into `f̂ : C → B^A`.
pub fn fs_curry(f: &FinSetArrow, a: &FinSetObject, c: &FinSetObject) -> Result<FinSetArrow> {
    fs_exponential(a, &f.cod)?.curry(f, c)
}

/// Inverse of [`fs_curry`] for the bundle's exponent.
pub fn fs_uncurry(bundle: &ExponentialBundle, g: &FinSetArrow) -> Result<FinSetArrow> {
    bundle.uncurry(g)
}

/// The name `⌜f⌝ : 1 → B^A` of `f : A → B`.
pub fn fs_name(f: &FinSetArrow) -> Result<FinSetArrow> {
    let bundle = fs_exponential(&f.dom, &f.cod)?;
    Ok(FinSetArrow {
        dom: FinSetObject::terminal(),
        cod: bundle.exp_object,
        table: vec![encode_mapping(&f.table, f.cod.size)],
    })
}

/// `h^A : B^A → B'^A`, postcomposition with `h : B → B'`.
pub fn fs_exp_arrow(a: &FinSetObject, h: &FinSetArrow) -> Result<FinSetArrow> {
    let src = fs_exponential(a, &h.dom)?;
    let dst = fs_exponential(a, &h.cod)?;
    let table = (0..src.exp_object.size)
        .map(|k| {
            let m = src.decode(k);
            dst.encode(&h.after(&m).expect("typed by construction"))
        })
        .collect::<Result<_>>()?;
    Ok(FinSetArrow {
        dom: src.exp_object,
        cod: dst.exp_object,
        table,
    })
}
