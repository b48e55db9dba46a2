//! Resolving command-line names against a document and the built-ins.

use std::sync::Arc;

use fincat_core::catalog::{chain, discrete, terminal_category};
use fincat_core::finset::{FinSetArrow, FinSetObject};
use fincat_core::fullsub::full_subcategory_of_finset_with;
use fincat_core::{ArrowId, Config, ObjectId, PresentedCategory};
use fincat_dsl::Model;

use crate::CliError;

fn unknown(kind: &'static str, name: &str) -> CliError {
    CliError::Unknown {
        kind,
        name: name.to_string(),
    }
}

fn parse_sizes(list: &str) -> Option<Vec<usize>> {
    list.split(',').map(|s| s.trim().parse().ok()).collect()
}

pub fn category(model: &Model, name: &str, config: &Config) -> Result<Arc<PresentedCategory>, CliError> {
    if let Some(c) = model.categories.get(name) {
        return Ok(c.clone());
    }
    if name == "terminal" {
        return Ok(Arc::new(terminal_category()));
    }
    if let Some((kind, arg)) = name.split_once(':') {
        match kind {
            "chain" | "discrete" => {
                let n: usize = arg.parse().map_err(|_| unknown("category", name))?;
                if n > config.max_arrows {
                    return Err(CliError::Core(fincat_core::Error::Capacity {
                        what: "built-in category",
                        needed: n as u128,
                        budget: config.max_arrows as u128,
                    }));
                }
                return Ok(Arc::new(if kind == "chain" { chain(n) } else { discrete(n) }));
            }
            "finsets" => {
                let sizes = parse_sizes(arg).ok_or_else(|| unknown("category", name))?;
                return Ok(full_subcategory_of_finset_with(&sizes, config)?.category().clone());
            }
            _ => {}
        }
    }
    Err(unknown("category", name))
}

fn indexed(name: &str, prefix: char) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

pub fn object(cat: &PresentedCategory, name: &str) -> Result<ObjectId, CliError> {
    cat.find_object(name)
        .or_else(|| indexed(name, 'o').map(ObjectId).filter(|&o| cat.has_object(o)))
        .ok_or_else(|| unknown("object", name))
}

pub fn arrow(cat: &PresentedCategory, name: &str) -> Result<ArrowId, CliError> {
    cat.find_arrow(name)
        .or_else(|| indexed(name, 'a').map(ArrowId).filter(|&a| cat.has_arrow(a)))
        .ok_or_else(|| unknown("arrow", name))
}

/// A declared finite set, or a bare size.
pub fn finset(model: &Model, name: &str) -> Result<FinSetObject, CliError> {
    if let Some(s) = model.finsets.get(name) {
        return Ok(s.clone());
    }
    name.parse()
        .map(FinSetObject::new)
        .map_err(|_| unknown("finite set", name))
}

pub fn map(model: &Model, name: &str) -> Result<FinSetArrow, CliError> {
    model
        .maps
        .get(name)
        .map(|m| m.arrow.clone())
        .ok_or_else(|| unknown("map", name))
}
