//! Finite category theory by exhaustive verification.

pub mod adjunction;
pub mod catalog;
pub mod category;
pub mod config;
pub mod error;
pub mod finset;
pub mod fullsub;
pub mod functor;
pub mod gen;
pub mod limits;
pub mod report;
pub mod slice;
pub mod subobjects;
pub mod topos;

pub use category::{
    are_isomorphic, find_isomorphisms, is_epic, is_iso, is_monic, validate_category, ArrowId, Cancellation,
    CategoryBuilder, ObjectId, PresentedCategory,
};
pub use config::Config;
pub use error::{Error, Result};
pub use report::{Law, ValidationReport, Violation};
