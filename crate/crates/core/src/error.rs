use thiserror::Error;

use crate::category::{ArrowId, ObjectId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown object {0}")]
    UnknownObject(ObjectId),

    #[error("unknown arrow {0}")]
    UnknownArrow(ArrowId),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("arrows {g} and {f} are not composable (cod {f} != dom {g})")]
    NotComposable { g: ArrowId, f: ArrowId },

    #[error("composition table has no entry for {g} . {f}")]
    MissingComposite { g: ArrowId, f: ArrowId },

    #[error("no identity designated for object {0}")]
    MissingIdentity(ObjectId),

    #[error("capacity exceeded: {what} needs {needed}, budget is {budget}")]
    Capacity {
        what: &'static str,
        needed: u128,
        budget: u128,
    },

    #[error("contract violation: {0}")]
    Contract(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
