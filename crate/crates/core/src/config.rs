use serde::{Deserialize, Serialize};

/// Enumeration budgets shared by every exhaustive search in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    /// Maximum number of arrows a materialized category may have.
    pub max_arrows: usize,
    /// Maximum number of cones (or cocones) a limit search may enumerate.
    pub max_cones: usize,
    /// Largest finite-set carrier any direct construction may produce.
    pub max_carrier: usize,
    /// Bijection-family search for adjunctions only runs when every hom-set
    /// involved is at most this large.
    pub max_search_hom: usize,
    /// Seed for every randomized generator.
    pub seed: u64,
}

pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

impl Default for Config {
    fn default() -> Self {
        Config {
            max_arrows: 10_000,
            max_cones: 10_000,
            max_carrier: 4_096,
            max_search_hom: 8,
            seed: DEFAULT_SEED,
        }
    }
}

impl Config {
    /// Sets both enumeration budgets (arrows and cones) at once.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.max_arrows = budget;
        self.max_cones = budget;
        self
    }
}
