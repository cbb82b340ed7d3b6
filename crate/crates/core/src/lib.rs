pub mod chain;
pub mod classify;
pub mod cohomology;
pub mod error;
pub mod exec;
pub mod invariants;
pub mod koszul;
pub mod parabolic;
pub mod reference;
pub mod reps;
pub mod root_system;
pub mod weight;

use std::sync::{Arc, OnceLock};

pub use error::{Error, Result};
pub use exec::Execution;
pub use parabolic::{is_g_dominant, G2Parabolic, ParabolicData, ParabolicSpec};
pub use reps::{RepSum, WeightMultiset};
pub use root_system::{CartanMatrix, Conjugate, Root, RootLength, RootSystem, WeylElement};
pub use weight::Weight;

/// The shared G2 root system.
pub fn g2_root_system() -> Arc<RootSystem> {
    static G2: OnceLock<Arc<RootSystem>> = OnceLock::new();
    G2.get_or_init(|| Arc::new(RootSystem::g2())).clone()
}
