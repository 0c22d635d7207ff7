//! Benchmark fixtures shared by the criterion targets.

use hessberg_core::{RootSystem, WeylGroup};

pub fn weyl_group(t: &str) -> WeylGroup {
    WeylGroup::new(RootSystem::from_type(t).expect("supported type")).expect("within cap")
}
