//! Permutations and permutation groups.

mod blocks;
mod elements;
mod group;
mod normal;
mod permutation;

pub use blocks::BlockSystem;
pub use elements::{element_cap, ConjugacyClass, DEFAULT_ELEMENT_CAP};
pub use group::PermGroup;
pub use normal::{BurnsideBranch, BurnsideReport};
pub use permutation::{parse_generators, Perm};
