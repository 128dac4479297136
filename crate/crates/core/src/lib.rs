//! Finite quandles and the permutation groups around them.
//!
//! The crate covers permutation groups with a stabilizer-chain index,
//! arithmetic in `GF(p^m)` and small matrix groups over it, the quandle
//! data type with its classifiers, exhaustive searches for cyclic-type and
//! connected quandles, and a set of named checks that tie these together.
//!
//! ```
//! use qlab::quandle::Quandle;
//!
//! let r3 = Quandle::dihedral(3);
//! assert!(r3.is_cyclic_type().unwrap());
//! assert_eq!(r3.inner_group().order(), 6);
//! ```

pub mod classical;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod perm;
pub mod quandle;
pub mod verify;

pub use error::{Error, Result};
