//! Finite semirings as Cayley tables.
//!
//! Element classes, closures and complements are computed by exhaustive
//! search over the tables. On top of that sit idempotent lifting, Peirce
//! splitting and checks of four theorems about semirings generated by
//! idempotents, either for one semiring or for every semiring up to order 4.
//!
//! ```
//! use semiring_core::construct::preset;
//! use semiring_core::theorem::{check_theorem, Theorem, Verdict};
//!
//! let s = preset("t2b").unwrap();
//! assert_eq!(s.classify().idempotents.len(), 7);
//! assert_eq!(check_theorem(&s, Theorem::Main).verdict, Verdict::Vacuous);
//! ```

pub mod census;
pub mod classes;
pub mod closure;
pub mod complement;
pub mod construct;
mod elements;
mod error;
pub mod iso;
pub mod lift;
pub mod peirce;
mod semiring;
pub mod theorem;

pub use classes::{element_classes, ClassReport};
pub use elements::ElementSet;
pub use error::{Error, Result};
pub use semiring::{validate, Axiom, AxiomReport, FiniteSemiring, Violation};
