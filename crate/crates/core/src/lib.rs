//! Numerical semigroups and the classes around complete intersections.
//!
//! ```
//! use ci_semigroups::{classify, NumericalSemigroup};
//!
//! let s: NumericalSemigroup = "4,6,13".parse().unwrap();
//! assert_eq!(s.frobenius(), 15);
//! let report = classify(&s);
//! assert!(report.flags.plane_branch);
//! assert!(!report.flags.unique_betti);
//! ```

pub mod classify;
pub mod enumerate;
pub mod error;
pub mod factorization;
pub mod gluing;
pub mod invariants;
pub mod semigroup;

pub use classify::{classify, evaluate, Class, ClassReport, Flags, Implication, IMPLICATIONS};
pub use enumerate::{count_by_genus, enumerate_by_genus, sweep, sweep_parallel, SweepReport};
pub use error::{Error, GluingFault, Result};
pub use factorization::{ord, representations, Representation};
pub use gluing::{
    alpha_decompose, alpha_glue_step, build_alpha_rectangular, ci_not_free_family, glue, rb_family, GluingNode,
};
pub use invariants::{InvariantKind, InvariantProfile};
pub use semigroup::{AperySet, NumericalSemigroup};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/semigroups.md")]
    pub mod semigroups {}
    #[doc = include_str!("../../../book/src/factorizations.md")]
    pub mod factorizations {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    pub mod invariants {}
    #[doc = include_str!("../../../book/src/classes.md")]
    pub mod classes {}
    #[doc = include_str!("../../../book/src/gluing.md")]
    pub mod gluing {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    pub mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
