//! Exact value-set arithmetic for numerical semigroup rings `k[[t^S]]` and
//! their monomial ideals: canonical ideals, type sequences, Hilbert functions,
//! blow-ups, and a harness that checks identities between these invariants
//! over enumerated universes.
//!
//! ```
//! use typeseq_core::blowup::analyze;
//! use typeseq_core::invariants::RingInvariants;
//! use typeseq_core::notation::{parse_ideal, parse_semigroup};
//!
//! let s = parse_semigroup("<8,10,13,15>")?;
//! let ri = RingInvariants::new(&s)?;
//! let rep = analyze(&ri, &parse_ideal(&s, "m")?)?;
//! assert_eq!((rep.h.nu, rep.h.rho, rep.c_lambda), (3, 13, 4));
//! # Ok::<(), typeseq_core::error::Error>(())
//! ```

mod bits;
pub mod blowup;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod notation;
pub mod par;
pub mod report;
pub mod semigroup;
pub mod theorems;

pub use error::{Error, Result};
pub use ideal::{length_between, ValueIdeal};
pub use semigroup::NumericalSemigroup;
pub use invariants::{RingClass, RingInvariants, TypeSequence};
pub use blowup::{BlowupReport, ConditionsAB, HPolynomial};
pub use notation::{parse_ideal, parse_semigroup};
pub use par::Parallelism;
pub use report::{AnalyzeDoc, PairDoc};
pub use theorems::suite::{run_suite, IdealStrategy, SuiteConfig, SuiteReport};
pub use theorems::{verify_statement, TheoremVerdict};
