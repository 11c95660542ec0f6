//! Skew Schur functions at roots of unity: principal specializations, abacus
//! quotients, border-strip characters and cyclic sieving decompositions.

pub mod abacus;
pub mod analysis;
pub mod characters;
pub mod error;
pub mod qpoly;
pub mod regression;
pub mod schur;
pub mod shapes;

pub use abacus::{core, quotient, skew_quotient, AbacusDisplay, SkewQuotient};
pub use analysis::{analyze, analyze_batch, analyze_shifted, CspReport, Hypotheses, Route};
pub use characters::{eval_at_root, perm, skew_char, skew_char_rect, BorderStripTableau, Permutation};
pub use error::{Error, Result};
pub use qpoly::{csp_decompose, CspDecomposition, QPoly, Verdict};
pub use schur::{count_ssyt, principal_specialization, principal_specialization_mod};
pub use shapes::{Composition, Partition, SkewShape};
