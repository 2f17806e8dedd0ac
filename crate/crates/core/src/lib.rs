//! Exact symbolic computation for finitely presented Hopf algebras and Lie
//! bialgebras: a rewriting kernel with PBW-style normal forms, coalgebra
//! structure maps and verifiers, quantum-double and mirror-bicrossproduct
//! constructors, 2-cocycle twisting, quantum and classical Yang-Baxter
//! checks, and a registry of concrete models.

pub mod coeffs;
pub mod constructions;
pub mod error;
pub mod hopf;
pub mod ncalg;
pub mod report;

pub use coeffs::{GaussianRational, Poly, RationalFunction, Scalar, ScalarRing, SeriesVar, TruncSeries};
pub use error::{AlgError, CoeffError};
pub mod liebialg;
pub mod models;
