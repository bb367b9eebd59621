//! Exact finite-group machinery for twisted Drinfeld doubles and the twisted
//! orbifold K-theory ring of the point orbifold `[*/G]`.
//!
//! The crate is organised bottom-up:
//!
//! - [`group`]: finite groups given by multiplication tables, centralizers,
//!   conjugacy data, quotients and dual groups.
//! - [`cochain`]: `U(1)`-valued cochains stored as exponents of roots of unity,
//!   coboundaries, inverse transgression and an exact coboundary solver.
//! - [`projrep`]: projective (cocycle-twisted) complex representations.
//! - [`drinfeld`]: the twisted double `D^ω(G)`, its coproduct, R-matrix and
//!   simple modules.
//! - [`stringy`]: the twisted stringy product on sector representation rings
//!   and its comparison map to `R(D^ω(G))`.
//! - [`modp`]: mod-p cohomology of elementary abelian groups, the Bockstein and
//!   polynomial-level transgression.
//! - [`extraspecial`]: the extra-special construction producing a twisted
//!   elementary abelian group.
//! - [`catalog`], [`io`], [`cache`] and [`suite`]: built-in test cases, file
//!   formats and the verification driver used by the CLI.

pub mod cache;
pub mod catalog;
pub mod cochain;
pub mod cyclotomic;
pub mod drinfeld;
pub mod error;
pub mod extraspecial;
pub mod group;
pub mod io;
pub mod modp;
pub mod projrep;
pub mod solver;
pub mod stringy;
pub mod suite;

pub use cochain::{Cochain, CoboundarySolution, TransgressedFamily};
pub use drinfeld::{DoubleAlgebra, DoubleModule, DoubleRingElement};
pub use error::{Error, Result};
pub use group::{ConjugacyData, Group, Subgroup};
pub use projrep::{IrrepBasis, ProjectiveRep, RepRingElement};
pub use stringy::{OrbifoldKClass, TwistData};

/// Complex scalar used by the representation layer.
pub type C64 = num_complex::Complex<f64>;
