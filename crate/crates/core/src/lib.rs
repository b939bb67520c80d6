//! Two-by-two (SL(2,C)) representation of the Lorentz group.
//!
//! The crate covers:
//!
//! - [`mat2`]: complex 2×2 arithmetic, the rotation/boost/gauge generators in the
//!   undotted and dotted flavors, commutators and the exponential map.
//! - [`minkowski`]: four-vectors and four-momenta encoded as Hermitian matrices,
//!   group elements acting by congruence, mass classification.
//! - [`littlegroup`]: Wigner's little groups for massive, massless and
//!   imaginary-mass momenta.
//! - [`contraction`]: boosted rotations and their large-rapidity limit, the
//!   triangular gauge matrices.
//! - [`spinorstates`]: formal products of the four basis spinors, the four-vector
//!   and field-tensor states, photon helicity, gauge-invariant (Weinberg) states.
//! - [`report`]: named checks with tolerances, collected into suite reports.
//! - [`suites`]: the named verification suites.

#![allow(clippy::needless_range_loop)]

pub mod contraction;
pub mod error;
pub mod littlegroup;
pub mod mat2;
pub mod minkowski;
pub mod report;
pub mod spinorstates;
pub mod suites;

pub use error::{Error, Result};
pub use mat2::{Flavor, GeneratorId, Mat2, C64};
pub use minkowski::{FourMomentum, FourVector, GroupElement, MassClass, Transform};
pub use report::{Check, Report};
pub use spinorstates::{MultiSpinorState, Spinor};

