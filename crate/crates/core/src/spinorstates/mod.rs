//! Formal products of two-component spinors and the states built from them.
//!
//! A state is a linear combination of ordered products of `u`, `v`, `u̇`, `v̇`.
//! Group elements act factor by factor; generators act as derivations.
//!
//! ```
//! use sl2c::spinorstates::{apply_element, weinberg_condition, MultiSpinorState};
//! use sl2c::GroupElement;
//!
//! let photon: MultiSpinorState = "uu".parse().unwrap();
//! assert!(weinberg_condition(&photon, 1e-12).passes);
//! let t = GroupElement::gauge(1.5, 0.3);
//! assert_eq!(apply_element(&t, &photon), photon);
//!
//! let mixed: MultiSpinorState = "u v dot".parse().unwrap();
//! assert_eq!(mixed.to_string(), "uv\u{307}");
//! ```

mod fields;
mod state;
mod verify;

pub use fields::{
    bilinear_states, field_tensor_states, four_vector_covariance_deviation, four_vector_states,
    gauge_transform_matrix, gauge_transform_matrix_phased, gauge_transform_potential,
    helicity_states, massless_limit_fields, neutrino_polarization, pair_with, proportionality,
    spin_combinations, weinberg_condition, FieldTensor, FieldTensorStates, FourPotential,
    FourVectorStates, HelicityStates, MasslessFields, SpinCombinations, WeinbergResult,
    HELICITY_CONSTANTS, LORENTZ_TOL,
};
pub use state::{apply_element, basis_state, dot_conjugate, parse_product, MultiSpinorState, Spinor};
pub use verify::verify_spinors;
