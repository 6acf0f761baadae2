//! Exact arithmetic on the Enriques lattice: isotropic 10-sequences, φ-vectors,
//! fundamental presentations, and the components of the moduli spaces of
//! polarized Enriques surfaces they label.

pub mod error;
pub mod fundamental;
pub mod lattice;
pub mod linalg;
pub mod moduli;
pub mod oracle;
pub mod phi;
pub mod sequence;
pub mod verify;

pub use error::{Error, Result};
pub use fundamental::{
    coefficients_from_phivector, epsilon_normalize, fundamental_presentation, phivector_from_coefficients,
    rewrite_on, rewrite_to_fundamental, validate_simple_decomposition, Decomposition, DecompositionDefect,
    FundamentalCoefficients, Presentation,
};
pub use lattice::{from_decomposition, Eps, NumClass, PicClass};
pub use moduli::{
    classical_bounds_audit, component_name, dominating_component_check, enumerate_components,
    enumerate_components_by_phi, enumerate_components_via_phi, enumerate_hat_components, rho_fiber_structure, unirationality_flag, HatComponent, ModuliComponent,
    RhoSummary,
};
pub use oracle::{eight_lowest, enumerate_isotropics, phi, phi_vector_oracle, OracleOptions, OracleResult};
pub use phi::{compare_tuples, PhiVector};
pub use sequence::IsotropicSequence;
