//! Exact computation of the Springer morphism on a maximal torus.
//!
//! Given a simple, simply connected complex algebraic group (named by its
//! Lie type) and a dominant integral weight, this crate computes the
//! restriction of the Springer morphism of the corresponding representation
//! to the maximal torus: the coefficients c_i(t) of the image in the basis
//! of simple coroots, first as exact formal character sums, then evaluated
//! at concrete torus points.
//!
//! The layers, bottom to top:
//!
//! * [`exact_linear`]: arbitrary-precision rationals and fraction-free
//!   linear algebra.
//! * [`rootsystem`]: Cartan data for the simple types, built from Dynkin
//!   diagrams.
//! * [`weyl`]: simple reflections, dominance, orbits.
//! * [`repweights`]: weight systems and Freudenthal multiplicities.
//! * [`springer`]: moment vectors, the matrix S(lambda) by brute force and
//!   in closed form, its structural identities, and the coefficient solve.
//! * [`tables`]: classical closed-form inverses used as oracles.

pub mod error;
pub mod exact_linear;
pub mod repweights;
pub mod rootsystem;
pub mod springer;
pub mod tables;
pub mod weyl;

pub use error::Error;
pub use exact_linear::{frac, rat, Rational, RationalMatrix, RationalVectorSpace};
pub use repweights::{
    dominant_weights_below, expand, freudenthal, weyl_dimension, WeightMultiset,
};
pub use rootsystem::{Family, LieType, RootSystemData, Weight};
pub use springer::{
    coefficients, dimension_from_orbits, evaluate, identity_report, moment_vector,
    s_matrix_bruteforce, s_matrix_closed, springer_torus, torus_from_symplectic_eigenvalues,
    x_long, CharacterCombo, IdentityReport, PairCheck, PairClass, SpringerResult, TorusPoint,
};
pub use weyl::{is_dominant, orbit, simple_reflection, to_dominant, WeylOrbit};
