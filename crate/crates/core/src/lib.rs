//! Prime-to-p parts of the component group `π₀(H)` and the étale fundamental
//! group `π₁(G/H)` of a spherical homogeneous space, computed from its
//! weight lattice, color functionals and root datum by exact integer
//! arithmetic.
//!
//! The pipeline is:
//!
//! 1. saturate the weight lattice `Ξ(X)` against the color functionals
//!    ([`lattice::dual_saturation`]), giving `Ξ°(X)`;
//! 2. intersect with the character lattice to get `Ξ°_G(X)`
//!    ([`spherical::xi_circ_g`]);
//! 3. take prime-to-p parts of `Ξ°_G(X)/Ξ(X)` and `Ξ°(X)/Ξ(X)`
//!    ([`spherical::pi0_p_prime`], [`spherical::pi1_p_prime`]).
//!
//! Matrices and normal forms are generic over the integer type; the
//! pipeline itself runs on [`Int`] (arbitrary precision).

pub mod io;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod root_data;
pub mod spherical;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision integer used throughout the pipeline.
pub type Int = BigInt;
/// Arbitrary-precision rational.
pub type Rational = BigRational;
/// Integer matrix.
pub type IntMatrix = linalg::Matrix<Int>;
/// Rational matrix.
pub type RatMatrix = linalg::Matrix<Rational>;
pub type IntSnf = linalg::Snf<Int>;
pub type IntHnf = linalg::Hnf<Int>;

pub use lattice::{FinGenAbQuotient, Lattice, SaturatedSet};
pub use root_data::{Isogeny, RootDatum, Series};
pub use spherical::{PiResult, Report, SphericalDatum};



/// Builds an [`IntMatrix`] from small literals.
///
/// # Panics
/// If the rows do not all have length `cols`.
pub fn int_matrix(cols: usize, rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(
        cols,
        rows.iter()
            .map(|r| r.iter().map(|&x| Int::from(x)).collect())
            .collect(),
    )
    .expect("ragged matrix literal")
}

/// Converts a slice of small integers.
pub fn ints(values: &[i64]) -> Vec<Int> {
    values.iter().map(|&x| Int::from(x)).collect()
}
