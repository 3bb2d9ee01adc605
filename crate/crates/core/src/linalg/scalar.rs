use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// Entry type of a [`Matrix`](super::Matrix): anything with ring operations
/// and a negation.
pub trait Scalar: Num + Signed + Clone + Debug + Display {}

impl<T> Scalar for T where T: Num + Signed + Clone + Debug + Display {}

/// Euclidean entries, the ones the normal forms run over.
///
/// Implemented for `i32`, `i64`, `i128` and `BigInt`. Only `BigInt` is free of
/// overflow; the fixed-width impls exist for cross-checking on small inputs.
pub trait IntegerScalar: Scalar + Integer {}

impl<T> IntegerScalar for T where T: Scalar + Integer {}

/// Least common multiple of the denominators of `values`, as a positive integer.
pub fn common_denominator<'a, T, I>(values: I) -> T
where
    T: IntegerScalar + 'a,
    I: IntoIterator<Item = &'a Ratio<T>>,
{
    values
        .into_iter()
        .fold(T::one(), |acc, q| acc.lcm(q.denom()))
}

/// Whether a rational is an integer.
pub fn is_integral<T: IntegerScalar>(q: &Ratio<T>) -> bool {
    q.denom().is_one()
}
