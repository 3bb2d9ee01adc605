//! Lattices in rational vector spaces, saturation against integer
//! functionals, and the finitely generated abelian quotients that come out.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{self, hnf, snf, solve_in_lattice, LinalgError, Matrix};
use crate::{Int, IntMatrix, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("ambient ranks differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("basis vectors are linearly dependent (rank {rank} < {count})")]
    DependentBasis { rank: usize, count: usize },
    #[error("basis vector {index} of the smaller lattice is not in the bigger one")]
    NotASublattice { index: usize },
    #[error("quotient of a rank {big} lattice by a rank {small} lattice is not finite")]
    RankMismatch { big: usize, small: usize },
    #[error("{0} is not a characteristic exponent (must be 1 or a prime)")]
    InvalidCharExponent(u64),
    #[error("functional {row} takes the non-integral value {value} on basis vector {col}")]
    NonIntegralFunctional {
        row: usize,
        col: usize,
        value: Rational,
    },
    #[error("invalid invariant factors: {0}")]
    InvalidInvariantFactors(String),
}

/// `Q^a / Z^a  ×  Z/d_1 × … × Z/d_k` with `d_1 | … | d_k` and every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FinGenAbQuotient {
    divisible_rank: usize,
    invariant_factors: Vec<Int>,
}

impl FinGenAbQuotient {
    /// Checked constructor; `invariant_factors` must already be a canonical
    /// chain.
    pub fn new(divisible_rank: usize, invariant_factors: Vec<Int>) -> Result<Self, LatticeError> {
        if let Some(bad) = invariant_factors.iter().find(|d| **d < Int::from(2)) {
            return Err(LatticeError::InvalidInvariantFactors(format!(
                "factor {bad} is below 2"
            )));
        }
        if let Some(w) = invariant_factors
            .windows(2)
            .find(|w| !w[1].is_multiple_of(&w[0]))
        {
            return Err(LatticeError::InvalidInvariantFactors(format!(
                "{} does not divide {}",
                w[0], w[1]
            )));
        }
        Ok(FinGenAbQuotient {
            divisible_rank,
            invariant_factors,
        })
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    /// Normalizes an arbitrary product of cyclic groups `Z/n_1 × … × Z/n_k`
    /// (each `n_i ≥ 1`) into invariant-factor form.
    ///
    /// # Panics
    /// If some order is not positive.
    pub fn from_cyclic_orders(divisible_rank: usize, orders: impl IntoIterator<Item = Int>) -> Self {
        let orders: Vec<Int> = orders.into_iter().filter(|n| !n.is_one()).collect();
        assert!(
            orders.iter().all(|n| n.is_positive()),
            "cyclic orders must be positive"
        );
        let diag = Matrix::diagonal(orders.len(), orders.len(), &orders);
        let factors = snf(&diag)
            .elementary_divisors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        FinGenAbQuotient {
            divisible_rank,
            invariant_factors: factors,
        }
    }

    pub fn divisible_rank(&self) -> usize {
        self.divisible_rank
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn is_finite(&self) -> bool {
        self.divisible_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.divisible_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Group order, `None` when there is a divisible part.
    pub fn order(&self) -> Option<Int> {
        self.is_finite()
            .then(|| self.invariant_factors.iter().product())
    }

    /// Whether `self` is isomorphic to a subgroup of `other`.
    ///
    /// The divisible part of `self` must land in the divisible part of
    /// `other`; the finite part is compared prime by prime, each spare copy
    /// of `Q/Z` in `other` absorbing one cyclic factor per prime.
    pub fn embeds_in(&self, other: &FinGenAbQuotient) -> bool {
        if self.divisible_rank > other.divisible_rank {
            return false;
        }
        let spare = other.divisible_rank - self.divisible_rank;
        let Some(top) = self.invariant_factors.last() else {
            return true;
        };
        for q in prime_divisors(top) {
            let mine = sorted_valuations(&self.invariant_factors, &q);
            let theirs = sorted_valuations(&other.invariant_factors, &q);
            if mine.len() > theirs.len() + spare {
                return false;
            }
            // Line up largest against largest; `spare` infinite exponents lead.
            for (i, e) in mine.iter().enumerate() {
                if i < spare {
                    continue;
                }
                if *e > theirs[i - spare] {
                    return false;
                }
            }
        }
        true
    }
}

fn valuation(n: &Int, q: &Int) -> u32 {
    let mut n = n.clone();
    let mut e = 0;
    while !n.is_zero() && n.is_multiple_of(q) {
        n /= q;
        e += 1;
    }
    e
}

fn sorted_valuations(factors: &[Int], q: &Int) -> Vec<u32> {
    let mut v: Vec<u32> = factors
        .iter()
        .map(|d| valuation(d, q))
        .filter(|&e| e > 0)
        .collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Prime divisors of a positive integer, by trial division.
pub(crate) fn prime_divisors(n: &Int) -> Vec<Int> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut q = Int::from(2);
    while &q * &q <= n {
        if n.is_multiple_of(&q) {
            while n.is_multiple_of(&q) {
                n /= &q;
            }
            out.push(q.clone());
        }
        q += 1;
    }
    if n > Int::one() {
        out.push(n);
    }
    out
}

impl fmt::Display for FinGenAbQuotient {
    /// `1`, or e.g. `(Q/Z)^2 x Z/2 x Z/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        match self.divisible_rank {
            0 => {}
            1 => parts.push("Q/Z".to_string()),
            a => parts.push(format!("(Q/Z)^{a}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" x "))
    }
}

/// Whether `p` is a characteristic exponent, i.e. 1 or a prime.
pub fn is_char_exponent(p: u64) -> bool {
    match p {
        0 => false,
        1 => true,
        _ => (2..).take_while(|q| q * q <= p).all(|q| p % q != 0),
    }
}

/// Strips the `p`-primary part off every invariant factor.
pub fn p_prime_part(q: &FinGenAbQuotient, p: u64) -> Result<FinGenAbQuotient, LatticeError> {
    if !is_char_exponent(p) {
        return Err(LatticeError::InvalidCharExponent(p));
    }
    if p == 1 {
        return Ok(q.clone());
    }
    let p = Int::from(p);
    let stripped = q.invariant_factors.iter().map(|d| {
        let mut d = d.clone();
        while d.is_multiple_of(&p) {
            d /= &p;
        }
        d
    });
    Ok(FinGenAbQuotient::from_cyclic_orders(q.divisible_rank, stripped))
}

/// A subgroup `Z·F + Q·K` of `Q^r`: the set of rational vectors on which a
/// family of integer functionals is integral.
///
/// Columns of `finite_directions` (`F`) and `divisible_directions` (`K`)
/// together form a basis of `Q^r`. The functionals vanish on `K` and are
/// integral on `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedSet {
    functionals: IntMatrix,
    finite_directions: RatMatrix,
    divisible_directions: RatMatrix,
}

impl SaturatedSet {
    pub fn ambient_rank(&self) -> usize {
        self.functionals.cols()
    }

    pub fn functionals(&self) -> &IntMatrix {
        &self.functionals
    }

    pub fn finite_direction_basis(&self) -> &RatMatrix {
        &self.finite_directions
    }

    pub fn divisible_subspace_basis(&self) -> &RatMatrix {
        &self.divisible_directions
    }

    /// The lattice spanned by the finite directions alone.
    pub fn finite_lattice(&self) -> Lattice {
        Lattice {
            basis: self.finite_directions.clone(),
        }
    }

    /// Whether `x` belongs to the set, i.e. every functional is integral on it.
    pub fn contains(&self, x: &[Rational]) -> Result<bool, LatticeError> {
        let d = self.functionals.to_rational();
        Ok(d.mul_vec(x)?.iter().all(linalg::is_integral))
    }

    /// Set inclusion in `Q^r`.
    pub fn is_subset_of(&self, other: &SaturatedSet) -> Result<bool, LatticeError> {
        if self.ambient_rank() != other.ambient_rank() {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient_rank(),
                right: other.ambient_rank(),
            });
        }
        for v in self.finite_directions.column_vecs() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        // Q·k lies in `other` only if every functional of `other` kills k.
        let d = other.functionals.to_rational();
        for k in self.divisible_directions.column_vecs() {
            if !d.mul_vec(&k)?.iter().all(Zero::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_set(&self, other: &SaturatedSet) -> Result<bool, LatticeError> {
        Ok(self.is_subset_of(other)? && other.is_subset_of(self)?)
    }
}

/// Saturates `Z^r` against the rows of `functionals`:
/// `{x ∈ Q^r : D·x ∈ Z^m}`, together with its quotient by `Z^r`.
///
/// With `U·D·V = S` the condition reads `S·y ∈ Z^m` for `y = V⁻¹x`, so
/// `y_i ∈ (1/s_i)Z` along the rank directions and `y_i` is free past them.
pub fn dual_saturation(
    r: usize,
    functionals: &IntMatrix,
) -> Result<(SaturatedSet, FinGenAbQuotient), LatticeError> {
    if functionals.cols() != r {
        return Err(LinalgError::Dimension {
            context: "functional length",
            expected: r,
            found: functionals.cols(),
        }
        .into());
    }
    let smith = snf(functionals);
    let v = smith.v.to_rational();
    let divisors = smith.elementary_divisors();

    let finite = Matrix::from_fn(r, smith.rank, |i, j| {
        v[(i, j)].clone() / Rational::from_integer(divisors[j].clone())
    });
    let divisible = v.select_columns(smith.rank..r);

    let quotient = FinGenAbQuotient {
        divisible_rank: r - smith.rank,
        invariant_factors: divisors.into_iter().filter(|d| !d.is_one()).collect(),
    };
    let set = SaturatedSet {
        functionals: functionals.clone(),
        finite_directions: finite,
        divisible_directions: divisible,
    };
    Ok((set, quotient))
}

/// Re-expresses functionals on a new basis (columns of `basis`), i.e.
/// returns `D·B`, failing if some value is not an integer.
pub fn functionals_on_basis(
    functionals: &IntMatrix,
    basis: &RatMatrix,
) -> Result<IntMatrix, LatticeError> {
    let values = functionals.to_rational().checked_mul(basis)?;
    for i in 0..values.rows() {
        for j in 0..values.cols() {
            if !linalg::is_integral(&values[(i, j)]) {
                return Err(LatticeError::NonIntegralFunctional {
                    row: i,
                    col: j,
                    value: values[(i, j)].clone(),
                });
            }
        }
    }
    Ok(values.map(|q| q.to_integer()))
}

/// A free abelian subgroup of `Q^d`, given by linearly independent columns.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: RatMatrix,
}

impl Lattice {
    pub fn new(basis: RatMatrix) -> Result<Self, LatticeError> {
        let (_, cleared) = basis.clear_denominators();
        let rank = linalg::rank(&cleared);
        if rank < basis.cols() {
            return Err(LatticeError::DependentBasis {
                rank,
                count: basis.cols(),
            });
        }
        Ok(Lattice { basis })
    }

    pub fn from_int_basis(basis: &IntMatrix) -> Result<Self, LatticeError> {
        Self::new(basis.to_rational())
    }

    /// `Z^d` with its standard basis.
    pub fn standard(d: usize) -> Self {
        Lattice {
            basis: RatMatrix::identity(d),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    /// Coordinates of `v` in this lattice's basis, if `v` is a lattice vector.
    pub fn coordinates(&self, v: &[Rational]) -> Result<Option<Vec<Int>>, LatticeError> {
        if v.len() != self.ambient_rank() {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient_rank(),
                right: v.len(),
            });
        }
        let l: Int = linalg::common_denominator(self.basis.entries().iter().chain(v));
        let scale = Rational::from_integer(l);
        let b = self.basis.map(|q| (q * &scale).to_integer());
        let target: Vec<Int> = v.iter().map(|q| (q * &scale).to_integer()).collect();
        Ok(solve_in_lattice(&b, &target)?)
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool, LatticeError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool, LatticeError> {
        for v in other.basis.column_vecs() {
            if !self.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hermite-reduced basis; equal lattices have equal canonical bases.
    pub fn canonical_basis(&self) -> RatMatrix {
        let (l, cleared) = self.basis.clear_denominators();
        let image = hnf(&cleared).image();
        let scale = Rational::from_integer(l);
        image.map(|x| Rational::from_integer(x.clone()) / &scale)
    }

    /// Coordinates of each basis vector of `small` in this lattice's basis,
    /// as the columns of an integer matrix.
    pub fn change_of_basis(&self, small: &Lattice) -> Result<IntMatrix, LatticeError> {
        self.check_ambient(small)?;
        let mut cols = Vec::with_capacity(small.rank());
        for (index, v) in small.basis.column_vecs().into_iter().enumerate() {
            match self.coordinates(&v)? {
                Some(c) => cols.push(c),
                None => return Err(LatticeError::NotASublattice { index }),
            }
        }
        Ok(IntMatrix::from_columns(self.rank(), &cols)?)
    }

    fn check_ambient(&self, other: &Lattice) -> Result<(), LatticeError> {
        if self.ambient_rank() != other.ambient_rank() {
            return Err(LatticeError::AmbientMismatch {
                left: self.ambient_rank(),
                right: other.ambient_rank(),
            });
        }
        Ok(())
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank() == other.ambient_rank()
            && self.canonical_basis() == other.canonical_basis()
    }
}

impl Eq for Lattice {}

/// `A ∩ B`, computed from the integer kernel of `[A | -B]` after clearing
/// denominators.
pub fn intersect(a: &Lattice, b: &Lattice) -> Result<Lattice, LatticeError> {
    a.check_ambient(b)?;
    let joint = a.basis.hstack(&b.basis.map(|q| -q.clone()))?;
    let (_, cleared) = joint.clear_denominators();
    let kernel = hnf(&cleared).kernel();
    // A·α = B·β for each kernel column (α, β); A has independent columns so
    // the α parts give an independent generating set.
    let alphas = kernel
        .select_rows(0..a.rank())
        .to_rational();
    let basis = a.basis.checked_mul(&alphas)?;
    Ok(Lattice { basis })
}

/// `big / small` for a full-rank sublattice, from the Smith form of the
/// change-of-basis matrix.
pub fn quotient(big: &Lattice, small: &Lattice) -> Result<FinGenAbQuotient, LatticeError> {
    big.check_ambient(small)?;
    if big.rank() != small.rank() {
        return Err(LatticeError::RankMismatch {
            big: big.rank(),
            small: small.rank(),
        });
    }
    let c = big.change_of_basis(small)?;
    let factors = snf(&c)
        .elementary_divisors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    Ok(FinGenAbQuotient {
        divisible_rank: 0,
        invariant_factors: factors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int_matrix, ints};

    fn fg(a: usize, f: &[i64]) -> FinGenAbQuotient {
        FinGenAbQuotient::new(a, ints(f)).unwrap()
    }

    fn rat(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    fn lat(cols: &[&[i64]]) -> Lattice {
        let d = cols[0].len();
        let cols: Vec<Vec<Int>> = cols.iter().map(|c| ints(c)).collect();
        Lattice::from_int_basis(&IntMatrix::from_columns(d, &cols).unwrap()).unwrap()
    }

    #[test]
    fn quotient_constructor_rejects_bad_chains() {
        assert!(FinGenAbQuotient::new(0, ints(&[2, 3])).is_err());
        assert!(FinGenAbQuotient::new(0, ints(&[1, 2])).is_err());
        assert!(FinGenAbQuotient::new(0, ints(&[0])).is_err());
        assert!(FinGenAbQuotient::new(1, ints(&[2, 6])).is_ok());
    }

    #[test]
    fn cyclic_orders_normalize() {
        let q = FinGenAbQuotient::from_cyclic_orders(0, ints(&[2, 3, 1, 4]));
        assert_eq!(q, fg(0, &[2, 12]));
    }

    #[test]
    fn display() {
        assert_eq!(FinGenAbQuotient::trivial().to_string(), "1");
        assert_eq!(fg(0, &[2, 6]).to_string(), "Z/2 x Z/6");
        assert_eq!(fg(2, &[3]).to_string(), "(Q/Z)^2 x Z/3");
        assert_eq!(fg(1, &[]).to_string(), "Q/Z");
    }

    #[test]
    fn saturation_single_functional() {
        let (set, q) = dual_saturation(1, &int_matrix(1, &[&[2]])).unwrap();
        assert_eq!(q, fg(0, &[2]));
        let half = vec![Rational::new(1.into(), 2.into())];
        assert!(set.contains(&half).unwrap());
        assert!(!set.contains(&[Rational::new(1.into(), 3.into())]).unwrap());
    }

    #[test]
    fn saturation_without_functionals_is_divisible() {
        let d = IntMatrix::zeros(0, 2);
        let (set, q) = dual_saturation(2, &d).unwrap();
        assert_eq!(q, fg(2, &[]));
        assert_eq!(set.divisible_subspace_basis().cols(), 2);
        assert_eq!(set.finite_direction_basis().cols(), 0);
    }

    #[test]
    fn saturation_unimodular_is_trivial() {
        let (_, q) = dual_saturation(2, &IntMatrix::identity(2)).unwrap();
        assert!(q.is_trivial());
    }

    #[test]
    fn saturation_dimension_checked() {
        assert!(dual_saturation(3, &IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn saturation_invariants_hold() {
        let d = int_matrix(3, &[&[2, 4, 0], &[0, 6, 3]]);
        let (set, q) = dual_saturation(3, &d).unwrap();
        assert_eq!(q.divisible_rank(), 1);
        for v in set.finite_direction_basis().column_vecs() {
            assert!(set.contains(&v).unwrap());
        }
        let dq = d.to_rational();
        for k in set.divisible_subspace_basis().column_vecs() {
            assert!(dq.mul_vec(&k).unwrap().iter().all(Zero::is_zero));
        }
        let joint = set
            .finite_direction_basis()
            .hstack(set.divisible_subspace_basis())
            .unwrap();
        assert_eq!(linalg::rank(&joint.clear_denominators().1), 3);
    }

    #[test]
    fn intersect_idempotent() {
        let a = lat(&[&[1, 2], &[0, 3]]);
        assert_eq!(intersect(&a, &a).unwrap(), a);
    }

    #[test]
    fn intersect_rank_one_lcm() {
        let a = lat(&[&[2]]);
        let b = lat(&[&[3]]);
        assert_eq!(intersect(&a, &b).unwrap(), lat(&[&[6]]));
    }

    #[test]
    fn intersect_root_lattice_with_weights() {
        // Z·α with α = 2ω, intersected with Z·ω.
        let alpha = lat(&[&[2]]);
        let omega = Lattice::standard(1);
        let meet = intersect(&alpha, &omega).unwrap();
        assert!(meet.contains_lattice(&alpha).unwrap());
        assert!(alpha.contains_lattice(&meet).unwrap());
    }

    #[test]
    fn intersect_rational_bases() {
        let half = Lattice::new(
            RatMatrix::from_rows(1, vec![vec![Rational::new(1.into(), 2.into())]]).unwrap(),
        )
        .unwrap();
        let third = Lattice::new(
            RatMatrix::from_rows(1, vec![vec![Rational::new(1.into(), 3.into())]]).unwrap(),
        )
        .unwrap();
        assert_eq!(intersect(&half, &third).unwrap(), Lattice::standard(1));
    }

    #[test]
    fn intersect_ambient_mismatch() {
        assert!(intersect(&Lattice::standard(1), &Lattice::standard(2)).is_err());
    }

    #[test]
    fn dependent_basis_rejected() {
        let b = int_matrix(2, &[&[1, 2], &[2, 4]]);
        assert!(matches!(
            Lattice::from_int_basis(&b),
            Err(LatticeError::DependentBasis { .. })
        ));
    }

    #[test]
    fn quotient_examples() {
        let z2 = Lattice::standard(2);
        assert!(quotient(&z2, &z2).unwrap().is_trivial());
        let small = lat(&[&[2, 0], &[0, 3]]);
        assert_eq!(quotient(&z2, &small).unwrap(), fg(0, &[6]));
        let alpha = lat(&[&[2]]);
        let two_alpha = lat(&[&[4]]);
        assert_eq!(quotient(&alpha, &two_alpha).unwrap(), fg(0, &[2]));
    }

    #[test]
    fn quotient_errors() {
        let alpha = lat(&[&[2]]);
        assert!(matches!(
            quotient(&alpha, &Lattice::standard(1)),
            Err(LatticeError::NotASublattice { index: 0 })
        ));
        assert!(matches!(
            quotient(&Lattice::standard(2), &lat(&[&[1, 0]])),
            Err(LatticeError::RankMismatch { .. })
        ));
    }

    #[test]
    fn p_prime_examples() {
        assert_eq!(p_prime_part(&fg(0, &[12]), 2).unwrap(), fg(0, &[3]));
        assert!(p_prime_part(&fg(0, &[2]), 2).unwrap().is_trivial());
        assert_eq!(p_prime_part(&fg(0, &[6, 12]), 1).unwrap(), fg(0, &[6, 12]));
        assert_eq!(p_prime_part(&fg(1, &[4]), 2).unwrap(), fg(1, &[]));
        assert!(matches!(
            p_prime_part(&fg(0, &[6]), 4),
            Err(LatticeError::InvalidCharExponent(4))
        ));
        assert!(p_prime_part(&fg(0, &[6]), 0).is_err());
    }

    #[test]
    fn char_exponents() {
        let ok: Vec<u64> = (0..20).filter(|&p| is_char_exponent(p)).collect();
        assert_eq!(ok, vec![1, 2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn embedding_criterion() {
        assert!(fg(0, &[2]).embeds_in(&fg(0, &[2])));
        assert!(fg(0, &[2]).embeds_in(&fg(0, &[6])));
        assert!(!fg(0, &[4]).embeds_in(&fg(0, &[2, 2, 2])));
        assert!(fg(0, &[2, 2]).embeds_in(&fg(0, &[2, 4])));
        assert!(!fg(0, &[2, 2]).embeds_in(&fg(0, &[8])));
        assert!(fg(0, &[2, 2]).embeds_in(&fg(1, &[8])));
        assert!(fg(0, &[3, 9]).embeds_in(&fg(2, &[])));
        assert!(!fg(1, &[]).embeds_in(&fg(0, &[4])));
        assert!(FinGenAbQuotient::trivial().embeds_in(&FinGenAbQuotient::trivial()));
    }

    #[test]
    fn membership_and_canonical_basis() {
        let a = lat(&[&[1, 1], &[1, -1]]);
        let b = lat(&[&[2, 0], &[1, 1]]);
        assert_eq!(a, b);
        assert!(a.contains(&rat(&[3, 1])).unwrap());
        assert!(!a.contains(&rat(&[1, 0])).unwrap());
    }
}
