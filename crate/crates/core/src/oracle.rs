//! Brute-force check of saturation quotients on small instances.
//!
//! For a modulus `N`, the `N`-torsion of `{x ∈ Q^r : D·x ∈ Z^m} / Z^r` is
//! enumerated directly as `{k/N : k ∈ [0, N)^r, D·k ≡ 0 mod N}` and compared
//! with the group a predicted quotient says it should be, by counting
//! elements of each order.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::lattice::FinGenAbQuotient;
use crate::{Int, IntMatrix};

/// Largest `N^r` that [`enumerate_torsion`] will walk through.
pub const ENUMERATION_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("torsion modulus must be at least 1")]
    ZeroModulus,
    #[error("enumerating {modulus}^{rank} candidates exceeds the budget of {budget}")]
    BudgetExceeded { modulus: u64, rank: usize, budget: u64 },
}

/// The `N`-torsion subgroup, listed explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionGroupSample {
    modulus: u64,
    rank: usize,
    numerators: Vec<u64>,
    order_histogram: BTreeMap<u64, u64>,
}

impl TorsionGroupSample {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        if self.rank == 0 {
            // only the zero vector
            1
        } else {
            self.numerators.len() / self.rank
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Numerators `k` of element `i`, which is `k / N` modulo `Z^r`.
    pub fn element(&self, i: usize) -> &[u64] {
        &self.numerators[i * self.rank..(i + 1) * self.rank]
    }

    /// Elements in lexicographic order of their numerators.
    pub fn elements(&self) -> impl Iterator<Item = &[u64]> + '_ {
        (0..self.len()).map(move |i| self.element(i))
    }

    pub fn order_histogram(&self) -> &BTreeMap<u64, u64> {
        &self.order_histogram
    }
}

/// Lists `{x ∈ (1/N)Z^r / Z^r : D·x ∈ Z^m}`.
pub fn enumerate_torsion(functionals: &IntMatrix, n: u64) -> Result<TorsionGroupSample, OracleError> {
    if n == 0 {
        return Err(OracleError::ZeroModulus);
    }
    let r = functionals.cols();
    let total = u32::try_from(r)
        .ok()
        .and_then(|e| n.checked_pow(e))
        .filter(|&t| t <= ENUMERATION_BUDGET)
        .ok_or(OracleError::BudgetExceeded {
            modulus: n,
            rank: r,
            budget: ENUMERATION_BUDGET,
        })?;

    let modulus = Int::from(n);
    let reduced: Vec<Vec<u64>> = functionals
        .row_vecs()
        .into_iter()
        .map(|row| {
            row.iter()
                .map(|a| a.mod_floor(&modulus).to_u64().expect("residue below modulus"))
                .collect()
        })
        .collect();

    let mut numerators = Vec::new();
    let mut histogram = BTreeMap::new();
    let mut k = vec![0u64; r];
    for _ in 0..total {
        let admissible = reduced.iter().all(|row| {
            row.iter()
                .zip(&k)
                .fold(0u64, |acc, (a, x)| (acc + a * x) % n)
                == 0
        });
        if admissible {
            let g = k.iter().fold(n, |g, &x| g.gcd(&x));
            *histogram.entry(n / g).or_insert(0) += 1;
            numerators.extend_from_slice(&k);
        }
        // odometer, last coordinate fastest
        for j in (0..r).rev() {
            k[j] += 1;
            if k[j] < n {
                break;
            }
            k[j] = 0;
        }
    }

    Ok(TorsionGroupSample {
        modulus: n,
        rank: r,
        numerators,
        order_histogram: histogram,
    })
}

/// Element counts by order of `(Z/N)^a × ∏ Z/gcd(d_i, N)`.
pub fn predicted_histogram(predicted: &FinGenAbQuotient, n: u64) -> BTreeMap<u64, u128> {
    let modulus = Int::from(n);
    let cyclic: Vec<u64> = std::iter::repeat(n)
        .take(predicted.divisible_rank())
        .chain(
            predicted
                .invariant_factors()
                .iter()
                .map(|d| d.gcd(&modulus).to_u64().expect("gcd with N fits")),
        )
        .collect();

    let divisors: Vec<u64> = (1..=n).filter(|o| n % o == 0).collect();
    // elements whose order divides o
    let dividing = |o: u64| -> u128 {
        cyclic
            .iter()
            .fold(1u128, |acc, &c| acc.saturating_mul(u128::from(o.gcd(&c))))
    };
    let mut exact: BTreeMap<u64, u128> = BTreeMap::new();
    for &o in &divisors {
        let smaller: u128 = exact
            .iter()
            .filter(|(e, _)| o % **e == 0)
            .map(|(_, c)| *c)
            .sum();
        let count = dividing(o) - smaller;
        exact.insert(o, count);
    }
    exact.retain(|_, c| *c > 0);
    exact
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureMatch {
    pub matched: bool,
    pub observed: BTreeMap<u64, u64>,
    pub expected: BTreeMap<u64, u128>,
    pub diagnostics: Vec<String>,
}

/// Compares an enumerated sample with the `N`-torsion of a predicted
/// quotient.
pub fn structure_match(
    sample: &TorsionGroupSample,
    predicted: &FinGenAbQuotient,
    n: u64,
) -> StructureMatch {
    let expected = predicted_histogram(predicted, n);
    let mut diagnostics = Vec::new();
    if sample.modulus() != n {
        diagnostics.push(format!(
            "sample was enumerated with N = {}, compared at N = {n}",
            sample.modulus()
        ));
    }
    let orders: std::collections::BTreeSet<u64> = expected
        .keys()
        .chain(sample.order_histogram().keys())
        .copied()
        .collect();
    for o in orders {
        let seen = sample.order_histogram().get(&o).copied().unwrap_or(0);
        let want = expected.get(&o).copied().unwrap_or(0);
        if u128::from(seen) != want {
            diagnostics.push(format!(
                "order {o}: enumerated {seen} element(s), predicted {want}"
            ));
        }
    }
    StructureMatch {
        matched: diagnostics.is_empty(),
        observed: sample.order_histogram().clone(),
        expected,
        diagnostics,
    }
}
