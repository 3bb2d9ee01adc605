//! From spherical data to `π₀(H)_{p'}` and `π₁(G/H)_{p'}`.
//!
//! A homogeneous spherical variety `X = G/H` is seen here only through its
//! weight lattice `Ξ(X) ⊆ Ξ(G)` and the values of its color functionals
//! `δ_D` on a basis of `Ξ(X)`:
//!
//! * `Ξ°(X)` is the set of rational weights on which every `δ_D` is integral;
//! * `Ξ°_G(X) = Ξ°(X) ∩ Ξ(G)` contains `Ξ(X)` with finite index;
//! * `π₀(H)_{p'}` is dual to the prime-to-p part of `Ξ°_G(X)/Ξ(X)`;
//! * `π₁(X)_{p'}` is dual to `Ξ°(X)/Ξ(X)`, each `Q/Z` summand contributing a
//!   factor `Ẑ_{p'}`.
//!
//! Everything up to the final prime-to-p extraction is independent of `p`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{
    dual_saturation, is_char_exponent, p_prime_part, FinGenAbQuotient, LatticeError,
    SaturatedSet,
};
use crate::linalg::{self, solve_in_lattice, LinalgError};
use crate::root_data::{RootDataError, RootDatum};
use crate::{Int, IntMatrix, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SphericalError {
    #[error("lattice generators have length {found}, but the character lattice has rank {expected}")]
    EmbeddingRows { expected: usize, found: usize },
    #[error("lattice generators are linearly dependent (rank {rank} < {count})")]
    RankDeficientEmbedding { rank: usize, count: usize },
    #[error("color rows have length {found}, but there are {expected} lattice generators")]
    ColorLength { expected: usize, found: usize },
    #[error("{0} is not a characteristic exponent (must be 1 or a prime)")]
    InvalidCharExponent(u64),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Root datum of `G`, the weight lattice `Ξ(X)` inside `Ξ(G)`, the color
/// values and the characteristic exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalDatum {
    root_datum: RootDatum,
    lattice_embedding: IntMatrix,
    colors: IntMatrix,
    char_exponent: u64,
    label: String,
}

impl SphericalDatum {
    /// `lattice_embedding` is `d × r` (columns generate `Ξ(X)` in `Ξ(G)`
    /// coordinates); `colors` is `m × r` (row `D` holds `⟨δ_D, basis_j⟩`).
    pub fn new(
        root_datum: RootDatum,
        lattice_embedding: IntMatrix,
        colors: IntMatrix,
        char_exponent: u64,
        label: impl Into<String>,
    ) -> Result<Self, SphericalError> {
        if lattice_embedding.rows() != root_datum.rank() {
            return Err(SphericalError::EmbeddingRows {
                expected: root_datum.rank(),
                found: lattice_embedding.rows(),
            });
        }
        let rank = linalg::rank(&lattice_embedding);
        if rank < lattice_embedding.cols() {
            return Err(SphericalError::RankDeficientEmbedding {
                rank,
                count: lattice_embedding.cols(),
            });
        }
        if colors.cols() != lattice_embedding.cols() {
            return Err(SphericalError::ColorLength {
                expected: lattice_embedding.cols(),
                found: colors.cols(),
            });
        }
        if !is_char_exponent(char_exponent) {
            return Err(SphericalError::InvalidCharExponent(char_exponent));
        }
        Ok(SphericalDatum {
            root_datum,
            lattice_embedding,
            colors,
            char_exponent,
            label: label.into(),
        })
    }

    /// Same datum in another characteristic.
    pub fn with_char_exponent(&self, p: u64) -> Result<Self, SphericalError> {
        if !is_char_exponent(p) {
            return Err(SphericalError::InvalidCharExponent(p));
        }
        Ok(SphericalDatum {
            char_exponent: p,
            ..self.clone()
        })
    }

    pub fn root_datum(&self) -> &RootDatum {
        &self.root_datum
    }

    pub fn lattice_embedding(&self) -> &IntMatrix {
        &self.lattice_embedding
    }

    pub fn colors(&self) -> &IntMatrix {
        &self.colors
    }

    pub fn char_exponent(&self) -> u64 {
        self.char_exponent
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Rank of `Ξ(X)`.
    pub fn weight_rank(&self) -> usize {
        self.lattice_embedding.cols()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Warn => "warn",
            CheckStatus::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: &'static str,
    pub status: CheckStatus,
    pub message: String,
}

impl CheckOutcome {
    fn new(check: &'static str, status: CheckStatus, message: impl Into<String>) -> Self {
        CheckOutcome {
            check,
            status,
            message: message.into(),
        }
    }
}

pub const CHECK_EMBEDDING_RANK: &str = "embedding-rank";
pub const CHECK_COROOT_SPAN: &str = "coroot-span";
pub const CHECK_CHAR_EXPONENT: &str = "char-exponent";

/// Consistency checks on a datum.
///
/// Besides the structural facts, every simple coroot restricted to `Ξ(X)`
/// must be an integer combination of the color functionals. Genuine
/// homogeneous spherical data always satisfy this; when it fails the result
/// is a warning, or a failure under `strict`.
pub fn validate(sd: &SphericalDatum, strict: bool) -> Vec<CheckOutcome> {
    let mut out = vec![CheckOutcome::new(
        CHECK_EMBEDDING_RANK,
        CheckStatus::Pass,
        format!(
            "weight lattice has rank {} inside a character lattice of rank {}",
            sd.weight_rank(),
            sd.root_datum.rank()
        ),
    )];

    let restricted = sd
        .root_datum
        .restrict_coroots(&sd.lattice_embedding)
        .expect("embedding rank is checked on construction");
    let colors_t = sd.colors.transpose();
    let offenders: Vec<usize> = (0..restricted.rows())
        .filter(|&i| {
            solve_in_lattice(&colors_t, restricted.row(i))
                .expect("color rows have the weight rank as length")
                .is_none()
        })
        .collect();
    out.push(if offenders.is_empty() {
        CheckOutcome::new(
            CHECK_COROOT_SPAN,
            CheckStatus::Pass,
            format!(
                "all {} restricted simple coroots are integer combinations of the {} colors",
                restricted.rows(),
                sd.colors.rows()
            ),
        )
    } else {
        let detail: Vec<String> = offenders
            .iter()
            .map(|&i| format!("coroot {} restricts to {:?}", i + 1, row_text(restricted.row(i))))
            .collect();
        CheckOutcome::new(
            CHECK_COROOT_SPAN,
            if strict {
                CheckStatus::Fail
            } else {
                CheckStatus::Warn
            },
            format!(
                "not in the integer span of the colors: {}",
                detail.join("; ")
            ),
        )
    });

    out.push(CheckOutcome::new(
        CHECK_CHAR_EXPONENT,
        CheckStatus::Pass,
        format!("p = {}", sd.char_exponent),
    ));
    out
}

fn row_text(row: &[Int]) -> Vec<String> {
    row.iter().map(ToString::to_string).collect()
}

/// Whether any outcome is a failure.
pub fn has_failures(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().any(|o| o.status == CheckStatus::Fail)
}

/// `Ξ°(X)` in `Ξ(X)` coordinates, and `Ξ°(X)/Ξ(X)`.
pub fn xi_circ(sd: &SphericalDatum) -> Result<(SaturatedSet, FinGenAbQuotient), SphericalError> {
    Ok(dual_saturation(sd.weight_rank(), &sd.colors)?)
}

/// `Ξ°_G(X)` in `Ξ(X)` coordinates: the rational weights on which both the
/// colors and the coordinate functionals of `Ξ(G)` are integral. The
/// coordinate functionals have full rank, so there are no divisible
/// directions.
pub fn xi_circ_g_set(
    sd: &SphericalDatum,
) -> Result<(SaturatedSet, FinGenAbQuotient), SphericalError> {
    let stacked = sd.colors.vstack(&sd.lattice_embedding)?;
    Ok(dual_saturation(sd.weight_rank(), &stacked)?)
}

/// `Ξ°_G(X)/Ξ(X)`, always finite.
pub fn xi_circ_g(sd: &SphericalDatum) -> Result<FinGenAbQuotient, SphericalError> {
    Ok(xi_circ_g_set(sd)?.1)
}

/// Pushes vectors given in `Ξ(X)` coordinates (columns) into `Ξ_Q(G)`.
pub fn to_ambient(sd: &SphericalDatum, vectors: &RatMatrix) -> Result<RatMatrix, SphericalError> {
    Ok(sd.lattice_embedding.to_rational().checked_mul(vectors)?)
}

/// Prime-to-p part of a fundamental or component group, as a profinite
/// abelian group `Ẑ_{p'}^a × Z/d_1 × … × Z/d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiResult {
    pub zhat_rank: usize,
    pub invariant_factors: Vec<Int>,
    pub p: u64,
}

impl PiResult {
    /// Dual of a quotient, `Hom(q, k*)` with `k` of characteristic exponent
    /// `p`.
    pub fn dual_of(q: &FinGenAbQuotient, p: u64) -> Result<Self, SphericalError> {
        let q = p_prime_part(q, p)?;
        Ok(PiResult {
            zhat_rank: q.divisible_rank(),
            invariant_factors: q.invariant_factors().to_vec(),
            p,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.zhat_rank == 0 && self.invariant_factors.is_empty()
    }

    /// The finite part as a quotient structure (for embedding checks).
    pub fn finite_part(&self) -> FinGenAbQuotient {
        FinGenAbQuotient::new(0, self.invariant_factors.clone())
            .expect("invariant factors are kept canonical")
    }

    /// The group with every `Ẑ_{p'}` replaced by its torsion-dual `Q/Z`
    /// slot, which is how surjections between these groups dualize.
    pub fn as_quotient(&self) -> FinGenAbQuotient {
        FinGenAbQuotient::new(self.zhat_rank, self.invariant_factors.clone())
            .expect("invariant factors are kept canonical")
    }
}

impl fmt::Display for PiResult {
    /// `1`, or e.g. `Zhat_{p'}^2 x Z/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        match self.zhat_rank {
            0 => {}
            1 => parts.push("Zhat_{p'}".to_string()),
            a => parts.push(format!("Zhat_{{p'}}^{a}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" x "))
    }
}

/// `π₀(H)_{p'}`: prime-to-p part of `Ξ°_G(X)/Ξ(X)`.
pub fn pi0_p_prime(sd: &SphericalDatum) -> Result<PiResult, SphericalError> {
    PiResult::dual_of(&xi_circ_g(sd)?, sd.char_exponent)
}

/// `π₁(X)_{p'}`: prime-to-p part of `Ξ°(X)/Ξ(X)`, with one `Ẑ_{p'}` per
/// divisible direction.
pub fn pi1_p_prime(sd: &SphericalDatum) -> Result<PiResult, SphericalError> {
    PiResult::dual_of(&xi_circ(sd)?.1, sd.char_exponent)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub datum: SphericalDatum,
    pub xi_circ_quotient: FinGenAbQuotient,
    pub xi_circ_g_quotient: FinGenAbQuotient,
    pub pi0: PiResult,
    pub pi1: PiResult,
    pub validation: Vec<CheckOutcome>,
    pub notes: Vec<String>,
}

impl Report {
    /// `π₀` has no profinite part and its finite part is a subgroup of the
    /// finite-or-divisible structure dual to `π₁`.
    pub fn invariants_hold(&self) -> bool {
        self.pi0.zhat_rank == 0 && self.pi0.finite_part().embeds_in(&self.pi1.as_quotient())
    }
}

/// Runs the whole pipeline, non-strict validation included.
pub fn full_report(sd: &SphericalDatum) -> Result<Report, SphericalError> {
    let validation = validate(sd, false);
    let (_, xi_q) = xi_circ(sd)?;
    let xi_g_q = xi_circ_g(sd)?;
    let p = sd.char_exponent;
    let pi0 = PiResult::dual_of(&xi_g_q, p)?;
    let pi1 = PiResult::dual_of(&xi_q, p)?;

    let mut notes = Vec::new();
    if p > 1 {
        notes.push(format!(
            "pi0(H) surjects onto the group above with a {p}-group kernel; \
             that kernel (the {p}-part) is unknown"
        ));
    }
    if !xi_q.is_finite() {
        notes.push(format!(
            "the colors leave {} divisible direction(s); pi1 has profinite rank {}",
            xi_q.divisible_rank(),
            pi1.zhat_rank
        ));
    }

    Ok(Report {
        datum: sd.clone(),
        xi_circ_quotient: xi_q,
        xi_circ_g_quotient: xi_g_q,
        pi0,
        pi1,
        validation,
        notes,
    })
}
