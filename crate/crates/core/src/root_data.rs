//! Root data of connected reductive groups: the character lattice `Ξ(G)`
//! with simple roots and simple coroots, standard simple types in Bourbaki
//! numbering, and the coroot saturation `Ξ°(G)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{dual_saturation, FinGenAbQuotient, LatticeError, SaturatedSet};
use crate::linalg::{self, LinalgError};
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("unknown root system series `{0}` (expected one of A B C D E F G)")]
    UnknownSeries(String),
    #[error("unknown isogeny type `{0}` (expected `simply-connected` or `adjoint`)")]
    UnknownIsogeny(String),
    #[error("there is no root system of type {series}{rank}")]
    InvalidType { series: Series, rank: usize },
    #[error("{count} {what} given, but there are {expected} simple roots")]
    CountMismatch {
        what: &'static str,
        count: usize,
        expected: usize,
    },
    #[error("{what} {index} has length {found}, expected the lattice rank {expected}")]
    VectorLength {
        what: &'static str,
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("pairing matrix is not a Cartan matrix: {0}")]
    NotCartan(String),
    #[error("simple {0} are linearly dependent")]
    Dependent(&'static str),
    #[error("embedding has rank {rank} but {cols} columns")]
    RankDeficientEmbedding { rank: usize, cols: usize },
}

/// Series letter of a simple root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn is_valid_rank(self, n: usize) -> bool {
        match self {
            Series::A => n >= 1,
            Series::B => n >= 2,
            Series::C => n >= 3,
            Series::D => n >= 4,
            Series::E => (6..=8).contains(&n),
            Series::F => n == 4,
            Series::G => n == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Series {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Series::A),
            "B" | "b" => Ok(Series::B),
            "C" | "c" => Ok(Series::C),
            "D" | "d" => Ok(Series::D),
            "E" | "e" => Ok(Series::E),
            "F" | "f" => Ok(Series::F),
            "G" | "g" => Ok(Series::G),
            other => Err(RootDataError::UnknownSeries(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Isogeny {
    SimplyConnected,
    Adjoint,
}

impl Isogeny {
    pub fn as_str(self) -> &'static str {
        match self {
            Isogeny::SimplyConnected => "simply-connected",
            Isogeny::Adjoint => "adjoint",
        }
    }
}

impl fmt::Display for Isogeny {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Isogeny {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "simply-connected" | "sc" => Ok(Isogeny::SimplyConnected),
            "adjoint" | "ad" => Ok(Isogeny::Adjoint),
            other => Err(RootDataError::UnknownIsogeny(other.to_string())),
        }
    }
}

/// Parameters of a standard build, kept so a datum can be written back the
/// way it was entered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StandardType {
    pub series: Series,
    pub rank: usize,
    pub isogeny: Isogeny,
    pub central_torus_rank: usize,
}

/// Cartan matrix `C[i][j] = ⟨α_i^∨, α_j⟩` in Bourbaki numbering.
pub fn cartan_matrix(series: Series, n: usize) -> Result<IntMatrix, RootDataError> {
    if !series.is_valid_rank(n) {
        return Err(RootDataError::InvalidType { series, rank: n });
    }
    // (i, j, C[i][j], C[j][i]), zero-based
    let mut bonds: Vec<(usize, usize, i64, i64)> = Vec::new();
    let chain = |bonds: &mut Vec<_>, len: usize| {
        for i in 0..len.saturating_sub(1) {
            bonds.push((i, i + 1, -1, -1));
        }
    };
    match series {
        Series::A => chain(&mut bonds, n),
        Series::B => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 2, n - 1, -1, -2));
        }
        Series::C => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 2, n - 1, -2, -1));
        }
        Series::D => {
            chain(&mut bonds, n - 1);
            bonds.push((n - 3, n - 1, -1, -1));
        }
        Series::E => {
            // 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 hanging off 4
            bonds.push((0, 2, -1, -1));
            bonds.push((1, 3, -1, -1));
            for i in 2..n - 1 {
                bonds.push((i, i + 1, -1, -1));
            }
        }
        Series::F => {
            bonds.push((0, 1, -1, -1));
            bonds.push((1, 2, -1, -2));
            bonds.push((2, 3, -1, -1));
        }
        Series::G => bonds.push((0, 1, -3, -1)),
    }
    let mut c = IntMatrix::diagonal(n, n, &vec![Int::from(2); n]);
    for (i, j, cij, cji) in bonds {
        c[(i, j)] = Int::from(cij);
        c[(j, i)] = Int::from(cji);
    }
    Ok(c)
}

/// Character lattice `Ξ(G) ≅ Z^rank` with simple roots (characters) and
/// simple coroots (cocharacters, i.e. functionals on `Ξ(G)`), one per row.
#[derive(Debug, Clone)]
pub struct RootDatum {
    rank: usize,
    simple_roots: IntMatrix,
    simple_coroots: IntMatrix,
    label: String,
    standard: Option<StandardType>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
            && self.label == other.label
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    /// Explicit constructor. Rows of `simple_roots` and `simple_coroots` are
    /// vectors of length `rank`.
    pub fn new(
        rank: usize,
        simple_roots: IntMatrix,
        simple_coroots: IntMatrix,
        label: impl Into<String>,
    ) -> Result<Self, RootDataError> {
        let n = simple_roots.rows();
        if simple_coroots.rows() != n {
            return Err(RootDataError::CountMismatch {
                what: "simple coroots",
                count: simple_coroots.rows(),
                expected: n,
            });
        }
        for (what, m) in [("simple root", &simple_roots), ("simple coroot", &simple_coroots)] {
            if m.cols() != rank {
                return Err(RootDataError::VectorLength {
                    what,
                    index: 0,
                    expected: rank,
                    found: m.cols(),
                });
            }
        }
        if linalg::rank(&simple_roots) < n {
            return Err(RootDataError::Dependent("roots"));
        }
        if linalg::rank(&simple_coroots) < n {
            return Err(RootDataError::Dependent("coroots"));
        }
        let datum = RootDatum {
            rank,
            simple_roots,
            simple_coroots,
            label: label.into(),
            standard: None,
        };
        check_cartan(&datum.pairing_matrix())?;
        Ok(datum)
    }

    /// Simply connected or adjoint datum of a simple type, times a split
    /// central torus of the given rank.
    pub fn standard(
        series: Series,
        n: usize,
        isogeny: Isogeny,
        central_torus_rank: usize,
    ) -> Result<Self, RootDataError> {
        let c = cartan_matrix(series, n)?;
        let (roots, coroots) = match isogeny {
            // basis of fundamental weights: α_j = Σ_i C[i][j] ω_i
            Isogeny::SimplyConnected => (c.transpose(), IntMatrix::identity(n)),
            // basis of simple roots: α_i^∨ = row i of C
            Isogeny::Adjoint => (IntMatrix::identity(n), c),
        };
        let pad = IntMatrix::zeros(n, central_torus_rank);
        let mut label = format!("{series}{n} {isogeny}");
        if central_torus_rank > 0 {
            label.push_str(&format!(" x T^{central_torus_rank}"));
        }
        Ok(RootDatum {
            rank: n + central_torus_rank,
            simple_roots: roots.hstack(&pad)?,
            simple_coroots: coroots.hstack(&pad)?,
            label,
            standard: Some(StandardType {
                series,
                rank: n,
                isogeny,
                central_torus_rank,
            }),
        })
    }

    /// Split torus of rank `n`: no roots.
    pub fn torus(n: usize) -> Self {
        RootDatum {
            rank: n,
            simple_roots: IntMatrix::zeros(0, n),
            simple_coroots: IntMatrix::zeros(0, n),
            label: format!("T^{n}"),
            standard: None,
        }
    }

    /// Direct product: lattices add, roots and coroots are padded by zeros.
    pub fn product(&self, other: &RootDatum) -> RootDatum {
        RootDatum {
            rank: self.rank + other.rank,
            simple_roots: self.simple_roots.direct_sum(&other.simple_roots),
            simple_coroots: self.simple_coroots.direct_sum(&other.simple_coroots),
            label: format!("{} x {}", self.label, other.label),
            standard: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.rows()
    }

    pub fn simple_roots(&self) -> &IntMatrix {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &IntMatrix {
        &self.simple_coroots
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn standard_type(&self) -> Option<StandardType> {
        self.standard
    }

    /// `C[i][j] = ⟨coroot_i, root_j⟩`.
    pub fn pairing_matrix(&self) -> IntMatrix {
        self.simple_coroots.mul(&self.simple_roots.transpose())
    }

    /// `Ξ°(G)`: rational characters on which every simple coroot is integral,
    /// and its quotient by `Ξ(G)`.
    pub fn xi_circ(&self) -> (SaturatedSet, FinGenAbQuotient) {
        dual_saturation(self.rank, &self.simple_coroots)
            .expect("coroots have the lattice rank as length")
    }

    /// Coroot functionals composed with `embedding` (columns are vectors of
    /// `Ξ(G)`), giving functionals on the lattice the columns span.
    pub fn restrict_coroots(&self, embedding: &IntMatrix) -> Result<IntMatrix, RootDataError> {
        if embedding.rows() != self.rank {
            return Err(LinalgError::Dimension {
                context: "embedding rows vs character lattice rank",
                expected: self.rank,
                found: embedding.rows(),
            }
            .into());
        }
        let rank = linalg::rank(embedding);
        if rank < embedding.cols() {
            return Err(RootDataError::RankDeficientEmbedding {
                rank,
                cols: embedding.cols(),
            });
        }
        Ok(self.simple_coroots.mul(embedding))
    }
}

fn check_cartan(c: &IntMatrix) -> Result<(), RootDataError> {
    let n = c.rows();
    let two = Int::from(2);
    for i in 0..n {
        if c[(i, i)] != two {
            return Err(RootDataError::NotCartan(format!(
                "diagonal entry {i} is {}",
                c[(i, i)]
            )));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if c[(i, j)] > Int::zero() {
                return Err(RootDataError::NotCartan(format!(
                    "entry ({i}, {j}) is positive"
                )));
            }
            if c[(i, j)].is_zero() != c[(j, i)].is_zero() {
                return Err(RootDataError::NotCartan(format!(
                    "entries ({i}, {j}) and ({j}, {i}) are not both zero or both nonzero"
                )));
            }
        }
    }
    Ok(())
}
